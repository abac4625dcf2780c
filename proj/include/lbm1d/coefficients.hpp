#pragma once

#include <array>
#include <string>

#include "lbm1d/equilibrium.hpp"
#include "lbm1d/rational.hpp"

namespace lbm1d {

// Closed form of one equilibrium population:
//   f = rho * (u_pow[0] + u_pow[1] u + u_pow[2] u^2 + u_pow[3] u^3
//              + c2 * (c2_pow[0] + c2_pow[1] u))
// with c2 the squared characteristic speed (p = rho c2 / 2).
struct EquilibriumPolynomial {
  std::array<Rational, 4> u_pow;
  std::array<Rational, 2> c2_pow;

  double evaluate(double rho, double u, double c2) const {
    const double a0 = u_pow[0].convert_to<double>();
    const double a1 = u_pow[1].convert_to<double>();
    const double a2 = u_pow[2].convert_to<double>();
    const double a3 = u_pow[3].convert_to<double>();
    const double b0 = c2_pow[0].convert_to<double>();
    const double b1 = c2_pow[1].convert_to<double>();
    return rho * (((a3 * u + a2) * u + a1) * u + a0 + c2 * (b0 + b1 * u));
  }
};

// Solves the moment system symbolically.  The target moments, as polynomials
// in u and c2, are (1, u, u^2 + c2/2, u^3 + 3 c2 u / 2) times rho, so each
// population is an exact rational combination of those monomials.
inline std::array<EquilibriumPolynomial, 4> polynomial_coefficients(const RationalVec4& xi) {
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (xi[a] == xi[b])
        throw std::invalid_argument("polynomial_coefficients: velocities must be distinct");

  RationalMat4 v;
  for (int i = 0; i < 4; ++i) {
    Rational power = 1;
    for (int k = 0; k < 4; ++k) {
      v[k][i] = power;
      power *= xi[i];
    }
  }
  const RationalMat4 w = rational_inverse(v);

  const Rational half(1, 2);
  const Rational three_half(3, 2);
  std::array<EquilibriumPolynomial, 4> out;
  for (int i = 0; i < 4; ++i) {
    out[i].u_pow = {w[i][0], w[i][1], w[i][2], w[i][3]};
    out[i].c2_pow = {half * w[i][2], three_half * w[i][3]};
  }
  return out;
}

inline std::array<EquilibriumPolynomial, 4> polynomial_coefficients(const VelocitySet& vs) {
  RationalVec4 xi;
  for (int i = 0; i < 4; ++i) xi[i] = Rational(vs.xi[i]);
  return polynomial_coefficients(xi);
}

namespace detail {

inline void append_term(std::string& body, const Rational& coeff, const char* var) {
  if (coeff == 0) return;
  const bool negative = coeff < 0;
  const Rational mag = negative ? Rational(-coeff) : coeff;
  std::string mag_str = mag.str();
  std::string term;
  if (var[0] == '\0')
    term = mag_str;
  else if (mag == 1)
    term = var;
  else
    term = mag_str + "*" + var;
  if (body.empty())
    body = (negative ? "-" : "") + term;
  else
    body += (negative ? " - " : " + ") + term;
}

}  // namespace detail

// Renders "f1 = rho*(-1/4*c2*u - 1/12*c2 - 1/6*u^3 - 1/6*u^2 + 2/3*u + 2/3)".
inline std::string to_string(const EquilibriumPolynomial& p, int index) {
  std::string body;
  detail::append_term(body, p.c2_pow[1], "c2*u");
  detail::append_term(body, p.c2_pow[0], "c2");
  detail::append_term(body, p.u_pow[3], "u^3");
  detail::append_term(body, p.u_pow[2], "u^2");
  detail::append_term(body, p.u_pow[1], "u");
  detail::append_term(body, p.u_pow[0], "");
  if (body.empty()) body = "0";
  return "f" + std::to_string(index + 1) + " = rho*(" + body + ")";
}

inline std::string print_coefficients(const RationalVec4& xi) {
  const auto polys = polynomial_coefficients(xi);
  std::string out;
  for (int i = 0; i < 4; ++i) out += to_string(polys[i], i) + "\n";
  return out;
}

inline std::string print_coefficients(const VelocitySet& vs) {
  RationalVec4 xi;
  for (int i = 0; i < 4; ++i) xi[i] = Rational(vs.xi[i]);
  return print_coefficients(xi);
}

}  // namespace lbm1d
