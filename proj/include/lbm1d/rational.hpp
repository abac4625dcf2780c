#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lbm1d {

// Exact rational scalar used for the symbolic equilibrium path and for the
// assignment-matrix inverse.  Arbitrary precision, so Vandermonde-style
// matrices of any distinct velocities invert without overflow.
using Rational = boost::multiprecision::cpp_rational;

using RationalVec4 = std::array<Rational, 4>;
using RationalMat4 = std::array<std::array<Rational, 4>, 4>;

// Gauss-Jordan inverse with partial pivoting.  Arithmetic is exact, so the
// pivot choice only affects intermediate sizes, never the result.
inline RationalMat4 rational_inverse(const RationalMat4& m) {
  RationalMat4 a = m;
  RationalMat4 inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = 1;

  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0)
      throw std::domain_error("rational_inverse: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);

    const Rational d = a[col][col];
    for (int c = 0; c < 4; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (int c = 0; c < 4; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

// Parses "3", "-0.25", "3/2" exactly; used where decimal input must not pick
// up binary rounding.
inline Rational parse_rational(const std::string& text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = (text[pos] == '-');
    ++pos;
  }
  if (pos == text.size()) return fail();

  boost::multiprecision::cpp_int num = 0;
  boost::multiprecision::cpp_int den = 1;
  bool any_digit = false;
  for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
    num = num * 10 + (text[pos] - '0');
    any_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      any_digit = true;
    }
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    boost::multiprecision::cpp_int d = 0;
    bool d_digit = false;
    for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
      d = d * 10 + (text[pos] - '0');
      d_digit = true;
    }
    if (!d_digit || d == 0) return fail();
    den = d;
  }
  if (!any_digit || pos != text.size()) return fail();

  Rational r(num, den);
  return negative ? -r : r;
}

}  // namespace lbm1d
