#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "lbm1d/gas.hpp"

namespace lbm1d {

enum class WaveKind { shock, rarefaction };

// Self-similar solution of the two-state problem: star pressure and velocity
// plus the outer wave speeds.  head == tail for a shock.
struct RiemannSolution {
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  WaveKind left_wave = WaveKind::rarefaction;
  WaveKind right_wave = WaveKind::rarefaction;
  double left_head = 0.0;
  double left_tail = 0.0;
  double right_head = 0.0;
  double right_tail = 0.0;
};

namespace riemann_detail {

struct Side {
  double rho, u, p, a;
};

inline Side make_side(const MacroState& s, const GasModel& gas) {
  const double p = s.rho * (gas.gamma - 1.0) * s.eps;
  return {s.rho, s.u, p, std::sqrt(gas.gamma * p / s.rho)};
}

// Velocity change across one wave as a function of the star pressure:
// shock branch above the side pressure, rarefaction branch below.
inline double pressure_fn(double p, const Side& s, double gamma) {
  if (p > s.p) {
    const double big_a = 2.0 / ((gamma + 1.0) * s.rho);
    const double big_b = (gamma - 1.0) / (gamma + 1.0) * s.p;
    return (p - s.p) * std::sqrt(big_a / (p + big_b));
  }
  return 2.0 * s.a / (gamma - 1.0) *
         (std::pow(p / s.p, 0.5 * (gamma - 1.0) / gamma) - 1.0);
}

inline double pressure_fn_deriv(double p, const Side& s, double gamma) {
  if (p > s.p) {
    const double big_a = 2.0 / ((gamma + 1.0) * s.rho);
    const double big_b = (gamma - 1.0) / (gamma + 1.0) * s.p;
    const double root = std::sqrt(big_a / (p + big_b));
    return root * (1.0 - 0.5 * (p - s.p) / (p + big_b));
  }
  return 1.0 / (s.rho * s.a) * std::pow(p / s.p, -0.5 * (gamma + 1.0) / gamma);
}

inline double shock_density(double p_star, const Side& s, double gamma) {
  const double mu2 = (gamma - 1.0) / (gamma + 1.0);
  const double ratio = p_star / s.p;
  return s.rho * (ratio + mu2) / (mu2 * ratio + 1.0);
}

}  // namespace riemann_detail

// Star-region solve: the pressure root is bracketed, bisected to a relative
// width of 1e-6, then polished by Newton until the velocity-matching residual
// drops below 1e-12.  The residual function is monotone in p, so the bracket
// never loses the root.
inline RiemannSolution star_state(const MacroState& left, const MacroState& right,
                                  const GasModel& gas) {
  using namespace riemann_detail;
  const double gamma = gas.gamma;
  const Side sl = make_side(left, gas);
  const Side sr = make_side(right, gas);
  const double du = sr.u - sl.u;

  if (2.0 * (sl.a + sr.a) / (gamma - 1.0) <= du)
    throw std::domain_error("star_state: states diverge fast enough to open a vacuum");

  const auto residual = [&](double p) {
    return pressure_fn(p, sl, gamma) + pressure_fn(p, sr, gamma) + du;
  };

  double lo = std::min(sl.p, sr.p);
  double hi = std::max(sl.p, sr.p);
  while (residual(lo) > 0.0) lo *= 0.5;
  while (residual(hi) < 0.0) hi *= 2.0;
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) < 0.0 ? lo : hi) = mid;
  }

  double p = 0.5 * (lo + hi);
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    const double f = residual(p);
    if (std::abs(f) <= 1e-12) {
      converged = true;
      break;
    }
    (f < 0.0 ? lo : hi) = p;
    const double df = pressure_fn_deriv(p, sl, gamma) + pressure_fn_deriv(p, sr, gamma);
    double next = p - f / df;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    p = next;
  }
  if (!converged)
    throw std::logic_error("star_state: pressure iteration did not converge");

  RiemannSolution sol;
  sol.p_star = p;
  sol.u_star = 0.5 * (sl.u + sr.u) + 0.5 * (pressure_fn(p, sr, gamma) - pressure_fn(p, sl, gamma));

  const double g1 = gamma - 1.0;
  const double g2 = gamma + 1.0;
  if (p > sl.p) {
    sol.left_wave = WaveKind::shock;
    sol.rho_star_left = shock_density(p, sl, gamma);
    const double speed =
        sl.u - sl.a * std::sqrt(0.5 * g2 / gamma * (p / sl.p) + 0.5 * g1 / gamma);
    sol.left_head = sol.left_tail = speed;
  } else {
    sol.left_wave = WaveKind::rarefaction;
    sol.rho_star_left = sl.rho * std::pow(p / sl.p, 1.0 / gamma);
    const double a_star = sl.a * std::pow(p / sl.p, 0.5 * g1 / gamma);
    sol.left_head = sl.u - sl.a;
    sol.left_tail = sol.u_star - a_star;
  }
  if (p > sr.p) {
    sol.right_wave = WaveKind::shock;
    sol.rho_star_right = shock_density(p, sr, gamma);
    const double speed =
        sr.u + sr.a * std::sqrt(0.5 * g2 / gamma * (p / sr.p) + 0.5 * g1 / gamma);
    sol.right_head = sol.right_tail = speed;
  } else {
    sol.right_wave = WaveKind::rarefaction;
    sol.rho_star_right = sr.rho * std::pow(p / sr.p, 1.0 / gamma);
    const double a_star = sr.a * std::pow(p / sr.p, 0.5 * g1 / gamma);
    sol.right_head = sr.u + sr.a;
    sol.right_tail = sol.u_star + a_star;
  }
  return sol;
}

// Samples the similarity solution at xi = x / t.
inline MacroState sample(const RiemannSolution& sol, const MacroState& left,
                         const MacroState& right, const GasModel& gas, double xi) {
  using namespace riemann_detail;
  const double gamma = gas.gamma;
  const double g1 = gamma - 1.0;
  const double g2 = gamma + 1.0;

  const auto from_rho_p = [&](double rho, double p, double u) {
    return MacroState(rho, u, p / (g1 * rho));
  };

  if (xi <= sol.u_star) {
    const Side s = make_side(left, gas);
    if (sol.left_wave == WaveKind::shock) {
      if (xi <= sol.left_head) return left;
      return from_rho_p(sol.rho_star_left, sol.p_star, sol.u_star);
    }
    if (xi <= sol.left_head) return left;
    if (xi >= sol.left_tail) return from_rho_p(sol.rho_star_left, sol.p_star, sol.u_star);
    const double factor = 2.0 / g2 + g1 / (g2 * s.a) * (s.u - xi);
    const double rho = s.rho * std::pow(factor, 2.0 / g1);
    const double p = s.p * std::pow(factor, 2.0 * gamma / g1);
    const double u = 2.0 / g2 * (s.a + 0.5 * g1 * s.u + xi);
    return from_rho_p(rho, p, u);
  }

  const Side s = make_side(right, gas);
  if (sol.right_wave == WaveKind::shock) {
    if (xi >= sol.right_head) return right;
    return from_rho_p(sol.rho_star_right, sol.p_star, sol.u_star);
  }
  if (xi >= sol.right_head) return right;
  if (xi <= sol.right_tail) return from_rho_p(sol.rho_star_right, sol.p_star, sol.u_star);
  const double factor = 2.0 / g2 - g1 / (g2 * s.a) * (s.u - xi);
  const double rho = s.rho * std::pow(factor, 2.0 / g1);
  const double p = s.p * std::pow(factor, 2.0 * gamma / g1);
  const double u = 2.0 / g2 * (-s.a + 0.5 * g1 * s.u + xi);
  return from_rho_p(rho, p, u);
}

// Oracle profile on a fixed grid; t = 0 degenerates to the initial jump.
inline std::vector<MacroState> exact_profile(const MacroState& left, const MacroState& right,
                                             const GasModel& gas, std::span<const double> x,
                                             double t) {
  std::vector<MacroState> out;
  out.reserve(x.size());
  if (t <= 0.0) {
    for (double xc : x) out.push_back(xc < 0.0 ? left : right);
    return out;
  }
  const RiemannSolution sol = star_state(left, right, gas);
  for (double xc : x) out.push_back(sample(sol, left, right, gas, xc / t));
  return out;
}

}  // namespace lbm1d
