#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "lbm1d/gas.hpp"
#include "lbm1d/rational.hpp"

namespace lbm1d {

inline constexpr int kVelocities = 4;
inline constexpr int kLevels = 2;

// Four distinct discrete speeds.  The default set pairs +/-1 with +/-2; any
// distinct quadruple is accepted (the moment system stays solvable because
// the velocity matrix is Vandermonde).
struct VelocitySet {
  std::array<double, kVelocities> xi;

  explicit VelocitySet(const std::array<double, kVelocities>& xi_in) : xi(xi_in) {
    for (int a = 0; a < kVelocities; ++a)
      for (int b = a + 1; b < kVelocities; ++b)
        if (xi[a] == xi[b])
          throw std::invalid_argument(
              "VelocitySet: velocities must be distinct; entries " +
              std::to_string(a + 1) + " and " + std::to_string(b + 1) +
              " are both " + std::to_string(xi[a]));
  }

  static VelocitySet standard() { return VelocitySet({1.0, -1.0, 2.0, -2.0}); }

  double max_speed() const {
    double m = 0.0;
    for (double v : xi) m = std::max(m, std::abs(v));
    return m;
  }
};

// v row k holds xi_i^k; v_inv maps the moment vector onto the populations.
// The inverse is computed exactly in rational arithmetic and rounded once,
// so sign-symmetric velocity sets get a bitwise sign-symmetric v_inv.
struct MomentMatrix {
  std::array<std::array<double, 4>, 4> v;
  std::array<std::array<double, 4>, 4> v_inv;
};

inline MomentMatrix moment_matrix(const VelocitySet& vs) {
  RationalMat4 rv;
  for (int i = 0; i < 4; ++i) {
    Rational power = 1;
    const Rational x(vs.xi[i]);
    for (int k = 0; k < 4; ++k) {
      rv[k][i] = power;
      power *= x;
    }
  }
  RationalMat4 rinv;
  try {
    rinv = rational_inverse(rv);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("moment_matrix: velocity set yields a singular matrix");
  }

  MomentMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      m.v[r][c] = rv[r][c].convert_to<double>();
      m.v_inv[r][c] = rinv[r][c].convert_to<double>();
    }
  return m;
}

// Velocity moments of the target distribution: mass, momentum, momentum
// flux, third moment.  m3 is assembled as (m2 + 2p) u so a sign flip of u
// negates it bitwise.
inline std::array<double, 4> moment_vector(const MacroState& s, const GasModel& gas) {
  const double p = s.rho * (gas.gamma - 1.0) * s.eps;
  const double m0 = s.rho;
  const double m1 = s.rho * s.u;
  const double m2 = m1 * s.u + p;
  const double m3 = (m2 + 2.0 * p) * s.u;
  return {m0, m1, m2, m3};
}

inline std::array<double, 4> equilibrium_populations(const MacroState& s,
                                                     const GasModel& gas,
                                                     const MomentMatrix& m) {
  const std::array<double, 4> mv = moment_vector(s, gas);
  std::array<double, 4> f;
  for (int i = 0; i < 4; ++i) {
    const auto& w = m.v_inv[i];
    f[i] = (w[0] * mv[0] + w[1] * mv[1]) + (w[2] * mv[2] + w[3] * mv[3]);
  }
  return f;
}

// Rest-energy levels.  Level 1 sits at zero, level 2 at zeta2 > 0; a state
// with rest energy zeta is represented by weights (1 - zeta/zeta2, zeta/zeta2).
struct EnergyLevels {
  double zeta2;

  explicit EnergyLevels(double zeta2_in) : zeta2(zeta2_in) {
    if (!(zeta2 > 0.0))
      throw std::invalid_argument("EnergyLevels: zeta2 must be positive, got " +
                                  std::to_string(zeta2_in));
  }

  static constexpr double zeta1 = 0.0;
};

struct SplitPopulations {
  std::array<std::array<double, kLevels>, kVelocities> f;
};

// The level-2 share is zeta/zeta2 of each population; level 1 takes the
// complement f_eq - hi, so the re-sum sits within one rounding of f_eq and
// is exact whenever the weight is a clean binary fraction.
inline SplitPopulations split_energy(const std::array<double, 4>& f_eq, double zeta,
                                     const EnergyLevels& levels) {
  if (!(zeta >= 0.0))
    throw std::invalid_argument("split_energy: zeta must be non-negative, got " +
                                std::to_string(zeta));
  const double w2 = zeta / levels.zeta2;
  SplitPopulations s;
  for (int i = 0; i < kVelocities; ++i) {
    const double hi = f_eq[i] * w2;
    s.f[i][1] = hi;
    s.f[i][0] = f_eq[i] - hi;
  }
  return s;
}

struct EquilibriumSet {
  std::array<double, 4> f_eq;
  SplitPopulations f_split;
};

inline EquilibriumSet equilibrium_set(const MacroState& s, const GasModel& gas,
                                      const MomentMatrix& m, const EnergyLevels& levels) {
  EquilibriumSet e;
  e.f_eq = equilibrium_populations(s, gas, m);
  e.f_split = split_energy(e.f_eq, gas.zeta_fraction() * s.eps, levels);
  return e;
}

// Discrete moments of a split population set against their kinetic targets.
// The first six are satisfiable by construction; the seventh (second energy
// moment) is over-determined with four speeds and is reported, not enforced.
struct MomentReport {
  static constexpr int kConditions = 7;
  static constexpr std::array<const char*, kConditions> labels = {
      "mass",   "momentum",    "momentum_flux",        "third_moment",
      "energy", "energy_flux", "second_energy_moment"};

  std::array<double, kConditions> achieved;
  std::array<double, kConditions> target;

  double residual(int k) const { return std::abs(achieved[k] - target[k]); }
  double relative_residual(int k) const {
    return residual(k) / std::max(1.0, std::abs(target[k]));
  }
};

inline MomentReport verify_moments(const SplitPopulations& split, const MacroState& s,
                                   const GasModel& gas, const EnergyLevels& levels,
                                   const VelocitySet& vs) {
  MomentReport rep;
  rep.achieved.fill(0.0);
  for (int j = 0; j < kLevels; ++j) {
    const double zj = (j == 0) ? EnergyLevels::zeta1 : levels.zeta2;
    std::array<double, kVelocities> xi_pow;
    xi_pow.fill(1.0);
    for (int k = 0; k < 4; ++k) {
      double m = 0.0;
      for (int i = 0; i < kVelocities; ++i) m += split.f[i][j] * xi_pow[i];
      rep.achieved[k] += m;
      for (int i = 0; i < kVelocities; ++i) xi_pow[i] *= vs.xi[i];
    }
    for (int k = 0; k < 3; ++k) {
      double m = 0.0;
      for (int i = 0; i < kVelocities; ++i) {
        const double w = 0.5 * vs.xi[i] * vs.xi[i] + zj;
        double term = split.f[i][j] * w;
        for (int q = 0; q < k; ++q) term *= vs.xi[i];
        m += term;
      }
      rep.achieved[4 + k] += m;
    }
  }

  const ThermoRecord t = thermo(s, gas);
  const double re = s.rho * t.e_total;
  rep.target[0] = s.rho;
  rep.target[1] = s.rho * s.u;
  rep.target[2] = s.rho * s.u * s.u + t.p;
  rep.target[3] = (rep.target[2] + 2.0 * t.p) * s.u;
  rep.target[4] = re;
  rep.target[5] = (re + t.p) * s.u;
  rep.target[6] = (re + 2.0 * t.p) * s.u * s.u + t.p * (t.e_total + gas.r_gas * t.temperature);
  return rep;
}

}  // namespace lbm1d
