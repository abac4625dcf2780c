#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lbm1d {

// Raised when a conserved state has no valid primitive equivalent.  The
// solver rethrows with cell, time and step context attached to the message.
class DegenerateStateError : public std::runtime_error {
 public:
  DegenerateStateError(const std::string& what, double rho, double eps)
      : std::runtime_error(what), rho_(rho), eps_(eps) {}
  double rho() const { return rho_; }
  double eps() const { return eps_; }

 private:
  double rho_;
  double eps_;
};

// Polytropic ideal gas in one space dimension.  gamma must lie in (1, 3]:
// at gamma = 3 the rest energy vanishes, above it the two-level split would
// need a negative rest energy.
struct GasModel {
  double gamma;
  double r_gas;

  explicit GasModel(double gamma_in = 1.4, double r_gas_in = 1.0)
      : gamma(gamma_in), r_gas(r_gas_in) {
    if (!(gamma > 1.0 && gamma <= 3.0))
      throw std::invalid_argument("GasModel: gamma must lie in (1, 3], got " +
                                  std::to_string(gamma_in));
    if (!(r_gas > 0.0))
      throw std::invalid_argument("GasModel: r_gas must be positive, got " +
                                  std::to_string(r_gas_in));
  }

  // zeta = zeta_fraction() * eps is the internal energy not carried by the
  // translational spread of the discrete velocities.
  double zeta_fraction() const { return 1.0 - 0.5 * (gamma - 1.0); }
};

// Primitive cell state: density, velocity, specific internal energy.
struct MacroState {
  double rho;
  double u;
  double eps;

  MacroState(double rho_in, double u_in, double eps_in)
      : rho(rho_in), u(u_in), eps(eps_in) {
    if (!(rho > 0.0))
      throw DegenerateStateError(
          "MacroState: density must be positive, got " + std::to_string(rho_in),
          rho_in, eps_in);
    if (!(eps > 0.0))
      throw DegenerateStateError("MacroState: internal energy must be positive, got " +
                                     std::to_string(eps_in),
                                 rho_in, eps_in);
  }
};

// Conserved moments per unit volume.  Plain aggregate: degenerate values are
// representable and diagnosed on conversion to primitives.
struct ConservedState {
  double rho;
  double mom;
  double etot;
};

struct ThermoRecord {
  double p;            // rho (gamma - 1) eps
  double c;            // sqrt(2 (gamma - 1) eps); p == rho c^2 / 2
  double zeta;         // rest energy per unit mass
  double e_total;      // eps + u^2 / 2
  double temperature;  // p / (rho r_gas)
};

inline ThermoRecord thermo(const MacroState& s, const GasModel& gas) {
  ThermoRecord r;
  const double gm1 = gas.gamma - 1.0;
  r.p = s.rho * gm1 * s.eps;
  r.c = std::sqrt(2.0 * gm1 * s.eps);
  r.zeta = gas.zeta_fraction() * s.eps;
  r.e_total = s.eps + 0.5 * s.u * s.u;
  r.temperature = r.p / (s.rho * gas.r_gas);
  return r;
}

inline ConservedState primitive_to_conserved(const MacroState& s) {
  return {s.rho, s.rho * s.u, s.rho * (s.eps + 0.5 * s.u * s.u)};
}

inline MacroState conserved_to_primitive(const ConservedState& c) {
  if (!(c.rho > 0.0))
    throw DegenerateStateError(
        "conserved_to_primitive: non-positive density " + std::to_string(c.rho),
        c.rho, 0.0);
  const double u = c.mom / c.rho;
  const double eps = c.etot / c.rho - 0.5 * u * u;
  if (!(eps > 0.0))
    throw DegenerateStateError(
        "conserved_to_primitive: non-positive internal energy " + std::to_string(eps),
        c.rho, eps);
  return MacroState(c.rho, u, eps);
}

}  // namespace lbm1d
