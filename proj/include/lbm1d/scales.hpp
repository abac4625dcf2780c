#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lbm1d {

// Reference scales for switching between dimensional and dimensionless
// variables.  The velocity scale is sqrt(e0) and the time scale L0 / u0;
// both are derived on the fly, never stored.
struct ReferenceScales {
  double rho0;
  double L0;
  double e0;

  ReferenceScales(double rho0_in, double L0_in, double e0_in)
      : rho0(rho0_in), L0(L0_in), e0(e0_in) {
    if (!(rho0 > 0.0) || !(L0 > 0.0) || !(e0 > 0.0))
      throw std::invalid_argument("ReferenceScales: rho0, L0, e0 must all be positive");
  }

  double u0() const { return std::sqrt(e0); }
  double t0() const { return L0 / u0(); }
};

struct FlowQuantities {
  double t;
  double x;
  double rho;
  double u;
  double e;
};

inline FlowQuantities nondimensionalize(const FlowQuantities& q, const ReferenceScales& s) {
  return {q.t / s.t0(), q.x / s.L0, q.rho / s.rho0, q.u / s.u0(), q.e / s.e0};
}

inline FlowQuantities dimensionalize(const FlowQuantities& q, const ReferenceScales& s) {
  return {q.t * s.t0(), q.x * s.L0, q.rho * s.rho0, q.u * s.u0(), q.e * s.e0};
}

}  // namespace lbm1d
