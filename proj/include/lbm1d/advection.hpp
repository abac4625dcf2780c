#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbm1d {

// One distribution row: interior cells flanked by two ghost cells per side,
// which is exactly the stencil depth of the limited interface flux.
struct PopulationRow {
  std::span<const double> values;
  double dx;

  PopulationRow(std::span<const double> values_in, double dx_in)
      : values(values_in), dx(dx_in) {
    if (values.size() < 5)
      throw std::invalid_argument("PopulationRow: need one interior cell plus four ghosts");
    if (!(dx > 0.0))
      throw std::invalid_argument("PopulationRow: dx must be positive");
  }

  int interior() const { return static_cast<int>(values.size()) - 4; }
};

inline double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

struct SplitFlux {
  double plus;   // carried by e > 0
  double minus;  // carried by e < 0
};

// plus + minus == e * f; one side is zero for a single-signed velocity.
inline SplitFlux split_flux(double e, double f) {
  const double a = std::abs(e);
  return {0.5 * (e + a) * f, 0.5 * (e - a) * f};
}

enum class Limiter { minmod, none };

// Flux through face `face`, which separates interior cells face-1 and face;
// valid faces run 0..interior().  Upwind-biased with a minmod-limited
// second-order correction on each split component; Limiter::none drops the
// correction, leaving first-order upwind.
inline double interface_flux(const PopulationRow& row, double e, int face,
                             Limiter lim = Limiter::minmod) {
  if (face < 0 || face > row.interior())
    throw std::out_of_range("interface_flux: face " + std::to_string(face) +
                            " outside 0.." + std::to_string(row.interior()));
  const double* s = row.values.data() + face;
  const double a = std::abs(e);
  const double cp = 0.5 * (e + a);
  const double cm = 0.5 * (e - a);

  const double fp0 = cp * s[0];
  const double fp1 = cp * s[1];
  const double fp2 = cp * s[2];
  const double fm1 = cm * s[1];
  const double fm2 = cm * s[2];
  const double fm3 = cm * s[3];

  double left = fp1;
  double right = fm2;
  if (lim == Limiter::minmod) {
    left += 0.5 * minmod(fp2 - fp1, fp1 - fp0);
    right -= 0.5 * minmod(fm2 - fm1, fm3 - fm2);
  }
  return left + right;
}

// Per-cell flux divergence.  Each face is evaluated once and shared by its
// neighbours, so summing the output telescopes to the boundary fluxes
// exactly in floating point.
inline void advection_divergence(const PopulationRow& row, double e, std::span<double> out,
                                 Limiter lim = Limiter::minmod) {
  const int n = row.interior();
  if (static_cast<int>(out.size()) != n)
    throw std::invalid_argument("advection_divergence: output span must cover the interior");
  const double inv_dx = 1.0 / row.dx;
  double prev = interface_flux(row, e, 0, lim);
  for (int c = 0; c < n; ++c) {
    const double next = interface_flux(row, e, c + 1, lim);
    out[c] = (next - prev) * inv_dx;
    prev = next;
  }
}

inline std::vector<double> advection_divergence(const PopulationRow& row, double e,
                                                Limiter lim = Limiter::minmod) {
  std::vector<double> out(static_cast<std::size_t>(row.interior()));
  advection_divergence(row, e, out, lim);
  return out;
}

}  // namespace lbm1d
