#pragma once

#include <cmath>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbm1d/advection.hpp"
#include "lbm1d/equilibrium.hpp"
#include "lbm1d/gas.hpp"

namespace lbm1d {

// Two-state (diaphragm) problem on a uniform grid.  All quantities are
// dimensionless; tau sets the collision time and dt = tau * dt_factor.
struct SimulationConfig {
  MacroState left;
  MacroState right;
  GasModel gas{};
  VelocitySet velocities = VelocitySet::standard();
  double tau = 1e-4;
  double theta = 0.5;
  double zeta2 = 4.0;
  int cells = 201;
  double dt_factor = 0.25;
  double t_end = 0.22;
  double x_lo = -0.5;
  double x_hi = 0.5;
  bool strict_zeta2 = false;

  double dx() const { return (x_hi - x_lo) / cells; }
  double dt() const { return tau * dt_factor; }
  double cell_center(int c) const { return x_lo + (c + 0.5) * dx(); }

  void validate() const {
    if (!(tau > 0.0)) throw std::invalid_argument("config: tau must be positive");
    if (!(theta >= 0.0 && theta <= 1.0))
      throw std::invalid_argument("config: theta must lie in [0, 1]");
    if (!(zeta2 > 0.0)) throw std::invalid_argument("config: zeta2 must be positive");
    if (cells < 10) throw std::invalid_argument("config: need at least 10 cells");
    if (!(dt_factor > 0.0)) throw std::invalid_argument("config: dt_factor must be positive");
    if (!(t_end >= 0.0)) throw std::invalid_argument("config: t_end must be non-negative");
    if (!(x_hi > x_lo)) throw std::invalid_argument("config: empty domain");
    const double cfl = velocities.max_speed() * dt() / dx();
    if (!(cfl < 1.0))
      throw std::invalid_argument("config: advective CFL " + std::to_string(cfl) +
                                  " must stay below 1 (reduce dt_factor or refine tau)");
  }
};

// Transformed populations, current time, and completed step count.  g absorbs
// the implicit half of the collision: g = f + pi theta (f - f_eq).
struct PopulationField {
  int cells = 0;
  std::vector<double> data;

  void resize(int n) {
    cells = n;
    data.assign(static_cast<std::size_t>(kVelocities * kLevels) * (n + 4), 0.0);
  }
  int stride() const { return cells + 4; }
  std::span<double> row(int i, int j) {
    return {data.data() + static_cast<std::size_t>(i * kLevels + j) * stride(),
            static_cast<std::size_t>(stride())};
  }
  std::span<const double> row(int i, int j) const {
    return {data.data() + static_cast<std::size_t>(i * kLevels + j) * stride(),
            static_cast<std::size_t>(stride())};
  }
};

struct FieldState {
  PopulationField g;
  double t = 0.0;
  long long step = 0;
};

inline double g_from_f(double f, double f_eq, double pi, double theta) {
  return f + pi * theta * (f - f_eq);
}

// Exact inverse of the transform; returns f_eq bitwise when g equals it.
inline double f_from_g(double g, double f_eq, double pi, double theta) {
  return f_eq + (g - f_eq) / (1.0 + pi * theta);
}

// Conserved moments of one cell's populations.  Summation pairs each velocity
// with its opposite first, so mirrored fields produce bitwise-mirrored
// moments for sign-symmetric velocity sets.
inline ConservedState moments_from_cell(const SplitPopulations& cell,
                                        const EnergyLevels& levels, const VelocitySet& vs) {
  double rho = 0.0, mom = 0.0, etot = 0.0;
  for (int j = 0; j < kLevels; ++j) {
    const double zj = (j == 0) ? EnergyLevels::zeta1 : levels.zeta2;
    const auto& f = cell.f;
    rho += (f[0][j] + f[1][j]) + (f[2][j] + f[3][j]);
    mom += (f[0][j] * vs.xi[0] + f[1][j] * vs.xi[1]) +
           (f[2][j] * vs.xi[2] + f[3][j] * vs.xi[3]);
    const double w0 = 0.5 * vs.xi[0] * vs.xi[0] + zj;
    const double w1 = 0.5 * vs.xi[1] * vs.xi[1] + zj;
    const double w2 = 0.5 * vs.xi[2] * vs.xi[2] + zj;
    const double w3 = 0.5 * vs.xi[3] * vs.xi[3] + zj;
    etot += (f[0][j] * w0 + f[1][j] * w1) + (f[2][j] * w2 + f[3][j] * w3);
  }
  return {rho, mom, etot};
}

struct Snapshot {
  double time = 0.0;
  long long step = 0;
  std::vector<double> x;
  std::vector<MacroState> states;
};

// Semi-implicit advance: recover f from g, advect f with the limited upwind
// divergence, then rebuild g with the explicit collision share.  Ghost cells
// keep their initial equilibria for the whole run (Dirichlet by equilibrium),
// which f_from_g reproduces exactly because their g never moves.
class Simulation {
 public:
  explicit Simulation(const SimulationConfig& cfg)
      : cfg_(cfg), matrix_(moment_matrix(cfg.velocities)), levels_(cfg.zeta2) {
    cfg_.validate();
    init_field();
  }

  const SimulationConfig& config() const { return cfg_; }
  const MomentMatrix& matrix() const { return matrix_; }
  const FieldState& state() const { return st_; }
  FieldState& mutable_state() { return st_; }  // test access; refresh_caches() after edits
  bool zeta2_warned() const { return warned_zeta2_; }
  double dt() const { return cfg_.dt(); }

  const MacroState& cell_state(int c) const { return macro_[static_cast<std::size_t>(c) + 2]; }
  std::span<const double> equilibrium_row(int i, int j) const { return feq_.row(i, j); }

  // Macros and equilibria of every cell recomputed from the stored g.
  void refresh_caches() {
    update_macros(0, cfg_.cells + 4);
    for (int pc = 0; pc < cfg_.cells + 4; ++pc) rebuild_equilibrium(pc);
  }

  void step() { advance(cfg_.dt()); }

  // One step of length dt_step; shortened steps recompute pi = dt_step / tau.
  void advance(double dt_step) {
    if (!(dt_step > 0.0)) throw std::invalid_argument("advance: dt_step must be positive");
    const double pi = dt_step / cfg_.tau;
    const double theta = cfg_.theta;
    const double explicit_share = pi * (1.0 - theta);
    const int n = cfg_.cells;
    const int stride = n + 4;
    const double inv_dx = 1.0 / cfg_.dx();

    for (int i = 0; i < kVelocities; ++i) {
      for (int j = 0; j < kLevels; ++j) {
        const std::span<const double> g = st_.g.row(i, j);
        const std::span<const double> feq = feq_.row(i, j);
        const std::span<double> f = fwork_.row(i, j);
        for (int pc = 0; pc < stride; ++pc)
          f[pc] = f_from_g(g[pc], feq[pc], pi, theta);

        const PopulationRow row(f, cfg_.dx());
        const double e = cfg_.velocities.xi[i];
        const std::span<double> gnew = st_.g.row(i, j);
        double prev = interface_flux(row, e, 0);
        for (int c = 0; c < n; ++c) {
          const double next = interface_flux(row, e, c + 1);
          const double div = (next - prev) * inv_dx;
          prev = next;
          const int pc = c + 2;
          gnew[pc] = (f[pc] + explicit_share * (feq[pc] - f[pc])) - dt_step * div;
        }
      }
    }

    st_.t += dt_step;
    st_.step += 1;
    update_macros(2, cfg_.cells + 2);
    for (int pc = 2; pc < cfg_.cells + 2; ++pc) rebuild_equilibrium(pc);
  }

  // Steps until t_target, shortening the last step to land on it exactly.
  void run_to(double t_target) {
    const double dt_full = cfg_.dt();
    if (t_target < st_.t - dt_full * 1e-6)
      throw std::invalid_argument("run_to: target time lies in the past");
    while (true) {
      const double remaining = t_target - st_.t;
      if (remaining <= dt_full * 1e-6) break;
      if (remaining >= dt_full * (1.0 + 1e-6)) {
        advance(dt_full);
      } else {
        advance(remaining);
        break;
      }
    }
    st_.t = t_target;
  }

  Snapshot snapshot() const {
    Snapshot s;
    s.time = st_.t;
    s.step = st_.step;
    s.x.reserve(cfg_.cells);
    s.states.reserve(cfg_.cells);
    for (int c = 0; c < cfg_.cells; ++c) {
      s.x.push_back(cfg_.cell_center(c));
      s.states.push_back(cell_state(c));
    }
    return s;
  }

 private:
  SimulationConfig cfg_;
  MomentMatrix matrix_;
  EnergyLevels levels_;
  FieldState st_;
  std::vector<MacroState> macro_;  // per cell, ghosts included
  PopulationField feq_;
  PopulationField fwork_;
  bool warned_zeta2_ = false;

  void init_field() {
    const int n = cfg_.cells;
    st_.g.resize(n);
    feq_.resize(n);
    fwork_.resize(n);
    macro_.clear();
    macro_.reserve(static_cast<std::size_t>(n) + 4);
    for (int pc = 0; pc < n + 4; ++pc) {
      const double x = cfg_.cell_center(pc - 2);
      macro_.push_back(x < 0.0 ? cfg_.left : cfg_.right);
    }
    for (int pc = 0; pc < n + 4; ++pc) rebuild_equilibrium(pc);
    st_.g.data = feq_.data;  // initial f equals f_eq, and g(f_eq) = f_eq
  }

  void rebuild_equilibrium(int pc) {
    const MacroState& s = macro_[pc];
    const double zeta = cfg_.gas.zeta_fraction() * s.eps;
    if (zeta > levels_.zeta2) {
      if (cfg_.strict_zeta2)
        throw std::runtime_error("zeta2 too small: cell " + std::to_string(pc - 2) +
                                 " needs zeta = " + std::to_string(zeta) +
                                 " > zeta2 = " + std::to_string(levels_.zeta2));
      if (!warned_zeta2_) {
        std::fprintf(stderr,
                     "warning: rest energy zeta = %g exceeds zeta2 = %g (cell %d); "
                     "level weights leave [0, 1]\n",
                     zeta, levels_.zeta2, pc - 2);
        warned_zeta2_ = true;
      }
    }
    const std::array<double, 4> f_eq = equilibrium_populations(s, cfg_.gas, matrix_);
    const double w2 = zeta / levels_.zeta2;
    for (int i = 0; i < kVelocities; ++i) {
      const double hi = f_eq[i] * w2;
      feq_.row(i, 1)[pc] = hi;
      feq_.row(i, 0)[pc] = f_eq[i] - hi;
    }
  }

  void update_macros(int pc_begin, int pc_end) {
    for (int pc = pc_begin; pc < pc_end; ++pc) {
      SplitPopulations cell;
      for (int i = 0; i < kVelocities; ++i)
        for (int j = 0; j < kLevels; ++j) cell.f[i][j] = st_.g.row(i, j)[pc];
      const ConservedState u = moments_from_cell(cell, levels_, cfg_.velocities);
      try {
        macro_[pc] = conserved_to_primitive(u);
      } catch (const DegenerateStateError& e) {
        throw DegenerateStateError("cell " + std::to_string(pc - 2) + " at t = " +
                                       std::to_string(st_.t) + " (step " +
                                       std::to_string(st_.step) + "): " + e.what(),
                                   e.rho(), e.eps());
      }
    }
  }
};

// Runs a config from scratch and returns profiles at the requested times
// (default: t_end only).  Times must be sorted ascending within [0, t_end].
inline std::vector<Snapshot> run(const SimulationConfig& cfg,
                                 std::vector<double> times = {}) {
  if (times.empty()) times = {cfg.t_end};
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < 0.0 || times[k] > cfg.t_end)
      throw std::invalid_argument("run: snapshot time " + std::to_string(times[k]) +
                                  " outside [0, t_end]");
    if (k > 0 && times[k] <= times[k - 1])
      throw std::invalid_argument("run: snapshot times must increase strictly");
  }
  Simulation sim(cfg);
  std::vector<Snapshot> out;
  out.reserve(times.size());
  for (double t : times) {
    sim.run_to(t);
    out.push_back(sim.snapshot());
  }
  return out;
}

inline double viscosity_diagnostic(const MacroState& s, const GasModel& gas, double tau) {
  return thermo(s, gas).p * tau;
}

}  // namespace lbm1d
