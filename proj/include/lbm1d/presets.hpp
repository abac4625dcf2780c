#pragma once

#include <stdexcept>
#include <string>

#include "lbm1d/solver.hpp"

namespace lbm1d {

struct CaseSpec {
  std::string name;
  SimulationConfig config;
};

// Canonical shock-tube cases.  Both run 201 cells on [-0.5, 0.5] with
// tau = 1e-4, dt = tau / 4 and theta = 1/2; they differ in the initial
// states, the upper rest-energy level, and the final time.
inline CaseSpec preset(const std::string& name) {
  if (name == "sod") {
    return {"sod",
            SimulationConfig{.left = MacroState(1.0, 0.0, 2.5),
                             .right = MacroState(0.125, 0.0, 2.0),
                             .zeta2 = 4.0,
                             .t_end = 0.22}};
  }
  if (name == "lax") {
    return {"lax",
            SimulationConfig{.left = MacroState(0.445, 0.698, 19.82),
                             .right = MacroState(0.5, 0.0, 2.855),
                             .zeta2 = 30.0,
                             .t_end = 0.14}};
  }
  throw std::invalid_argument("preset: unknown case '" + name + "' (available: sod, lax)");
}

}  // namespace lbm1d
