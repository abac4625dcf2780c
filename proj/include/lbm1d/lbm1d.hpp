#pragma once

#include "lbm1d/advection.hpp"
#include "lbm1d/coefficients.hpp"
#include "lbm1d/equilibrium.hpp"
#include "lbm1d/gas.hpp"
#include "lbm1d/presets.hpp"
#include "lbm1d/profile.hpp"
#include "lbm1d/rational.hpp"
#include "lbm1d/riemann.hpp"
#include "lbm1d/scales.hpp"
#include "lbm1d/solver.hpp"
