#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "lbm1d/gas.hpp"
#include "lbm1d/riemann.hpp"

using namespace lbm1d;

namespace {

// Test-local star-pressure solve: plain bisection on the summed pressure
// function, no Newton polish, no shared code with the library path.
double bisect_star_pressure(const MacroState& left, const MacroState& right,
                            const GasModel& gas) {
  const double g = gas.gamma;
  const auto phi = [&](const MacroState& s, double p) {
    const ThermoRecord t = thermo(s, gas);
    const double pk = t.p;
    const double a = std::sqrt(g * pk / s.rho);
    if (p > pk) {
      const double big_a = 2.0 / ((g + 1.0) * s.rho);
      const double big_b = (g - 1.0) / (g + 1.0) * pk;
      return (p - pk) * std::sqrt(big_a / (p + big_b));
    }
    return 2.0 * a / (g - 1.0) * (std::pow(p / pk, (g - 1.0) / (2.0 * g)) - 1.0);
  };
  const auto residual = [&](double p) {
    return phi(left, p) + phi(right, p) + (right.u - left.u);
  };

  double lo = 1e-12, hi = 1.0;
  while (residual(hi) < 0.0) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

const MacroState kSodLeft{1.0, 0.0, 2.5};
const MacroState kSodRight{0.125, 0.0, 2.0};
const MacroState kLaxLeft{0.445, 0.698, 19.82};
const MacroState kLaxRight{0.5, 0.0, 2.855};

}  // namespace

TEST_CASE("star state agrees with an independent bisection") {
  const GasModel gas;
  const std::vector<std::pair<MacroState, MacroState>> cases = {
      {kSodLeft, kSodRight},
      {kLaxLeft, kLaxRight},
      {MacroState(1.0, -0.5, 3.0), MacroState(0.8, 0.7, 1.5)},
      {MacroState(0.3, 1.2, 8.0), MacroState(2.0, -0.3, 0.9)},
  };
  for (const auto& [left, right] : cases) {
    const RiemannSolution sol = star_state(left, right, gas);
    const double p_ref = bisect_star_pressure(left, right, gas);
    CHECK_THAT(sol.p_star, Catch::Matchers::WithinRel(p_ref, 1e-9));
  }
}

TEST_CASE("classic shock tube star values") {
  const GasModel gas;
  {
    const RiemannSolution sol = star_state(kSodLeft, kSodRight, gas);
    CHECK_THAT(sol.p_star, Catch::Matchers::WithinAbs(0.30313, 1e-4));
    CHECK_THAT(sol.u_star, Catch::Matchers::WithinAbs(0.92745, 1e-4));
    CHECK_THAT(sol.rho_star_right, Catch::Matchers::WithinAbs(0.26557, 1e-4));
    CHECK(sol.left_wave == WaveKind::rarefaction);
    CHECK(sol.right_wave == WaveKind::shock);
    CHECK_THAT(sol.right_head, Catch::Matchers::WithinAbs(1.7522, 1e-3));
  }
  {
    const RiemannSolution sol = star_state(kLaxLeft, kLaxRight, gas);
    CHECK_THAT(sol.p_star, Catch::Matchers::WithinRel(2.466, 2e-3));
    CHECK_THAT(sol.u_star, Catch::Matchers::WithinRel(1.529, 2e-3));
    CHECK(sol.right_wave == WaveKind::shock);
  }
}

TEST_CASE("equal states produce a trivial solution") {
  const GasModel gas;
  const MacroState s(1.3, 0.4, 2.2);
  const RiemannSolution sol = star_state(s, s, gas);
  const ThermoRecord t = thermo(s, gas);
  CHECK_THAT(sol.p_star, Catch::Matchers::WithinRel(t.p, 1e-10));
  CHECK_THAT(sol.u_star, Catch::Matchers::WithinAbs(s.u, 1e-10));
  CHECK_THAT(sol.rho_star_left, Catch::Matchers::WithinRel(s.rho, 1e-9));
  CHECK_THAT(sol.rho_star_right, Catch::Matchers::WithinRel(s.rho, 1e-9));
}

TEST_CASE("mirrored data centres the contact") {
  const GasModel gas;
  const MacroState left(1.0, 0.75, 2.5);
  const MacroState right(1.0, -0.75, 2.5);
  const RiemannSolution sol = star_state(left, right, gas);
  CHECK_THAT(sol.u_star, Catch::Matchers::WithinAbs(0.0, 1e-12));
  CHECK_THAT(sol.rho_star_left, Catch::Matchers::WithinRel(sol.rho_star_right, 1e-12));
  CHECK_THAT(sol.left_head, Catch::Matchers::WithinAbs(-sol.right_head, 1e-12));
}

TEST_CASE("shock branches satisfy the jump conditions") {
  const GasModel gas;
  const RiemannSolution sol = star_state(kSodLeft, kSodRight, gas);
  REQUIRE(sol.right_wave == WaveKind::shock);

  // mass and momentum balance across the right shock, pre from the data,
  // post from the star region, in the shock frame
  const ThermoRecord tr = thermo(kSodRight, gas);
  const double s = sol.right_head;
  const double rho0 = kSodRight.rho, u0 = kSodRight.u, p0 = tr.p;
  const double rho1 = sol.rho_star_right, u1 = sol.u_star, p1 = sol.p_star;

  const double mass0 = rho0 * (u0 - s);
  const double mass1 = rho1 * (u1 - s);
  CHECK_THAT(mass1 - mass0, Catch::Matchers::WithinAbs(0.0, 1e-10));

  const double mom0 = rho0 * (u0 - s) * (u0 - s) + p0;
  const double mom1 = rho1 * (u1 - s) * (u1 - s) + p1;
  CHECK_THAT(mom1 - mom0, Catch::Matchers::WithinAbs(0.0, 1e-10));

  const double e0 = p0 / ((gas.gamma - 1.0) * rho0);
  const double e1 = p1 / ((gas.gamma - 1.0) * rho1);
  const double en0 = mass0 * (e0 + 0.5 * (u0 - s) * (u0 - s)) + p0 * (u0 - s);
  const double en1 = mass1 * (e1 + 0.5 * (u1 - s) * (u1 - s)) + p1 * (u1 - s);
  CHECK_THAT(en1 - en0, Catch::Matchers::WithinAbs(0.0, 1e-10));
}

TEST_CASE("sampling matches the wave structure") {
  const GasModel gas;
  const RiemannSolution sol = star_state(kSodLeft, kSodRight, gas);

  // far left of all waves: the unperturbed left state, bitwise
  {
    const MacroState s = sample(sol, kSodLeft, kSodRight, gas, sol.left_head - 1.0);
    CHECK(s.rho == kSodLeft.rho);
    CHECK(s.u == kSodLeft.u);
    CHECK(s.eps == kSodLeft.eps);
  }
  // beyond the right shock: the unperturbed right state, bitwise
  {
    const MacroState s = sample(sol, kSodLeft, kSodRight, gas, sol.right_head + 1.0);
    CHECK(s.rho == kSodRight.rho);
    CHECK(s.u == kSodRight.u);
    CHECK(s.eps == kSodRight.eps);
  }
  // inside the fan the invariant u + 2a/(gamma-1) carries over from the left
  {
    const ThermoRecord tl = thermo(kSodLeft, gas);
    const double a_left = std::sqrt(gas.gamma * tl.p / kSodLeft.rho);
    const double invariant = kSodLeft.u + 2.0 * a_left / (gas.gamma - 1.0);
    const double xi = 0.5 * (sol.left_head + sol.left_tail);
    const MacroState s = sample(sol, kSodLeft, kSodRight, gas, xi);
    const ThermoRecord ts = thermo(s, gas);
    const double a = std::sqrt(gas.gamma * ts.p / s.rho);
    CHECK_THAT(s.u + 2.0 * a / (gas.gamma - 1.0),
               Catch::Matchers::WithinRel(invariant, 1e-12));
    // characteristic speed matches the sampling ray inside the fan
    CHECK_THAT(s.u - a, Catch::Matchers::WithinAbs(xi, 1e-10));
  }
  // between contact and shock: the right star state
  {
    const double xi = 0.5 * (sol.u_star + sol.right_head);
    const MacroState s = sample(sol, kSodLeft, kSodRight, gas, xi);
    CHECK_THAT(s.rho, Catch::Matchers::WithinRel(sol.rho_star_right, 1e-12));
    CHECK_THAT(s.u, Catch::Matchers::WithinRel(sol.u_star, 1e-12));
  }
}

TEST_CASE("profile evaluation on a grid") {
  const GasModel gas;
  std::vector<double> x = {-0.4, -0.1, 0.0, 0.3, 0.45};
  {
    // t = 0 reproduces the initial discontinuity
    const auto states = exact_profile(kSodLeft, kSodRight, gas, x, 0.0);
    REQUIRE(states.size() == x.size());
    CHECK(states[0].rho == kSodLeft.rho);
    CHECK(states[1].rho == kSodLeft.rho);
    CHECK(states[2].rho == kSodRight.rho);  // x = 0 belongs to the right
    CHECK(states[4].rho == kSodRight.rho);
  }
  {
    const auto states = exact_profile(kSodLeft, kSodRight, gas, x, 0.22);
    const RiemannSolution sol = star_state(kSodLeft, kSodRight, gas);
    // x = 0.45 / t = 0.22 is beyond the shock
    CHECK(x[4] / 0.22 > sol.right_head);
    CHECK(states[4].rho == kSodRight.rho);
    // x = 0.3 sits between contact and shock
    CHECK(x[3] / 0.22 > sol.u_star);
    CHECK(x[3] / 0.22 < sol.right_head);
    CHECK_THAT(states[3].rho, Catch::Matchers::WithinRel(sol.rho_star_right, 1e-12));
  }
}

TEST_CASE("near-vacuum data is rejected") {
  const GasModel gas;
  const MacroState left(1.0, -5.0, 0.6);
  const MacroState right(1.0, 5.0, 0.6);
  CHECK_THROWS_AS(star_state(left, right, gas), std::domain_error);
}
