#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lbm1d/gas.hpp"

using namespace lbm1d;

TEST_CASE("gas model validates its parameters") {
  CHECK_NOTHROW(GasModel(1.4));
  CHECK_NOTHROW(GasModel(3.0));
  CHECK_THROWS_AS(GasModel(1.0), std::invalid_argument);
  CHECK_THROWS_AS(GasModel(3.5), std::invalid_argument);
  CHECK_THROWS_AS(GasModel(0.9), std::invalid_argument);
  CHECK_THROWS_AS(GasModel(1.4, 0.0), std::invalid_argument);
}

TEST_CASE("macro state rejects non-positive density and energy") {
  CHECK_THROWS_AS(MacroState(0.0, 0.0, 1.0), DegenerateStateError);
  CHECK_THROWS_AS(MacroState(-1.0, 0.0, 1.0), DegenerateStateError);
  CHECK_THROWS_AS(MacroState(1.0, 0.0, 0.0), DegenerateStateError);
  CHECK_THROWS_AS(MacroState(1.0, 0.0, -2.0), DegenerateStateError);
  CHECK_NOTHROW(MacroState(1.0, -3.0, 1e-9));
}

TEST_CASE("thermo on the classic diaphragm states") {
  const GasModel gas;

  const ThermoRecord left = thermo(MacroState(1.0, 0.0, 2.5), gas);
  CHECK_THAT(left.p, Catch::Matchers::WithinRel(1.0, 1e-14));
  CHECK_THAT(left.c, Catch::Matchers::WithinRel(std::sqrt(2.0), 1e-14));
  CHECK_THAT(left.zeta, Catch::Matchers::WithinRel(2.0, 1e-14));
  CHECK_THAT(left.e_total, Catch::Matchers::WithinRel(2.5, 1e-14));
  CHECK_THAT(left.temperature, Catch::Matchers::WithinRel(1.0, 1e-14));

  const ThermoRecord right = thermo(MacroState(0.125, 0.0, 2.0), gas);
  CHECK_THAT(right.p, Catch::Matchers::WithinRel(0.1, 1e-14));
  CHECK_THAT(right.zeta, Catch::Matchers::WithinRel(1.6, 1e-14));
}

TEST_CASE("rest energy vanishes at gamma = 3") {
  const GasModel gas(3.0);
  const ThermoRecord r = thermo(MacroState(1.0, 0.5, 2.0), gas);
  CHECK(r.zeta == 0.0);
}

TEST_CASE("thermo identities hold over random states") {
  std::mt19937 rng(20260822u);
  std::uniform_real_distribution<double> rho_d(0.1, 2.0);
  std::uniform_real_distribution<double> u_d(-1.5, 1.5);
  std::uniform_real_distribution<double> eps_d(0.5, 25.0);
  std::uniform_real_distribution<double> gamma_d(1.05, 3.0);

  for (int k = 0; k < 2000; ++k) {
    const GasModel gas(gamma_d(rng));
    const MacroState s(rho_d(rng), u_d(rng), eps_d(rng));
    const ThermoRecord t = thermo(s, gas);

    // p = rho c^2 / 2 and (1/4) rho c^2 + rho zeta = rho eps tie the sound
    // spread and the rest energy back to the internal energy.
    CHECK_THAT(0.5 * s.rho * t.c * t.c, Catch::Matchers::WithinRel(t.p, 1e-14));
    CHECK_THAT(0.25 * s.rho * t.c * t.c + s.rho * t.zeta,
               Catch::Matchers::WithinRel(s.rho * s.eps, 1e-14));
    CHECK(t.zeta >= 0.0);
    CHECK(t.p > 0.0);
  }
}

TEST_CASE("primitive-conserved round trip") {
  const MacroState a(2.0, 2.0, 1.0);
  const ConservedState u = primitive_to_conserved(a);
  CHECK(u.rho == 2.0);
  CHECK(u.mom == 4.0);
  CHECK_THAT(u.etot, Catch::Matchers::WithinRel(6.0, 1e-14));

  // u = 2/2 = 1, eps = 3/2 - u^2/2 = 1
  const MacroState b = conserved_to_primitive({2.0, 2.0, 3.0});
  CHECK(b.rho == 2.0);
  CHECK_THAT(b.u, Catch::Matchers::WithinRel(1.0, 1e-14));
  CHECK_THAT(b.eps, Catch::Matchers::WithinRel(1.0, 1e-14));

  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> rho_d(0.1, 2.0);
  std::uniform_real_distribution<double> u_d(-1.5, 1.5);
  std::uniform_real_distribution<double> eps_d(0.5, 25.0);
  for (int k = 0; k < 2000; ++k) {
    const MacroState s(rho_d(rng), u_d(rng), eps_d(rng));
    const MacroState rt = conserved_to_primitive(primitive_to_conserved(s));
    CHECK_THAT(rt.rho, Catch::Matchers::WithinRel(s.rho, 1e-14));
    CHECK_THAT(rt.u, Catch::Matchers::WithinAbs(s.u, 1e-14));
    CHECK_THAT(rt.eps, Catch::Matchers::WithinRel(s.eps, 1e-13));
  }
}

TEST_CASE("lax left state conserved moments") {
  const ConservedState u = primitive_to_conserved(MacroState(0.445, 0.698, 19.82));
  CHECK_THAT(u.mom, Catch::Matchers::WithinRel(0.31061, 1e-12));
  CHECK_THAT(u.etot, Catch::Matchers::WithinRel(8.92830289, 1e-9));
}

TEST_CASE("degenerate conserved states are rejected") {
  CHECK_THROWS_AS(conserved_to_primitive({0.0, 0.0, 1.0}), DegenerateStateError);
  CHECK_THROWS_AS(conserved_to_primitive({-0.5, 0.0, 1.0}), DegenerateStateError);
  CHECK_THROWS_AS(conserved_to_primitive({1.0, 0.0, -1.0}), DegenerateStateError);
  // kinetic energy exhausts the total: eps <= 0
  CHECK_THROWS_AS(conserved_to_primitive({1.0, 2.0, 2.0}), DegenerateStateError);

  try {
    conserved_to_primitive({1.0, 2.0, 1.0});
    FAIL("expected DegenerateStateError");
  } catch (const DegenerateStateError& e) {
    CHECK(e.rho() == 1.0);
    CHECK(e.eps() < 0.0);
  }
}
