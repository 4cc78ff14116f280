#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "whittaker/checks.hpp"
#include "whittaker/oracle_sl2.hpp"

using namespace whittaker;
using oracle_sl2::Element;
using oracle_sl2::Sl2Functional;

TEST_CASE("monomial rule and base values") {
  const Sl2Functional f(Rat(2, 3), Rat(-5));
  CHECK(f.phi_monomial(3, 1, 2) == Rat(-5));   // phi(y^3 h x^2) = phi(h) = c1
  CHECK(f.phi_monomial(0, 0, 0) == Rat(2, 3)); // phi(1) = c0
}

TEST_CASE("first recursion step: phi(h^2) = -2 c1 - 4 c0") {
  const Sl2Functional f(Rat(1), Rat(0));
  CHECK(f.phi_h(2) == Rat(-4));
  const Sl2Functional g(Rat(0), Rat(1));
  CHECK(g.phi_h(2) == Rat(-2));
  const Sl2Functional mixed(Rat(1, 2), Rat(3));
  CHECK(mixed.phi_h(2) == Rat(-2) * 3 - Rat(4) * Rat(1, 2));
}

TEST_CASE("oracle arithmetic: x^t y expansion") {
  // x^2 y = y x^2 + 2 h x - 2 x
  Element e;
  e[{0, 0, 2}] = 1;
  const Element got = oracle_sl2::times_y(e);
  Element want;
  want[{1, 0, 2}] = 1;
  want[{0, 1, 1}] = 2;
  want[{0, 0, 1}] = -2;
  CHECK(got == want);
}

TEST_CASE("tau symmetry of the oracle values") {
  const Sl2Functional f(Rat(3), Rat(7));
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s)
      for (int t = 0; t <= 3; ++t) CHECK(f.phi_monomial(r, s, t) == f.phi_monomial(t, s, r));
}

TEST_CASE("annihilator check passes for the basis functionals") {
  CHECK(oracle_sl2::annihilator_check(Sl2Functional(Rat(1), Rat(0)), 4));
  CHECK(oracle_sl2::annihilator_check(Sl2Functional(Rat(0), Rat(1)), 4));
  CHECK(oracle_sl2::annihilator_check(Sl2Functional(Rat(-7, 2), Rat(5, 3)), 4));
}

TEST_CASE("a corrupted functional fails the annihilator check") {
  const Sl2Functional good(Rat(1), Rat(0));
  auto corrupted = [&](int s) { return s == 2 ? good.phi_h(2) + 1 : good.phi_h(s); };
  CHECK(!oracle_sl2::annihilator_check(corrupted, 4));
}

TEST_CASE("pipeline functional equals the oracle through degree 8") {
  const Algebra g = chevalley_basis(build_root_system(cartan_matrix_for("A1")));
  const EtaCharacter eta = make_eta(g.rs, {Rat(1)});
  checks::SuiteConfig cfg;
  cfg.seed = 3;
  const auto results = checks::run_suite("sl2-oracle", g, eta, cfg);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
  const Algebra a2 = chevalley_basis(build_root_system(cartan_matrix_for("A2")));
  const EtaCharacter eta2 = make_eta(a2.rs, {Rat(1), Rat(1)});
  CHECK_THROWS_AS(checks::run_suite("sl2-oracle", a2, eta2, cfg), AlgebraError);
}
