#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "whittaker/charcenter.hpp"
#include "whittaker/checks.hpp"

using namespace whittaker;

namespace {

Algebra make(const char* name) { return chevalley_basis(build_root_system(cartan_matrix_for(name))); }

UEAElement yhx(const Algebra& g, int a, int b, int c) {
  PBWMonomial m;
  m.exps.assign(g.dim(), 0);
  m.exps[g.ypos(0)] = static_cast<std::uint8_t>(a);
  m.exps[g.hpos(0)] = static_cast<std::uint8_t>(b);
  m.exps[g.xpos(0)] = static_cast<std::uint8_t>(c);
  return UEAElement::monomial(g, m, 1);
}

UEAElement omega_a1(const Algebra& g) {
  UEAElement w = yhx(g, 0, 2, 0) * Rat(1, 2);
  w += yhx(g, 0, 1, 0);
  w += yhx(g, 1, 0, 1) * Rat(2);
  return w;
}

}  // namespace

TEST_CASE("eta extension on U(n) monomials") {
  const Algebra g = make("A1");
  const EtaCharacter eta = make_eta(g.rs, {Rat(1)});
  PBWMonomial x3;
  x3.exps.assign(g.dim(), 0);
  x3.exps[g.xpos(0)] = 3;
  CHECK(extend_eta(g, eta, x3) == 1);
  PBWMonomial unit;
  unit.exps.assign(g.dim(), 0);
  CHECK(extend_eta(g, eta, unit) == 1);
  PBWMonomial y1;
  y1.exps.assign(g.dim(), 0);
  y1.exps[g.ypos(0)] = 1;
  CHECK_THROWS_AS(extend_eta(g, eta, y1), AlgebraError);

  const Algebra g2 = make("A2");
  const EtaCharacter eta2 = make_eta(g2.rs, {Rat(1), Rat(1)});
  const int a12 = *g2.rs.index_of(Eigen::Vector2i(1, 1));
  PBWMonomial xh;
  xh.exps.assign(g2.dim(), 0);
  xh.exps[g2.xpos(a12)] = 1;
  CHECK(extend_eta(g2, eta2, xh) == 0);  // eta kills [n, n]
  CHECK(eta2.nondegenerate(2));
  CHECK(!make_eta(g2.rs, {Rat(1), Rat(0)}).nondegenerate(2));
}

TEST_CASE("quadratic Casimir of sl2 is (1/2)h^2 + h + 2yx") {
  const Algebra g = make("A1");
  CHECK(quadratic_casimir(g) == omega_a1(g));
}

TEST_CASE("is_central") {
  const Algebra g = make("A1");
  CHECK(is_central(g, omega_a1(g)));
  CHECK(!is_central(g, yhx(g, 0, 1, 0)));
  CHECK(is_central(g, UEAElement::one(g)));
}

TEST_CASE("Gelfand invariant of sl2 is an affine function of the Casimir") {
  const Algebra g = make("A1");
  const UEAElement c2 = gelfand_invariant(g, 2);
  CHECK(is_central(g, c2));
  // brute force: find a, b with c2 = a*Omega + b
  const UEAElement omega = omega_a1(g);
  PBWMonomial h2;
  h2.exps.assign(g.dim(), 0);
  h2.exps[g.hpos(0)] = 2;
  const Rat a = c2.coeff(h2) / omega.coeff(h2);
  UEAElement residue = c2;
  residue.add_scaled(omega, -a);
  CHECK(degree(residue).value_or(0) == 0);
  // for this realization the relation is exactly c2 = Omega
  CHECK(c2 == omega);
}

TEST_CASE("Gelfand invariants of sl3 are central with the right degrees") {
  const Algebra g = make("A2");
  const UEAElement c2 = gelfand_invariant(g, 2);
  const UEAElement c3 = gelfand_invariant(g, 3);
  CHECK(is_central(g, c2));
  CHECK(is_central(g, c3));
  CHECK(degree(c2) == 2);
  CHECK(degree(c3) == 3);
  CHECK(is_central(g, quadratic_casimir(g)));
}

TEST_CASE("gelfand_invariant argument validation") {
  const Algebra b2 = make("B2");
  CHECK_THROWS_AS(gelfand_invariant(b2, 2), AlgebraError);
  const Algebra a2 = make("A2");
  CHECK_THROWS_AS(gelfand_invariant(a2, 5), AlgebraError);
  CHECK_THROWS_AS(gelfand_invariant(a2, 1), AlgebraError);
}

TEST_CASE("standard center generator names per type") {
  CHECK(standard_center(make("A1")).names == std::vector<std::string>{"casimir2"});
  CHECK(standard_center(make("A2")).names == std::vector<std::string>{"casimir2", "gelfand3"});
  CHECK(standard_center(make("A3")).names ==
        std::vector<std::string>{"casimir2", "gelfand3", "gelfand4"});
  const CentralCharacter b2 = standard_center(make("B2"));
  CHECK(b2.names == std::vector<std::string>{"casimir2", "gelfand4"});
  CHECK(b2.experimental == std::vector<bool>{false, true});
  CHECK(standard_center(make("A1xA1")).names ==
        std::vector<std::string>{"casimir2@1", "casimir2@2"});

  const Algebra g = make("A1");
  const CentralCharacter chi = standard_center(g, {{"casimir2", Rat(5, 2)}});
  CHECK(chi.values[0] == Rat(5, 2));
  CHECK_THROWS_AS(standard_center(g, {{"nope", Rat(1)}}), AlgebraError);
}

TEST_CASE("trace invariant spans a central quartic for sp4") {
  const Algebra g = make("B2");
  std::vector<int> all(g.dim());
  for (int i = 0; i < g.dim(); ++i) all[i] = i;
  const UEAElement c4 = trace_invariant(g, all, 4);
  CHECK(degree(c4) == 4);
  CHECK(is_central(g, c4));
}

TEST_CASE("center suite passes on the small algebras") {
  for (const char* name : {"A1", "A2", "A1xA1"}) {
    CAPTURE(name);
    const Algebra g = make(name);
    const EtaCharacter eta = make_eta(g.rs, std::vector<Rat>(g.r, Rat(1)));
    checks::SuiteConfig cfg;
    cfg.seed = 11;
    CHECK(checks::all_pass(checks::run_suite("center", g, eta, cfg)));
  }
}
