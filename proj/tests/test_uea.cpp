#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "whittaker/checks.hpp"
#include "whittaker/uea.hpp"

#include <thread>

using namespace whittaker;

namespace {

Algebra make(const char* name) { return chevalley_basis(build_root_system(cartan_matrix_for(name))); }

// y^a h^b x^c in A1
UEAElement yhx(const Algebra& g, int a, int b, int c) {
  PBWMonomial m;
  m.exps.assign(g.dim(), 0);
  m.exps[g.ypos(0)] = static_cast<std::uint8_t>(a);
  m.exps[g.hpos(0)] = static_cast<std::uint8_t>(b);
  m.exps[g.xpos(0)] = static_cast<std::uint8_t>(c);
  return UEAElement::monomial(g, m, 1);
}

}  // namespace

TEST_CASE("single swap: x*y = yx + h") {
  const Algebra g = make("A1");
  const UEAElement got = pbw_normalize(g, {{g.xpos(0), 1}, {g.ypos(0), 1}});
  UEAElement want = yhx(g, 1, 0, 1);
  want += yhx(g, 0, 1, 0);
  CHECK(got == want);
}

TEST_CASE("ordered words pass through") {
  const Algebra g = make("A1");
  CHECK(pbw_normalize(g, {{g.hpos(0), 1}, {g.xpos(0), 1}}) == yhx(g, 0, 1, 1));
  CHECK(pbw_normalize(g, {}) == UEAElement::one(g));
}

TEST_CASE("x*y^2 = y^2 x + 2yh - 2y") {
  const Algebra g = make("A1");
  const UEAElement got = pbw_normalize(g, {{g.xpos(0), 1}, {g.ypos(0), 2}});
  UEAElement want = yhx(g, 2, 0, 1);
  want += yhx(g, 1, 1, 0) * Rat(2);
  want += yhx(g, 1, 0, 0) * Rat(-2);
  CHECK(got == want);
}

TEST_CASE("multiply basic cases") {
  const Algebra g = make("A1");
  const UEAElement y = yhx(g, 1, 0, 0), x = yhx(g, 0, 0, 1);
  CHECK(multiply(y, x) == yhx(g, 1, 0, 1));
  UEAElement want = yhx(g, 1, 0, 1);
  want += yhx(g, 0, 1, 0);
  CHECK(multiply(x, y) == want);
}

TEST_CASE("Casimir commutes with x by explicit expansion") {
  const Algebra g = make("A1");
  UEAElement omega = yhx(g, 0, 2, 0) * Rat(1, 2);
  omega += yhx(g, 0, 1, 0);
  omega += yhx(g, 1, 0, 1) * Rat(2);
  const UEAElement x = yhx(g, 0, 0, 1);
  CHECK(multiply(omega, x) == multiply(x, omega));
  CHECK((multiply(omega, x) - multiply(x, omega)).is_zero());
}

TEST_CASE("tau on generators, unit, and yx") {
  const Algebra g = make("A1");
  CHECK(tau(yhx(g, 0, 0, 1)) == yhx(g, 1, 0, 0));
  CHECK(tau(UEAElement::one(g)) == UEAElement::one(g));
  CHECK(tau(yhx(g, 1, 0, 1)) == yhx(g, 1, 0, 1));
  CHECK(tau(yhx(g, 0, 1, 0)) == yhx(g, 0, 1, 0));
}

TEST_CASE("degree and the zero element") {
  const Algebra g = make("A1");
  UEAElement omega = yhx(g, 0, 2, 0) * Rat(1, 2);
  omega += yhx(g, 0, 1, 0);
  omega += yhx(g, 1, 0, 1) * Rat(2);
  CHECK(degree(omega) == 2);
  CHECK(degree(UEAElement::one(g)) == 0);
  CHECK(degree(yhx(g, 2, 1, 1)) == 4);
  CHECK(!degree(UEAElement::zero(g)).has_value());
}

TEST_CASE("property suites: associativity, commutators, filtration, tau") {
  for (const char* name : {"A1", "A2", "B2"}) {
    CAPTURE(name);
    const Algebra g = make(name);
    const EtaCharacter eta = make_eta(g.rs, std::vector<Rat>(g.r, Rat(1)));
    checks::SuiteConfig cfg;
    cfg.seed = 42;
    cfg.samples = 40;
    CHECK(checks::all_pass(checks::run_suite("pbw", g, eta, cfg)));
    CHECK(checks::all_pass(checks::run_suite("tau", g, eta, cfg)));
  }
}

TEST_CASE("rendering follows the canonical order") {
  const Algebra g = make("A2");
  const int a1 = *g.rs.index_of(Eigen::Vector2i(1, 0));
  const int a12 = *g.rs.index_of(Eigen::Vector2i(1, 1));
  PBWMonomial m;
  m.exps.assign(g.dim(), 0);
  m.exps[g.ypos(a1)] = 2;
  m.exps[g.hpos(0)] = 1;
  m.exps[g.xpos(a12)] = 1;
  const UEAElement e = UEAElement::monomial(g, m, Rat(3, 2));
  CHECK(to_string(e) == "3/2*y[a1]^2*h[a1]*x[a1+a2]");
  CHECK(to_string(UEAElement::zero(g)) == "0");
  UEAElement two = e;
  two += UEAElement::one(g) * Rat(-1);
  CHECK(to_string(two) == "-1 + 3/2*y[a1]^2*h[a1]*x[a1+a2]");
}

TEST_CASE("concurrent multiplies agree with serial results") {
  const Algebra g = make("A2");
  checks::Sampler s(7);
  std::vector<UEAElement> us, vs, serial;
  for (int i = 0; i < 8; ++i) {
    us.push_back(s.element(g, 3, 3));
    vs.push_back(s.element(g, 3, 3));
  }
  for (int i = 0; i < 8; ++i) serial.push_back(multiply(us[i], vs[i]));
  std::vector<UEAElement> parallel(8, UEAElement::zero(g));
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < 8; i += 4) parallel[i] = multiply(us[i], vs[i]);
    });
  for (auto& th : pool) th.join();
  for (int i = 0; i < 8; ++i) CHECK(parallel[i] == serial[i]);
}
