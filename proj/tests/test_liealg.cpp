#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "whittaker/liealg.hpp"
#include "whittaker/uea.hpp"

using namespace whittaker;

namespace {

Algebra make(const char* name) { return chevalley_basis(build_root_system(cartan_matrix_for(name))); }

LieVec gen(int pos) { return {{pos, Rat(1)}}; }

}  // namespace

TEST_CASE("A1 standard basis relations") {
  const Algebra g = make("A1");
  CHECK(g.dim() == 3);
  // [x, y] = h
  CHECK(bracket(g, gen(g.xpos(0)), gen(g.ypos(0))) == LieVec{{g.hpos(0), Rat(1)}});
  // [h, x] = 2x, [h, y] = -2y
  CHECK(bracket(g, gen(g.hpos(0)), gen(g.xpos(0))) == LieVec{{g.xpos(0), Rat(2)}});
  CHECK(bracket(g, gen(g.hpos(0)), gen(g.ypos(0))) == LieVec{{g.ypos(0), Rat(-2)}});
  CHECK(bracket(g, gen(g.hpos(0)), gen(g.hpos(0))).empty());
}

TEST_CASE("A2 dimensions and root vector brackets") {
  const Algebra g = make("A2");
  CHECK(g.dim() == 8);
  const int a1 = *g.rs.index_of(Eigen::Vector2i(1, 0));
  const int a2 = *g.rs.index_of(Eigen::Vector2i(0, 1));
  const int a12 = *g.rs.index_of(Eigen::Vector2i(1, 1));
  // [x_{a1}, x_{a2}] = +-x_{a1+a2} with the sign fixed by the realization
  const LieVec b = bracket(g, gen(g.xpos(a1)), gen(g.xpos(a2)));
  REQUIRE(b.size() == 1);
  CHECK(b[0].first == g.xpos(a12));
  CHECK(abs(b[0].second) == 1);
  // cross-root pair vanishes
  CHECK(bracket(g, gen(g.xpos(a1)), gen(g.ypos(a2))).empty());
}

TEST_CASE("Chevalley conditions for every supported type") {
  for (const char* name : {"A1", "A2", "A3", "B2", "A1xA1", "A2xA1", "A1xA1xA1"}) {
    CAPTURE(name);
    const Algebra g = make(name);
    CHECK(g.dim() == 2 * g.n + g.r);
    // [x_a, y_a] = h_a on simple roots
    for (int b = 0; b < g.n; ++b) {
      if (!g.rs.is_simple(b)) continue;
      const int i = g.rs.simple_index(b);
      CHECK(bracket(g, gen(g.xpos(b)), gen(g.ypos(b))) == LieVec{{g.hpos(i), Rat(1)}});
    }
    // [h, x_b] = b(h) x_b and [h, y_b] = -b(h) y_b
    for (int j = 0; j < g.r; ++j)
      for (int b = 0; b < g.n; ++b) {
        const long bv = g.rs.root_on_coroot(b, j);
        LieVec expect_x, expect_y;
        if (bv != 0) {
          expect_x = {{g.xpos(b), Rat(bv)}};
          expect_y = {{g.ypos(b), Rat(-bv)}};
        }
        CHECK(bracket(g, gen(g.hpos(j)), gen(g.xpos(b))) == expect_x);
        CHECK(bracket(g, gen(g.hpos(j)), gen(g.ypos(b))) == expect_y);
      }
    // Cartan is abelian
    for (int i = 0; i < g.r; ++i)
      for (int j = 0; j < g.r; ++j) CHECK(bracket(g, gen(g.hpos(i)), gen(g.hpos(j))).empty());
  }
}

TEST_CASE("antisymmetry and Jacobi identity on all basis triples") {
  for (const char* name : {"A2", "B2", "A2xA1"}) {
    CAPTURE(name);
    const Algebra g = make(name);
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b) {
        CHECK(bracket(g, gen(a), gen(b)) == lievec_scale(bracket(g, gen(b), gen(a)), Rat(-1)));
      }
    for (int a = 0; a < g.dim(); ++a)
      for (int b = a; b < g.dim(); ++b)
        for (int c = b; c < g.dim(); ++c) {
          LieVec sum = bracket(g, gen(a), bracket(g, gen(b), gen(c)));
          sum = lievec_add(sum, bracket(g, gen(b), bracket(g, gen(c), gen(a))));
          sum = lievec_add(sum, bracket(g, gen(c), bracket(g, gen(a), gen(b))));
          CHECK(sum.empty());
        }
  }
}

TEST_CASE("stored table matches fresh realization commutators") {
  const Algebra g = make("B2");
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b) CHECK(g.bracket_gens(a, b) == bracket_from_realization(g, a, b));
}

TEST_CASE("n and nbar are subalgebras") {
  for (const char* name : {"A2", "B2", "A3"}) {
    const Algebra g = make(name);
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b) {
        for (const auto& [p, c] : bracket(g, gen(g.xpos(a)), gen(g.xpos(b)))) CHECK(g.is_x(p));
        for (const auto& [p, c] : bracket(g, gen(g.ypos(a)), gen(g.ypos(b)))) CHECK(g.is_y(p));
      }
  }
}

TEST_CASE("product types bracket blockwise") {
  const Algebra g = make("A1xA1");
  CHECK(g.dim() == 6);
  const int f1 = *g.rs.index_of(Eigen::Vector2i(1, 0));  // first factor's root
  const int f2 = *g.rs.index_of(Eigen::Vector2i(0, 1));  // second factor's root
  CHECK(bracket(g, gen(g.xpos(f1)), gen(g.ypos(f2))).empty());
  CHECK(bracket(g, gen(g.xpos(f1)), gen(g.xpos(f2))).empty());
  CHECK(bracket(g, gen(g.hpos(0)), gen(g.xpos(f2))).empty());
  CHECK(bracket(g, gen(g.xpos(f1)), gen(g.ypos(f1))) == LieVec{{g.hpos(0), Rat(1)}});
}

TEST_CASE("Levi root support") {
  const Algebra g = make("A2");
  CHECK(g.roots_supported_on({0}).size() == 1);
  CHECK(g.roots_supported_on({0, 1}).size() == 3);
  CHECK(g.roots_supported_on({}).empty());
}
