// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, fixed seeds.  Exits with the number of failed criteria.

#include "whittaker/checks.hpp"
#include "whittaker/forms.hpp"
#include "whittaker/oracle_sl2.hpp"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace whittaker;

namespace {

constexpr std::uint64_t kSeed = 20240804;

const std::vector<std::string>& supported() {
  static const std::vector<std::string> types = {"A1",     "A1xA1", "A2",    "A1xA1xA1",
                                                 "A2xA1",  "A3",    "B2"};
  return types;
}

Algebra make(const std::string& name) {
  return chevalley_basis(build_root_system(cartan_matrix_for(name)));
}

struct Reporter {
  int failures = 0;

  void line(int criterion, const std::string& text, bool pass) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, text.c_str());
    if (!pass) ++failures;
  }
  static void sub(const std::string& text, bool pass) {
    std::printf("       %s %s\n", pass ? "ok  " : "FAIL", text.c_str());
  }
};

bool criterion1_sl2_dimension() {
  const Algebra g = make("A1");
  const EtaCharacter eta = make_eta(g.rs, {Rat(1)});
  const CentralCharacter chi = standard_center(g);  // chi(casimir2) = 0
  for (int d = 2; d <= 8; ++d)
    if (q_dimension(g, eta, chi, d) != 2) return false;
  return true;
}

bool criterion2_sl2_oracle() {
  const Algebra g = make("A1");
  const EtaCharacter eta = make_eta(g.rs, {Rat(1)});
  auto space = build_form_space(g, eta, standard_center(g), 8);
  const auto monos = pbw_monomials_up_to(g, 8);
  for (const auto& [c0, c1] : {std::pair<Rat, Rat>{1, 0}, {0, 1}}) {
    VecQ coeffs(2);
    coeffs[0] = c0;
    coeffs[1] = c1;
    const FormFunctional phi = functional_from_coinvariants(space, coeffs);
    const oracle_sl2::Sl2Functional oracle(c0, c1);
    for (const auto& m : monos) {
      const Rat lhs = phi.value(UEAElement::monomial(g, m, 1));
      const Rat rhs =
          oracle.phi_monomial(m.exps[g.ypos(0)], m.exps[g.hpos(0)], m.exps[g.xpos(0)]);
      if (lhs != rhs) return false;
    }
    if (!oracle_sl2::annihilator_check(oracle, 6)) return false;
  }
  return true;
}

bool criterion3_sl3_dimension() {
  const Algebra g = make("A2");
  const EtaCharacter eta = make_eta(g.rs, {Rat(1), Rat(1)});
  const CentralCharacter chi = standard_center(g);  // C2, C3 with chi = (0, 0)
  for (int d = 4; d <= 6; ++d)
    if (q_dimension(g, eta, chi, d) != 6) return false;
  return true;
}

bool criterion4_degenerate_dimensions() {
  const Algebra g = make("A2");
  const LeviPipeline partial = make_levi(g, make_eta(g.rs, {Rat(1), Rat(0)}));
  for (int d = 4; d <= 6; ++d)
    if (mchi_dimension(partial, d) != 2) return false;
  const LeviPipeline verma = make_levi(g, make_eta(g.rs, {Rat(0), Rat(0)}));
  for (int d = 3; d <= 5; ++d)
    if (mchi_dimension(verma, d) != 1) return false;
  const LeviPipeline full = make_levi(g, make_eta(g.rs, {Rat(1), Rat(1)}));
  for (int d = 4; d <= 6; ++d)
    if (mchi_dimension(full, d) != 6) return false;
  return true;
}

bool criterion5_shapovalov() {
  const Algebra g = make("A1");
  for (const Rat& lam : {Rat(0), Rat(1), Rat(3), Rat(5, 2)}) {
    VecQ lambda(1);
    lambda[0] = lam;
    Rat expected = 1;  // raising-operator recursion <y^n,y^n> = n(lam-n+1)<y^{n-1},y^{n-1}>
    for (int depth = 1; depth <= 4; ++depth) {
      expected *= Rat(depth) * (lam - depth + 1);
      const GramMatrix gm = verma_gram(g, lambda, depth);
      if (gm.entries.rows() != 1 || gm.entries(0, 0) != expected) return false;
    }
  }
  return true;
}

bool criterion6_projection_identities() {
  // aggregated across every supported algebra, >= 100 samples each
  std::map<std::string, bool> agg;
  for (const auto& name : supported()) {
    const Algebra g = make(name);
    const EtaCharacter eta = make_eta(g.rs, std::vector<Rat>(g.r, Rat(1)));
    checks::SuiteConfig cfg;
    cfg.seed = kSeed;
    cfg.samples = 100;
    for (const auto& r : checks::run_suite("projections", g, eta, cfg)) {
      auto [it, inserted] = agg.emplace(r.name, r.pass);
      if (!inserted) it->second = it->second && r.pass;
    }
  }
  const std::vector<std::string> required = {
      "right-twisted-ideal-vanishing", "left-twisted-ideal-vanishing",
      "h-semilinearity-over-center", "key-lemma-identity",
      "parabolic-projection-tau-compatible"};
  bool pass = true;
  for (const auto& k : required) {
    Reporter::sub(k, agg.at(k));
    pass = pass && agg.at(k);
  }
  Reporter::sub("h-semilinearity-discrepancy-degree-drop (supplementary)",
                agg.at("h-semilinearity-discrepancy-degree-drop"));
  Reporter::sub("h-semilinearity-at-eta-zero (supplementary)",
                agg.at("h-semilinearity-at-eta-zero"));
  return pass;
}

bool all_jacobi(const Algebra& g) {
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a; b < g.dim(); ++b)
      for (int c = b; c < g.dim(); ++c) {
        LieVec sum = bracket(g, {{a, Rat(1)}}, bracket(g, {{b, Rat(1)}}, {{c, Rat(1)}}));
        sum = lievec_add(sum, bracket(g, {{b, Rat(1)}}, bracket(g, {{c, Rat(1)}}, {{a, Rat(1)}})));
        sum = lievec_add(sum, bracket(g, {{c, Rat(1)}}, bracket(g, {{a, Rat(1)}}, {{b, Rat(1)}})));
        if (!sum.empty()) return false;
      }
  return true;
}

bool criterion7_structural() {
  bool pass = true;
  for (const auto& name : supported()) {
    const Algebra g = make(name);
    const EtaCharacter eta = make_eta(g.rs, std::vector<Rat>(g.r, Rat(1)));
    checks::SuiteConfig cfg;
    cfg.seed = kSeed;
    cfg.samples = 50;
    bool ok = all_jacobi(g);
    ok = ok && checks::all_pass(checks::run_suite("pbw", g, eta, cfg));
    ok = ok && checks::all_pass(checks::run_suite("tau", g, eta, cfg));
    ok = ok && checks::all_pass(checks::run_suite("center", g, eta, cfg));
    Reporter::sub(name, ok);
    pass = pass && ok;
  }
  return pass;
}

bool criterion8_form_properties() {
  struct Case {
    const char* alg;
    std::vector<Rat> eta;
  };
  const std::vector<Case> cases = {
      {"A1", {Rat(1)}},                // whittaker (and verma via shapovalov checks)
      {"A2", {Rat(1), Rat(1)}},        // whittaker, rank 2
      {"A2", {Rat(1), Rat(0)}},        // induced, degenerate eta
  };
  bool pass = true;
  for (const auto& c : cases) {
    const Algebra g = make(c.alg);
    const EtaCharacter eta = make_eta(g.rs, c.eta);
    checks::SuiteConfig cfg;
    cfg.seed = kSeed;
    cfg.samples = c.alg == std::string("A1") ? 100 : 40;
    cfg.max_degree = 6;
    bool ok = true;
    for (const auto& r : checks::run_suite("forms", g, eta, cfg)) {
      if (!r.pass) Reporter::sub(std::string(c.alg) + " " + r.name, false);
      ok = ok && r.pass;
    }
    std::string tag = std::string(c.alg) + " eta=(";
    for (std::size_t i = 0; i < c.eta.size(); ++i)
      tag += (i ? "," : "") + rat_to_string(c.eta[i]);
    Reporter::sub(tag + ")", ok);
    pass = pass && ok;
  }
  return pass;
}

bool criterion9_induction() {
  const Algebra g = make("A2");
  const EtaCharacter eta = make_eta(g.rs, {Rat(1), Rat(1)});
  checks::SuiteConfig cfg;
  cfg.seed = kSeed;
  cfg.samples = 40;
  cfg.max_degree = 4;
  bool pass = true;
  for (const auto& r : checks::run_suite("induction", g, eta, cfg)) {
    Reporter::sub(r.name, r.pass);
    pass = pass && r.pass;
  }
  return pass;
}

template <typename F>
bool guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    std::printf("       exception: %s\n", e.what());
    return false;
  }
}

}  // namespace

int main() {
  Reporter rep;
  rep.line(1, "sl2 Whittaker form space has dimension 2 for degrees 2..8",
           guarded([] { return criterion1_sl2_dimension(); }));
  rep.line(2, "sl2 pipeline matches the independent recursion oracle through degree 8",
           guarded([] { return criterion2_sl2_oracle(); }));
  rep.line(3, "sl3 Whittaker form space stabilizes at 6 = |W(A2)| on degrees 4..6",
           guarded([] { return criterion3_sl3_dimension(); }));
  rep.line(4, "degenerate dimensions: |W_eta| = 2 for {a1}, 1 for {}, 6 for full",
           guarded([] { return criterion4_degenerate_dimensions(); }));
  rep.line(5, "sl2 Verma Gram depths 1..4 match n! prod(lambda-k+1) for four weights",
           guarded([] { return criterion5_shapovalov(); }));
  rep.line(6, "projection identities on 100 seeded samples per supported algebra",
           guarded([] { return criterion6_projection_identities(); }));
  rep.line(7, "structural suites (tau, PBW, Jacobi, centrality, Weyl invariance) on all algebras",
           guarded([] { return criterion7_structural(); }));
  rep.line(8, "contravariance and symmetry of constructed forms on seeded samples",
           guarded([] { return criterion8_form_properties(); }));
  rep.line(9, "induction round trips res/ext on sl3 for {}, {a1}, full",
           guarded([] { return criterion9_induction(); }));

  std::printf("%d of 9 criteria passed\n", 9 - rep.failures);
  if (rep.failures != 0)
    std::printf("known failure: the literal identity p_eta(hz) = h p_eta(z) does not hold for "
                "nonzero eta; see the supplementary degree-drop and eta=0 checks above\n");
  return rep.failures;
}
