#include "whittaker/checks.hpp"

#include "whittaker/exactla.hpp"
#include "whittaker/oracle_sl2.hpp"

#include <algorithm>
#include <numeric>

namespace whittaker::checks {

int Sampler::uniform(int lo, int hi) {
  return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat Sampler::rat() {
  int num = uniform(-9, 9);
  if (num == 0) num = 1;
  const int den = uniform(1, 3);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

PBWMonomial Sampler::monomial(const Algebra& alg, int max_degree, const std::vector<int>& positions) {
  PBWMonomial m;
  m.exps.assign(alg.dim(), 0);
  const int d = uniform(0, max_degree);
  for (int i = 0; i < d; ++i) ++m.exps[positions[uniform(0, static_cast<int>(positions.size()) - 1)]];
  return m;
}

PBWMonomial Sampler::monomial(const Algebra& alg, int max_degree) {
  std::vector<int> all(alg.dim());
  std::iota(all.begin(), all.end(), 0);
  return monomial(alg, max_degree, all);
}

UEAElement Sampler::element(const Algebra& alg, int max_degree, int max_terms,
                            const std::vector<int>& positions) {
  UEAElement e(alg);
  const int t = uniform(1, max_terms);
  for (int i = 0; i < t; ++i) e.add_term(monomial(alg, max_degree, positions), rat());
  return e;
}

UEAElement Sampler::element(const Algebra& alg, int max_degree, int max_terms) {
  std::vector<int> all(alg.dim());
  std::iota(all.begin(), all.end(), 0);
  return element(alg, max_degree, max_terms, all);
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::vector<std::string> suite_names() {
  return {"pbw", "tau", "center", "projections", "forms", "sl2-oracle", "induction"};
}

namespace {

void record(std::vector<CheckResult>& out, const std::string& name, bool pass,
            const std::string& detail = "") {
  out.push_back({name, pass, detail});
}

std::vector<CheckResult> suite_pbw(const Algebra& alg, Sampler& s, int samples) {
  std::vector<CheckResult> out;
  bool assoc = true;
  for (int i = 0; i < std::max(4, samples / 8) && assoc; ++i) {
    const UEAElement a = s.element(alg, 3, 2), b = s.element(alg, 3, 2), c = s.element(alg, 3, 2);
    assoc = multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
  }
  record(out, "associativity", assoc);

  bool comm = true;
  for (int i = 0; i < samples && comm; ++i) {
    LieVec a{{s.uniform(0, alg.dim() - 1), s.rat()}}, b{{s.uniform(0, alg.dim() - 1), s.rat()}};
    const UEAElement ua = UEAElement::from_lievec(alg, a), ub = UEAElement::from_lievec(alg, b);
    comm = (multiply(ua, ub) - multiply(ub, ua)) == UEAElement::from_lievec(alg, bracket(alg, a, b));
  }
  record(out, "degree-one-commutator", comm);

  bool filt = true;
  for (int i = 0; i < samples && filt; ++i) {
    const UEAElement u = s.element(alg, 3, 2), v = s.element(alg, 3, 2);
    const auto p = degree(multiply(u, v));
    filt = p && *p == *degree(u) + *degree(v);
  }
  record(out, "degree-multiplicativity", filt);

  bool idem = true;
  for (int i = 0; i < samples && idem; ++i) {
    const PBWMonomial m = s.monomial(alg, 5);
    idem = pbw_normalize(alg, word_of(m)) == UEAElement::monomial(alg, m, 1);
  }
  record(out, "ordered-word-fixed-point", idem);
  return out;
}

std::vector<CheckResult> suite_tau(const Algebra& alg, Sampler& s, int samples) {
  std::vector<CheckResult> out;
  bool invol = true;
  for (int i = 0; i < samples && invol; ++i) {
    const UEAElement u = s.element(alg, 4, 3);
    invol = tau(tau(u)) == u;
  }
  record(out, "involution", invol);

  bool anti = true;
  for (int i = 0; i < std::max(4, samples / 4) && anti; ++i) {
    const UEAElement u = s.element(alg, 3, 2), v = s.element(alg, 3, 2);
    anti = tau(multiply(u, v)) == multiply(tau(v), tau(u));
  }
  record(out, "antiautomorphism", anti);
  return out;
}

std::vector<CheckResult> suite_center(const Algebra& alg, const EtaCharacter& eta,
                                      const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  const CentralCharacter chi = standard_center(alg, cfg.chi_values);
  const WeylGroup weyl = weyl_group(alg.rs);
  const RhoWeight rw = rho(alg.rs);
  for (int i = 0; i < chi.size(); ++i) {
    record(out, "centrality-" + chi.names[i], is_central(alg, chi.gens[i]));
    const PolyH q = t_rho(rw, p0(alg, chi.gens[i]));
    bool winv = true;
    for (const auto& w : weyl.elements) winv = winv && weyl_apply(w, q) == q;
    record(out, "weyl-invariance-" + chi.names[i], winv);
    const PolyH drop = p_eta(alg, eta, chi.gens[i]) - p0(alg, chi.gens[i]);
    record(out, "eta-to-zero-degree-drop-" + chi.names[i],
           drop.is_zero() || drop.degree() < p0(alg, chi.gens[i]).degree());
  }
  bool mult = true;
  for (int i = 0; i < chi.size() && mult; ++i)
    for (int j = 0; j < chi.size() && mult; ++j)
      mult = p0(alg, multiply(chi.gens[i], chi.gens[j])) ==
             multiply(p0(alg, chi.gens[i]), p0(alg, chi.gens[j]));
  record(out, "harish-chandra-multiplicative", mult);
  return out;
}

std::vector<CheckResult> suite_projections(const Algebra& alg, const EtaCharacter& eta,
                                           const SuiteConfig& cfg, Sampler& s) {
  std::vector<CheckResult> out;
  const CentralCharacter chi = standard_center(alg, cfg.chi_values);

  std::vector<UEAElement> eta_kernel;  // x_a - eta(x_a), and non-simple x_b
  for (int b = 0; b < alg.n; ++b) {
    UEAElement g = UEAElement::generator(alg, alg.xpos(b));
    if (alg.rs.is_simple(b)) g -= UEAElement::one(alg) * eta.root_values[b];
    eta_kernel.push_back(std::move(g));
  }

  bool right_ideal = true, left_ideal = true;
  for (int i = 0; i < cfg.samples && (right_ideal || left_ideal); ++i) {
    const UEAElement u = s.element(alg, 3, 3);
    const UEAElement& a = eta_kernel[s.uniform(0, static_cast<int>(eta_kernel.size()) - 1)];
    const UEAElement ua = multiply(u, a);
    if (!p_eta(alg, eta, ua).is_zero()) right_ideal = false;
    if (!p_eta(alg, eta, tau(ua)).is_zero()) left_ideal = false;
  }
  record(out, "right-twisted-ideal-vanishing", right_ideal);
  record(out, "left-twisted-ideal-vanishing", left_ideal);

  // The literal identity p_eta(h z) = h p_eta(z) fails for nonzero eta
  // (counterexample in sl2: p_eta(h*Omega) - h*p_eta(Omega) = -4); what holds
  // is the eta = 0 case and a strict degree drop of the discrepancy, which is
  // what the degree-lowering argument consumes.  All three are reported.
  bool semilinear = true, semilinear_p0 = true, semilinear_drop = true;
  std::string counterexample;
  for (int i = 0; i < cfg.samples; ++i) {
    const int zi = s.uniform(0, chi.size() - 1);
    PBWMonomial hm = s.monomial(alg, 3, [&] {
      std::vector<int> hp(alg.r);
      std::iota(hp.begin(), hp.end(), alg.n);
      return hp;
    }());
    const UEAElement hu = UEAElement::monomial(alg, hm, 1);
    PolyH hpoly(alg.r);
    PolyH::Key key(alg.r);
    for (int j = 0; j < alg.r; ++j) key[j] = hm.exps[alg.hpos(j)];
    hpoly.add_term(key, 1);
    const PolyH lhs = p_eta(alg, eta, multiply(hu, chi.gens[zi]));
    const PolyH rhs = multiply(hpoly, p_eta(alg, eta, chi.gens[zi]));
    if (lhs != rhs && semilinear) {
      semilinear = false;
      counterexample = "p_eta(" + to_string(hpoly) + " * " + chi.names[zi] + ") - lhs = " +
                       to_string(rhs - lhs);
    }
    const PolyH diff = rhs - lhs;
    if (!diff.is_zero() && !(diff.degree() < rhs.degree())) semilinear_drop = false;
    if (p0(alg, multiply(hu, chi.gens[zi])) != multiply(hpoly, p0(alg, chi.gens[zi])))
      semilinear_p0 = false;
  }
  record(out, "h-semilinearity-over-center", semilinear, counterexample);
  record(out, "h-semilinearity-discrepancy-degree-drop", semilinear_drop);
  record(out, "h-semilinearity-at-eta-zero", semilinear_p0);

  bool key_lemma = true;
  for (int i = 0; i < cfg.samples && key_lemma; ++i) {
    const int zi = s.uniform(0, chi.size() - 1);
    UEAElement zc = chi.gens[zi];
    zc -= UEAElement::one(alg) * chi.values[zi];
    const UEAElement u = s.element(alg, 3, 2);
    key_lemma = p_eta(alg, eta, multiply(u, zc)) ==
                p_eta(alg, eta, multiply(embed(alg, p_eta(alg, eta, u)), zc));
  }
  record(out, "key-lemma-identity", key_lemma);

  bool pi_tau = true;
  for (int i = 0; i < cfg.samples && pi_tau; ++i) {
    const UEAElement u = s.element(alg, 4, 3);
    pi_tau = pi_eta(alg, eta, tau(u)) == tau(pi_eta(alg, eta, u));
  }
  record(out, "parabolic-projection-tau-compatible", pi_tau);
  return out;
}

std::vector<CheckResult> suite_forms(const Algebra& alg, const EtaCharacter& eta,
                                     const SuiteConfig& cfg, Sampler& s) {
  std::vector<CheckResult> out;
  const int d_max = cfg.max_degree;
  const bool nondeg = eta.nondegenerate(alg.r);

  // degenerate eta runs through the Levi pipeline (the main theorem needs
  // nondegeneracy); the property checks are the same
  const LeviPipeline levi = make_levi(alg, eta, cfg.chi_values);
  auto space = build_levi_form_space(levi, d_max);  // validates C + span degree by degree
  record(out, "coinvariant-ideal-decomposition", true,
         "C dim " + std::to_string(space->coinv.total_dim()) + " at cap " + std::to_string(d_max));
  VecQ coeffs(space->coinv_dim());
  for (int i = 0; i < coeffs.size(); ++i) coeffs[i] = s.rat();
  const FormFunctional phi = functional_from_coinvariants(space, coeffs);
  const InducedFunctional psi = ext_functional(phi);

  auto value = [&](const UEAElement& u) { return induced_value(psi, u); };
  auto form = [&](const UEAElement& u, const UEAElement& v) { return induced_form(psi, u, v); };

  bool contra = true, sym = true;
  for (int i = 0; i < cfg.samples && (contra || sym); ++i) {
    const int budget = (d_max - 1) / 2;
    const UEAElement u = s.element(alg, budget, 2), v = s.element(alg, budget, 2);
    const UEAElement a = UEAElement::generator(alg, s.uniform(0, alg.dim() - 1));
    if (form(multiply(a, u), v) != form(u, multiply(tau(a), v))) contra = false;
    if (form(u, v) != form(v, u)) sym = false;
  }
  record(out, "contravariance", contra);
  record(out, "symmetry", sym);

  bool ann = true;
  {
    const auto gens = ann_generators(alg, eta, levi.center);
    for (int i = 0; i < cfg.samples && ann; ++i) {
      const UEAElement& a = gens[s.uniform(0, static_cast<int>(gens.size()) - 1)];
      const int ad = *degree(a);
      if (ad >= d_max) continue;
      const UEAElement g = s.element(alg, d_max - ad, 2);
      ann = sgn(value(multiply(g, a))) == 0;
    }
    record(out, "annihilator-vanishing", ann);
  }

  bool tinv = true;
  for (int i = 0; i < cfg.samples && tinv; ++i) {
    const UEAElement u = s.element(alg, d_max, 3);
    tinv = value(u) == value(tau(u));
  }
  record(out, "tau-invariance", tinv);

  {
    const int top = std::max(d_max, 2);
    const int a = mchi_dimension(levi, top - 2), b = mchi_dimension(levi, top - 1),
              c = mchi_dimension(levi, top);
    bool stab = a == b && b == c && c == space->coinv.total_dim();
    if (nondeg) stab = stab && c == space->weyl.order();
    record(out, "dimension-stabilization", stab,
           "window (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
  }

  // Verma uniqueness surrogate, sl2 only: functionals on U(h)_{<=d} killing
  // p_0 of the annihilator products and tau-asymmetric differences form a
  // one-dimensional space
  if (alg.name == "A1") {
    bool unique = true;
    for (const Rat lambda : {Rat(0), Rat(3)}) {
      const int d = std::min(6, d_max);
      const HBasis hb(alg.r, d);
      std::vector<VecQ> rows;
      const UEAElement x = UEAElement::generator(alg, alg.xpos(0));
      UEAElement hminus = UEAElement::generator(alg, alg.hpos(0));
      hminus -= UEAElement::one(alg) * lambda;
      for (const auto& m : pbw_monomials_up_to(alg, d - 1)) {
        const UEAElement g = UEAElement::monomial(alg, m, 1);
        rows.push_back(hb.vectorize(p0(alg, multiply(g, x))));
        rows.push_back(hb.vectorize(p0(alg, multiply(g, hminus))));
      }
      for (const auto& m : pbw_monomials_up_to(alg, d)) {
        const UEAElement g = UEAElement::monomial(alg, m, 1);
        rows.push_back(hb.vectorize(p0(alg, g) - p0(alg, tau(g))));
      }
      const auto null_basis = nullspace_rows(rows, hb.size());
      unique = unique && null_basis.size() == 1;
      if (unique) {
        // the surviving functional is evaluation at lambda, up to scale
        const VecQ& v = null_basis[0];
        VecQ expected(hb.size());
        for (int i = 0; i < hb.size(); ++i) {
          Rat p = 1;
          for (int e = 0; e < hb.keys()[i][0]; ++e) p *= lambda;
          expected[i] = p;
        }
        bool proportional = true;
        for (int i = 0; i < hb.size() && proportional; ++i)
          proportional = v[i] * expected[0] == expected[i] * v[0];
        unique = proportional;
      }
    }
    record(out, "verma-uniqueness-surrogate", unique);
  }

  // Shapovalov-side contravariance and symmetry
  {
    VecQ lambda(alg.r);
    for (int j = 0; j < alg.r; ++j) {
      lambda[j] = Rat(2 * j + 5, 2);
      lambda[j].canonicalize();
    }
    bool vsym = true, vcontra = true;
    for (int i = 0; i < cfg.samples && (vsym || vcontra); ++i) {
      const UEAElement u = s.element(alg, 2, 2), v = s.element(alg, 2, 2);
      const UEAElement a = UEAElement::generator(alg, s.uniform(0, alg.dim() - 1));
      if (shapovalov(alg, lambda, u, v) != shapovalov(alg, lambda, v, u)) vsym = false;
      if (shapovalov(alg, lambda, multiply(a, u), v) != shapovalov(alg, lambda, u, multiply(tau(a), v)))
        vcontra = false;
    }
    record(out, "verma-symmetry", vsym);
    record(out, "verma-contravariance", vcontra);
  }
  return out;
}

std::vector<CheckResult> suite_sl2_oracle(const Algebra& alg, const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  if (alg.name != "A1") throw AlgebraError("sl2-oracle suite requires algebra A1");
  const EtaCharacter eta = make_eta(alg.rs, {Rat(1)});
  const CentralCharacter chi = standard_center(alg, {});
  auto space = build_form_space(alg, eta, chi, 8);

  const auto monos = pbw_monomials_up_to(alg, 8);
  for (const auto& [c0, c1] : {std::pair<Rat, Rat>{1, 0}, {0, 1}}) {
    VecQ coeffs(2);
    coeffs[0] = c0;
    coeffs[1] = c1;
    const FormFunctional phi = functional_from_coinvariants(space, coeffs);
    const oracle_sl2::Sl2Functional oracle(c0, c1);
    bool agree = true;
    for (const auto& m : monos) {
      const Rat pipeline = phi.value(UEAElement::monomial(alg, m, 1));
      const Rat expected = oracle.phi_monomial(m.exps[alg.ypos(0)], m.exps[alg.hpos(0)], m.exps[alg.xpos(0)]);
      if (pipeline != expected) {
        agree = false;
        break;
      }
    }
    const std::string tag = "(" + rat_to_string(c0) + "," + rat_to_string(c1) + ")";
    record(out, "pipeline-matches-oracle-" + tag, agree);
    record(out, "oracle-annihilator-" + tag, oracle_sl2::annihilator_check(oracle, std::min(6, cfg.max_degree)));
  }

  const oracle_sl2::Sl2Functional good(1, 0);
  auto corrupted = [&](int s) { return s == 2 ? good.phi_h(2) + 1 : good.phi_h(s); };
  record(out, "oracle-detects-corruption", !oracle_sl2::annihilator_check(corrupted, 4));
  return out;
}

std::vector<CheckResult> suite_induction(const Algebra& alg, const EtaCharacter& eta,
                                         const SuiteConfig& cfg, Sampler& s) {
  std::vector<CheckResult> out;
  std::vector<std::vector<int>> subsets;
  subsets.push_back({});
  if (!eta.pi_eta.empty() && static_cast<int>(eta.pi_eta.size()) < alg.r)
    subsets.push_back({eta.pi_eta.front()});
  else if (alg.r > 1)
    subsets.push_back({0});
  {
    std::vector<int> full(alg.r);
    std::iota(full.begin(), full.end(), 0);
    subsets.push_back(full);
  }

  const int d_max = std::min(cfg.max_degree, 4);
  for (const auto& subset : subsets) {
    std::vector<Rat> values(alg.r, Rat(0));
    for (int i : subset) values[i] = sgn(eta.simple_values[i]) != 0 ? eta.simple_values[i] : Rat(1);
    const EtaCharacter eta_s = make_eta(alg.rs, values);
    const LeviPipeline levi = make_levi(alg, eta_s);
    auto space = build_levi_form_space(levi, d_max);
    VecQ coeffs(space->coinv_dim());
    for (int i = 0; i < coeffs.size(); ++i) coeffs[i] = s.rat();
    const FormFunctional phi_l = functional_from_coinvariants(space, coeffs);
    const InducedFunctional psi = ext_functional(phi_l);

    std::string tag = "{";
    for (std::size_t i = 0; i < subset.size(); ++i)
      tag += (i ? ",a" : "a") + std::to_string(subset[i] + 1);
    tag += "}";

    std::vector<int> levi_positions;
    for (int b : levi.levi_roots) {
      levi_positions.push_back(alg.ypos(b));
      levi_positions.push_back(alg.xpos(b));
    }
    for (int j = 0; j < alg.r; ++j) levi_positions.push_back(alg.hpos(j));
    std::sort(levi_positions.begin(), levi_positions.end());

    bool res_ext = true;
    for (const auto& m : pbw_monomials_up_to(alg, d_max, levi_positions)) {
      const UEAElement u = UEAElement::monomial(alg, m, 1);
      if (induced_value(psi, u) != restrict_functional(psi).value(u)) {
        res_ext = false;
        break;
      }
    }
    record(out, "res-ext-identity-" + tag, res_ext);

    bool ext_res = true;
    const InducedFunctional psi2 = ext_functional(restrict_functional(psi));
    for (int i = 0; i < cfg.samples / 2 && ext_res; ++i) {
      const UEAElement u = s.element(alg, d_max, 3);
      ext_res = induced_value(psi2, u) == induced_value(psi, u);
    }
    record(out, "ext-res-identity-" + tag, ext_res);

    bool sym = true;
    for (int i = 0; i < cfg.samples / 2 && sym; ++i) {
      const int budget = (d_max - 1) / 2;
      const UEAElement u = s.element(alg, budget, 2), v = s.element(alg, budget, 2);
      sym = induced_form(psi, u, v) == induced_form(psi, v, u);
    }
    record(out, "induced-symmetry-" + tag, sym);

    if (static_cast<int>(subset.size()) == alg.r) {
      auto full_space = build_form_space(alg, eta_s, standard_center(alg), d_max);
      const FormFunctional direct = functional_from_coinvariants(full_space, coeffs);
      bool match = true;
      for (int i = 0; i < cfg.samples / 2 && match; ++i) {
        const int budget = (d_max - 1) / 2;
        const UEAElement u = s.element(alg, budget, 2), v = s.element(alg, budget, 2);
        match = induced_form(psi, u, v) == evaluate_form(direct, u, v);
      }
      record(out, "induced-matches-whittaker", match);
    }
    if (subset.empty()) {
      // chi on the radical generators is evaluation at a weight lambda
      std::map<std::string, Rat> lam_chi;
      VecQ lambda(alg.r);
      const LeviPipeline levi0 = make_levi(alg, eta_s);
      for (int i = 0; i < levi0.center.size(); ++i) lam_chi[levi0.center.names[i]] = Rat(i + 2);
      const LeviPipeline levi_l = make_levi(alg, eta_s, lam_chi);
      // radical basis vectors are the coroots themselves here, in order
      for (int j = 0; j < alg.r; ++j) lambda[j] = 0;
      for (int i = 0; i < levi_l.center.size(); ++i) {
        const auto& gen_terms = levi_l.center.gens[i].terms();
        for (int j = 0; j < alg.r; ++j) {
          PBWMonomial hm;
          hm.exps.assign(alg.dim(), 0);
          hm.exps[alg.hpos(j)] = 1;
          auto it = gen_terms.find(hm);
          if (it != gen_terms.end() && it->second == 1 && gen_terms.size() == 1)
            lambda[j] = levi_l.center.values[i];
        }
      }
      auto space_l = build_levi_form_space(levi_l, d_max);
      VecQ c0 = VecQ::Zero(space_l->coinv_dim());
      c0[0] = 1;
      const InducedFunctional shap = ext_functional(functional_from_coinvariants(space_l, c0));
      bool match = true;
      for (int i = 0; i < cfg.samples / 2 && match; ++i) {
        const int budget = (d_max - 1) / 2;
        const UEAElement u = s.element(alg, budget, 2), v = s.element(alg, budget, 2);
        match = induced_form(shap, u, v) == shapovalov(alg, lambda, u, v);
      }
      record(out, "induced-matches-shapovalov", match);
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const Algebra& alg,
                                   const EtaCharacter& eta, const SuiteConfig& cfg) {
  Sampler s(cfg.seed);
  if (suite == "pbw") return suite_pbw(alg, s, cfg.samples);
  if (suite == "tau") return suite_tau(alg, s, cfg.samples);
  if (suite == "center") return suite_center(alg, eta, cfg);
  if (suite == "projections") return suite_projections(alg, eta, cfg, s);
  if (suite == "forms") return suite_forms(alg, eta, cfg, s);
  if (suite == "sl2-oracle") return suite_sl2_oracle(alg, cfg);
  if (suite == "induction") return suite_induction(alg, eta, cfg, s);
  throw AlgebraError("unknown verification suite '" + suite + "'");
}

}  // namespace whittaker::checks
