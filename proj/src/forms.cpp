#include "whittaker/forms.hpp"

#include "whittaker/exactla.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace whittaker {

std::vector<PolyH::Key> keys_of_degree(int nvars, int degree) {
  std::vector<PolyH::Key> out;
  PolyH::Key k(nvars, 0);
  // lexicographically ascending enumeration of compositions of `degree`
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == nvars - 1) {
      k[pos] = static_cast<std::uint8_t>(remaining);
      out.push_back(k);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      k[pos] = static_cast<std::uint8_t>(e);
      rec(pos + 1, remaining - e);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(0, degree);
  return out;
}

HBasis::HBasis(int nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {
  for (int d = 0; d <= max_degree; ++d)
    for (auto& k : keys_of_degree(nvars, d)) {
      index_.emplace(k, static_cast<int>(keys_.size()));
      keys_.push_back(k);
    }
}

VecQ HBasis::vectorize(const PolyH& p) const {
  VecQ v = VecQ::Zero(size());
  for (const auto& [k, c] : p.terms()) {
    auto it = index_.find(k);
    if (it == index_.end())
      throw DegreeOverflow("polynomial exceeds the degree cap " + std::to_string(max_degree_));
    v[it->second] = c;
  }
  return v;
}

int CoinvariantBasis::total_dim() const {
  int t = 0;
  for (const auto& g : graded) t += static_cast<int>(g.size());
  return t;
}

std::vector<PolyH> CoinvariantBasis::flatten() const {
  std::vector<PolyH> out;
  for (const auto& g : graded) out.insert(out.end(), g.begin(), g.end());
  return out;
}

CoinvariantBasis coinvariant_complement(const RootSystem& rs, const WeylGroup& weyl, int d_max) {
  if (d_max < 0) throw AlgebraError("coinvariant_complement: d_max must be >= 0");
  const int nv = rs.rank;
  CoinvariantBasis cb;
  cb.d_max = d_max;
  cb.graded.resize(d_max + 1);
  cb.invariants.resize(d_max + 1);

  const Rat avg(1, weyl.order());
  for (int d = 0; d <= d_max; ++d) {
    const auto keys = keys_of_degree(nv, d);
    const int dim_d = static_cast<int>(keys.size());
    std::map<PolyH::Key, int> index;
    for (int i = 0; i < dim_d; ++i) index.emplace(keys[i], i);
    auto coords = [&](const PolyH& p) {
      VecQ v = VecQ::Zero(dim_d);
      for (const auto& [k, c] : p.terms()) v[index.at(k)] = c;
      return v;
    };

    // invariants of degree d by Reynolds averaging of monomials
    if (d >= 1) {
      Echelon inv_ech(dim_d);
      for (const auto& k : keys) {
        const PolyH mono = PolyH::monomial(nv, k, 1);
        PolyH sum(nv);
        for (const auto& w : weyl.elements) sum += weyl_apply(w, mono);
        sum *= avg;
        if (!sum.is_zero() && inv_ech.add_row(coords(sum))) cb.invariants[d].push_back(sum);
      }
    }

    // span of S_d = sum_e invariants_e * monomials_{d-e}, then greedy complement
    Echelon ech(dim_d);
    for (int e = 1; e <= d; ++e) {
      for (const auto& inv : cb.invariants[e])
        for (const auto& g : keys_of_degree(nv, d - e)) {
          const PolyH prod = multiply(inv, PolyH::monomial(nv, g, 1));
          if (!prod.is_zero()) ech.add_row(coords(prod));
        }
    }
    for (const auto& k : keys) {
      VecQ unit = VecQ::Zero(dim_d);
      unit[index.at(k)] = 1;
      if (ech.add_row(unit)) cb.graded[d].push_back(PolyH::monomial(nv, k, 1));
    }
  }
  return cb;
}

CoinvariantBasis coinvariant_complement(const RootSystem& rs, int d_max) {
  return coinvariant_complement(rs, weyl_group(rs), d_max);
}

std::vector<UEAElement> ann_generators(const Algebra& alg, const EtaCharacter& eta,
                                       const CentralCharacter& chi) {
  std::vector<UEAElement> out;
  for (int b = 0; b < alg.n; ++b) {
    if (!alg.rs.is_simple(b)) continue;
    UEAElement g = UEAElement::generator(alg, alg.xpos(b));
    g -= UEAElement::one(alg) * eta.root_values[b];
    out.push_back(std::move(g));
  }
  for (int b = 0; b < alg.n; ++b) {
    if (alg.rs.is_simple(b)) continue;
    out.push_back(UEAElement::generator(alg, alg.xpos(b)));
  }
  for (int i = 0; i < chi.size(); ++i) {
    UEAElement g = chi.gens[i];
    g -= UEAElement::one(alg) * chi.values[i];
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::vector<PolyH> pchi_span_core(const Algebra& alg, const EtaCharacter& eta,
                                  const std::vector<UEAElement>& gens, const std::vector<Rat>& values,
                                  int d, int slack) {
  std::vector<PolyH> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto dz = degree(gens[i]);
    if (!dz) continue;
    UEAElement zc = gens[i];
    zc -= UEAElement::one(alg) * values[i];
    const int max_j = d + slack - *dz;
    for (int jd = 0; jd <= max_j; ++jd) {
      for (const auto& key : keys_of_degree(alg.r, jd)) {
        const PolyH hj = PolyH::monomial(alg.r, key, 1);
        const PolyH p = p_eta(alg, eta, multiply(embed(alg, hj), zc));
        if (!p.is_zero() && p.degree() <= d) out.push_back(p);
      }
    }
  }
  return out;
}

int q_dimension_core(const Algebra& alg, const EtaCharacter& eta,
                     const std::vector<UEAElement>& gens, const std::vector<Rat>& values, int d,
                     int slack) {
  const HBasis basis(alg.r, d);
  Echelon ech(basis.size());
  for (const auto& p : pchi_span_core(alg, eta, gens, values, d, slack)) ech.add_row(basis.vectorize(p));
  return basis.size() - ech.rank();
}

std::vector<int> all_roots(const Algebra& alg) {
  std::vector<int> v(alg.n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::shared_ptr<const FormSpace> build_form_space_core(const Algebra& alg, const EtaCharacter& eta,
                                                       const CentralCharacter& chi,
                                                       const WeylGroup& weyl,
                                                       std::vector<int> levi_roots, int d_max) {
  auto fs = std::make_shared<FormSpace>();
  fs->alg = &alg;
  fs->eta = eta;
  fs->chi = chi;
  fs->weyl = weyl;
  fs->d_max = d_max;
  fs->levi_roots = std::move(levi_roots);
  fs->coinv = coinvariant_complement(alg.rs, weyl, d_max);
  fs->coinv_flat = fs->coinv.flatten();
  fs->span = pchi_span_core(alg, eta, chi.gens, chi.values, d_max, 0);
  fs->basis = HBasis(alg.r, d_max);

  for (const auto& p : fs->coinv_flat) fs->solve_cols.push_back(fs->basis.vectorize(p));
  for (const auto& p : fs->span) fs->solve_cols.push_back(fs->basis.vectorize(p));

  // degree-by-degree validation that C + span fills U(h) and the sum is
  // direct; otherwise the cap is too small or the generators do not
  // generate the center
  std::vector<std::pair<int, const PolyH*>> items;
  for (const auto& p : fs->coinv_flat) items.emplace_back(p.degree(), &p);
  for (const auto& p : fs->span) items.emplace_back(p.degree(), &p);
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Echelon all_ech(fs->basis.size());
  std::size_t pos = 0;
  int coinv_cum = 0;
  for (int d = 0; d <= d_max; ++d) {
    coinv_cum += static_cast<int>(fs->coinv.graded[d].size());
    while (pos < items.size() && items[pos].first <= d) {
      all_ech.add_row(fs->basis.vectorize(*items[pos].second));
      ++pos;
    }
    Echelon sd(fs->basis.size());
    for (const auto& p : fs->span)
      if (p.degree() <= d) sd.add_row(fs->basis.vectorize(p));
    const int hdim = HBasis(alg.r, d).size();
    if (all_ech.rank() != hdim || coinv_cum + sd.rank() != hdim)
      throw AlgebraError(
          "coinvariants + projected ideal do not decompose U(h) at degree " + std::to_string(d) +
          "; increase the degree cap or check the center generators");
  }
  return fs;
}

}  // namespace

std::vector<PolyH> pchi_span(const Algebra& alg, const EtaCharacter& eta, const CentralCharacter& chi,
                             int d, int slack) {
  return pchi_span_core(alg, eta, chi.gens, chi.values, d, slack);
}

int q_dimension(const Algebra& alg, const EtaCharacter& eta, const CentralCharacter& chi, int d) {
  return q_dimension_core(alg, eta, chi.gens, chi.values, d, 0);
}

std::shared_ptr<const FormSpace> build_form_space(const Algebra& alg, const EtaCharacter& eta,
                                                  const CentralCharacter& chi, int d_max) {
  return build_form_space_core(alg, eta, chi, weyl_group(alg.rs), all_roots(alg), d_max);
}

VecQ FormSpace::coinvariant_coordinates(const PolyH& p) const {
  const VecQ b = basis.vectorize(p);
  auto sol = solve_columns(solve_cols, b);
  if (!sol) throw AlgebraError("decomposition solve failed; degree cap too small");
  return sol->head(coinv_dim());
}

Rat FormFunctional::value_poly(const PolyH& p) const {
  const VecQ c = space->coinvariant_coordinates(p);
  Rat out = 0;
  for (int i = 0; i < space->coinv_dim(); ++i) out += coeffs[i] * c[i];
  return out;
}

Rat FormFunctional::value(const UEAElement& u) const {
  const Algebra& alg = *space->alg;
  std::vector<bool> keep(alg.n, false);
  for (int b : space->levi_roots) keep[b] = true;
  for (const auto& [m, c] : u.terms())
    for (int b = 0; b < alg.n; ++b)
      if (!keep[b] && (m.exps[alg.xpos(b)] || m.exps[alg.ypos(b)]))
        throw AlgebraError("element is not supported on the functional's subalgebra");
  return value_poly(p_eta(alg, space->eta, u));
}

FormFunctional functional_from_coinvariants(std::shared_ptr<const FormSpace> space, const VecQ& coeffs) {
  if (coeffs.size() != space->coinv_dim())
    throw AlgebraError("coefficient vector length must equal the coinvariant dimension " +
                       std::to_string(space->coinv_dim()));
  return FormFunctional{std::move(space), coeffs};
}

Rat evaluate_form(const FormFunctional& phi, const UEAElement& u, const UEAElement& v) {
  const UEAElement w = multiply(tau(v), u);
  const auto d = degree(w);
  if (d && *d > phi.space->d_max)
    throw DegreeOverflow("evaluate_form: product degree " + std::to_string(*d) +
                         " exceeds the cap " + std::to_string(phi.space->d_max));
  return phi.value(w);
}

Rat shapovalov(const Algebra& alg, const VecQ& lambda, const UEAElement& u, const UEAElement& v) {
  return eval_at(p0(alg, multiply(tau(v), u)), lambda);
}

namespace {

void enumerate_depth_monomials(const Algebra& alg, int root, int remaining,
                               std::vector<std::uint8_t>& exps, std::vector<PBWMonomial>& out) {
  if (root == alg.n) {
    if (remaining == 0) {
      PBWMonomial m;
      m.exps.assign(alg.dim(), 0);
      for (int b = 0; b < alg.n; ++b) m.exps[alg.ypos(b)] = exps[b];
      out.push_back(std::move(m));
    }
    return;
  }
  const int h = alg.rs.height(root);
  for (int e = 0; e * h <= remaining; ++e) {
    exps[root] = static_cast<std::uint8_t>(e);
    enumerate_depth_monomials(alg, root + 1, remaining - e * h, exps, out);
  }
  exps[root] = 0;
}

}  // namespace

GramMatrix verma_gram(const Algebra& alg, const VecQ& lambda, int depth) {
  if (depth < 0) throw AlgebraError("verma_gram: depth must be >= 0");
  std::vector<PBWMonomial> monos;
  std::vector<std::uint8_t> exps(alg.n, 0);
  enumerate_depth_monomials(alg, 0, depth, exps, monos);
  std::sort(monos.begin(), monos.end(), [&](const PBWMonomial& a, const PBWMonomial& b) {
    return MonoLess{alg.n, alg.r}(a, b);
  });
  GramMatrix g;
  for (const auto& m : monos) {
    g.basis.push_back(UEAElement::monomial(alg, m, 1));
    g.labels.push_back(m.is_one() ? "1" : to_string(m, alg));
  }
  const int k = static_cast<int>(g.basis.size());
  g.entries = MatQ::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g.entries(i, j) = shapovalov(alg, lambda, g.basis[i], g.basis[j]);
  return g;
}

namespace {

GramMatrix h_monomial_gram(const Algebra& alg, int depth,
                           const std::function<Rat(const UEAElement&, const UEAElement&)>& pairing) {
  GramMatrix g;
  for (int d = 0; d <= depth; ++d)
    for (const auto& key : keys_of_degree(alg.r, d)) {
      const PolyH p = PolyH::monomial(alg.r, key, 1);
      UEAElement e = embed(alg, p);
      g.labels.push_back(d == 0 ? "1" : to_string(e.terms().begin()->first, alg));
      g.basis.push_back(std::move(e));
    }
  const int k = static_cast<int>(g.basis.size());
  g.entries = MatQ::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g.entries(i, j) = pairing(g.basis[i], g.basis[j]);
  return g;
}

}  // namespace

GramMatrix whittaker_gram(const FormFunctional& phi, int depth) {
  return h_monomial_gram(*phi.space->alg, depth,
                         [&](const UEAElement& u, const UEAElement& v) { return evaluate_form(phi, u, v); });
}

GramMatrix induced_gram(const InducedFunctional& phi, int depth) {
  return h_monomial_gram(*phi.base.space->alg, depth,
                         [&](const UEAElement& u, const UEAElement& v) { return induced_form(phi, u, v); });
}

namespace {

// sl2-triple Casimir (1/2)h_b^2 + h_b + 2 y_b x_b for a single root
UEAElement triple_casimir(const Algebra& alg, int b) {
  const LieVec hb = alg.bracket_gens(alg.xpos(b), alg.ypos(b));
  const UEAElement h = UEAElement::from_lievec(alg, hb);
  UEAElement out = multiply(h, h) * Rat(1, 2);
  out += h;
  out += multiply(UEAElement::generator(alg, alg.ypos(b)), UEAElement::generator(alg, alg.xpos(b))) * Rat(2);
  return out;
}

std::vector<std::vector<int>> levi_components(const RootSystem& rs, const std::vector<int>& pi_eta) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> used(rs.rank, false);
  std::vector<bool> in(rs.rank, false);
  for (int i : pi_eta) in[i] = true;
  for (int s : pi_eta) {
    if (used[s]) continue;
    std::vector<int> comp{s};
    used[s] = true;
    for (std::size_t w = 0; w < comp.size(); ++w)
      for (int t = 0; t < rs.rank; ++t)
        if (in[t] && !used[t] && rs.cartan(comp[w], t) != 0) {
          used[t] = true;
          comp.push_back(t);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

LeviPipeline make_levi(const Algebra& alg, const EtaCharacter& eta,
                       const std::map<std::string, Rat>& chi_values) {
  LeviPipeline levi;
  levi.alg = &alg;
  levi.eta = eta;
  levi.pi_eta = eta.pi_eta;
  levi.levi_roots = alg.roots_supported_on(eta.pi_eta);
  levi.weyl_eta = weyl_group(alg.rs, eta.pi_eta);

  if (eta.nondegenerate(alg.r)) {
    levi.center = standard_center(alg, chi_values);
    return levi;
  }

  CentralCharacter c;
  const auto comps = levi_components(alg.rs, eta.pi_eta);
  const bool multi = comps.size() > 1;
  for (std::size_t f = 0; f < comps.size(); ++f) {
    const auto& comp = comps[f];
    const std::string suffix = multi ? "@" + std::to_string(f + 1) : "";
    if (comp.size() == 1) {
      Eigen::VectorXi coords = Eigen::VectorXi::Zero(alg.r);
      coords[comp[0]] = 1;
      const int b = *alg.rs.index_of(coords);
      c.names.push_back("casimir2" + suffix);
      c.gens.push_back(triple_casimir(alg, b));
      c.experimental.push_back(false);
    } else {
      // connected subset of an A-chain: use the windowed Gelfand invariants
      int fi = -1;
      for (std::size_t g = 0; g < alg.rs.factors.size(); ++g)
        for (int gi : alg.rs.factors[g].global)
          if (gi == comp[0]) fi = static_cast<int>(g);
      const FactorInfo& host = alg.rs.factors[fi];
      if (host.family != 'A')
        throw AlgebraError("unsupported Levi component (only sub-chains of type A factors and full algebras)");
      FactorInfo window;
      window.family = 'A';
      window.rank = static_cast<int>(comp.size());
      for (int t = 0; t < host.rank; ++t)
        if (std::find(comp.begin(), comp.end(), host.global[t]) != comp.end())
          window.global.push_back(host.global[t]);
      for (int k = 2; k <= window.rank + 1; ++k) {
        c.names.push_back((k == 2 ? "casimir2" : "gelfand" + std::to_string(k)) + suffix);
        c.gens.push_back(gelfand_window(alg, window, k));
        c.experimental.push_back(false);
      }
    }
  }
  // radical of the Levi: the h directions on which every root of Pi_eta vanishes
  std::vector<VecQ> rows;
  for (int i : eta.pi_eta) {
    VecQ row(alg.r);
    for (int j = 0; j < alg.r; ++j) row[j] = Rat(alg.rs.cartan(i, j));
    rows.push_back(std::move(row));
  }
  const auto rad = nullspace_rows(rows, alg.r);
  for (std::size_t z = 0; z < rad.size(); ++z) {
    LieVec v;
    for (int j = 0; j < alg.r; ++j)
      if (sgn(rad[z][j]) != 0) v.emplace_back(alg.hpos(j), rad[z][j]);
    c.names.push_back("radical" + std::to_string(z + 1));
    c.gens.push_back(UEAElement::from_lievec(alg, v));
    c.experimental.push_back(false);
  }
  c.values.assign(c.names.size(), Rat(0));
  for (const auto& [name, value] : chi_values) {
    auto it = std::find(c.names.begin(), c.names.end(), name);
    if (it == c.names.end()) throw AlgebraError("unknown Levi center generator '" + name + "'");
    c.values[it - c.names.begin()] = value;
  }
  levi.center = std::move(c);
  return levi;
}

int mchi_dimension(const LeviPipeline& levi, int d, int slack) {
  return q_dimension_core(*levi.alg, levi.eta, levi.center.gens, levi.center.values, d, slack);
}

std::shared_ptr<const FormSpace> build_levi_form_space(const LeviPipeline& levi, int d_max) {
  return build_form_space_core(*levi.alg, levi.eta, levi.center, levi.weyl_eta, levi.levi_roots,
                               d_max);
}

InducedFunctional ext_functional(FormFunctional phi_l) { return InducedFunctional{std::move(phi_l)}; }

FormFunctional restrict_functional(const InducedFunctional& phi_g) { return phi_g.base; }

Rat induced_value(const InducedFunctional& phi, const UEAElement& u) {
  const Algebra& alg = *phi.base.space->alg;
  return phi.base.value(pi_subset(alg, phi.base.space->levi_roots, u));
}

Rat induced_form(const InducedFunctional& phi, const UEAElement& u, const UEAElement& v) {
  const UEAElement w = multiply(tau(v), u);
  const auto d = degree(w);
  if (d && *d > phi.base.space->d_max)
    throw DegreeOverflow("induced_form: product degree " + std::to_string(*d) + " exceeds the cap " +
                         std::to_string(phi.base.space->d_max));
  return induced_value(phi, w);
}

namespace {

void enumerate_pbw(const Algebra& alg, const std::vector<int>& positions, std::size_t idx,
                   int remaining, PBWMonomial& m, std::vector<PBWMonomial>& out) {
  if (idx == positions.size()) {
    out.push_back(m);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    m.exps[positions[idx]] = static_cast<std::uint8_t>(e);
    enumerate_pbw(alg, positions, idx + 1, remaining - e, m, out);
  }
  m.exps[positions[idx]] = 0;
}

}  // namespace

std::vector<PBWMonomial> pbw_monomials_up_to(const Algebra& alg, int max_degree,
                                             const std::vector<int>& positions) {
  PBWMonomial m;
  m.exps.assign(alg.dim(), 0);
  std::vector<PBWMonomial> out;
  enumerate_pbw(alg, positions, 0, max_degree, m, out);
  std::sort(out.begin(), out.end(), [&](const PBWMonomial& a, const PBWMonomial& b) {
    return MonoLess{alg.n, alg.r}(a, b);
  });
  return out;
}

std::vector<PBWMonomial> pbw_monomials_up_to(const Algebra& alg, int max_degree) {
  std::vector<int> positions(alg.dim());
  std::iota(positions.begin(), positions.end(), 0);
  return pbw_monomials_up_to(alg, max_degree, positions);
}

}  // namespace whittaker
