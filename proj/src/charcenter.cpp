#include "whittaker/charcenter.hpp"

#include "whittaker/exactla.hpp"

#include <algorithm>

namespace whittaker {

EtaCharacter make_eta(const RootSystem& rs, const std::vector<Rat>& simple_values) {
  if (static_cast<int>(simple_values.size()) != rs.rank)
    throw AlgebraError("eta needs one value per simple root");
  EtaCharacter eta;
  eta.simple_values = simple_values;
  eta.root_values.assign(rs.num_positive(), Rat(0));
  for (int b = 0; b < rs.num_positive(); ++b) {
    const int s = rs.simple_index(b);
    if (s >= 0) eta.root_values[b] = simple_values[s];
  }
  for (int i = 0; i < rs.rank; ++i)
    if (sgn(simple_values[i]) != 0) eta.pi_eta.push_back(i);
  return eta;
}

Rat extend_eta(const Algebra& alg, const EtaCharacter& eta, const PBWMonomial& m) {
  for (int p = 0; p < alg.n + alg.r; ++p)
    if (m.exps[p]) throw AlgebraError("extend_eta: monomial has y or h factors, not in U(n)");
  Rat v = 1;
  for (int b = 0; b < alg.n; ++b) {
    const int e = m.exps[alg.xpos(b)];
    for (int i = 0; i < e; ++i) v *= eta.root_values[b];
  }
  return v;
}

namespace {

// matrix with Lie-element entries F_{ij} = sum_a (M_a)_{ij} b^a, where b^a is
// the trace-form dual basis of the chosen span
std::vector<std::vector<LieVec>> resolved_matrix(const Algebra& alg, const std::vector<int>& positions) {
  const int d = static_cast<int>(positions.size());
  const int N = alg.N;
  std::vector<VecQ> gram_cols;
  for (int b = 0; b < d; ++b) {
    VecQ col(d);
    for (int a = 0; a < d; ++a) {
      const MatQ prod = alg.realization[positions[a]] * alg.realization[positions[b]];
      col[a] = prod.trace();
    }
    gram_cols.push_back(std::move(col));
  }
  // dual[a] = sum_b (T^{-1})_{ab} basis_b
  std::vector<LieVec> dual(d);
  for (int a = 0; a < d; ++a) {
    VecQ e = VecQ::Zero(d);
    e[a] = 1;
    auto sol = solve_columns(gram_cols, e);
    if (!sol) throw AlgebraError("trace form degenerate on the chosen span");
    LieVec v;
    for (int b = 0; b < d; ++b)
      if (sgn((*sol)[b]) != 0) v.emplace_back(positions[b], (*sol)[b]);
    std::sort(v.begin(), v.end());
    dual[a] = std::move(v);
  }
  std::vector<std::vector<LieVec>> F(N, std::vector<LieVec>(N));
  for (int a = 0; a < d; ++a) {
    const MatQ& M = alg.realization[positions[a]];
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (sgn(M(i, j)) != 0) F[i][j] = lievec_add(F[i][j], lievec_scale(dual[a], M(i, j)));
  }
  return F;
}

}  // namespace

UEAElement trace_invariant(const Algebra& alg, const std::vector<int>& positions, int k) {
  if (k < 1) throw AlgebraError("trace_invariant: k must be >= 1");
  const int N = alg.N;
  const auto F = resolved_matrix(alg, positions);
  std::vector<std::vector<UEAElement>> P(N, std::vector<UEAElement>(N, UEAElement::zero(alg)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) P[i][j] = UEAElement::from_lievec(alg, F[i][j]);
  for (int step = 1; step < k; ++step) {
    std::vector<std::vector<UEAElement>> Q(N, std::vector<UEAElement>(N, UEAElement::zero(alg)));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        UEAElement acc = UEAElement::zero(alg);
        for (int t = 0; t < N; ++t) {
          if (P[i][t].is_zero() || F[t][j].empty()) continue;
          acc += multiply(P[i][t], UEAElement::from_lievec(alg, F[t][j]));
        }
        Q[i][j] = std::move(acc);
      }
    P = std::move(Q);
  }
  UEAElement out = UEAElement::zero(alg);
  for (int i = 0; i < N; ++i) out += P[i][i];
  return out;
}

UEAElement quadratic_casimir(const Algebra& alg) {
  std::vector<int> all(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) all[i] = i;
  return trace_invariant(alg, all, 2);
}

namespace {

// E_{ij} of a type A factor as a Lie element: off-diagonal entries are root
// vectors, diagonal ones are replaced by their traceless part.
LieVec matrix_unit(const Algebra& alg, const FactorInfo& fac, int i, int j) {
  const int m = fac.rank;
  if (i != j) {
    const int lo = std::min(i, j), hi = std::max(i, j);
    Eigen::VectorXi coords = Eigen::VectorXi::Zero(alg.r);
    for (int t = lo; t <= hi - 1; ++t) coords[fac.global[t]] = 1;
    auto idx = alg.rs.index_of(coords);
    if (!idx) throw AlgebraError("internal: segment is not a root");
    return {{i < j ? alg.xpos(*idx) : alg.ypos(*idx), Rat(1)}};
  }
  // E_ii - (1/(m+1)) I = sum_s c_s h_s with c_s the partial sums of the
  // diagonal vector
  LieVec v;
  Rat partial = 0;
  for (int s = 0; s < m; ++s) {
    partial += Rat(s == i ? 1 : 0) - Rat(1, m + 1);
    if (sgn(partial) != 0) v.emplace_back(alg.hpos(fac.global[s]), partial);
  }
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

UEAElement gelfand_window(const Algebra& alg, const FactorInfo& fac, int k) {
  if (fac.family != 'A') throw AlgebraError("gelfand_invariant: factor is not of type A");
  if (k < 2 || k > fac.rank + 1)
    throw AlgebraError("gelfand_invariant: k out of range 2..rank+1");
  const int sz = fac.rank + 1;
  UEAElement out = UEAElement::zero(alg);
  std::vector<int> idx(k, 0);
  while (true) {
    UEAElement prod = UEAElement::from_lievec(alg, matrix_unit(alg, fac, idx[0], idx[1 % k]));
    for (int t = 1; t < k; ++t)
      prod = multiply(prod, UEAElement::from_lievec(alg, matrix_unit(alg, fac, idx[t], idx[(t + 1) % k])));
    out += prod;
    int p = k - 1;
    while (p >= 0 && idx[p] == sz - 1) idx[p--] = 0;
    if (p < 0) break;
    ++idx[p];
  }
  return out;
}

UEAElement gelfand_invariant(const Algebra& alg, int factor, int k) {
  if (factor < 0 || factor >= static_cast<int>(alg.rs.factors.size()))
    throw AlgebraError("gelfand_invariant: bad factor index");
  return gelfand_window(alg, alg.rs.factors[factor], k);
}

UEAElement gelfand_invariant(const Algebra& alg, int k) {
  if (alg.rs.factors.size() != 1) throw AlgebraError("gelfand_invariant: algebra has several factors");
  return gelfand_invariant(alg, 0, k);
}

bool is_central(const Algebra& alg, const UEAElement& u) {
  for (int p = 0; p < alg.dim(); ++p) {
    const UEAElement g = UEAElement::generator(alg, p);
    if (multiply(u, g) != multiply(g, u)) return false;
  }
  return true;
}

CentralCharacter standard_center(const Algebra& alg, const std::map<std::string, Rat>& chi_values) {
  CentralCharacter c;
  const bool multi = alg.rs.factors.size() > 1;
  for (std::size_t f = 0; f < alg.rs.factors.size(); ++f) {
    const FactorInfo& fac = alg.rs.factors[f];
    const std::string suffix = multi ? "@" + std::to_string(f + 1) : "";
    if (fac.family == 'A') {
      for (int k = 2; k <= fac.rank + 1; ++k) {
        c.names.push_back((k == 2 ? "casimir2" : "gelfand" + std::to_string(k)) + suffix);
        c.gens.push_back(gelfand_invariant(alg, static_cast<int>(f), k));
        c.experimental.push_back(false);
      }
    } else {
      c.names.push_back("casimir2" + suffix);
      c.gens.push_back(quadratic_casimir(alg));
      c.experimental.push_back(false);
      std::vector<int> all(alg.dim());
      for (int i = 0; i < alg.dim(); ++i) all[i] = i;
      c.names.push_back("gelfand4" + suffix);
      c.gens.push_back(trace_invariant(alg, all, 4));
      c.experimental.push_back(true);
    }
  }
  c.values.assign(c.names.size(), Rat(0));
  for (const auto& [name, value] : chi_values) {
    auto it = std::find(c.names.begin(), c.names.end(), name);
    if (it == c.names.end()) throw AlgebraError("unknown center generator '" + name + "'");
    c.values[it - c.names.begin()] = value;
  }
  return c;
}

}  // namespace whittaker
