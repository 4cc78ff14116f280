#include "whittaker/liealg.hpp"

#include "whittaker/exactla.hpp"
#include "whittaker/uea.hpp"

#include <algorithm>

namespace whittaker {

LieVec lievec_add(const LieVec& a, const LieVec& b) {
  LieVec out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Rat c = a[i].second + b[j].second;
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

LieVec lievec_scale(const LieVec& a, const Rat& c) {
  if (sgn(c) == 0) return {};
  LieVec out;
  out.reserve(a.size());
  for (const auto& [p, v] : a) out.emplace_back(p, v * c);
  return out;
}

std::string Algebra::gen_name(int pos) const {
  if (is_y(pos)) return "y[" + rs.root_label(root_of(pos)) + "]";
  if (is_h(pos)) return "h[a" + std::to_string(coroot_of(pos) + 1) + "]";
  return "x[" + rs.root_label(root_of(pos)) + "]";
}

std::vector<int> Algebra::roots_supported_on(const std::vector<int>& simple_subset) const {
  std::vector<bool> in(rs.rank, false);
  for (int i : simple_subset) in[i] = true;
  std::vector<int> out;
  for (int b = 0; b < n; ++b) {
    bool ok = true;
    for (int k = 0; k < rs.rank && ok; ++k)
      if (rs.positive_roots[b][k] != 0 && !in[k]) ok = false;
    if (ok) out.push_back(b);
  }
  return out;
}

namespace {

MatQ unit(int N, int i, int j) {
  MatQ m = MatQ::Zero(N, N);
  m(i, j) = 1;
  return m;
}

// A_m factor: positive roots are consecutive segments of simple roots.
// Returns {i, j} with the local coordinates being 1 exactly on i..j.
std::pair<int, int> segment_of(const std::vector<int>& local) {
  int i = -1, j = -1;
  for (std::size_t k = 0; k < local.size(); ++k) {
    if (local[k] == 1) {
      if (i < 0) i = static_cast<int>(k);
      j = static_cast<int>(k);
    }
  }
  return {i, j};
}

struct B2Entry {
  int c1, c2;
  std::vector<std::pair<std::pair<int, int>, int>> x, y;  // ((row, col), sign) block-local
};

const std::vector<B2Entry>& b2_table() {
  static const std::vector<B2Entry> t = {
      {1, 0, {{{0, 1}, 1}, {{3, 2}, -1}}, {{{1, 0}, 1}, {{2, 3}, -1}}},
      {0, 1, {{{1, 3}, 1}}, {{{3, 1}, 1}}},
      {1, 1, {{{0, 3}, 1}, {{1, 2}, 1}}, {{{3, 0}, 1}, {{2, 1}, 1}}},
      {2, 1, {{{0, 2}, 1}}, {{{2, 0}, 1}}},
  };
  return t;
}

}  // namespace

Algebra chevalley_basis(const RootSystem& rs) {
  Algebra alg;
  alg.rs = rs;
  alg.n = rs.num_positive();
  alg.r = rs.rank;
  alg.name = rs.name;

  std::vector<int> offset(rs.factors.size());
  int N = 0;
  for (std::size_t f = 0; f < rs.factors.size(); ++f) {
    offset[f] = N;
    N += rs.factors[f].family == 'A' ? rs.factors[f].rank + 1 : 4;
  }
  alg.factor_offset = offset;
  alg.N = N;
  alg.realization.assign(alg.dim(), MatQ::Zero(N, N));

  // locate the factor carrying each positive root and assign matrices
  for (int b = 0; b < alg.n; ++b) {
    int fi = -1;
    for (std::size_t f = 0; f < rs.factors.size(); ++f) {
      for (int g : rs.factors[f].global)
        if (rs.positive_roots[b][g] != 0) fi = static_cast<int>(f);
      if (fi >= 0) break;
    }
    const FactorInfo& fac = rs.factors[fi];
    const int o = offset[fi];
    std::vector<int> local(fac.rank);
    for (int t = 0; t < fac.rank; ++t) local[t] = rs.positive_roots[b][fac.global[t]];

    MatQ X = MatQ::Zero(N, N), Y = MatQ::Zero(N, N);
    if (fac.family == 'A') {
      auto [i, j] = segment_of(local);
      X(o + i, o + j + 1) = 1;
      Y(o + j + 1, o + i) = 1;
    } else {
      bool found = false;
      for (const auto& e : b2_table()) {
        if (e.c1 != local[0] || e.c2 != local[1]) continue;
        for (const auto& [rc, s] : e.x) X(o + rc.first, o + rc.second) = s;
        for (const auto& [rc, s] : e.y) Y(o + rc.first, o + rc.second) = s;
        found = true;
      }
      if (!found) throw AlgebraError("internal: unmatched B2 root");
    }
    alg.realization[alg.xpos(b)] = std::move(X);
    alg.realization[alg.ypos(b)] = std::move(Y);
  }
  for (std::size_t f = 0; f < rs.factors.size(); ++f) {
    const FactorInfo& fac = rs.factors[f];
    const int o = offset[f];
    for (int t = 0; t < fac.rank; ++t) {
      MatQ H = MatQ::Zero(N, N);
      if (fac.family == 'A') {
        H(o + t, o + t) = 1;
        H(o + t + 1, o + t + 1) = -1;
      } else if (t == 0) {
        H(o + 0, o + 0) = 1;
        H(o + 1, o + 1) = -1;
        H(o + 2, o + 2) = -1;
        H(o + 3, o + 3) = 1;
      } else {
        H(o + 1, o + 1) = 1;
        H(o + 3, o + 3) = -1;
      }
      alg.realization[alg.hpos(fac.global[t])] = std::move(H);
    }
  }

  // structure constants by exact commutator + change of basis
  const int dim = alg.dim();
  std::vector<VecQ> basis_cols;
  basis_cols.reserve(dim);
  for (int a = 0; a < dim; ++a) {
    VecQ col(N * N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) col[i * N + j] = alg.realization[a](i, j);
    basis_cols.push_back(std::move(col));
  }
  alg.brackets.assign(dim, std::vector<LieVec>(dim));
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      MatQ c = alg.realization[a] * alg.realization[b] - alg.realization[b] * alg.realization[a];
      VecQ rhs(N * N);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) rhs[i * N + j] = c(i, j);
      auto sol = solve_columns(basis_cols, rhs);
      if (!sol) throw AlgebraError("internal: commutator not in the Lie algebra span");
      LieVec v;
      for (int t = 0; t < dim; ++t)
        if (sgn((*sol)[t]) != 0) v.emplace_back(t, (*sol)[t]);
      alg.brackets[a][b] = std::move(v);
    }
  }
  alg.swap_cache = make_swap_cache();
  return alg;
}

LieVec bracket(const Algebra& alg, const LieVec& a, const LieVec& b) {
  LieVec out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) out = lievec_add(out, lievec_scale(alg.brackets[pa][pb], ca * cb));
  return out;
}

LieVec bracket_from_realization(const Algebra& alg, int a, int b) {
  const int N = alg.N;
  std::vector<VecQ> basis_cols;
  for (int t = 0; t < alg.dim(); ++t) {
    VecQ col(N * N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) col[i * N + j] = alg.realization[t](i, j);
    basis_cols.push_back(std::move(col));
  }
  MatQ c = alg.realization[a] * alg.realization[b] - alg.realization[b] * alg.realization[a];
  VecQ rhs(N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) rhs[i * N + j] = c(i, j);
  auto sol = solve_columns(basis_cols, rhs);
  if (!sol) throw AlgebraError("internal: commutator not in the Lie algebra span");
  LieVec v;
  for (int t = 0; t < alg.dim(); ++t)
    if (sgn((*sol)[t]) != 0) v.emplace_back(t, (*sol)[t]);
  return v;
}

}  // namespace whittaker
