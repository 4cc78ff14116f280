#include "whittaker/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace whittaker {

namespace {

bool lex_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<std::vector<int>> connected_components(const Eigen::MatrixXi& c) {
  const int r = static_cast<int>(c.rows());
  std::vector<int> comp(r, -1);
  int ncomp = 0;
  for (int s = 0; s < r; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < r; ++w)
        if (w != v && comp[w] < 0 && c(v, w) != 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> out(ncomp);
  for (int i = 0; i < r; ++i) out[comp[i]].push_back(i);
  return out;
}

Eigen::MatrixXi canonical_block(char family, int rank) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) m(i, i) = 2;
  if (family == 'A') {
    for (int i = 0; i + 1 < rank; ++i) {
      m(i, i + 1) = -1;
      m(i + 1, i) = -1;
    }
  } else {  // B2 block: alpha_1 short, alpha_2 long in the sp4 realization
    m(0, 1) = -1;
    m(1, 0) = -2;
  }
  return m;
}

// Finds a permutation identifying the sub-matrix on `idx` with the canonical
// block; returns the canonical->global index map on success.
std::optional<std::vector<int>> match_block(const Eigen::MatrixXi& c, const std::vector<int>& idx,
                                            const Eigen::MatrixXi& canon) {
  const int k = static_cast<int>(idx.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int s = 0; s < k && ok; ++s)
      for (int t = 0; t < k && ok; ++t)
        if (c(idx[perm[s]], idx[perm[t]]) != canon(s, t)) ok = false;
    if (ok) {
      std::vector<int> global(k);
      for (int s = 0; s < k; ++s) global[s] = idx[perm[s]];
      return global;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

int RootSystem::simple_index(int root) const {
  if (!is_simple(root)) return -1;
  for (int k = 0; k < rank; ++k)
    if (positive_roots[root][k] == 1) return k;
  return -1;
}

std::optional<int> RootSystem::index_of(const Eigen::VectorXi& coords) const {
  for (int i = 0; i < num_positive(); ++i)
    if (positive_roots[i] == coords) return i;
  return std::nullopt;
}

long RootSystem::root_on_coroot(int root, int j) const {
  long v = 0;
  for (int k = 0; k < rank; ++k) v += static_cast<long>(positive_roots[root][k]) * cartan(k, j);
  return v;
}

std::string RootSystem::root_label(int root) const {
  std::string out;
  for (int k = 0; k < rank; ++k) {
    const int c = positive_roots[root][k];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c > 1) out += std::to_string(c);
    out += "a" + std::to_string(k + 1);
  }
  return out;
}

RootSystem build_root_system(const Eigen::MatrixXi& cartan) {
  const int r = static_cast<int>(cartan.rows());
  if (r <= 0 || cartan.cols() != r) throw AlgebraError("Cartan matrix must be square and nonempty");
  for (int i = 0; i < r; ++i) {
    if (cartan(i, i) != 2) throw AlgebraError("Cartan matrix diagonal entries must be 2");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (cartan(i, j) > 0) throw AlgebraError("Cartan matrix off-diagonal entries must be <= 0");
      if ((cartan(i, j) == 0) != (cartan(j, i) == 0))
        throw AlgebraError("Cartan matrix zero pattern must be symmetric");
    }
  }
  if (r > 3) throw AlgebraError("unsupported rank " + std::to_string(r) + " (supported: rank <= 3)");

  RootSystem rs;
  rs.cartan = cartan;
  rs.rank = r;

  for (const auto& idx : connected_components(cartan)) {
    const int k = static_cast<int>(idx.size());
    FactorInfo f;
    f.rank = k;
    std::optional<std::vector<int>> g;
    if ((g = match_block(cartan, idx, canonical_block('A', k)))) {
      f.family = 'A';
    } else if (k == 2 && (g = match_block(cartan, idx, canonical_block('B', 2)))) {
      f.family = 'B';
    } else {
      throw AlgebraError("unsupported Cartan matrix block (supported: A1, A2, A3, B2/C2 and their products)");
    }
    f.global = *g;
    rs.factors.push_back(std::move(f));
  }
  std::sort(rs.factors.begin(), rs.factors.end(),
            [](const FactorInfo& a, const FactorInfo& b) { return a.global[0] < b.global[0]; });
  {
    std::vector<std::string> parts;
    for (const auto& f : rs.factors)
      parts.push_back(std::string(1, f.family) + std::to_string(f.rank));
    rs.name = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) rs.name += "x" + parts[i];
  }

  // reflection closure of the simple roots, keeping positive vectors
  std::set<std::vector<int>> seen;
  std::vector<Eigen::VectorXi> work;
  for (int i = 0; i < r; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(r);
    e[i] = 1;
    work.push_back(e);
    seen.insert(std::vector<int>(e.data(), e.data() + r));
  }
  for (std::size_t w = 0; w < work.size(); ++w) {
    const Eigen::VectorXi c = work[w];
    for (int i = 0; i < r; ++i) {
      long pairing = 0;
      for (int k = 0; k < r; ++k) pairing += static_cast<long>(c[k]) * cartan(k, i);
      Eigen::VectorXi c2 = c;
      c2[i] -= static_cast<int>(pairing);
      if ((c2.array() < 0).any()) continue;
      if (c2.sum() == 0) continue;
      std::vector<int> key(c2.data(), c2.data() + r);
      if (seen.insert(key).second) work.push_back(c2);
    }
  }
  rs.positive_roots = std::move(work);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
              if (a.sum() != b.sum()) return a.sum() < b.sum();
              return lex_less(a, b);
            });
  return rs;
}

Eigen::MatrixXi cartan_matrix_for(const std::string& type_name) {
  std::string t = type_name;
  if (t == "sl2") t = "A1";
  if (t == "sl3") t = "A2";
  if (t == "sl4") t = "A3";
  if (t == "sp4") t = "C2";
  auto block = [](const std::string& s) -> Eigen::MatrixXi {
    if (s == "A1") return canonical_block('A', 1);
    if (s == "A2") return canonical_block('A', 2);
    if (s == "A3") return canonical_block('A', 3);
    if (s == "B2") return canonical_block('B', 2);
    if (s == "C2") return canonical_block('B', 2).transpose();
    throw AlgebraError("unknown algebra type '" + s + "'");
  };
  std::vector<Eigen::MatrixXi> blocks;
  std::size_t pos = 0;
  while (pos < t.size()) {
    auto x = t.find('x', pos);
    const std::string part = t.substr(pos, x == std::string::npos ? x : x - pos);
    blocks.push_back(block(part));
    pos = x == std::string::npos ? t.size() : x + 1;
  }
  int r = 0;
  for (const auto& b : blocks) r += static_cast<int>(b.rows());
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(r, r);
  int o = 0;
  for (const auto& b : blocks) {
    m.block(o, o, b.rows(), b.cols()) = b;
    o += static_cast<int>(b.rows());
  }
  return m;
}

Eigen::MatrixXi simple_reflection_matrix(const RootSystem& rs, int i) {
  // s_i(h_j) = h_j - alpha_i(h_j) h_i
  Eigen::MatrixXi m = Eigen::MatrixXi::Identity(rs.rank, rs.rank);
  for (int j = 0; j < rs.rank; ++j) m(i, j) -= rs.cartan(i, j);
  return m;
}

WeylGroup weyl_group(const RootSystem& rs, const std::vector<int>& subset) {
  for (int i : subset)
    if (i < 0 || i >= rs.rank) throw AlgebraError("simple-root index out of range in Weyl subset");
  std::vector<Eigen::MatrixXi> gens;
  for (int i : subset) gens.push_back(simple_reflection_matrix(rs, i));
  std::set<std::vector<int>> seen;
  std::vector<Eigen::MatrixXi> elems{Eigen::MatrixXi::Identity(rs.rank, rs.rank)};
  auto key = [&](const Eigen::MatrixXi& m) {
    return std::vector<int>(m.data(), m.data() + rs.rank * rs.rank);
  };
  seen.insert(key(elems[0]));
  for (std::size_t w = 0; w < elems.size(); ++w) {
    const Eigen::MatrixXi m = elems[w];
    for (const auto& g : gens) {
      Eigen::MatrixXi p = g * m;
      if (seen.insert(key(p)).second) elems.push_back(std::move(p));
    }
  }
  return WeylGroup{std::move(elems)};
}

WeylGroup weyl_group(const RootSystem& rs) {
  std::vector<int> all(rs.rank);
  std::iota(all.begin(), all.end(), 0);
  return weyl_group(rs, all);
}

RhoWeight rho(const RootSystem& rs) {
  VecQ v(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    long sum = 0;
    for (int b = 0; b < rs.num_positive(); ++b) sum += rs.root_on_coroot(b, j);
    v[j] = Rat(sum, 2);
    v[j].canonicalize();
  }
  return RhoWeight{std::move(v)};
}

}  // namespace whittaker
