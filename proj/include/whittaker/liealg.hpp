#ifndef WHITTAKER_LIEALG_HPP
#define WHITTAKER_LIEALG_HPP

#include "whittaker/rational.hpp"
#include "whittaker/rootsys.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace whittaker {

// Sparse element of the Lie algebra: (generator position, coefficient),
// strictly ascending positions, no zero coefficients.
using LieVec = std::vector<std::pair<int, Rat>>;

LieVec lievec_add(const LieVec& a, const LieVec& b);
LieVec lievec_scale(const LieVec& a, const Rat& c);

class UEAElement;  // uea.hpp

// Chevalley basis with exact structure constants, obtained by commutators in
// a faithful matrix realization (traceless matrices for type A factors, the
// symplectic realization for the B2/C2 block; block-diagonal for products).
//
// Generator positions follow the PBW writing order
//   y_{beta_n} ... y_{beta_1}  h_{alpha_1} ... h_{alpha_r}  x_{beta_1} ... x_{beta_n}:
// positions 0..n-1 are the y's with descending root index, n..n+r-1 the h's,
// n+r..2n+r-1 the x's with ascending root index.
struct Algebra {
  RootSystem rs;
  int n = 0;  // number of positive roots
  int r = 0;  // rank
  int N = 0;  // realization matrix size
  std::vector<MatQ> realization;              // by generator position
  std::vector<std::vector<LieVec>> brackets;  // [a][b] -> [b_a, b_b]
  std::vector<int> factor_offset;             // realization block start per factor
  std::string name;

  int dim() const { return 2 * n + r; }
  int ypos(int root) const { return n - 1 - root; }
  int hpos(int i) const { return n + i; }
  int xpos(int root) const { return n + r + root; }
  bool is_y(int pos) const { return pos < n; }
  bool is_h(int pos) const { return pos >= n && pos < n + r; }
  bool is_x(int pos) const { return pos >= n + r; }
  // root index for y/x positions, coroot index for h positions
  int root_of(int pos) const { return is_y(pos) ? n - 1 - pos : pos - n - r; }
  int coroot_of(int pos) const { return pos - n; }
  std::string gen_name(int pos) const;

  const LieVec& bracket_gens(int a, int b) const { return brackets[a][b]; }

  // indices of the positive roots supported on the given simple subset
  std::vector<int> roots_supported_on(const std::vector<int>& simple_subset) const;

  // memo for PBW pair swaps, owned here so elements can share it (see uea.cpp)
  struct SwapCache;
  std::shared_ptr<SwapCache> swap_cache;
};

Algebra chevalley_basis(const RootSystem& rs);

// Bilinear extension of the structure constants to degree-1 elements.
LieVec bracket(const Algebra& alg, const LieVec& a, const LieVec& b);

// Recomputes [a, b] in the matrix realization and expresses it in the basis;
// used by tests to cross-check the stored table.
LieVec bracket_from_realization(const Algebra& alg, int a, int b);

}  // namespace whittaker

#endif
