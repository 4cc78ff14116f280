#ifndef WHITTAKER_UEA_HPP
#define WHITTAKER_UEA_HPP

#include "whittaker/liealg.hpp"
#include "whittaker/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace whittaker {

// Exponent vector over generator positions (see Algebra for the position
// convention).  The canonical written order of a monomial is ascending
// position, i.e. y^Ibar h^J x^K.
struct PBWMonomial {
  std::vector<std::uint8_t> exps;

  int degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  bool is_one() const {
    for (auto e : exps)
      if (e) return false;
    return true;
  }
  bool operator==(const PBWMonomial& o) const { return exps == o.exps; }
};

// Term order: lexicographic on (I, J, K) where I lists the y-exponents by
// ascending root index (positions n-1 down to 0), then J, then K.  All
// iteration and rendering follow this order, so outputs are reproducible.
struct MonoLess {
  int n = 0, r = 0;
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    for (int p = n - 1; p >= 0; --p) {
      if (a.exps[p] != b.exps[p]) return a.exps[p] < b.exps[p];
    }
    for (int p = n; p < n + r + n; ++p) {
      if (a.exps[p] != b.exps[p]) return a.exps[p] < b.exps[p];
    }
    return false;
  }
};

// Word in the generators: (position, exponent) factors, left to right.
using Word = std::vector<std::pair<int, int>>;

class UEAElement {
 public:
  using TermMap = std::map<PBWMonomial, Rat, MonoLess>;

  UEAElement() = default;
  explicit UEAElement(const Algebra& alg) : alg_(&alg), terms_(MonoLess{alg.n, alg.r}) {}

  static UEAElement zero(const Algebra& alg) { return UEAElement(alg); }
  static UEAElement one(const Algebra& alg);
  static UEAElement generator(const Algebra& alg, int pos);
  static UEAElement monomial(const Algebra& alg, const PBWMonomial& m, const Rat& c = 1);
  static UEAElement from_lievec(const Algebra& alg, const LieVec& v);

  const Algebra& algebra() const { return *alg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  void add_term(const PBWMonomial& m, const Rat& c);
  void add_scaled(const UEAElement& other, const Rat& c);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Rat& c);

  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(UEAElement a, const Rat& c) { return a *= c; }
  friend UEAElement operator*(const Rat& c, UEAElement a) { return a *= c; }

  bool operator==(const UEAElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const UEAElement& o) const { return !(*this == o); }

  Rat coeff(const PBWMonomial& m) const;

 private:
  const Algebra* alg_ = nullptr;  // must outlive the element
  TermMap terms_;
};

// Unique PBW normal form of a word, by repeated adjacent swaps with bracket
// correction terms.  Each swap either keeps the degree and strictly lowers
// the inversion count or strictly lowers the degree, so this terminates.
UEAElement pbw_normalize(const Algebra& alg, const Word& word);

UEAElement multiply(const UEAElement& u, const UEAElement& v);

// Transpose antiautomorphism: swaps x_beta <-> y_beta, fixes h, reverses
// products.  On a PBW monomial this exchanges the multi-indices I and K.
UEAElement tau(const UEAElement& u);

// Maximal monomial degree; nullopt for the zero element (no degree).
std::optional<int> degree(const UEAElement& u);

Word word_of(const PBWMonomial& m);

std::string to_string(const PBWMonomial& m, const Algebra& alg);
std::string to_string(const UEAElement& u);

std::shared_ptr<Algebra::SwapCache> make_swap_cache();

}  // namespace whittaker

#endif
