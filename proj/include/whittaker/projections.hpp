#ifndef WHITTAKER_PROJECTIONS_HPP
#define WHITTAKER_PROJECTIONS_HPP

#include "whittaker/charcenter.hpp"
#include "whittaker/rootsys.hpp"
#include "whittaker/uea.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace whittaker {

// Element of U(h) = S(h): sparse polynomial in the simple coroot generators.
class PolyH {
 public:
  using Key = std::vector<std::uint8_t>;
  using TermMap = std::map<Key, Rat>;

  PolyH() = default;
  explicit PolyH(int nvars) : nvars_(nvars) {}

  static PolyH constant(int nvars, const Rat& c);
  static PolyH variable(int nvars, int j);
  static PolyH monomial(int nvars, const Key& k, const Rat& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial

  void add_term(const Key& k, const Rat& c);
  void add_scaled(const PolyH& o, const Rat& c);

  PolyH& operator+=(const PolyH& o);
  PolyH& operator-=(const PolyH& o);
  PolyH& operator*=(const Rat& c);
  friend PolyH operator+(PolyH a, const PolyH& b) { return a += b; }
  friend PolyH operator-(PolyH a, const PolyH& b) { return a -= b; }
  friend PolyH operator*(PolyH a, const Rat& c) { return a *= c; }

  bool operator==(const PolyH& o) const { return terms_ == o.terms_; }
  bool operator!=(const PolyH& o) const { return !(*this == o); }

 private:
  int nvars_ = 0;
  TermMap terms_;
};

PolyH multiply(const PolyH& a, const PolyH& b);

// Substitutes h_j -> subs[j] (an affine-linear polynomial each) and expands.
PolyH substitute(const PolyH& p, const std::vector<PolyH>& subs);

// eta-twisted Harish-Chandra projection: the monomial rule
// y^Ibar h^J x^K -> eta(x^K) eta(x^I) h^J, extended linearly.
PolyH p_eta(const Algebra& alg, const EtaCharacter& eta, const UEAElement& u);

// Harish-Chandra projection (eta = 0).
PolyH p0(const Algebra& alg, const UEAElement& u);

// rho-twist: the algebra automorphism h -> h - rho(h).
PolyH t_rho(const RhoWeight& rho_w, const PolyH& p);

// Action of a Weyl element (integer matrix on the coroot basis) on S(h).
PolyH weyl_apply(const Eigen::MatrixXi& w, const PolyH& p);

Rat eval_at(const PolyH& p, const VecQ& point);

// Parabolic projection onto U(l_eta) along nbar^eta U(g) + U(g) n^eta:
// a PBW monomial survives iff its y- and x-support lies in the roots
// generated by Pi_eta, and passes through unchanged.
UEAElement pi_eta(const Algebra& alg, const EtaCharacter& eta, const UEAElement& u);
UEAElement pi_subset(const Algebra& alg, const std::vector<int>& levi_roots, const UEAElement& u);

// h^J monomials as elements of U(g)
UEAElement embed(const Algebra& alg, const PolyH& p);

std::string to_string(const PolyH& p);

}  // namespace whittaker

#endif
