#ifndef WHITTAKER_FORMS_HPP
#define WHITTAKER_FORMS_HPP

#include "whittaker/charcenter.hpp"
#include "whittaker/projections.hpp"
#include "whittaker/rootsys.hpp"
#include "whittaker/uea.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace whittaker {

// Monomial basis of U(h) up to a degree cap, ordered by (degree, lex).
class HBasis {
 public:
  HBasis() = default;
  HBasis(int nvars, int max_degree);

  int size() const { return static_cast<int>(keys_.size()); }
  int nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }
  const std::vector<PolyH::Key>& keys() const { return keys_; }

  // coordinates of p; throws DegreeOverflow when p exceeds the cap
  VecQ vectorize(const PolyH& p) const;

 private:
  int nvars_ = 0;
  int max_degree_ = -1;
  std::vector<PolyH::Key> keys_;
  std::map<PolyH::Key, int> index_;
};

std::vector<PolyH::Key> keys_of_degree(int nvars, int degree);

// Graded complement C to the ideal S generated by the positive-degree
// W-invariants, built greedily per degree: monomials are scanned in lex
// order and kept when independent of S_d plus the previously kept ones.
// The complement is graded but not W-stable; only its dimension is used.
struct CoinvariantBasis {
  int d_max = -1;
  std::vector<std::vector<PolyH>> graded;      // complement basis, degree 0..d_max
  std::vector<std::vector<PolyH>> invariants;  // invariant basis, degree 0..d_max

  int total_dim() const;
  std::vector<PolyH> flatten() const;  // by (degree, selection order)
};

CoinvariantBasis coinvariant_complement(const RootSystem& rs, const WeylGroup& weyl, int d_max);
CoinvariantBasis coinvariant_complement(const RootSystem& rs, int d_max);

// Generators of the annihilator of the cyclic Whittaker vector:
// {x_a - eta(x_a) : a simple} u {x_b : b positive non-simple} u {z_i - chi(z_i)}.
std::vector<UEAElement> ann_generators(const Algebra& alg, const EtaCharacter& eta,
                                       const CentralCharacter& chi);

// Spanning set of p_eta(U(g) ker chi) in degrees <= d: the projections
// p_eta(h^J (z_i - chi(z_i))) with |J| + deg(z_i) <= d + slack whose image
// truncates into degree <= d.
std::vector<PolyH> pchi_span(const Algebra& alg, const EtaCharacter& eta,
                             const CentralCharacter& chi, int d, int slack = 0);

// dim U(h)_{<=d} - rank(pchi_span).  Stabilizes at the coinvariant dimension
// once d passes the generator degrees.
int q_dimension(const Algebra& alg, const EtaCharacter& eta, const CentralCharacter& chi, int d);

// Frozen context for functionals at a degree cap: the coinvariant complement
// together with the span, validated to fill U(h) degree by degree.
struct FormSpace {
  const Algebra* alg = nullptr;
  EtaCharacter eta;
  CentralCharacter chi;
  WeylGroup weyl;
  int d_max = -1;
  std::vector<int> levi_roots;  // roots whose y/x generators the space covers
  CoinvariantBasis coinv;
  std::vector<PolyH> coinv_flat;
  std::vector<PolyH> span;
  HBasis basis;
  std::vector<VecQ> solve_cols;  // [coinvariants | span] coordinates

  int coinv_dim() const { return static_cast<int>(coinv_flat.size()); }
  // unique coinvariant component of p in the decomposition C + span
  VecQ coinvariant_coordinates(const PolyH& p) const;
};

std::shared_ptr<const FormSpace> build_form_space(const Algebra& alg, const EtaCharacter& eta,
                                                  const CentralCharacter& chi, int d_max);

// One tau-invariant functional vanishing on the annihilator, i.e. one
// contravariant form on the module, stored by its values on the coinvariant
// basis.  Values on U(g) go through phi o p_eta.
struct FormFunctional {
  std::shared_ptr<const FormSpace> space;
  VecQ coeffs;

  Rat value_poly(const PolyH& p) const;
  Rat value(const UEAElement& u) const;
};

FormFunctional functional_from_coinvariants(std::shared_ptr<const FormSpace> space, const VecQ& coeffs);

// B(u w, v w) = phi(p_eta(tau(v) u)); rejects pairs past the degree cap.
Rat evaluate_form(const FormFunctional& phi, const UEAElement& u, const UEAElement& v);

// Shapovalov form on the Verma module M(lambda): lambda(p_0(tau(v) u)).
Rat shapovalov(const Algebra& alg, const VecQ& lambda, const UEAElement& u, const UEAElement& v);

struct GramMatrix {
  std::vector<std::string> labels;
  std::vector<UEAElement> basis;
  MatQ entries;
};

// Gram matrix of the y-monomials whose weight drop has the given height.
GramMatrix verma_gram(const Algebra& alg, const VecQ& lambda, int depth);

// Gram matrix of the h-monomials of degree <= depth under the functional.
GramMatrix whittaker_gram(const FormFunctional& phi, int depth);

// Levi pipeline for a (possibly degenerate) eta: the reductive subalgebra
// generated by the simple root spaces where eta is nonzero, with all of h
// retained.  U(l_eta) arithmetic reuses the ambient PBW engine on supported
// monomials.
struct LeviPipeline {
  const Algebra* alg = nullptr;
  EtaCharacter eta;
  std::vector<int> pi_eta;
  std::vector<int> levi_roots;
  WeylGroup weyl_eta;
  CentralCharacter center;
};

LeviPipeline make_levi(const Algebra& alg, const EtaCharacter& eta,
                       const std::map<std::string, Rat>& chi_values = {});

// Dimension of the space of contravariant forms on the induced module
// M(chi, eta), computed inside the Levi pipeline.
int mchi_dimension(const LeviPipeline& levi, int d, int slack = 0);

std::shared_ptr<const FormSpace> build_levi_form_space(const LeviPipeline& levi, int d_max);

// Functional on U(g) of the shape phi_l o pi_eta (extension along the
// parabolic projection); restriction drops the projection step.
struct InducedFunctional {
  FormFunctional base;
};

InducedFunctional ext_functional(FormFunctional phi_l);
FormFunctional restrict_functional(const InducedFunctional& phi_g);

Rat induced_value(const InducedFunctional& phi, const UEAElement& u);
Rat induced_form(const InducedFunctional& phi, const UEAElement& u, const UEAElement& v);

GramMatrix induced_gram(const InducedFunctional& phi, int depth);

// All PBW monomials of degree <= max_degree supported on the given
// generator positions, in term order.
std::vector<PBWMonomial> pbw_monomials_up_to(const Algebra& alg, int max_degree,
                                             const std::vector<int>& positions);
std::vector<PBWMonomial> pbw_monomials_up_to(const Algebra& alg, int max_degree);

}  // namespace whittaker

#endif
