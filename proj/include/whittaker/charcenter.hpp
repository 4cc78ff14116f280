#ifndef WHITTAKER_CHARCENTER_HPP
#define WHITTAKER_CHARCENTER_HPP

#include "whittaker/liealg.hpp"
#include "whittaker/uea.hpp"

#include <map>
#include <string>
#include <vector>

namespace whittaker {

// A Lie algebra morphism n -> C.  It is determined by its values on the
// simple root vectors and vanishes on every non-simple root vector (a
// morphism kills [n, n]).
struct EtaCharacter {
  std::vector<Rat> simple_values;  // by simple-root index
  std::vector<Rat> root_values;    // by positive-root index; non-simple entries are 0
  std::vector<int> pi_eta;         // simple indices with nonzero value

  bool nondegenerate(int rank) const { return static_cast<int>(pi_eta.size()) == rank; }
};

EtaCharacter make_eta(const RootSystem& rs, const std::vector<Rat>& simple_values);

// Extension of eta to the monomial basis of U(n): eta(x^K) = prod eta(x_b)^{k_b}.
// Rejects monomials with y or h factors.
Rat extend_eta(const Algebra& alg, const EtaCharacter& eta, const PBWMonomial& m);

// Infinitesimal character data: a finite list of exact central generators
// z_i together with the values chi(z_i); ker chi is generated by z_i - chi(z_i).
struct CentralCharacter {
  std::vector<std::string> names;
  std::vector<UEAElement> gens;
  std::vector<Rat> values;
  std::vector<bool> experimental;

  int size() const { return static_cast<int>(gens.size()); }
};

// Casimir element of the defining-representation trace form, normalized so
// the A1 case is exactly (1/2)h^2 + h + 2yx.
UEAElement quadratic_casimir(const Algebra& alg);

// Degree-k Gelfand invariant of a type A factor: sum of cyclic products
// E_{i1 i2} E_{i2 i3} ... E_{ik i1} with the diagonal matrix units replaced
// by their traceless parts in the factor's Cartan coordinates.
UEAElement gelfand_invariant(const Algebra& alg, int factor, int k);
UEAElement gelfand_invariant(const Algebra& alg, int k);  // single-factor type A

// Same construction on a connected sub-chain of a type A factor (`window`
// lists the simple indices in chain order); central in the subalgebra the
// window generates.
UEAElement gelfand_window(const Algebra& alg, const FactorInfo& window, int k);

// Generic central element from the trace form of the realization restricted
// to the span of the given generator positions: tr(F^k) for the resolved
// matrix F_{ij} = sum_a (M_a)_{ij} b^a.  Works for any reductive subalgebra
// whose restriction of the defining representation is faithful.
UEAElement trace_invariant(const Algebra& alg, const std::vector<int>& positions, int k);

bool is_central(const Algebra& alg, const UEAElement& u);

// Standard generator list for the supported types: Gelfand invariants
// C_2..C_{r_f+1} per type A factor ("casimir2", "gelfand3", ...; "@f" suffix
// when there are several factors), quadratic Casimir plus the quartic trace
// invariant (experimental) for B2.  Values default to 0; unknown names in
// chi_values are rejected.
CentralCharacter standard_center(const Algebra& alg, const std::map<std::string, Rat>& chi_values = {});

}  // namespace whittaker

#endif
