#ifndef WHITTAKER_ORACLE_SL2_HPP
#define WHITTAKER_ORACLE_SL2_HPP

#include "whittaker/rational.hpp"

#include <array>
#include <functional>
#include <map>
#include <vector>

// Self-contained sl2 recursion used as a test oracle against the general
// pipeline.  Deliberately shares no code with the PBW engine: it carries its
// own monomial arithmetic for y^r h^s x^t with the relations [x,y]=h,
// [h,x]=2x, [h,y]=-2y, and assumes eta(x)=1 and chi(Omega)=0.
namespace whittaker::oracle_sl2 {

// (r, s, t) |-> coefficient of y^r h^s x^t
using Term = std::array<int, 3>;
using Element = std::map<Term, Rat>;

Element times_y(const Element& e);
Element times_h(const Element& e);
Element times_x(const Element& e);
// e * Omega with Omega = (1/2)h^2 + h + 2yx
Element times_omega(const Element& e);

class Sl2Functional {
 public:
  Sl2Functional(const Rat& c0, const Rat& c1);

  // phi(h^s), defined inductively: phi(h^s) = -phi(2 h^{s-1} + 4 h^{s-2} y x)
  Rat phi_h(int s) const;
  // phi(y^r h^s x^t) = eta(x^{r+t}) phi(h^s) = phi(h^s)
  Rat phi_monomial(int r, int s, int t) const;
  Rat phi(const Element& e) const;

 private:
  Rat c0_, c1_;
  mutable std::vector<Rat> memo_;
};

// True iff phi vanishes on g*Omega and g*(x - 1) for all monomials g of
// degree <= depth.  The phi_h overload lets tests feed a corrupted table.
bool annihilator_check(const Sl2Functional& f, int depth);
bool annihilator_check(const std::function<Rat(int)>& phi_h, int depth);

}  // namespace whittaker::oracle_sl2

#endif
