#include "whittaker/oracle_sl2.hpp"

namespace whittaker::oracle_sl2 {

namespace {

void add_term(Element& e, int r, int s, int t, const Rat& c) {
  if (sgn(c) == 0) return;
  Term key{r, s, t};
  auto [it, inserted] = e.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) e.erase(it);
  }
}

// binomial coefficients as exact rationals
Rat binom(int n, int k) {
  Rat b = 1;
  for (int i = 0; i < k; ++i) {
    b *= Rat(n - i);
    b /= Rat(i + 1);
  }
  return b;
}

}  // namespace

Element times_x(const Element& e) {
  Element out;
  for (const auto& [m, c] : e) add_term(out, m[0], m[1], m[2] + 1, c);
  return out;
}

Element times_h(const Element& e) {
  // x^t h = h x^t - 2t x^t
  Element out;
  for (const auto& [m, c] : e) {
    add_term(out, m[0], m[1] + 1, m[2], c);
    add_term(out, m[0], m[1], m[2], c * Rat(-2 * m[2]));
  }
  return out;
}

Element times_y(const Element& e) {
  // x^t y = y x^t + t h x^{t-1} - t(t-1) x^{t-1}, then h^s y = y (h-2)^s
  Element out;
  for (const auto& [m, c] : e) {
    const int r = m[0], s = m[1], t = m[2];
    // y^r h^s (y x^t): expand h^s y = y (h - 2)^s
    for (int j = 0; j <= s; ++j) {
      const Rat coef = c * binom(s, j) * Rat(Int(1) << (s - j)) * Rat((s - j) % 2 == 0 ? 1 : -1);
      add_term(out, r + 1, j, t, coef);
    }
    if (t >= 1) {
      add_term(out, r, s + 1, t - 1, c * Rat(t));
      add_term(out, r, s, t - 1, c * Rat(-t * (t - 1)));
    }
  }
  return out;
}

Element times_omega(const Element& e) {
  Element out;
  const Element eh = times_h(e);
  for (const auto& [m, c] : times_h(eh)) add_term(out, m[0], m[1], m[2], c * Rat(1, 2));
  for (const auto& [m, c] : eh) add_term(out, m[0], m[1], m[2], c);
  for (const auto& [m, c] : times_x(times_y(e))) add_term(out, m[0], m[1], m[2], c * Rat(2));
  return out;
}

Sl2Functional::Sl2Functional(const Rat& c0, const Rat& c1) : c0_(c0), c1_(c1) {}

Rat Sl2Functional::phi_h(int s) const {
  if (s == 0) return c0_;
  if (s == 1) return c1_;
  if (static_cast<int>(memo_.size()) > s) return memo_[s];
  // phi(h^s) = -phi(2 h^{s-1} + 4 h^{s-2} y x); rewriting h^{s-2} y x gives
  // h^{s-2} y = y (h-2)^{s-2}, so only powers <= s-2 appear
  if (memo_.size() < 2) memo_.resize(2);
  for (int k = static_cast<int>(memo_.size()); k <= s; ++k) {
    Rat v = -2 * phi_h(k - 1);
    for (int j = 0; j <= k - 2; ++j) {
      const Rat coef = binom(k - 2, j) * Rat(Int(1) << (k - 2 - j)) * Rat((k - 2 - j) % 2 == 0 ? 1 : -1);
      v -= 4 * coef * phi_h(j);
    }
    memo_.push_back(v);
  }
  return memo_[s];
}

Rat Sl2Functional::phi_monomial(int, int s, int) const { return phi_h(s); }

Rat Sl2Functional::phi(const Element& e) const {
  Rat out = 0;
  for (const auto& [m, c] : e) out += c * phi_h(m[1]);
  return out;
}

bool annihilator_check(const std::function<Rat(int)>& phi_h, int depth) {
  auto phi = [&](const Element& e) {
    Rat out = 0;
    for (const auto& [m, c] : e) out += c * phi_h(m[1]);
    return out;
  };
  for (int r = 0; r <= depth; ++r)
    for (int s = 0; r + s <= depth; ++s)
      for (int t = 0; r + s + t <= depth; ++t) {
        Element g;
        g[{r, s, t}] = 1;
        if (sgn(phi(times_omega(g))) != 0) return false;
        Element gx = times_x(g);
        for (const auto& [m, c] : g) add_term(gx, m[0], m[1], m[2], -c);  // g*(x - eta(x))
        if (sgn(phi(gx)) != 0) return false;
      }
  return true;
}

bool annihilator_check(const Sl2Functional& f, int depth) {
  return annihilator_check([&](int s) { return f.phi_h(s); }, depth);
}

}  // namespace whittaker::oracle_sl2
