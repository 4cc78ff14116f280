#include "whittaker/projections.hpp"

#include <algorithm>

namespace whittaker {

PolyH PolyH::constant(int nvars, const Rat& c) {
  PolyH p(nvars);
  p.add_term(Key(nvars, 0), c);
  return p;
}

PolyH PolyH::variable(int nvars, int j) {
  PolyH p(nvars);
  Key k(nvars, 0);
  k[j] = 1;
  p.add_term(k, 1);
  return p;
}

PolyH PolyH::monomial(int nvars, const Key& k, const Rat& c) {
  PolyH p(nvars);
  p.add_term(k, c);
  return p;
}

int PolyH::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (auto e : k) s += e;
    d = std::max(d, s);
  }
  return d;
}

void PolyH::add_term(const Key& k, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void PolyH::add_scaled(const PolyH& o, const Rat& c) {
  if (sgn(c) == 0) return;
  for (const auto& [k, v] : o.terms_) add_term(k, v * c);
}

PolyH& PolyH::operator+=(const PolyH& o) {
  add_scaled(o, 1);
  return *this;
}

PolyH& PolyH::operator-=(const PolyH& o) {
  add_scaled(o, -1);
  return *this;
}

PolyH& PolyH::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    *this = PolyH(nvars_);
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PolyH multiply(const PolyH& a, const PolyH& b) {
  PolyH out(a.nvars());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      PolyH::Key k(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i) {
        const int s = ka[i] + kb[i];
        if (s > 255) throw AlgebraError("polynomial exponent overflow");
        k[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(k, ca * cb);
    }
  return out;
}

PolyH substitute(const PolyH& p, const std::vector<PolyH>& subs) {
  const int nv = p.nvars();
  PolyH out(nv);
  for (const auto& [k, c] : p.terms()) {
    PolyH prod = PolyH::constant(nv, c);
    for (int j = 0; j < nv; ++j)
      for (int e = 0; e < k[j]; ++e) prod = multiply(prod, subs[j]);
    out += prod;
  }
  return out;
}

PolyH p_eta(const Algebra& alg, const EtaCharacter& eta, const UEAElement& u) {
  PolyH out(alg.r);
  for (const auto& [m, c] : u.terms()) {
    Rat factor = c;
    for (int b = 0; b < alg.n && sgn(factor) != 0; ++b) {
      for (int e = 0; e < m.exps[alg.xpos(b)]; ++e) factor *= eta.root_values[b];
      for (int e = 0; e < m.exps[alg.ypos(b)]; ++e) factor *= eta.root_values[b];
    }
    if (sgn(factor) == 0) continue;
    PolyH::Key k(alg.r);
    for (int j = 0; j < alg.r; ++j) k[j] = m.exps[alg.hpos(j)];
    out.add_term(k, factor);
  }
  return out;
}

PolyH p0(const Algebra& alg, const UEAElement& u) {
  PolyH out(alg.r);
  for (const auto& [m, c] : u.terms()) {
    bool pure_h = true;
    for (int b = 0; b < alg.n && pure_h; ++b)
      if (m.exps[alg.xpos(b)] || m.exps[alg.ypos(b)]) pure_h = false;
    if (!pure_h) continue;
    PolyH::Key k(alg.r);
    for (int j = 0; j < alg.r; ++j) k[j] = m.exps[alg.hpos(j)];
    out.add_term(k, c);
  }
  return out;
}

PolyH t_rho(const RhoWeight& rho_w, const PolyH& p) {
  const int nv = p.nvars();
  std::vector<PolyH> subs;
  for (int j = 0; j < nv; ++j) {
    PolyH s = PolyH::variable(nv, j);
    s += PolyH::constant(nv, -rho_w.values[j]);
    subs.push_back(std::move(s));
  }
  return substitute(p, subs);
}

PolyH weyl_apply(const Eigen::MatrixXi& w, const PolyH& p) {
  const int nv = p.nvars();
  std::vector<PolyH> subs;
  for (int j = 0; j < nv; ++j) {
    PolyH s(nv);
    for (int k = 0; k < nv; ++k)
      if (w(k, j) != 0) s += PolyH::variable(nv, k) * Rat(w(k, j));
    subs.push_back(std::move(s));
  }
  return substitute(p, subs);
}

Rat eval_at(const PolyH& p, const VecQ& point) {
  Rat out = 0;
  for (const auto& [k, c] : p.terms()) {
    Rat v = c;
    for (std::size_t j = 0; j < k.size(); ++j)
      for (int e = 0; e < k[j]; ++e) v *= point[static_cast<Eigen::Index>(j)];
    out += v;
  }
  return out;
}

UEAElement pi_subset(const Algebra& alg, const std::vector<int>& levi_roots, const UEAElement& u) {
  std::vector<bool> keep(alg.n, false);
  for (int b : levi_roots) keep[b] = true;
  UEAElement out(alg);
  for (const auto& [m, c] : u.terms()) {
    bool ok = true;
    for (int b = 0; b < alg.n && ok; ++b)
      if (!keep[b] && (m.exps[alg.xpos(b)] || m.exps[alg.ypos(b)])) ok = false;
    if (ok) out.add_term(m, c);
  }
  return out;
}

UEAElement pi_eta(const Algebra& alg, const EtaCharacter& eta, const UEAElement& u) {
  return pi_subset(alg, alg.roots_supported_on(eta.pi_eta), u);
}

UEAElement embed(const Algebra& alg, const PolyH& p) {
  UEAElement out(alg);
  for (const auto& [k, c] : p.terms()) {
    PBWMonomial m;
    m.exps.assign(alg.dim(), 0);
    for (int j = 0; j < alg.r; ++j) m.exps[alg.hpos(j)] = k[j];
    out.add_term(m, c);
  }
  return out;
}

std::string to_string(const PolyH& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    const Rat mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string ms;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (!k[j]) continue;
      if (!ms.empty()) ms += "*";
      ms += "h[a" + std::to_string(j + 1) + "]";
      if (k[j] > 1) ms += "^" + std::to_string(k[j]);
    }
    if (ms.empty()) {
      out += rat_to_string(mag);
    } else {
      if (mag != 1) out += rat_to_string(mag) + "*";
      out += ms;
    }
  }
  return out;
}

}  // namespace whittaker
