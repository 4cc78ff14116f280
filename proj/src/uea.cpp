#include "whittaker/uea.hpp"

#include <algorithm>
#include <mutex>

namespace whittaker {

using TermList = std::vector<std::pair<PBWMonomial, Rat>>;

struct Algebra::SwapCache {
  std::mutex mu;
  std::map<std::uint64_t, std::shared_ptr<const TermList>> memo;
};

std::shared_ptr<Algebra::SwapCache> make_swap_cache() {
  return std::make_shared<Algebra::SwapCache>();
}

UEAElement UEAElement::one(const Algebra& alg) {
  UEAElement e(alg);
  PBWMonomial m;
  m.exps.assign(alg.dim(), 0);
  e.terms_.emplace(std::move(m), Rat(1));
  return e;
}

UEAElement UEAElement::generator(const Algebra& alg, int pos) {
  UEAElement e(alg);
  PBWMonomial m;
  m.exps.assign(alg.dim(), 0);
  m.exps[pos] = 1;
  e.terms_.emplace(std::move(m), Rat(1));
  return e;
}

UEAElement UEAElement::monomial(const Algebra& alg, const PBWMonomial& m, const Rat& c) {
  UEAElement e(alg);
  if (sgn(c) != 0) e.terms_.emplace(m, c);
  return e;
}

UEAElement UEAElement::from_lievec(const Algebra& alg, const LieVec& v) {
  UEAElement e(alg);
  for (const auto& [pos, c] : v) {
    PBWMonomial m;
    m.exps.assign(alg.dim(), 0);
    m.exps[pos] = 1;
    e.terms_.emplace(std::move(m), c);
  }
  return e;
}

void UEAElement::add_term(const PBWMonomial& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void UEAElement::add_scaled(const UEAElement& other, const Rat& c) {
  if (sgn(c) == 0) return;
  for (const auto& [m, v] : other.terms_) add_term(m, v * c);
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  add_scaled(o, 1);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  add_scaled(o, -1);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Rat UEAElement::coeff(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Word word_of(const PBWMonomial& m) {
  Word w;
  for (std::size_t p = 0; p < m.exps.size(); ++p)
    if (m.exps[p]) w.emplace_back(static_cast<int>(p), m.exps[p]);
  return w;
}

namespace {

// merges adjacent equal generators and drops zero exponents in place
void tidy_word(Word& w) {
  Word out;
  for (const auto& [p, e] : w) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == p)
      out.back().second += e;
    else
      out.emplace_back(p, e);
  }
  w = std::move(out);
}

std::uint64_t swap_key(int g, int f, int a, int b) {
  return (((static_cast<std::uint64_t>(g) << 8 | f) << 24 | static_cast<std::uint64_t>(a)) << 24) |
         static_cast<std::uint64_t>(b);
}

UEAElement normalize_impl(const Algebra& alg, Word w);

// normal form of g^a f^b for positions g > f
std::shared_ptr<const TermList> swap_pair(const Algebra& alg, int g, int a, int f, int b) {
  const std::uint64_t key = swap_key(g, f, a, b);
  {
    std::lock_guard<std::mutex> lock(alg.swap_cache->mu);
    auto it = alg.swap_cache->memo.find(key);
    if (it != alg.swap_cache->memo.end()) return it->second;
  }
  UEAElement result(alg);
  const LieVec& corr = alg.bracket_gens(g, f);  // [g, f]
  if (a == 1 && b == 1) {
    PBWMonomial m;
    m.exps.assign(alg.dim(), 0);
    m.exps[f] = 1;
    m.exps[g] = 1;
    result.add_term(m, 1);
    for (const auto& [t, c] : corr) {
      PBWMonomial mt;
      mt.exps.assign(alg.dim(), 0);
      mt.exps[t] = 1;
      result.add_term(mt, c);
    }
  } else {
    // g^a f^b = g^{a-1} (f g + [g, f]) f^{b-1}
    result = normalize_impl(alg, Word{{g, a - 1}, {f, 1}, {g, 1}, {f, b - 1}});
    for (const auto& [t, c] : corr) {
      UEAElement part = normalize_impl(alg, Word{{g, a - 1}, {t, 1}, {f, b - 1}});
      result.add_scaled(part, c);
    }
  }
  auto list = std::make_shared<TermList>(result.terms().begin(), result.terms().end());
  std::lock_guard<std::mutex> lock(alg.swap_cache->mu);
  auto [it, _] = alg.swap_cache->memo.emplace(key, std::move(list));
  return it->second;
}

UEAElement normalize_impl(const Algebra& alg, Word w) {
  tidy_word(w);
  std::size_t bad = w.size();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].first > w[i + 1].first) {
      bad = i;
      break;
    }
  if (bad == w.size()) {
    PBWMonomial m;
    m.exps.assign(alg.dim(), 0);
    for (const auto& [p, e] : w) {
      if (e > 255) throw AlgebraError("PBW exponent overflow");
      m.exps[p] = static_cast<std::uint8_t>(e);
    }
    return UEAElement::monomial(alg, m, 1);
  }
  auto swapped = swap_pair(alg, w[bad].first, w[bad].second, w[bad + 1].first, w[bad + 1].second);
  UEAElement out(alg);
  for (const auto& [m, c] : *swapped) {
    Word w2(w.begin(), w.begin() + bad);
    Word mid = word_of(m);
    w2.insert(w2.end(), mid.begin(), mid.end());
    w2.insert(w2.end(), w.begin() + bad + 2, w.end());
    out.add_scaled(normalize_impl(alg, w2), c);
  }
  return out;
}

}  // namespace

UEAElement pbw_normalize(const Algebra& alg, const Word& word) {
  for (const auto& [p, e] : word) {
    if (p < 0 || p >= alg.dim()) throw AlgebraError("generator position out of range");
    if (e < 0) throw AlgebraError("negative exponent in PBW word");
  }
  return normalize_impl(alg, word);
}

UEAElement multiply(const UEAElement& u, const UEAElement& v) {
  const Algebra& alg = u.algebra();
  if (&alg != &v.algebra()) throw AlgebraError("multiply: mixed algebras");
  UEAElement out(alg);
  for (const auto& [m1, c1] : u.terms()) {
    Word w1 = word_of(m1);
    for (const auto& [m2, c2] : v.terms()) {
      Word w = w1;
      Word w2 = word_of(m2);
      w.insert(w.end(), w2.begin(), w2.end());
      out.add_scaled(normalize_impl(alg, w), c1 * c2);
    }
  }
  return out;
}

UEAElement tau(const UEAElement& u) {
  const Algebra& alg = u.algebra();
  UEAElement out(alg);
  for (const auto& [m, c] : u.terms()) {
    PBWMonomial t = m;
    for (int b = 0; b < alg.n; ++b) std::swap(t.exps[alg.ypos(b)], t.exps[alg.xpos(b)]);
    out.add_term(t, c);
  }
  return out;
}

std::optional<int> degree(const UEAElement& u) {
  if (u.is_zero()) return std::nullopt;
  int d = 0;
  for (const auto& [m, c] : u.terms()) d = std::max(d, m.degree());
  return d;
}

std::string to_string(const PBWMonomial& m, const Algebra& alg) {
  std::string out;
  for (std::size_t p = 0; p < m.exps.size(); ++p) {
    if (!m.exps[p]) continue;
    if (!out.empty()) out += "*";
    out += alg.gen_name(static_cast<int>(p));
    if (m.exps[p] > 1) out += "^" + std::to_string(m.exps[p]);
  }
  return out;
}

std::string to_string(const UEAElement& u) {
  if (u.is_zero()) return "0";
  const Algebra& alg = u.algebra();
  std::string out;
  for (const auto& [m, c] : u.terms()) {
    const bool neg = sgn(c) < 0;
    const Rat mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string ms = to_string(m, alg);
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
