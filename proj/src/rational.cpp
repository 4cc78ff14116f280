#include "whittaker/rational.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

namespace whittaker {

namespace {

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!looks_like_integer(s)) throw AlgebraError("not a rational: '" + s + "'");
    return Rat(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!looks_like_integer(num) || !looks_like_integer(den))
    throw AlgebraError("not a rational: '" + s + "'");
  const Int d(den);
  if (d == 0) throw AlgebraError("zero denominator in '" + s + "'");
  Rat q(Int(num), d);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::string rat_to_decimal(const Rat& q, int digits) {
  if (digits < 0) digits = 0;
  const bool negative = sgn(q) < 0;
  Rat a = abs(q);
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero on the scaled value
  Int scaled = (a.get_num() * scale * 2 + a.get_den()) / (2 * a.get_den());
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

}  // namespace whittaker
