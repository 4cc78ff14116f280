#ifndef WHITTAKER_SERIALIZE_HPP
#define WHITTAKER_SERIALIZE_HPP

#include "whittaker/checks.hpp"
#include "whittaker/forms.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace whittaker::serialize {

// All rationals are emitted as exact "p" / "p/q" strings.  Optional decimal
// annotations are rounded presentations, clearly marked as such.
nlohmann::json gram_to_json(const GramMatrix& g, int decimal_digits = -1);
std::string gram_to_csv(const GramMatrix& g);

nlohmann::json dims_to_json(const std::map<int, int>& dims_by_degree);
std::string dims_to_csv(const std::map<int, int>& dims_by_degree);

nlohmann::json checks_to_json(const std::vector<checks::CheckResult>& results);

}  // namespace whittaker::serialize

#endif
