#ifndef WHITTAKER_CHECKS_HPP
#define WHITTAKER_CHECKS_HPP

#include "whittaker/forms.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace whittaker::checks {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Deterministic sampler: raw engine output with explicit modulo, so results
// are identical across platforms for a fixed seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive bounds
  Rat rat();                    // small nonzero rational
  PBWMonomial monomial(const Algebra& alg, int max_degree, const std::vector<int>& positions);
  PBWMonomial monomial(const Algebra& alg, int max_degree);
  UEAElement element(const Algebra& alg, int max_degree, int max_terms,
                     const std::vector<int>& positions);
  UEAElement element(const Algebra& alg, int max_degree, int max_terms);

 private:
  std::mt19937_64 rng_;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  int samples = 100;
  int max_degree = 6;  // degree budget for the heavier suites
  std::map<std::string, Rat> chi_values;
};

std::vector<std::string> suite_names();

// Runs one named property suite on the given algebra and character.
std::vector<CheckResult> run_suite(const std::string& suite, const Algebra& alg,
                                   const EtaCharacter& eta, const SuiteConfig& cfg);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace whittaker::checks

#endif
