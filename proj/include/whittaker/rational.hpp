#ifndef WHITTAKER_RATIONAL_HPP
#define WHITTAKER_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace whittaker {

// All coefficient arithmetic in the library is exact: Rat is an
// arbitrary-precision rational, never a float.
using Rat = mpq_class;
using Int = mpz_class;

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

struct AlgebraError : std::runtime_error {
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a functional is queried past its degree cap.  Callers must
// widen the cap; results are never silently truncated.
struct DegreeOverflow : AlgebraError {
  explicit DegreeOverflow(const std::string& what) : AlgebraError(what) {}
};

// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
Rat rat_from_string(const std::string& s);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

// Decimal rendering with k digits after the point, presentational only.
std::string rat_to_decimal(const Rat& q, int digits);

}  // namespace whittaker

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 40,
  };
};

}  // namespace Eigen

#endif
