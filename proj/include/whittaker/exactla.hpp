#ifndef WHITTAKER_EXACTLA_HPP
#define WHITTAKER_EXACTLA_HPP

#include "whittaker/rational.hpp"

#include <optional>
#include <vector>

namespace whittaker {

// Incremental fraction-free row echelon over exact rationals.  Rows are kept
// as content-reduced integer vectors; the pivot of each row is its first
// nonzero coordinate, and stored rows are ordered by pivot column.  This is
// the single rank engine behind all codimension counts, so pivoting is
// deterministic by construction.
class Echelon {
 public:
  explicit Echelon(int cols) : cols_(cols) {}

  // Reduces v against the stored rows; inserts the residual when nonzero.
  // Returns true iff v was independent of the current row space.
  bool add_row(const VecQ& v);

  // Residual of v after elimination, as a rational vector (zero iff v lies
  // in the row space).
  VecQ reduce(const VecQ& v) const;

  bool contains(const VecQ& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

 private:
  std::vector<Int> reduce_int(const VecQ& v) const;

  int cols_;
  std::vector<std::vector<Int>> rows_;  // ascending pivot column
  std::vector<int> pivots_;
};

int rank_of(const std::vector<VecQ>& rows, int cols);

// Solves sum_j x_j * cols[j] = b exactly.  Free variables are set to zero;
// returns nullopt when the system is inconsistent.
std::optional<VecQ> solve_columns(const std::vector<VecQ>& cols, const VecQ& b);

// Nullspace basis of the matrix whose rows are given (deterministic echelon
// back-substitution; each vector is scaled to a primitive integer vector with
// positive leading entry).
std::vector<VecQ> nullspace_rows(const std::vector<VecQ>& rows, int cols);

}  // namespace whittaker

#endif
