#include "whittaker/exactla.hpp"

#include <algorithm>

namespace whittaker {

namespace {

// Clears denominators and removes integer content; sign-normalizes so the
// first nonzero entry is positive.  Zero vector maps to zero vector.
std::vector<Int> to_primitive(const VecQ& v) {
  Int lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v[i].get_den_mpz_t());
  std::vector<Int> w(static_cast<std::size_t>(v.size()));
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    w[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : w) x /= g;
  for (const auto& x : w) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : w) y = -y;
    break;
  }
  return w;
}

void make_primitive(std::vector<Int>& w) {
  Int g = 0;
  for (const auto& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : w) x /= g;
  for (const auto& x : w) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : w) y = -y;
    break;
  }
}

int first_nonzero(const std::vector<Int>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

std::vector<Int> Echelon::reduce_int(const VecQ& v) const {
  std::vector<Int> w = to_primitive(v);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (w[p] == 0) continue;
    // fraction-free cross elimination: w <- pivot*w - w[p]*row
    const Int a = rows_[k][p];
    const Int b = w[p];
    for (int j = 0; j < cols_; ++j) w[j] = a * w[j] - b * rows_[k][j];
    make_primitive(w);
  }
  return w;
}

bool Echelon::add_row(const VecQ& v) {
  std::vector<Int> w = reduce_int(v);
  const int p = first_nonzero(w);
  if (p < 0) return false;
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  const auto pos = it - pivots_.begin();
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

VecQ Echelon::reduce(const VecQ& v) const {
  std::vector<Int> w = reduce_int(v);
  VecQ out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = Rat(w[j]);
  return out;
}

bool Echelon::contains(const VecQ& v) const { return first_nonzero(reduce_int(v)) < 0; }

int rank_of(const std::vector<VecQ>& rows, int cols) {
  Echelon e(cols);
  for (const auto& r : rows) e.add_row(r);
  return e.rank();
}

std::optional<VecQ> solve_columns(const std::vector<VecQ>& cols, const VecQ& b) {
  const int m = static_cast<int>(b.size());
  const int n = static_cast<int>(cols.size());
  // dense augmented elimination over Q; first-nonzero pivoting
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(m), std::vector<Rat>(n + 1));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) a[i][j] = cols[j][i];
  for (int i = 0; i < m; ++i) a[i][n] = b[i];

  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int pr = -1;
    for (int i = row; i < m; ++i)
      if (sgn(a[i][col]) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[row], a[pr]);
    const Rat inv = a[row][col];
    for (int j = col; j <= n; ++j) a[row][j] /= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      const Rat f = a[i][col];
      for (int j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (sgn(a[i][n]) != 0) return std::nullopt;
  VecQ x = VecQ::Zero(n);
  for (int i = 0; i < row; ++i) x[pivot_col_of_row[i]] = a[i][n];
  return x;
}

std::vector<VecQ> nullspace_rows(const std::vector<VecQ>& rows, int cols) {
  // row-reduce, then back-substitute one free variable at a time
  std::vector<std::vector<Rat>> a;
  for (const auto& r : rows) {
    std::vector<Rat> v(cols);
    for (int j = 0; j < cols; ++j) v[j] = r[j];
    a.push_back(std::move(v));
  }
  const int m = static_cast<int>(a.size());
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  int row = 0;
  for (int col = 0; col < cols && row < m; ++col) {
    int pr = -1;
    for (int i = row; i < m; ++i)
      if (sgn(a[i][col]) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[row], a[pr]);
    const Rat inv = a[row][col];
    for (int j = col; j < cols; ++j) a[row][j] /= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      const Rat f = a[i][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  std::vector<VecQ> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    VecQ v = VecQ::Zero(cols);
    v[free] = 1;
    for (int i = 0; i < row; ++i) v[pivot_col_of_row[i]] = -a[i][free];
    // primitive integer scaling for reproducible output
    Int lcm_den = 1;
    for (int j = 0; j < cols; ++j)
      if (sgn(v[j]) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v[j].get_den_mpz_t());
    for (int j = 0; j < cols; ++j) v[j] *= Rat(lcm_den);
    Int g = 0;
    for (int j = 0; j < cols; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_num_mpz_t());
    if (g > 1)
      for (int j = 0; j < cols; ++j) v[j] /= Rat(g);
    for (int j = 0; j < cols; ++j) {
      if (sgn(v[j]) == 0) continue;
      if (sgn(v[j]) < 0)
        for (int k = 0; k < cols; ++k) v[k] = -v[k];
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace whittaker
