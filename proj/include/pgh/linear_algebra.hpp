#pragma once

#include <gmpxx.h>

#include <vector>

namespace pgh {

/// Dense matrix of unbounded integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const mpz_class& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  void append_row(const std::vector<long long>& row);
  void append_row(const std::vector<mpz_class>& row);

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[dst] += k * row[src]
  void add_row(int dst, int src, const mpz_class& k);
  /// col[dst] += k * col[src]
  void add_col(int dst, int src, const mpz_class& k);
  void negate_row(int r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

/// U * A * V == D with U, V unimodular and D diagonal with d_1 | d_2 | ...
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  std::vector<mpz_class> diagonal;  // the rank() nonzero invariant factors, positive
  int rank() const { return static_cast<int>(diagonal.size()); }
};

/// Smallest-magnitude pivoting, rows cleared before columns. The product
/// U*A*V is recomputed and compared against D; mismatch throws ComputationError.
SmithForm smith_normal_form(const IntMatrix& A);

/// Basis of { x in GF(p)^cols : M x = 0 } for M given row by row (entries mod p).
std::vector<std::vector<int>> nullspace_mod_p(const std::vector<std::vector<int>>& M, int cols, int p);

/// Rank over GF(p).
int rank_mod_p(std::vector<std::vector<int>> M, int p);

int inverse_mod(int a, int p);

}  // namespace pgh
