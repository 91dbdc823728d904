#include "pgh/linear_algebra.hpp"

#include <utility>

#include "pgh/errors.hpp"

namespace pgh {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::append_row(const std::vector<long long>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_) throw ComputationError("row length mismatch");
  for (long long v : row) data_.emplace_back(static_cast<long>(v));
  ++rows_;
}

void IntMatrix::append_row(const std::vector<mpz_class>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_) throw ComputationError("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(int dst, int src, const mpz_class& k) {
  if (k == 0) return;
  for (int c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(int dst, int src, const mpz_class& k) {
  if (k == 0) return;
  for (int r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ComputationError("matrix dimension mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

struct SnfWork {
  IntMatrix D, U, V;

  void row_op(int dst, int src, const mpz_class& k) {
    D.add_row(dst, src, k);
    U.add_row(dst, src, k);
  }
  void col_op(int dst, int src, const mpz_class& k) {
    D.add_col(dst, src, k);
    V.add_col(dst, src, k);
  }
  void swap_r(int a, int b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_c(int a, int b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
  }

  // Smallest nonzero |entry| in the trailing block starting at (t, t).
  bool pivot_in_block(int t, int& pr, int& pc) const {
    bool found = false;
    mpz_class best;
    for (int r = t; r < D.rows(); ++r)
      for (int c = t; c < D.cols(); ++c) {
        if (D(r, c) == 0) continue;
        mpz_class a = abs(D(r, c));
        if (!found || a < best) {
          found = true;
          best = a;
          pr = r;
          pc = c;
        }
      }
    return found;
  }

  // Smallest nonzero |entry| in row t and column t (from t on).
  void pivot_in_cross(int t, int& pr, int& pc) const {
    mpz_class best = abs(D(t, t));
    pr = pc = t;
    for (int r = t + 1; r < D.rows(); ++r)
      if (D(r, t) != 0 && (best == 0 || abs(D(r, t)) < best)) {
        best = abs(D(r, t));
        pr = r;
        pc = t;
      }
    for (int c = t + 1; c < D.cols(); ++c)
      if (D(t, c) != 0 && (best == 0 || abs(D(t, c)) < best)) {
        best = abs(D(t, c));
        pr = t;
        pc = c;
      }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  SnfWork w{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols())};
  const int limit = std::min(A.rows(), A.cols());
  std::vector<mpz_class> diag;

  for (int t = 0; t < limit; ++t) {
    int pr = 0, pc = 0;
    if (!w.pivot_in_block(t, pr, pc)) break;
    w.swap_r(t, pr);
    w.swap_c(t, pc);

    for (;;) {
      bool clean = true;
      for (int r = t + 1; r < A.rows(); ++r) {
        if (w.D(r, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), w.D(r, t).get_mpz_t(), w.D(t, t).get_mpz_t());
        w.row_op(r, t, -q);
        if (w.D(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < A.cols(); ++c) {
        if (w.D(t, c) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), w.D(t, c).get_mpz_t(), w.D(t, t).get_mpz_t());
        w.col_op(c, t, -q);
        if (w.D(t, c) != 0) clean = false;
      }
      if (!clean) {
        w.pivot_in_cross(t, pr, pc);
        w.swap_r(t, pr);
        w.swap_c(t, pc);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the rest.
      int bad = -1;
      for (int r = t + 1; r < A.rows() && bad < 0; ++r)
        for (int c = t + 1; c < A.cols(); ++c)
          if (w.D(r, c) != 0 && !mpz_divisible_p(w.D(r, c).get_mpz_t(), w.D(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      w.row_op(t, bad, 1);
    }
    if (w.D(t, t) < 0) {
      w.D.negate_row(t);
      w.U.negate_row(t);
    }
    diag.push_back(w.D(t, t));
  }

  if (!(w.U * A * w.V == w.D)) throw ComputationError("Smith normal form verification failed: U*A*V != D");
  for (std::size_t i = 0; i + 1 < diag.size(); ++i)
    if (!mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()))
      throw ComputationError("Smith normal form divisibility chain broken");
  return SmithForm{std::move(w.U), std::move(w.V), std::move(w.D), std::move(diag)};
}

int inverse_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw ComputationError("no inverse mod p");
}

namespace {

// In-place reduced row echelon form mod p; returns pivot columns.
std::vector<int> rref_mod_p(std::vector<std::vector<int>>& M, int cols, int p) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols && row < static_cast<int>(M.size()); ++c) {
    int sel = -1;
    for (int r = row; r < static_cast<int>(M.size()); ++r)
      if (((M[r][c] % p) + p) % p != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[row], M[sel]);
    for (int& x : M[row]) x = ((x % p) + p) % p;
    const int inv = inverse_mod(M[row][c], p);
    for (int& x : M[row]) x = (x * inv) % p;
    for (int r = 0; r < static_cast<int>(M.size()); ++r) {
      if (r == row) continue;
      const int f = ((M[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (int k = 0; k < cols; ++k) M[r][k] = (((M[r][k] - f * M[row][k]) % p) + p) % p;
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<int>> nullspace_mod_p(const std::vector<std::vector<int>>& M, int cols, int p) {
  auto R = M;
  const std::vector<int> pivots = rref_mod_p(R, cols, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<int> x(cols, 0);
    x[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = (p - R[k][f]) % p;
    basis.push_back(std::move(x));
  }
  return basis;
}

int rank_mod_p(std::vector<std::vector<int>> M, int p) {
  const int cols = M.empty() ? 0 : static_cast<int>(M.front().size());
  return static_cast<int>(rref_mod_p(M, cols, p).size());
}

}  // namespace pgh
