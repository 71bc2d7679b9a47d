#pragma once

// Dense matrices over GF(q): echelon forms, rank, kernel, and the
// enumerations (RRE, CRE, GL) behind the counting identities.

#include <algorithm>
#include <functional>
#include <vector>

#include "common.hpp"
#include "field.hpp"

namespace ringcode {

class FqMatrix {
 public:
  FqMatrix(Field f, int rows, int cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0) {}
  FqMatrix(Field f, int rows, int cols, std::vector<unsigned> entries)
      : field_(std::move(f)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != size_t(rows) * cols) throw DegreeMismatch("entry count != rows*cols");
  }

  static FqMatrix identity(const Field& f, int n) {
    FqMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  unsigned& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  unsigned at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
  const std::vector<unsigned>& entries() const { return e_; }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
  }

  FqMatrix transpose() const {
    FqMatrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  FqMatrix operator*(const FqMatrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("matrix product across fields");
    if (cols_ != o.rows_) throw DegreeMismatch("inner dimensions differ");
    FqMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        unsigned a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
      }
    return r;
  }

  FqMatrix operator+(const FqMatrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("matrix sum across fields");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DegreeMismatch("shape mismatch");
    FqMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.add(e_[i], o.e_[i]);
    return r;
  }

  bool operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }
  // Shape-major, then entry-lexicographic; the canonical enumeration order.
  bool operator<(const FqMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return e_ < o.e_;
  }

 private:
  Field field_;
  int rows_, cols_;
  std::vector<unsigned> e_;
};

// Unique row reduced echelon form by Gauss-Jordan; pivots 1, zeros above and
// below.  Rank is reported through the optional out-parameter.
inline FqMatrix rre(FqMatrix M, int* rank_out = nullptr) {
  const Field& F = M.field();
  int r = 0;
  for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < M.rows(); ++i)
      if (M.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(r, j));
    unsigned inv = F.inv(M.at(r, c));
    for (int j = 0; j < M.cols(); ++j) M.at(r, j) = F.mul(inv, M.at(r, j));
    for (int i = 0; i < M.rows(); ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      unsigned factor = M.at(i, c);
      for (int j = 0; j < M.cols(); ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(factor, M.at(r, j)));
    }
    ++r;
  }
  if (rank_out) *rank_out = r;
  return M;
}

// Column reduced echelon form, realized through the transpose.  Existence and
// uniqueness are inherited from rre.
inline FqMatrix cre(const FqMatrix& M, int* rank_out = nullptr) {
  return rre(M.transpose(), rank_out).transpose();
}

inline int rank(const FqMatrix& M) {
  int r = 0;
  rre(M, &r);
  return r;
}

// Basis of the right kernel {v : Mv = 0}, one solution per column.
inline FqMatrix right_kernel(const FqMatrix& M) {
  const Field& F = M.field();
  int r = 0;
  FqMatrix R = rre(M, &r);
  int n = M.cols();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < r; ++i) {
    int c = 0;
    while (R.at(i, c) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  FqMatrix K(F, n, n - r);
  int kcol = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    K.at(c, kcol) = 1;
    for (int i = 0; i < r; ++i) K.at(pivot_col[i], kcol) = F.neg(R.at(i, c));
    ++kcol;
  }
  return K;
}

// Exact q-binomial coefficient: the number of l-dimensional subspaces of
// F_q^k, equivalently the number of l x k RREs of rank l.
inline BigInt gaussian(int k, int l, long q) {
  if (l < 0 || l > k) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < l; ++i) {
    num *= boost::multiprecision::pow(BigInt(q), unsigned(k - i)) - 1;
    den *= boost::multiprecision::pow(BigInt(q), unsigned(l - i)) - 1;
  }
  return num / den;
}

// All rows x cols RREs of the given rank, canonical entry-lexicographic order.
// A rank-r RRE is r nonzero pivot rows followed by zero rows, so the count is
// the q-binomial [cols choose r] independent of the row count.
inline std::vector<FqMatrix> enumerate_rre(int rows, int cols, int r, const Field& F) {
  if (r < 0 || r > rows || r > cols) return {};
  BigInt expected = gaussian(cols, r, F.q());
  if (expected > caps().enumeration)
    throw EnumerationCapExceeded("RRE enumeration of size " + expected.str());
  std::vector<FqMatrix> out;
  std::vector<int> pivots(r);
  // choose increasing pivot columns, then fill free entries
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == r) {
      std::vector<std::pair<int, int>> free_pos;  // (row, col) free slots
      std::vector<bool> is_pivot(cols, false);
      for (int c : pivots) is_pivot[c] = true;
      for (int i = 0; i < r; ++i)
        for (int c = pivots[i] + 1; c < cols; ++c)
          if (!is_pivot[c]) free_pos.emplace_back(i, c);
      std::vector<unsigned> vals(free_pos.size(), 0);
      while (true) {
        FqMatrix M(F, rows, cols);
        for (int i = 0; i < r; ++i) M.at(i, pivots[i]) = 1;
        for (size_t t = 0; t < free_pos.size(); ++t)
          M.at(free_pos[t].first, free_pos[t].second) = vals[t];
        out.push_back(std::move(M));
        size_t t = 0;
        while (t < vals.size() && vals[t] + 1 == unsigned(F.q())) vals[t++] = 0;
        if (t == vals.size()) break;
        ++vals[t];
      }
      return;
    }
    for (int c = start; c < cols; ++c) {
      pivots[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<FqMatrix> enumerate_cre(int rows, int cols, int r, const Field& F) {
  std::vector<FqMatrix> out;
  for (FqMatrix& M : enumerate_rre(cols, rows, r, F)) out.push_back(M.transpose());
  std::sort(out.begin(), out.end());
  return out;
}

inline BigInt gl_order(int n, long q) {
  BigInt count = 1;
  BigInt qn = boost::multiprecision::pow(BigInt(q), unsigned(n));
  for (int i = 0; i < n; ++i) count *= qn - boost::multiprecision::pow(BigInt(q), unsigned(i));
  return count;
}

// All invertible n x n matrices, canonical entry-lexicographic order.
inline std::vector<FqMatrix> enumerate_gl(int n, const Field& F) {
  BigInt expected = gl_order(n, F.q());
  if (expected > caps().enumeration)
    throw EnumerationCapExceeded("GL enumeration of size " + expected.str());
  std::vector<FqMatrix> out;
  std::vector<unsigned> vals(size_t(n) * n, 0);
  while (true) {
    FqMatrix M(F, n, n, vals);
    if (rank(M) == n) out.push_back(std::move(M));
    size_t t = vals.size();
    while (t > 0 && vals[t - 1] + 1 == unsigned(F.q())) vals[--t] = 0;
    if (t == 0) break;
    ++vals[t - 1];
  }
  if (BigInt(out.size()) != expected)
    throw InternalInconsistency("GL count mismatch: " + std::to_string(out.size()));
  return out;
}

// Cauchy binomial theorem: prod_{i<k} (1 + x q^i) has x^j coefficient
// [k choose j]_q q^{j(j-1)/2}.  Both sides expanded exactly.
inline bool cauchy_identity_check(int k, long q) {
  std::vector<BigInt> poly{1};
  for (int i = 0; i < k; ++i) {
    BigInt qi = boost::multiprecision::pow(BigInt(q), unsigned(i));
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] += poly[j] * qi;
    }
    poly = std::move(next);
  }
  for (int j = 0; j <= k; ++j) {
    BigInt rhs = gaussian(k, j, q) *
                 boost::multiprecision::pow(BigInt(q), unsigned(j * (j - 1) / 2));
    if (poly[size_t(j)] != rhs) return false;
  }
  return true;
}

}  // namespace ringcode
