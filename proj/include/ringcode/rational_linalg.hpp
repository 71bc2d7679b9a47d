#pragma once

// Exact linear algebra over the rationals: rank, right kernel, determinant.
// Row reduction with cpp_rational entries is exact, so no pivoting strategy
// beyond "first nonzero" is needed.

#include <vector>

#include "common.hpp"

namespace ringcode {

using QMatrix = std::vector<std::vector<Rational>>;

// reduced row echelon form in place; returns the rank
inline int q_rre_inplace(QMatrix& a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = a[r][c];
    for (size_t j = 0; j < cols; ++j) a[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return int(r);
}

inline int q_rank(QMatrix a) { return q_rre_inplace(a); }

// basis of {v : a v = 0}, one vector per free column
inline std::vector<std::vector<Rational>> q_right_kernel(QMatrix a) {
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  q_rre_inplace(a);
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < a.size(); ++c)
    if (a[r][c] == 1) {
      bool is_pivot = true;
      for (size_t i = 0; i < a.size(); ++i)
        if (i != r && a[i][c] != 0) is_pivot = false;
      if (is_pivot) pivot_of_col[c] = int(r++);
    }
  std::vector<std::vector<Rational>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Rational> v(cols, 0);
    v[c] = 1;
    for (size_t j = 0; j < cols; ++j)
      if (pivot_of_col[j] >= 0) v[j] = -a[size_t(pivot_of_col[j])][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational q_det(QMatrix a) {
  const size_t n = a.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Rational inv = a[c][c];
    for (size_t j = c; j < n; ++j) a[c][j] /= inv;
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

// clears denominators and divides out the integer content; first nonzero
// entry made positive
inline std::vector<BigInt> q_primitive_integer(const std::vector<Rational>& v) {
  BigInt lcm = 1;
  for (const auto& x : v)
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(x)));
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt n = BigInt(boost::multiprecision::numerator(x)) * lcm /
               BigInt(boost::multiprecision::denominator(x));
    g = boost::multiprecision::gcd(g, n);
    out.push_back(n);
  }
  if (g == 0) return out;
  for (auto& n : out) n /= g;
  for (const auto& n : out) {
    if (n == 0) continue;
    if (n < 0)
      for (auto& m : out) m = -m;
    break;
  }
  return out;
}

}  // namespace ringcode
