#pragma once

// Constructive recovery of a monomial matrix from a Hamming isometry between
// two linear codes over a finite field, via the line-incidence matrix T of
// the projective space and column matching.

#include <functional>
#include <set>
#include <vector>

#include "common.hpp"
#include "matrix.hpp"
#include "rational_linalg.hpp"

namespace ringcode {

// the 1-dimensional subspaces of F_q^k, each by its representative with
// first nonzero coordinate 1, in lexicographic order
struct LineSpace {
  Field field;
  int k = 0;
  std::vector<std::vector<unsigned>> lines;

  int index_of(const std::vector<unsigned>& rep) const {
    auto it = std::lower_bound(lines.begin(), lines.end(), rep);
    if (it == lines.end() || *it != rep) return -1;
    return int(it - lines.begin());
  }
};

inline BigInt line_count(int k, long q) {
  if (k <= 0) return 0;
  return (boost::multiprecision::pow(BigInt(q), unsigned(k)) - 1) / (q - 1);
}

// scale a nonzero vector so its first nonzero coordinate is 1
inline std::vector<unsigned> normalize_line(const Field& F, std::vector<unsigned> v) {
  for (unsigned x : v) {
    if (x == 0) continue;
    unsigned inv = F.inv(x);
    for (auto& y : v) y = F.mul(inv, y);
    return v;
  }
  throw DivisionByZero("cannot normalize the zero vector");
}

inline LineSpace line_space(const Field& F, int k) {
  BigInt mu = line_count(k, F.q());
  if (mu > BigInt(caps().lines)) throw EnumerationCapExceeded("line count " + mu.str());
  std::set<std::vector<unsigned>> reps;
  std::vector<unsigned> v(size_t(k), 0);
  while (true) {
    size_t t = v.size();
    while (t > 0 && v[t - 1] + 1 == unsigned(F.q())) v[--t] = 0;
    if (t == 0) break;
    ++v[t - 1];
    reps.insert(normalize_line(F, v));
  }
  LineSpace L{F, k, {reps.begin(), reps.end()}};
  if (BigInt(L.lines.size()) != mu) throw InternalInconsistency("line count mismatch");
  return L;
}

// t_ij = 0 iff L_i is orthogonal to L_j under the standard dot product
struct TMatrix {
  QMatrix t;
  Rational det;
};

inline TMatrix t_matrix(int k, const Field& F) {
  auto L = line_space(F, k);
  const size_t mu = L.lines.size();
  TMatrix T;
  T.t.assign(mu, std::vector<Rational>(mu));
  for (size_t i = 0; i < mu; ++i)
    for (size_t j = 0; j < mu; ++j) {
      unsigned dot = 0;
      for (int c = 0; c < k; ++c) dot = F.add(dot, F.mul(L.lines[i][size_t(c)], L.lines[j][size_t(c)]));
      T.t[i][j] = (dot == 0) ? 0 : 1;
    }
  T.det = q_det(T.t);
  return T;
}

// permutation + scalars acting on columns: column j of the result is
// scalars[j] times column perm[j] of the input
struct MonomialMatrix {
  std::vector<int> perm;
  std::vector<unsigned> scalars;

  FqMatrix matrix(const Field& F) const {
    int n = int(perm.size());
    FqMatrix M(F, n, n);
    for (int j = 0; j < n; ++j) M.at(perm[size_t(j)], j) = scalars[size_t(j)];
    return M;
  }
};

using CodewordMap = std::function<std::vector<unsigned>(const std::vector<unsigned>&)>;

struct RecoverResult {
  FqMatrix y;                 // matrix of f composed with encoding
  std::vector<BigInt> r;      // line distribution of the columns of X
  std::vector<BigInt> r_prime;
  MonomialMatrix lambda;
};

// Recovers the monomial matrix behind a Hamming isometry f between the codes
// generated by X and by the images of f.  The line-distribution vectors and
// the invertibility of T force r = r', after which Y's columns match X's
// columns up to scalars and a permutation.
inline RecoverResult recover_monomial(const FqMatrix& X, const CodewordMap& f) {
  const Field& F = X.field();
  const int k = X.rows(), n = X.cols();
  if (rank(X) < k) throw RankDeficient("generator matrix must have full row rank");

  RecoverResult res{FqMatrix(F, k, n), {}, {}, {}};
  for (int i = 0; i < k; ++i) {
    std::vector<unsigned> row(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) row[size_t(j)] = X.at(i, j);
    auto img = f(row);
    if (int(img.size()) != n) throw NotIsometry("image length differs");
    for (int j = 0; j < n; ++j) res.y.at(i, j) = img[size_t(j)];
  }
  // f must be linear (agree with u -> u Y) and weight-preserving on the code
  auto weight = [](const std::vector<unsigned>& w) {
    int c = 0;
    for (unsigned x : w)
      if (x != 0) ++c;
    return c;
  };
  std::vector<unsigned> u(size_t(k), 0);
  while (true) {
    std::vector<unsigned> cw(size_t(n), 0), dw(size_t(n), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) {
        cw[size_t(j)] = F.add(cw[size_t(j)], F.mul(u[size_t(i)], X.at(i, j)));
        dw[size_t(j)] = F.add(dw[size_t(j)], F.mul(u[size_t(i)], res.y.at(i, j)));
      }
    if (f(cw) != dw) throw NotIsometry("map is not linear on the code");
    if (weight(cw) != weight(dw)) throw NotIsometry("weight differs at a codeword");
    size_t t = u.size();
    while (t > 0 && u[t - 1] + 1 == unsigned(F.q())) u[--t] = 0;
    if (t == 0) break;
    ++u[t - 1];
  }

  // line distributions r_i = #{nonzero columns of X lying on L_i}
  auto L = line_space(F, k);
  auto distribution = [&](const FqMatrix& M) {
    std::vector<BigInt> r(L.lines.size(), 0);
    for (int j = 0; j < n; ++j) {
      std::vector<unsigned> col(static_cast<size_t>(k));
      bool zero = true;
      for (int i = 0; i < k; ++i) {
        col[size_t(i)] = M.at(i, j);
        if (col[size_t(i)] != 0) zero = false;
      }
      if (zero) continue;
      r[size_t(L.index_of(normalize_line(F, col)))] += 1;
    }
    return r;
  };
  res.r = distribution(X);
  res.r_prime = distribution(res.y);
  // (T r)_i = wt(u_i X) where u_i runs over the line representatives, and
  // equality of the distributions follows from T's invertibility
  auto T = t_matrix(k, F);
  for (size_t i = 0; i < L.lines.size(); ++i) {
    Rational lhs = 0;
    for (size_t j = 0; j < L.lines.size(); ++j) lhs += T.t[i][j] * Rational(res.r[j]);
    std::vector<unsigned> cw(size_t(n), 0);
    for (int a = 0; a < k; ++a)
      for (int j = 0; j < n; ++j)
        cw[size_t(j)] = F.add(cw[size_t(j)], F.mul(L.lines[i][size_t(a)], X.at(a, j)));
    if (lhs != weight(cw)) throw InternalInconsistency("T r differs from the code weights");
  }
  if (res.r != res.r_prime)
    throw NotIsometry("column line distributions differ; no monomial matrix exists");

  // match columns of Y to scalar multiples of columns of X
  std::vector<char> used(size_t(n), 0);
  res.lambda.perm.assign(size_t(n), -1);
  res.lambda.scalars.assign(size_t(n), 0);
  for (int j = 0; j < n; ++j) {
    bool matched = false;
    for (int jp = 0; jp < n && !matched; ++jp) {
      if (used[size_t(jp)]) continue;
      // the scalar is fixed by the first nonzero entry of X's column
      unsigned scalar = 0;
      bool x_zero = true, ok = true;
      for (int i = 0; i < k; ++i)
        if (X.at(i, jp) != 0) {
          x_zero = false;
          scalar = F.mul(res.y.at(i, j), F.inv(X.at(i, jp)));
          break;
        }
      if (x_zero) {
        for (int i = 0; i < k; ++i)
          if (res.y.at(i, j) != 0) ok = false;
        scalar = 1;
      } else if (scalar == 0) {
        ok = false;
      } else {
        for (int i = 0; i < k; ++i)
          if (res.y.at(i, j) != F.mul(scalar, X.at(i, jp))) ok = false;
      }
      if (!ok) continue;
      used[size_t(jp)] = 1;
      res.lambda.perm[size_t(j)] = jp;
      res.lambda.scalars[size_t(j)] = scalar;
      matched = true;
    }
    if (!matched) throw ColumnMatchFailure("no column of X matches column " + std::to_string(j));
  }
  if (!(X * res.lambda.matrix(F) == res.y))
    throw InternalInconsistency("recovered monomial matrix fails X Lambda = Y");
  return res;
}

}  // namespace ringcode
