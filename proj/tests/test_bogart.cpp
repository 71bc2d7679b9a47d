#include <doctest.h>

#include <ringcode/bogart.hpp>

#include <random>

using namespace ringcode;

TEST_CASE("line incidence matrix for the Fano setup k=2, q=2") {
  Field F = Field::make(2, 1, std::nullopt);
  auto L = line_space(F, 2);
  REQUIRE(L.lines.size() == 3);
  CHECK(L.lines[0] == std::vector<unsigned>{0, 1});
  CHECK(L.lines[1] == std::vector<unsigned>{1, 0});
  CHECK(L.lines[2] == std::vector<unsigned>{1, 1});
  auto T = t_matrix(2, F);
  // with lines ordered (0,1),(1,0),(1,1): (1,1).(1,1)=0 over GF(2)
  QMatrix want{{1, 0, 1}, {0, 1, 1}, {1, 1, 0}};
  CHECK(T.t == want);
  CHECK(boost::multiprecision::abs(Rational(T.det)) == 2);
}

TEST_CASE("T for k=1 is the 1x1 identity") {
  for (long q : {2L, 3L, 5L}) {
    auto T = t_matrix(1, Field::make(q, 1, std::nullopt));
    REQUIRE(T.t.size() == 1);
    CHECK(T.t[0][0] == 1);
    CHECK(T.det == 1);
  }
}

TEST_CASE("T row sums and invertibility") {
  for (long q : {2L, 3L})
    for (int k = 2; k <= 4; ++k) {
      Field F = Field::make(q, 1, std::nullopt);
      auto T = t_matrix(k, F);
      CHECK(T.det != 0);
      BigInt expected = line_count(k, q) - line_count(k - 1, q);
      for (const auto& row : T.t) {
        Rational sum = 0;
        for (const auto& x : row) sum += x;
        CHECK(sum == Rational(expected));
      }
      // symmetry
      for (size_t i = 0; i < T.t.size(); ++i)
        for (size_t j = 0; j < i; ++j) CHECK(T.t[i][j] == T.t[j][i]);
    }
}

TEST_CASE("double-orthogonality count is mu(k-2)") {
  for (long q : {2L, 3L})
    for (int k = 2; k <= 4; ++k) {
      Field F = Field::make(q, 1, std::nullopt);
      auto T = t_matrix(k, F);
      BigInt expected = line_count(k - 2, q);
      for (size_t i = 0; i < T.t.size(); ++i)
        for (size_t j = 0; j < T.t.size(); ++j) {
          if (i == j) continue;
          BigInt count = 0;
          for (size_t t = 0; t < T.t.size(); ++t)
            if (T.t[t][i] == 0 && T.t[t][j] == 0) ++count;
          CHECK(count == expected);
        }
    }
}

TEST_CASE("identity isometry recovers the identity matrix") {
  Field F = Field::make(2, 1, std::nullopt);
  FqMatrix X(F, 2, 4);
  const unsigned rows[2][4] = {{1, 0, 1, 1}, {0, 1, 1, 0}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) X.at(i, j) = rows[i][j];
  auto res = recover_monomial(X, [](const std::vector<unsigned>& w) { return w; });
  for (size_t j = 0; j < 4; ++j) {
    CHECK(res.lambda.perm[j] == int(j));
    CHECK(res.lambda.scalars[j] == 1);
  }
}

TEST_CASE("coordinate swap on the repetition code") {
  Field F = Field::make(2, 1, std::nullopt);
  FqMatrix X(F, 1, 3);
  for (int j = 0; j < 3; ++j) X.at(0, j) = 1;
  auto swap01 = [](const std::vector<unsigned>& w) {
    std::vector<unsigned> v{w[1], w[0], w[2]};
    return v;
  };
  auto res = recover_monomial(X, swap01);
  CHECK(X * res.lambda.matrix(F) == res.y);
  // any monomial matrix fixing the all-ones generator works; recovery is
  // validated through X Lambda = Y
  for (unsigned s : res.lambda.scalars) CHECK(s == 1);
}

TEST_CASE("non-isometries are rejected") {
  Field F = Field::make(2, 1, std::nullopt);
  FqMatrix X(F, 1, 3);
  for (int j = 0; j < 3; ++j) X.at(0, j) = 1;
  // drop a coordinate's value: weight changes
  auto bad = [](const std::vector<unsigned>& w) {
    std::vector<unsigned> v = w;
    v[0] = 0;
    return v;
  };
  CHECK_THROWS_AS(recover_monomial(X, bad), NotIsometry);
  FqMatrix D(F, 2, 3);
  D.at(0, 0) = 1;
  CHECK_THROWS_AS(recover_monomial(D, [](const std::vector<unsigned>& w) { return w; }),
                  RankDeficient);
}

TEST_CASE("round trip: random monomial maps are recovered") {
  std::mt19937 rng(424242);
  auto run = [&](long q, int k, int n, int trials) {
    Field F = Field::make(q, 1, std::nullopt);
    for (int t = 0; t < trials; ++t) {
      FqMatrix X(F, k, n);
      do {
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < n; ++j) X.at(i, j) = unsigned(rng() % unsigned(q));
      } while (rank(X) < k);
      // random monomial matrix
      MonomialMatrix M;
      std::vector<int> perm(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) perm[size_t(j)] = j;
      std::shuffle(perm.begin(), perm.end(), rng);
      M.perm = perm;
      for (int j = 0; j < n; ++j) M.scalars.push_back(1 + unsigned(rng() % unsigned(q - 1)));
      FqMatrix Lam = M.matrix(F);
      auto f = [&](const std::vector<unsigned>& w) {
        std::vector<unsigned> v(size_t(n), 0);
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < n; ++i) v[size_t(j)] = F.add(v[size_t(j)], F.mul(w[size_t(i)], Lam.at(i, j)));
        return v;
      };
      auto res = recover_monomial(X, f);
      CHECK(X * res.lambda.matrix(F) == res.y);
      CHECK(res.y == X * Lam);
      CHECK(res.r == res.r_prime);
    }
  };
  run(2, 2, 4, 100);
  run(3, 2, 5, 100);
}
