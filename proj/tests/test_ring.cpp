#include <doctest.h>

#include <ringcode/ring.hpp>

#include <algorithm>
#include <set>

using namespace ringcode;

namespace {

// Oracle: is S a left ideal, by definition.
bool is_left_ideal(const FiniteRing& R, const std::vector<int>& S) {
  std::set<int> s(S.begin(), S.end());
  if (!s.count(R.zero())) return false;
  for (int a : S)
    for (int b : S)
      if (!s.count(R.add(a, b))) return false;
  for (int r = 0; r < R.order(); ++r)
    for (int a : S)
      if (!s.count(R.mul(r, a))) return false;
  return true;
}

}  // namespace

TEST_CASE("zmod basics") {
  auto R = FiniteRing::build("zmod:4");
  CHECK(R->order() == 4);
  CHECK(R->add(3, 3) == 2);
  CHECK(R->mul(2, 2) == 0);
  CHECK(R->units() == std::vector<int>{1, 3});
  CHECK(R->radical() == std::vector<int>{0, 2});
  CHECK(R->socle_left() == std::vector<int>{0, 2});
  CHECK(R->left_ideals().size() == 3);
}

TEST_CASE("zmod:12 units and radical") {
  auto R = FiniteRing::build("zmod:12");
  CHECK(R->units() == std::vector<int>{1, 5, 7, 11});
  CHECK(R->radical() == std::vector<int>{0, 6});
}

TEST_CASE("matrix ring M_2(F_2)") {
  auto R = FiniteRing::build("mat:2:2");
  CHECK(R->order() == 16);
  CHECK(R->units().size() == 6);
  CHECK(R->radical() == std::vector<int>{0});
  // semisimple: socle is the whole ring
  CHECK(int(R->socle_left().size()) == 16);
  // left ideals of M_2(F_2) correspond to subspaces of F_2^2: 1 + 3 + 1
  CHECK(R->left_ideals().size() == 5);
}

TEST_CASE("gf ring and field units") {
  auto R = FiniteRing::build("gf:5");
  CHECK(R->units().size() == 4);
  CHECK(R->left_ideals().size() == 2);
  auto R4 = FiniteRing::build("gf:2^2");
  CHECK(R4->order() == 4);
  CHECK(R4->units().size() == 3);
}

TEST_CASE("ex:f2xy structure") {
  auto R = FiniteRing::build("ex:f2xy");
  CHECK(R->order() == 8);
  // units are 1 + radical elements
  CHECK(R->units() == std::vector<int>{1, 3, 5, 7});
  // radical = (x, y) = {0, x, y, x+y}
  CHECK(R->radical() == std::vector<int>{0, 2, 4, 6});
  CHECK(R->socle_left() == std::vector<int>{0, 2, 4, 6});
  // ideals: 0, (x), (y), (x+y), (x,y), R
  CHECK(R->left_ideals().size() == 6);
  CHECK_FALSE(R->is_left_principal());
}

TEST_CASE("product ring") {
  auto R = FiniteRing::build("prod:zmod:2;zmod:3");
  CHECK(R->order() == 6);
  CHECK(R->units().size() == 2);
  CHECK(R->radical() == std::vector<int>{0});
  CHECK_THROWS_AS(FiniteRing::build("prod:zmod:2"), SpecParse);
}

TEST_CASE("radical matches brute-force predicate on small corpus") {
  for (const char* spec : {"zmod:4", "zmod:8", "zmod:12", "ex:f2xy", "gf:7", "prod:zmod:4;zmod:2"}) {
    auto R = FiniteRing::build(spec);
    std::vector<int> oracle;
    for (int y = 0; y < R->order(); ++y) {
      bool in = true;
      for (int x = 0; x < R->order() && in; ++x)
        if (!R->is_unit(R->sub(R->one(), R->mul(x, y)))) in = false;
      if (in) oracle.push_back(y);
    }
    CHECK(R->radical() == oracle);
  }
}

TEST_CASE("left ideals are ideals and complete for zmod") {
  // For Z_n the left ideals are exactly dZ_n for divisors d of n.
  for (long n : {4L, 6L, 12L, 30L}) {
    auto R = FiniteRing::build("zmod:" + std::to_string(n));
    size_t divisors = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) ++divisors;
    CHECK(R->left_ideals().size() == divisors);
    for (const auto& I : R->left_ideals()) CHECK(is_left_ideal(*R, I));
  }
}

TEST_CASE("radical is nilpotent") {
  for (const char* spec : {"zmod:8", "zmod:16", "ex:f2xy", "zmod:27"}) {
    auto R = FiniteRing::build(spec);
    std::set<int> power(R->radical().begin(), R->radical().end());
    int steps = 0;
    while (!(power.size() == 1 && power.count(R->zero()))) {
      std::set<int> next;
      for (int a : power)
        for (int b : R->radical()) next.insert(R->mul(a, b));
      power = std::move(next);
      REQUIRE(++steps <= R->order());
    }
  }
}

TEST_CASE("units form a group") {
  for (const char* spec : {"zmod:12", "mat:2:2", "ex:f2xy"}) {
    auto R = FiniteRing::build(spec);
    std::set<int> us(R->units().begin(), R->units().end());
    for (int u : us) {
      CHECK(us.count(R->inverse(u)));
      for (int v : us) CHECK(us.count(R->mul(u, v)));
    }
  }
}

TEST_CASE("Honold condition 4 holds for zmod ideals") {
  for (long n : {6L, 8L, 12L}) {
    auto R = FiniteRing::build("zmod:" + std::to_string(n));
    for (const auto& I : R->left_ideals())
      CHECK(long(I.size()) * long(R->ann_r(I).size()) == n);
  }
}

TEST_CASE("socle equals sum of minimal left ideals") {
  for (const char* spec : {"zmod:4", "zmod:12", "ex:f2xy", "mat:2:2", "gf:3"}) {
    auto R = FiniteRing::build(spec);
    const auto& ideals = R->left_ideals();
    // minimal = nonzero with no proper nonzero ideal below it
    std::vector<char> in_sum(size_t(R->order()), 0);
    in_sum[size_t(R->zero())] = 1;
    for (const auto& I : ideals) {
      if (I.size() <= 1) continue;
      bool minimal = true;
      for (const auto& J : ideals)
        if (J.size() > 1 && J.size() < I.size() &&
            std::includes(I.begin(), I.end(), J.begin(), J.end()))
          minimal = false;
      if (!minimal) continue;
      std::vector<char> next = in_sum;
      for (int a = 0; a < R->order(); ++a)
        if (in_sum[size_t(a)])
          for (int b : I) next[size_t(R->add(a, b))] = 1;
      in_sum = std::move(next);
    }
    std::vector<int> sum;
    for (int a = 0; a < R->order(); ++a)
      if (in_sum[size_t(a)]) sum.push_back(a);
    CHECK(R->socle_left() == sum);
  }
}

TEST_CASE("table ring JSON round trip") {
  auto R = FiniteRing::build("zmod:3");
  nlohmann::json j;
  j["order"] = 3;
  j["add"] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  j["mul"] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  j["one"] = 1;
  auto T = ring_from_table_json(j, "table:inline");
  CHECK(T->order() == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(T->add(a, b) == R->add(a, b));
      CHECK(T->mul(a, b) == R->mul(a, b));
    }
  // broken associativity is rejected
  j["mul"] = {{0, 0, 0}, {0, 1, 2}, {0, 1, 1}};
  CHECK_THROWS_AS(ring_from_table_json(j, "table:bad"), AxiomViolation);
}

TEST_CASE("spec errors") {
  CHECK_THROWS_AS(FiniteRing::build("nope:3"), SpecParse);
  CHECK_THROWS_AS(FiniteRing::build("mat:6:2"), SpecParse);
  CHECK_THROWS_AS(FiniteRing::build("mat:2:5"), OrderCapExceeded);
}
