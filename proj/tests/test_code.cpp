#include <doctest.h>

#include <ringcode/code.hpp>

#include <random>

using namespace ringcode;

namespace {

// the binary [7,4] code with parity bits c1+c3+c4, c1+c2+c4, c1+c2+c3
FqMatrix hamming74() {
  Field F = Field::make(2, 1, std::nullopt);
  FqMatrix G(F, 4, 7);
  const unsigned rows[4][7] = {{1, 0, 0, 0, 1, 1, 1},
                               {0, 1, 0, 0, 0, 1, 1},
                               {0, 0, 1, 0, 1, 0, 1},
                               {0, 0, 0, 1, 1, 1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 7; ++j) G.at(i, j) = rows[i][j];
  return G;
}

// field code as a module-alphabet code over matmod:q:1:1
LinearCode as_module_code(const FqMatrix& G) {
  auto A = LeftModule::make("matmod:" + std::to_string(G.field().q()) + ":1:1");
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < G.rows(); ++i) {
    std::vector<int> g;
    for (int j = 0; j < G.cols(); ++j) g.push_back(int(G.at(i, j)));
    gens.push_back(g);
  }
  return LinearCode(A, G.cols(), std::move(gens));
}

}  // namespace

TEST_CASE("[7,4] code: parity check, encoding, weight enumerator") {
  auto G = hamming74();
  auto H = standard_parity_check(G);
  const unsigned hrows[3][7] = {{1, 0, 1, 1, 1, 0, 0},
                                {1, 1, 0, 1, 0, 1, 0},
                                {1, 1, 1, 0, 0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 7; ++j) CHECK(H.at(i, j) == hrows[i][j]);
  // G H^T = 0
  auto prod = G * H.transpose();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod.at(i, j) == 0);
  // encoding of the message (1,0,1,0)
  auto words = field_codewords(G);
  std::vector<unsigned> expected{1, 0, 1, 0, 0, 1, 0};
  CHECK(std::find(words.begin(), words.end(), expected) != words.end());

  auto W = weight_enumerator_field(G);
  std::vector<BigInt> want{1, 0, 0, 7, 7, 0, 0, 1};
  CHECK(W.coeff == want);
  auto WD = weight_enumerator_field(dual_generator(G));
  std::vector<BigInt> want_dual{1, 0, 0, 0, 7, 0, 0, 0};
  CHECK(WD.coeff == want_dual);
  CHECK(macwilliams_identity_check(G));
}

TEST_CASE("standard form is validated") {
  Field F = Field::make(2, 1, std::nullopt);
  FqMatrix M(F, 2, 3);
  M.at(0, 1) = 1;
  M.at(1, 0) = 1;
  CHECK_THROWS_AS(standard_parity_check(M), NotStandardForm);
  FqMatrix tall(F, 3, 2);
  CHECK_THROWS_AS(standard_parity_check(tall), NotStandardForm);
}

TEST_CASE("MacWilliams identity on seeded random codes") {
  std::mt19937 rng(20260823);
  for (long q : {2L, 3L}) {
    Field F = Field::make(q, 1, std::nullopt);
    for (int trial = 0; trial < 15; ++trial) {
      int k = 1 + int(rng() % 3);
      int n = k + int(rng() % (7 - size_t(k) + 1));
      FqMatrix G(F, k, n);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) G.at(i, j) = unsigned(rng() % unsigned(q));
      CHECK(macwilliams_identity_check(G));
    }
  }
}

TEST_CASE("module code closure matches field code enumeration") {
  auto G = hamming74();
  auto C = as_module_code(G);
  auto field_words = field_codewords(G);
  REQUIRE(C.codewords().size() == field_words.size());
  // same Hamming weight distribution
  std::vector<int> hist(8, 0);
  for (const auto& w : C.codewords()) ++hist[size_t(hamming_weight(*C.alphabet(), w))];
  CHECK(hist == std::vector<int>{1, 0, 0, 7, 7, 0, 0, 1});
}

TEST_CASE("module code over Z_4") {
  auto A = LeftModule::make("ringself:zmod:4");
  // generated by (1,2): closure is {(0,0),(1,2),(2,0),(3,2)}
  LinearCode C(A, 2, {{1, 2}});
  CHECK(C.codewords().size() == 4);
  CHECK(C.index_of({2, 0}) >= 0);
  CHECK(C.index_of({0, 2}) < 0);
}

TEST_CASE("isomorphism from generator images and validation") {
  auto G = hamming74();
  auto C1 = as_module_code(G);
  // permute coordinates cyclically to get an equivalent code
  std::vector<std::vector<int>> gens2;
  for (const auto& g : C1.generators()) {
    std::vector<int> h(g.size());
    for (size_t j = 0; j < g.size(); ++j) h[j] = g[(j + 1) % g.size()];
    gens2.push_back(h);
  }
  LinearCode C2(C1.alphabet(), C1.length(), gens2);
  auto f = isomorphism_from_generators(C1, C2, gens2);
  CHECK(preserves_weight(f, WeightKind::hamming, {}));
  // the zero image set is rejected
  std::vector<std::vector<int>> bad(C1.generators().size(), C1.zero_word());
  CHECK_THROWS_AS(isomorphism_from_generators(C1, C2, bad), NotIsomorphism);
}

TEST_CASE("extension search recovers a coordinate permutation") {
  auto G = hamming74();
  auto C1 = as_module_code(G);
  std::vector<std::vector<int>> gens2;
  for (const auto& g : C1.generators()) {
    std::vector<int> h(g.size());
    for (size_t j = 0; j < g.size(); ++j) h[j] = g[(j + 1) % g.size()];
    gens2.push_back(h);
  }
  LinearCode C2(C1.alphabet(), C1.length(), gens2);
  auto f = isomorphism_from_generators(C1, C2, gens2);
  auto auts = aut_group(C1.alphabet());
  auto res = find_extension(f, WeightKind::hamming, auts);
  REQUIRE(res.transform.has_value());
  CHECK(res.exhaustive);
  for (const auto& w : C1.codewords()) CHECK(res.transform->apply(w) == f(w));
}

TEST_CASE("extension search with nontrivial scalars over GF(3)") {
  Field F = Field::make(3, 1, std::nullopt);
  FqMatrix G(F, 2, 4);
  const unsigned rows[2][4] = {{1, 0, 1, 2}, {0, 1, 1, 1}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) G.at(i, j) = rows[i][j];
  auto C1 = as_module_code(G);
  auto A = C1.alphabet();
  auto auts = aut_group(A);
  REQUIRE(auts.size() == 2);
  // scale coordinate 2 by the nonidentity automorphism and swap 0 <-> 3
  auto scale = auts[0].values == std::vector<int>{0, 1, 2} ? auts[1] : auts[0];
  std::vector<std::vector<int>> gens2;
  for (const auto& g : C1.generators()) {
    std::vector<int> h{g[3], g[1], scale(g[2]), g[0]};
    gens2.push_back(h);
  }
  LinearCode C2(A, 4, gens2);
  auto f = isomorphism_from_generators(C1, C2, gens2);
  auto res = find_extension(f, WeightKind::hamming, auts);
  REQUIRE(res.transform.has_value());
  for (const auto& w : C1.codewords()) CHECK(res.transform->apply(w) == f(w));
}

TEST_CASE("weight mismatch is rejected before searching") {
  auto A = LeftModule::make("ringself:zmod:4");
  LinearCode C1(A, 2, {{1, 2}});
  LinearCode C2(A, 2, {{1, 0}});
  REQUIRE(C1.codewords().size() == C2.codewords().size());
  auto f = isomorphism_from_generators(C1, C2, {{1, 0}});
  CHECK_THROWS_AS(find_extension(f, WeightKind::hamming, aut_group(A)), WeightNotPreserved);
}

TEST_CASE("swc weight distinguishes symmetrized classes over Z_4") {
  auto A = LeftModule::make("ringself:zmod:4");
  auto auts = aut_group(A);
  auto orbits = orbit_space(*A, auts);
  auto cls = class_index_of(*A, orbits);
  // 1 and 3 share a class, 2 does not
  CHECK(cls[1] == cls[3]);
  CHECK(cls[1] != cls[2]);
  std::vector<int> w{1, 3, 2, 0};
  auto h = histogram_weight(w, cls, int(orbits.size()));
  CHECK(h[size_t(cls[0])] == 1);
  CHECK(h[size_t(cls[1])] == 2);
  CHECK(h[size_t(cls[2])] == 1);
}

TEST_CASE("Hamming and swc preservation coincide over Z_4") {
  auto A = LeftModule::make("ringself:zmod:4");
  auto auts = aut_group(A);
  LinearCode C1(A, 2, {{1, 2}});
  LinearCode C2(A, 2, {{2, 1}});
  auto f = isomorphism_from_generators(C1, C2, {{2, 1}});
  CHECK(hamming_vs_swc_equivalence_check(f, auts));
}

TEST_CASE("equivalence check refuses unverified hypotheses") {
  auto A = LeftModule::make("ringself:ex:f2xy");
  LinearCode C(A, 1, {{1}});
  CodeIsomorphism f{&C, &C, {}};
  f.image.resize(C.codewords().size());
  for (size_t i = 0; i < f.image.size(); ++i) f.image[i] = int(i);
  CHECK_THROWS_AS(hamming_vs_swc_equivalence_check(f, aut_group(A)), HypothesisUnverified);
}
