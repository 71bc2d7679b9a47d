#include <doctest.h>

#include <ringcode/module.hpp>

#include <set>

using namespace ringcode;

TEST_CASE("matmod basics") {
  auto A = LeftModule::make("matmod:2:1:2");
  CHECK(A->size() == 4);
  CHECK(A->ring()->order() == 2);
  // semisimple scalars: socle is everything
  CHECK(int(A->socle().size()) == 4);
  CHECK_FALSE(A->cyclic_socle_witness().has_value());
}

TEST_CASE("ringself Z_4") {
  auto A = LeftModule::make("ringself:zmod:4");
  CHECK(A->size() == 4);
  CHECK(A->socle() == std::vector<int>{0, 2});
  auto w = A->cyclic_socle_witness();
  REQUIRE(w.has_value());
  CHECK(*w == 2);
}

TEST_CASE("subfield GF(4) over GF(2)") {
  auto A = LeftModule::make("subfield:4:2");
  CHECK(A->size() == 4);
  CHECK(A->ring()->order() == 2);
  CHECK(int(A->socle().size()) == 4);
  CHECK_FALSE(A->cyclic_socle_witness().has_value());
}

TEST_CASE("subfield GF(9) over GF(3) and GF(16) over GF(4)") {
  auto A = LeftModule::make("subfield:9:3");
  CHECK(A->size() == 9);
  CHECK(A->ring()->order() == 3);
  // action restricted from field multiplication: 1 acts as identity
  for (int a = 0; a < 9; ++a) CHECK(A->act(1, a) == a);
  auto B = LeftModule::make("subfield:16:4");
  CHECK(B->size() == 16);
  CHECK(B->ring()->order() == 4);
  // the embedded GF(4) really multiplies: associativity of the action was
  // verified at construction; spot-check nontrivial scalar has no fixed
  // nonzero points (field multiplication by a non-identity unit)
  int moved = 0;
  for (int a = 1; a < 16; ++a)
    if (B->act(2, a) != a) ++moved;
  CHECK(moved == 15);
}

TEST_CASE("hom and aut counts for matrix modules") {
  auto A = LeftModule::make("matmod:2:1:2");
  CHECK(hom_set(A, A).size() == 16);
  CHECK(aut_group(A).size() == 6);
  auto Z4 = LeftModule::make("ringself:zmod:4");
  CHECK(aut_group(Z4).size() == 2);
  // hom from the zero module
  auto zero_mod = submodule_as_module(Z4, {0}).first;
  CHECK(hom_set(zero_mod, Z4).size() == 1);
}

TEST_CASE("generic hom enumeration agrees with matrix closed form") {
  auto A = LeftModule::make("matmod:2:1:2");
  // same module through the table backend
  auto T = LeftModule::from_tables(A->ring(), A->size(),
                                   [&] {
                                     std::vector<int> t;
                                     for (int a = 0; a < 4; ++a)
                                       for (int b = 0; b < 4; ++b) t.push_back(A->add(a, b));
                                     return t;
                                   }(),
                                   [&] {
                                     std::vector<int> t;
                                     for (int r = 0; r < 2; ++r)
                                       for (int a = 0; a < 4; ++a) t.push_back(A->act(r, a));
                                     return t;
                                   }(),
                                   "table:inline");
  auto closed = hom_set(A, A);
  auto generic = hom_set(T, T);
  REQUIRE(closed.size() == generic.size());
  for (size_t i = 0; i < closed.size(); ++i) CHECK(closed[i].values == generic[i].values);
}

TEST_CASE("annihilator classes") {
  auto Z4 = LeftModule::make("ringself:zmod:4");
  auto classes = annihilator_classes(*Z4);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == std::vector<int>{0});
  CHECK(classes[1] == std::vector<int>{1, 3});
  CHECK(classes[2] == std::vector<int>{2});

  auto A = LeftModule::make("matmod:2:1:2");
  auto ac = annihilator_classes(*A);
  REQUIRE(ac.size() == 2);
  CHECK(ac[0] == std::vector<int>{0});
  CHECK(ac[1].size() == 3);
}

TEST_CASE("orbit space under full automorphism group") {
  auto A = LeftModule::make("matmod:2:1:2");
  auto orbits = orbit_space(*A, aut_group(A));
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<int>{0});
  CHECK(orbits[1].size() == 3);

  auto Z4 = LeftModule::make("ringself:zmod:4");
  auto oz = orbit_space(*Z4, aut_group(Z4));
  REQUIRE(oz.size() == 3);
  // trivial group: singletons
  CHECK(orbit_space(*Z4, {identity_map(Z4)}).size() == 4);
  // a non-closed set is rejected
  auto auts = aut_group(Z4);
  REQUIRE(auts.size() == 2);
  std::vector<ModuleMap> not_group{auts[1] == identity_map(Z4) ? auts[0] : auts[1]};
  CHECK_THROWS_AS(orbit_space(*Z4, not_group), NotASubgroup);
}

TEST_CASE("pseudo-injectivity") {
  CHECK(is_pseudo_injective(LeftModule::make("ringself:zmod:4")));
  CHECK(is_pseudo_injective(LeftModule::make("matmod:2:1:2")));
  CHECK(is_pseudo_injective(LeftModule::make("subfield:4:2")));
  CHECK(socle_condition(LeftModule::make("subfield:4:2")));
  CHECK(socle_condition(LeftModule::make("ringself:zmod:8")));
}

TEST_CASE("annihilator classes equal Aut-orbits on pseudo-injective modules") {
  for (const char* spec : {"ringself:zmod:4", "matmod:2:1:2", "subfield:4:2", "ringself:zmod:8",
                           "matmod:3:1:1", "ringself:gf:2^2"}) {
    auto A = LeftModule::make(spec);
    if (!is_pseudo_injective(A)) continue;
    CHECK(annihilator_classes(*A) == orbit_space(*A, aut_group(A)));
  }
}

TEST_CASE("matmod cyclic socle iff k <= m") {
  for (long q : {2L, 3L})
    for (int m = 1; m <= 2; ++m)
      for (int k = 1; k <= 2; ++k) {
        auto A = LeftModule::make("matmod:" + std::to_string(q) + ":" + std::to_string(m) + ":" +
                                  std::to_string(k));
        CHECK(A->cyclic_socle_witness().has_value() == (k <= m));
      }
}

TEST_CASE("aut group of matmod is GL(k,q)") {
  for (long q : {2L, 3L})
    for (int k = 1; k <= 2; ++k) {
      auto A = LeftModule::make("matmod:" + std::to_string(q) + ":1:" + std::to_string(k));
      CHECK(BigInt(aut_group(A).size()) == gl_order(k, q));
    }
}

TEST_CASE("socle is a submodule killed by the radical") {
  for (const char* spec : {"ringself:zmod:8", "ringself:ex:f2xy", "matmod:2:2:1"}) {
    auto A = LeftModule::make(spec);
    const auto& soc = A->socle();
    std::set<int> s(soc.begin(), soc.end());
    for (int a : soc) {
      for (int b : soc) CHECK(s.count(A->add(a, b)));
      for (int r : A->ring()->radical()) CHECK(A->act(r, a) == A->zero());
    }
  }
}

TEST_CASE("homogeneous decomposition") {
  // soc of Z_8 over itself: {0,4} = one simple of order 2
  auto Z8 = LeftModule::make("ringself:zmod:8");
  auto soc_mod = submodule_as_module(Z8, Z8->socle()).first;
  auto comps = homogeneous_decomposition(*soc_mod);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].simple_order == 2);
  CHECK(comps[0].multiplicity == 1);

  // GF(4) over GF(2): one homogeneous component of multiplicity 2
  auto A = LeftModule::make("subfield:4:2");
  auto comps2 = homogeneous_decomposition(*A);
  REQUIRE(comps2.size() == 1);
  CHECK(comps2[0].simple_order == 2);
  CHECK(comps2[0].multiplicity == 2);

  // Z_6 over itself is semisimple with two non-isomorphic simples
  auto Z6 = LeftModule::make("ringself:zmod:6");
  auto comps3 = homogeneous_decomposition(*Z6);
  REQUIRE(comps3.size() == 2);
  for (const auto& c : comps3) CHECK(c.multiplicity == 1);
}

TEST_CASE("submodules of Z_4 over itself") {
  auto Z4 = LeftModule::make("ringself:zmod:4");
  CHECK(Z4->submodules().size() == 3);
  auto A = LeftModule::make("matmod:2:1:2");
  // subspaces of F_2^2: 0, three lines, plane
  CHECK(A->submodules().size() == 5);
}

TEST_CASE("module spec errors") {
  CHECK_THROWS_AS(LeftModule::make("matmod:2:1"), SpecParse);
  CHECK_THROWS_AS(LeftModule::make("subfield:8:4"), SpecParse);
  CHECK_THROWS_AS(LeftModule::make("nope"), SpecParse);
}
