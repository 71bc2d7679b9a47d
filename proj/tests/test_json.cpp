#include <doctest.h>

#include <ringcode/json_io.hpp>

using namespace ringcode;

TEST_CASE("matrix JSON round trip") {
  Field F = Field::make(3, 1, std::nullopt);
  FqMatrix M(F, 2, 3);
  M.at(0, 0) = 1;
  M.at(0, 2) = 2;
  M.at(1, 1) = 1;
  auto j = matrix_to_json(M);
  CHECK(matrix_from_json(j) == M);
  // out-of-range entries rejected
  j["entries"][0][0] = 7;
  CHECK_THROWS_AS(matrix_from_json(j), SpecParse);
}

TEST_CASE("code JSON round trip for a matrix-module alphabet") {
  auto A = LeftModule::make("matmod:2:1:2");
  LinearCode C(A, 3, {{1, 2, 3}, {2, 0, 1}});
  auto j = code_to_json(C);
  CHECK(j["alphabet"] == "matmod:2:1:2");
  // elements serialize as nested entry arrays
  CHECK(j["generators"][0][0].is_array());
  auto C2 = code_from_json(j);
  CHECK(C2.generators() == C.generators());
  CHECK(C2.codewords() == C.codewords());
}

TEST_CASE("code JSON round trip for a table-style alphabet") {
  auto A = LeftModule::make("ringself:zmod:4");
  LinearCode C(A, 2, {{1, 2}});
  auto j = code_to_json(C);
  CHECK(j["generators"][0][0].is_number());
  auto C2 = code_from_json(j);
  CHECK(C2.codewords() == C.codewords());
}

TEST_CASE("report serialization carries verdicts and witnesses") {
  auto rep = frobenius_check(FiniteRing::build("ex:f2xy"));
  auto j = frobenius_report_to_json(rep);
  CHECK(j["frobenius"] == false);
  CHECK(j["criteria"]["honold4"] == false);
  CHECK(j["witness"].contains("failing_ideal"));

  auto wood = wood_counterexample(2, 1, 2, true);
  auto wj = wood_report_to_json(wood);
  CHECK(wj["delta_all_zero"] == true);
  CHECK(wj["length"] == "3");
  CHECK(wj["extension"]["found"] == false);
  CHECK(wj["extension"]["searched"] == "1296");
}

TEST_CASE("serialization is deterministic") {
  auto A = LeftModule::make("matmod:2:1:2");
  LinearCode C(A, 3, {{1, 2, 3}});
  CHECK(code_to_json(C).dump() == code_to_json(C).dump());
  auto r1 = wood_report_to_json(wood_counterexample(2, 1, 2));
  auto r2 = wood_report_to_json(wood_counterexample(2, 1, 2));
  CHECK(r1.dump() == r2.dump());
}

TEST_CASE("weight enumerator coefficients serialize as decimal strings") {
  Field F = Field::make(2, 1, std::nullopt);
  auto W = weight_enumerator_field(FqMatrix::identity(F, 3));
  auto j = weight_enumerator_to_json(W);
  CHECK(j == ojson::array({"1", "3", "3", "1"}));
}
