#pragma once

// JSON serialization for matrices, codes, and reports.  Keys keep insertion
// order and arbitrary-precision integers are written as decimal strings, so
// identical inputs produce byte-identical output.

#include <json.hpp>

#include <string>
#include <vector>

#include "code.hpp"
#include "extension.hpp"
#include "frobenius.hpp"
#include "matrix.hpp"

namespace ringcode {

using ojson = nlohmann::ordered_json;

inline ojson matrix_to_json(const FqMatrix& M) {
  ojson j;
  j["field"] = M.field().spec_string();
  j["rows"] = M.rows();
  j["cols"] = M.cols();
  ojson entries = ojson::array();
  for (int i = 0; i < M.rows(); ++i) {
    ojson row = ojson::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(M.at(i, c));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

inline FqMatrix matrix_from_json(const ojson& j) {
  Field F = Field::parse(j.at("field").get<std::string>());
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  FqMatrix M(F, rows, cols);
  const auto& entries = j.at("entries");
  if (int(entries.size()) != rows) throw SpecParse("matrix JSON: row count mismatch");
  for (int i = 0; i < rows; ++i) {
    if (int(entries[size_t(i)].size()) != cols)
      throw SpecParse("matrix JSON: column count mismatch");
    for (int c = 0; c < cols; ++c) {
      long v = entries[size_t(i)][size_t(c)].get<long>();
      if (v < 0 || v >= F.q()) throw SpecParse("matrix JSON: entry out of range");
      M.at(i, c) = unsigned(v);
    }
  }
  return M;
}

// Alphabet elements are nested entry arrays for matrix modules and plain
// element indices otherwise.
inline ojson element_to_json(const LeftModule& A, int a) {
  if (!A.mat_info()) return ojson(a);
  FqMatrix M = A.mat_decode(a);
  ojson rows = ojson::array();
  for (int i = 0; i < M.rows(); ++i) {
    ojson row = ojson::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(M.at(i, c));
    rows.push_back(row);
  }
  return rows;
}

inline int element_from_json(const LeftModule& A, const ojson& j) {
  if (!A.mat_info()) {
    int a = j.get<int>();
    if (a < 0 || a >= A.size()) throw SpecParse("code JSON: element index out of range");
    return a;
  }
  const auto& mi = *A.mat_info();
  FqMatrix M(mi.field, mi.m, mi.k);
  if (int(j.size()) != mi.m) throw SpecParse("code JSON: element row count mismatch");
  for (int i = 0; i < mi.m; ++i)
    for (int c = 0; c < mi.k; ++c) M.at(i, c) = j.at(size_t(i)).at(size_t(c)).get<unsigned>();
  return A.mat_encode(M);
}

inline ojson code_to_json(const LinearCode& C) {
  ojson j;
  j["alphabet"] = C.alphabet()->spec();
  j["n"] = C.length();
  ojson gens = ojson::array();
  for (const auto& g : C.generators()) {
    ojson word = ojson::array();
    for (int a : g) word.push_back(element_to_json(*C.alphabet(), a));
    gens.push_back(word);
  }
  j["generators"] = gens;
  return j;
}

inline LinearCode code_from_json(const ojson& j) {
  auto A = LeftModule::make(j.at("alphabet").get<std::string>());
  int n = j.at("n").get<int>();
  std::vector<std::vector<int>> gens;
  for (const auto& word : j.at("generators")) {
    std::vector<int> g;
    for (const auto& e : word) g.push_back(element_from_json(*A, e));
    gens.push_back(std::move(g));
  }
  return LinearCode(A, n, std::move(gens));
}

inline ojson weight_enumerator_to_json(const WeightEnumerator& W) {
  ojson coeff = ojson::array();
  for (const auto& a : W.coeff) coeff.push_back(a.str());
  return coeff;
}

inline ojson frobenius_report_to_json(const FrobeniusReport& rep) {
  ojson j;
  j["frobenius"] = rep.frobenius;
  j["criteria"] = {{"generating_character", rep.generating_character},
                   {"cyclic_socle", rep.cyclic_socle},
                   {"socle_iso", rep.socle_iso},
                   {"honold4", rep.honold4}};
  ojson witness;
  if (rep.generating_witness) witness["generating_character_values"] = rep.generating_witness->values;
  if (rep.socle_generator) witness["socle_generator"] = *rep.socle_generator;
  if (rep.failing_ideal) witness["failing_ideal"] = *rep.failing_ideal;
  j["witness"] = witness;
  return j;
}

inline ojson monomial_transform_to_json(const MonomialTransform& T) {
  ojson j;
  j["perm"] = T.perm;
  ojson taus = ojson::array();
  for (const auto& t : T.taus) taus.push_back(t.values);
  j["taus"] = taus;
  return j;
}

inline ojson wood_report_to_json(const WoodReport& rep) {
  ojson j;
  j["q"] = rep.q;
  j["m"] = rep.m;
  j["k"] = rep.k;
  j["length"] = rep.length.str();
  ojson vp = ojson::array(), vm = ojson::array();
  for (const auto& g : rep.v_plus) vp.push_back(matrix_to_json(g)["entries"]);
  for (const auto& g : rep.v_minus) vm.push_back(matrix_to_json(g)["entries"]);
  j["v_plus"] = vp;
  j["v_minus"] = vm;
  j["delta_all_zero"] = rep.delta_all_zero;
  j["zero_column_in_plus"] = rep.zero_column_in_plus;
  j["no_zero_column_in_minus"] = rep.no_zero_column_in_minus;
  j["hamming_preserved"] = rep.hamming_preserved;
  j["swc_preserved"] = rep.swc_preserved;
  j["aw_preserved"] = rep.aw_preserved;
  if (rep.extension) {
    ojson e;
    e["found"] = rep.extension->transform.has_value();
    e["exhaustive"] = rep.extension->exhaustive;
    e["searched"] = std::to_string(rep.extension->searched);
    if (rep.extension->transform) e["transform"] = monomial_transform_to_json(*rep.extension->transform);
    j["extension"] = e;
  }
  return j;
}

inline ojson pipeline_report_to_json(const PipelineReport& rep) {
  ojson j;
  j["socle_condition_verified"] = rep.socle_condition_verified;
  j["socle_cyclic"] = rep.socle_cyclic;
  j["ep_holds"] = rep.ep_holds;
  if (rep.socle_generator) j["socle_generator"] = *rep.socle_generator;
  if (rep.embedding) j["embedding_values"] = rep.embedding->values;
  if (!rep.socle_cyclic) {
    j["simple_order"] = rep.simple_order;
    j["mu"] = rep.mu;
    j["s"] = rep.s;
    j["end_field_order"] = rep.end_field_order;
    j["length"] = rep.length.str();
    j["hamming_preserved"] = rep.hamming_preserved;
    j["swc_preserved"] = rep.swc_preserved;
    if (rep.extension) {
      j["extension_found"] = rep.extension->transform.has_value();
      j["extension_searched"] = std::to_string(rep.extension->searched);
    }
  }
  return j;
}

}  // namespace ringcode
