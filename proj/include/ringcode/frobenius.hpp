#pragma once

// Frobenius classification of a finite ring through four independently
// evaluated criteria: existence of a generating character, cyclic left socle,
// R/rad isomorphic to soc(_RR), and the ideal-annihilator product rule.
// They are provably equivalent, so disagreement is treated as a bug.

#include <optional>
#include <vector>

#include "character.hpp"
#include "common.hpp"
#include "module.hpp"
#include "ring.hpp"

namespace ringcode {

struct FrobeniusReport {
  bool frobenius = false;
  bool generating_character = false;
  bool cyclic_socle = false;
  bool socle_iso = false;
  bool honold4 = false;
  // witnesses, first in canonical order
  std::optional<AdditiveCharacter> generating_witness;
  std::optional<int> socle_generator;
  std::optional<std::vector<int>> failing_ideal;  // honold4 violation
};

// R/rad as a left R-module: cosets indexed by least member.
inline LeftModule::Ptr radical_quotient_module(const FiniteRing::Ptr& R) {
  const auto& rad = R->radical();
  const int n = R->order();
  std::vector<int> coset_of(size_t(n), -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[size_t(a)] >= 0) continue;
    int c = int(reps.size());
    for (int r : rad) coset_of[size_t(R->add(a, r))] = c;
    reps.push_back(a);
  }
  int m = int(reps.size());
  std::vector<int> add(size_t(m) * m), act(size_t(n) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      add[size_t(i) * m + j] = coset_of[size_t(R->add(reps[size_t(i)], reps[size_t(j)]))];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i < m; ++i)
      act[size_t(r) * m + i] = coset_of[size_t(R->mul(r, reps[size_t(i)]))];
  return LeftModule::from_tables(R, m, std::move(add), std::move(act), R->spec() + "/rad");
}

namespace detail {
// ringself module over an already-built ring (avoids re-parsing the spec)
inline LeftModule::Ptr build_ringself_from(const FiniteRing::Ptr& R) {
  int n = R->order();
  std::vector<int> add(size_t(n) * n), act(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[size_t(a) * n + b] = R->add(a, b);
      act[size_t(a) * n + b] = R->mul(a, b);
    }
  return LeftModule::from_tables(R, n, std::move(add), std::move(act), "ringself:" + R->spec());
}
}  // namespace detail

inline LeftModule::Ptr socle_as_module(const FiniteRing::Ptr& R) {
  auto self = detail::build_ringself_from(R);
  return submodule_as_module(self, R->socle_left()).first;
}

// Multiset fingerprint of a semisimple module's homogeneous components.
inline std::vector<std::tuple<int, std::vector<int>, int>> semisimple_fingerprint(
    const LeftModule& A) {
  std::vector<std::tuple<int, std::vector<int>, int>> fp;
  for (const auto& c : homogeneous_decomposition(A))
    fp.emplace_back(c.simple_order, c.annihilator, c.multiplicity);
  std::sort(fp.begin(), fp.end());
  return fp;
}

inline FrobeniusReport frobenius_check(const FiniteRing::Ptr& R) {
  FrobeniusReport rep;

  // (1) generating character of (R,+)
  auto chars = character_group(AbelianGroup::from_ring(*R));
  for (const auto& chi : chars)
    if (is_generating(chi, *R, Side::left)) {
      rep.generating_character = true;
      rep.generating_witness = chi;
      break;
    }

  // (2) soc(_RR) cyclic
  const auto& soc = R->socle_left();
  for (int a : soc)
    if (R->cyclic_left_ideal(a) == soc) {
      rep.cyclic_socle = true;
      rep.socle_generator = a;
      break;
    }

  // (3) _R(R/rad) and soc(_RR) have matching homogeneous components.
  // Annihilators in the fingerprints are comparable because both modules
  // live over the same ring R.
  rep.socle_iso =
      semisimple_fingerprint(*radical_quotient_module(R)) ==
      semisimple_fingerprint(*socle_as_module(R));

  // (4) |I| |ann_r(I)| = |R| for every left ideal
  rep.honold4 = true;
  for (const auto& I : R->left_ideals())
    if (long(I.size()) * long(R->ann_r(I).size()) != long(R->order())) {
      rep.honold4 = false;
      rep.failing_ideal = I;
      break;
    }

  if (rep.generating_character != rep.cyclic_socle || rep.cyclic_socle != rep.socle_iso ||
      rep.socle_iso != rep.honold4)
    throw InternalInconsistency("Frobenius criteria disagree on " + R->spec());
  rep.frobenius = rep.generating_character;
  return rep;
}

// The character module as a LeftModule over R (left action), for embedding
// witnesses: a module with cyclic socle embeds into it.
inline LeftModule::Ptr character_left_module(const FiniteRing::Ptr& R) {
  auto M = build_character_module(R);
  const int n = R->order();
  return LeftModule::from_tables(R, n, M.add, M.left_act, "rhat:" + R->spec());
}

}  // namespace ringcode
