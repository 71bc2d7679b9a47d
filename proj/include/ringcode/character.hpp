#pragma once

// Characters of finite abelian groups in additive form: a character of G with
// exponent e is stored as a vector of values in Z/e, the value at g standing
// for the rational values[g]/e in Q/Z.  No complex arithmetic anywhere; inner
// products reduce to coincidence counting.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "common.hpp"
#include "ring.hpp"

namespace ringcode {

struct AbelianGroup {
  int n = 0;
  int zero = 0;
  std::vector<int> add;  // n x n table

  int sum(int a, int b) const { return add[size_t(a) * n + b]; }

  static AbelianGroup from_ring(const FiniteRing& R) {
    AbelianGroup G;
    G.n = R.order();
    G.zero = R.zero();
    G.add.resize(size_t(G.n) * G.n);
    for (int a = 0; a < G.n; ++a)
      for (int b = 0; b < G.n; ++b) G.add[size_t(a) * G.n + b] = R.add(a, b);
    return G;
  }

  static AbelianGroup from_table(int n, std::vector<int> add_table, int zero) {
    AbelianGroup G{n, zero, std::move(add_table)};
    G.verify();
    return G;
  }

  void verify() const {
    for (int a = 0; a < n; ++a) {
      if (sum(a, zero) != a) throw NotAbelian("zero is not an identity");
      for (int b = 0; b < n; ++b) {
        if (sum(a, b) != sum(b, a)) throw NotAbelian("operation not commutative");
        for (int c = 0; c < n; ++c)
          if (sum(sum(a, b), c) != sum(a, sum(b, c)))
            throw NotAbelian("operation not associative");
      }
    }
  }

  int order_of(int g) const {
    int x = g, ord = 1;
    while (x != zero) {
      x = sum(x, g);
      ++ord;
    }
    return ord;
  }

  int exponent() const {
    long e = 1;
    for (int g = 0; g < n; ++g) e = std::lcm(e, long(order_of(g)));
    return int(e);
  }
};

struct AdditiveCharacter {
  int exponent = 1;         // shared group exponent e
  std::vector<int> values;  // values[g] in Z/e

  bool trivial() const {
    return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
  }
  bool operator==(const AdditiveCharacter& o) const {
    return exponent == o.exponent && values == o.values;
  }
  bool operator<(const AdditiveCharacter& o) const { return values < o.values; }
};

// All |G| characters, canonical order (lexicographic on value vectors).
// Built by extending characters along a chain of subgroups: adjoining g with
// t·g = s in the current subgroup splits each character into the t choices of
// value v at g with t·v = chi(s) in Z/e.
inline std::vector<AdditiveCharacter> character_group(const AbelianGroup& G) {
  if (std::uint64_t(G.n) > caps().group_order)
    throw OrderCapExceeded("character group of order " + std::to_string(G.n));
  const int e = G.exponent();
  std::vector<int> in_sub(size_t(G.n), -1);  // position in subgroup list or -1
  std::vector<int> sub{G.zero};
  in_sub[size_t(G.zero)] = 0;
  // chars hold full-length value vectors, meaningful only on `sub`
  std::vector<std::vector<int>> chars{std::vector<int>(size_t(G.n), 0)};
  while (int(sub.size()) < G.n) {
    int g = 0;
    while (in_sub[size_t(g)] >= 0) ++g;
    int t = 1, power = g;
    while (in_sub[size_t(power)] < 0) {
      power = G.sum(power, g);
      ++t;
    }
    // power = t*g lies in the subgroup
    std::vector<std::vector<int>> next_chars;
    for (const auto& chi : chars) {
      int c = chi[size_t(power)];
      for (int v = 0; v < e; ++v) {
        if ((long(t) * v) % e != c) continue;
        std::vector<int> ext = chi;
        // value on s + j*g is chi(s) + j*v
        int jg = G.zero;
        for (int j = 1; j < t; ++j) {
          jg = G.sum(jg, g);
          for (int s : sub) ext[size_t(G.sum(s, jg))] = (chi[size_t(s)] + j * v) % e;
        }
        next_chars.push_back(std::move(ext));
      }
    }
    chars = std::move(next_chars);
    std::vector<int> grown = sub;
    int jg = G.zero;
    for (int j = 1; j < t; ++j) {
      jg = G.sum(jg, g);
      for (int s : sub) {
        int x = G.sum(s, jg);
        if (in_sub[size_t(x)] < 0) {
          in_sub[size_t(x)] = int(grown.size());
          grown.push_back(x);
        }
      }
    }
    sub = std::move(grown);
  }
  if (int(chars.size()) != G.n)
    throw InternalInconsistency("character count " + std::to_string(chars.size()) +
                                " != group order " + std::to_string(G.n));
  std::sort(chars.begin(), chars.end());
  std::vector<AdditiveCharacter> out;
  out.reserve(chars.size());
  for (auto& v : chars) out.push_back(AdditiveCharacter{e, std::move(v)});
  for (const auto& chi : out)
    for (int a = 0; a < G.n; ++a)
      for (int b = 0; b < G.n; ++b)
        if ((chi.values[size_t(a)] + chi.values[size_t(b)]) % e !=
            chi.values[size_t(G.sum(a, b))])
          throw InternalInconsistency("constructed character is not a homomorphism");
  return out;
}

// Kernel test behind generating characters: true iff ker chi contains no
// nonzero cyclic orbit {act(r, m) : r}.  Any nonzero submodule contains a
// nonzero cyclic one, so scanning cyclic submodules suffices.
template <class Act>
bool kernel_contains_no_cyclic(const AdditiveCharacter& chi, int carrier_zero, int ring_order,
                               Act act) {
  for (int m = 0; m < int(chi.values.size()); ++m) {
    if (m == carrier_zero || chi.values[size_t(m)] != 0) continue;
    bool inside = true;
    for (int r = 0; r < ring_order && inside; ++r)
      if (chi.values[size_t(act(r, m))] != 0) inside = false;
    if (inside) return false;
  }
  return true;
}

enum class Side { left, right };

// Generating character of _RR (side = left: kernel contains no nonzero left
// ideal) or of R_R.
inline bool is_generating(const AdditiveCharacter& chi, const FiniteRing& R, Side side) {
  if (side == Side::left)
    return kernel_contains_no_cyclic(chi, R.zero(), R.order(),
                                     [&](int r, int m) { return R.mul(r, m); });
  return kernel_contains_no_cyclic(chi, R.zero(), R.order(),
                                   [&](int r, int m) { return R.mul(m, r); });
}

// The character bimodule of R: all characters of (R,+) with the two actions
// (r.chi)(x) = chi(xr) and (chi.r)(x) = chi(rx), both stored as index tables.
struct CharacterModule {
  FiniteRing::Ptr ring;
  std::vector<AdditiveCharacter> chars;  // canonical order
  std::vector<int> add;                  // [i*n+j] index of pointwise sum
  std::vector<int> left_act;             // [r*n+i] index of r.chi_i
  std::vector<int> right_act;            // [r*n+i] index of chi_i.r
};

inline CharacterModule build_character_module(FiniteRing::Ptr R) {
  CharacterModule M;
  M.ring = R;
  M.chars = character_group(AbelianGroup::from_ring(*R));
  const int n = R->order();
  const int e = M.chars.front().exponent;
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[M.chars[size_t(i)].values] = i;
  auto lookup = [&](const std::vector<int>& vals) {
    auto it = index.find(vals);
    if (it == index.end()) throw InternalInconsistency("character action left the group");
    return it->second;
  };
  M.add.resize(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> s(static_cast<size_t>(n));
      for (int x = 0; x < n; ++x)
        s[size_t(x)] = (M.chars[size_t(i)].values[size_t(x)] +
                        M.chars[size_t(j)].values[size_t(x)]) % e;
      M.add[size_t(i) * n + j] = lookup(s);
    }
  M.left_act.resize(size_t(n) * n);
  M.right_act.resize(size_t(n) * n);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i < n; ++i) {
      std::vector<int> lv(static_cast<size_t>(n)), rv(static_cast<size_t>(n));
      for (int x = 0; x < n; ++x) {
        lv[size_t(x)] = M.chars[size_t(i)].values[size_t(R->mul(x, r))];
        rv[size_t(x)] = M.chars[size_t(i)].values[size_t(R->mul(r, x))];
      }
      M.left_act[size_t(r) * n + i] = lookup(lv);
      M.right_act[size_t(r) * n + i] = lookup(rv);
    }
  return M;
}

// Formal rational combination of characters, by canonical index.
using CharCombo = std::map<int, Rational>;

inline void require_unit_subgroup(const FiniteRing& R, const std::vector<int>& U) {
  if (U.empty()) throw NotASubgroup("empty unit set");
  bool has_one = false;
  for (int u : U) {
    if (!R.is_unit(u)) throw NotASubgroup("element " + R.element_name(u) + " is not a unit");
    if (u == R.one()) has_one = true;
    for (int v : U)
      if (std::find(U.begin(), U.end(), R.mul(u, v)) == U.end())
        throw NotASubgroup("unit set not closed under multiplication");
  }
  if (!has_one) throw NotASubgroup("unit set lacks the identity");
}

// Averaging projection P over the right translation action x -> xu:
// (P f)(x) = (1/|U|) sum_u f(xu).  On the character basis this permutes
// characters through the left action, so P is exact over Q.
inline CharCombo average_project(const CharacterModule& M, const CharCombo& f,
                                 const std::vector<int>& U) {
  require_unit_subgroup(*M.ring, U);
  const int n = M.ring->order();
  CharCombo out;
  Rational inv_u(1, long(U.size()));
  for (const auto& [i, coeff] : f) {
    for (int u : U) {
      int j = M.left_act[size_t(u) * n + i];
      Rational& slot = out[j];
      slot += coeff * inv_u;
      if (slot == 0) out.erase(j);
    }
  }
  return out;
}

inline CharCombo char_basis(int index) { return CharCombo{{index, Rational(1)}}; }

// <P psi, P pi> without complex numbers: orthonormality of distinct
// characters collapses the inner product to (1/|U|^2) * #{(u,v): psi.u = pi.v}
// where the action is through left_act.
inline Rational averaged_orthogonality(const CharacterModule& M, int pi, int psi,
                                       const std::vector<int>& U) {
  require_unit_subgroup(*M.ring, U);
  const int n = M.ring->order();
  long hits = 0;
  for (int u : U)
    for (int v : U)
      if (M.left_act[size_t(u) * n + psi] == M.left_act[size_t(v) * n + pi]) ++hits;
  return Rational(hits) / (Rational(long(U.size())) * long(U.size()));
}

}  // namespace ringcode
