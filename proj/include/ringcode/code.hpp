#pragma once

// Linear codes over field and module alphabets: parity checks, weight
// enumerators, the MacWilliams identity, the three weights (Hamming, swc,
// annihilator weight), monomial transformations, and the extension search.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "common.hpp"
#include "matrix.hpp"
#include "module.hpp"

namespace ringcode {

// ---------- field codes ----------

struct WeightEnumerator {
  std::vector<BigInt> coeff;  // coeff[j] = number of codewords of weight j

  bool operator==(const WeightEnumerator& o) const { return coeff == o.coeff; }
};

// Distinct codewords of the row space of G.
inline std::vector<std::vector<unsigned>> field_codewords(const FqMatrix& G) {
  const Field& F = G.field();
  int k = G.rows(), n = G.cols();
  BigInt total = boost::multiprecision::pow(BigInt(F.q()), unsigned(k));
  if (total > BigInt(caps().codewords))
    throw EnumerationCapExceeded("codeword enumeration of size " + total.str());
  std::set<std::vector<unsigned>> words;
  std::vector<unsigned> x(size_t(k), 0);
  while (true) {
    std::vector<unsigned> c(size_t(n), 0);
    for (int i = 0; i < k; ++i) {
      if (x[size_t(i)] == 0) continue;
      for (int j = 0; j < n; ++j)
        c[size_t(j)] = F.add(c[size_t(j)], F.mul(x[size_t(i)], G.at(i, j)));
    }
    words.insert(std::move(c));
    size_t t = x.size();
    while (t > 0 && x[t - 1] + 1 == unsigned(F.q())) x[--t] = 0;
    if (t == 0) break;
    ++x[t - 1];
  }
  return {words.begin(), words.end()};
}

inline WeightEnumerator weight_enumerator_field(const FqMatrix& G) {
  WeightEnumerator W;
  W.coeff.assign(size_t(G.cols()) + 1, 0);
  for (const auto& c : field_codewords(G)) {
    int w = 0;
    for (unsigned v : c)
      if (v != 0) ++w;
    W.coeff[size_t(w)] += 1;
  }
  return W;
}

// H = [-A'^T | I_{n-k}] for G = [I_k | A'] in standard form.
inline FqMatrix standard_parity_check(const FqMatrix& G) {
  const Field& F = G.field();
  int k = G.rows(), n = G.cols();
  if (n < k) throw NotStandardForm("more rows than columns");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (G.at(i, j) != (i == j ? 1u : 0u))
        throw NotStandardForm("left block is not the identity");
  FqMatrix H(F, n - k, n);
  for (int i = 0; i < n - k; ++i) {
    for (int j = 0; j < k; ++j) H.at(i, j) = F.neg(G.at(j, k + i));
    H.at(i, k + i) = 1;
  }
  return H;
}

// Generator of the dual code: transpose of the right kernel of G.
inline FqMatrix dual_generator(const FqMatrix& G) { return right_kernel(G).transpose(); }

// W_{C_dual}(X,Y) = (1/|C|) W_C(X+(q-1)Y, X-Y), checked by exact expansion
// of both homogeneous degree-n polynomials.
inline bool macwilliams_identity_check(const FqMatrix& G) {
  const long q = G.field().q();
  const int n = G.cols();
  WeightEnumerator WC = weight_enumerator_field(G);
  WeightEnumerator WD = weight_enumerator_field(dual_generator(G));
  BigInt size_c = 0;
  for (const auto& a : WC.coeff) size_c += a;
  // binomial table up to n
  std::vector<std::vector<BigInt>> binom(size_t(n) + 1, std::vector<BigInt>(size_t(n) + 1, 0));
  for (int i = 0; i <= n; ++i) {
    binom[size_t(i)][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[size_t(i)][size_t(j)] =
          binom[size_t(i) - 1][size_t(j) - 1] + binom[size_t(i) - 1][size_t(j)];
  }
  for (int w = 0; w <= n; ++w) {
    // coefficient of X^{n-w} Y^w in sum_j A_j (X+(q-1)Y)^{n-j} (X-Y)^j
    BigInt rhs = 0;
    for (int j = 0; j <= n; ++j) {
      if (WC.coeff[size_t(j)] == 0) continue;
      BigInt term = 0;
      for (int s = 0; s <= w; ++s) {
        int t = w - s;
        if (s > n - j || t > j) continue;
        BigInt part = binom[size_t(n - j)][size_t(s)] *
                      boost::multiprecision::pow(BigInt(q - 1), unsigned(s)) *
                      binom[size_t(j)][size_t(t)];
        if (t % 2) part = -part;
        term += part;
      }
      rhs += WC.coeff[size_t(j)] * term;
    }
    if (rhs % size_c != 0) return false;
    if (rhs / size_c != WD.coeff[size_t(w)]) return false;
  }
  return true;
}

// ---------- module-alphabet codes ----------

// Left R-submodule of A^n, stored by generators with the codeword set
// materialized on demand (closure under addition and the R-action).
class LinearCode {
 public:
  LinearCode(LeftModule::Ptr alphabet, int n, std::vector<std::vector<int>> generators)
      : alphabet_(std::move(alphabet)), n_(n), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      if (int(g.size()) != n_) throw DegreeMismatch("generator length != n");
  }

  const LeftModule::Ptr& alphabet() const { return alphabet_; }
  int length() const { return n_; }
  const std::vector<std::vector<int>>& generators() const { return generators_; }

  std::vector<int> zero_word() const {
    return std::vector<int>(size_t(n_), alphabet_->zero());
  }
  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> c(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) c[size_t(i)] = alphabet_->add(a[size_t(i)], b[size_t(i)]);
    return c;
  }
  std::vector<int> act(int r, const std::vector<int>& a) const {
    std::vector<int> c(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) c[size_t(i)] = alphabet_->act(r, a[size_t(i)]);
    return c;
  }

  // sorted codeword list; index_of is a binary search over it
  const std::vector<std::vector<int>>& codewords() const {
    if (codewords_.empty()) {
      std::set<std::vector<int>> words;
      words.insert(zero_word());
      std::vector<std::vector<int>> queue(generators_);
      for (auto& g : queue) words.insert(g);
      while (!queue.empty()) {
        auto w = queue.back();
        queue.pop_back();
        std::vector<std::vector<int>> snapshot(words.begin(), words.end());
        for (int r = 0; r < alphabet_->ring()->order(); ++r) {
          auto rw = act(r, w);
          if (words.insert(rw).second) queue.push_back(rw);
        }
        for (const auto& v : snapshot) {
          auto s = add(w, v);
          if (words.insert(s).second) queue.push_back(s);
        }
        if (words.size() > caps().codewords)
          throw EnumerationCapExceeded("code has more than " +
                                       std::to_string(caps().codewords) + " codewords");
      }
      codewords_.assign(words.begin(), words.end());
    }
    return codewords_;
  }

  int index_of(const std::vector<int>& w) const {
    const auto& cw = codewords();
    auto it = std::lower_bound(cw.begin(), cw.end(), w);
    if (it == cw.end() || *it != w) return -1;
    return int(it - cw.begin());
  }

 private:
  LeftModule::Ptr alphabet_;
  int n_;
  std::vector<std::vector<int>> generators_;
  mutable std::vector<std::vector<int>> codewords_;
};

inline int hamming_weight(const LeftModule& A, const std::vector<int>& w) {
  int count = 0;
  for (int x : w)
    if (x != A.zero()) ++count;
  return count;
}

// element -> class index maps for the histogram weights
inline std::vector<int> class_index_of(const LeftModule& A,
                                       const std::vector<std::vector<int>>& partition) {
  std::vector<int> idx(size_t(A.size()), -1);
  for (size_t c = 0; c < partition.size(); ++c)
    for (int a : partition[c]) idx[size_t(a)] = int(c);
  for (int v : idx)
    if (v < 0) throw InternalInconsistency("partition does not cover the alphabet");
  return idx;
}

inline std::vector<int> histogram_weight(const std::vector<int>& w,
                                         const std::vector<int>& class_of, int classes) {
  std::vector<int> h(size_t(classes), 0);
  for (int x : w) ++h[size_t(class_of[size_t(x)])];
  return h;
}

enum class WeightKind { hamming, swc, aw };

// Monomial transformation: y_i = tau_i(x_{perm[i]}).
struct MonomialTransform {
  std::vector<int> perm;
  std::vector<ModuleMap> taus;

  std::vector<int> apply(const std::vector<int>& x) const {
    std::vector<int> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = taus[i](x[size_t(perm[i])]);
    return y;
  }
};

// R-linear bijection between two codes, stored as codeword index map.
struct CodeIsomorphism {
  const LinearCode* from = nullptr;
  const LinearCode* to = nullptr;
  std::vector<int> image;  // index into to->codewords() per from-codeword index

  std::vector<int> operator()(const std::vector<int>& w) const {
    int i = from->index_of(w);
    if (i < 0) throw NotIsomorphism("word is not in the source code");
    return to->codewords()[size_t(image[size_t(i)])];
  }
};

// Builds the R-linear extension of generator images and validates that it is
// a well-defined bijection.
inline CodeIsomorphism isomorphism_from_generators(
    const LinearCode& C1, const LinearCode& C2,
    const std::vector<std::vector<int>>& generator_images) {
  if (generator_images.size() != C1.generators().size())
    throw NotIsomorphism("one image per generator required");
  const auto& words = C1.codewords();
  if (words.size() != C2.codewords().size())
    throw NotIsomorphism("codes have different sizes");
  const int miss = -1;
  std::vector<int> image(words.size(), miss);
  auto idx1 = [&](const std::vector<int>& w) {
    int i = C1.index_of(w);
    if (i < 0) throw InternalInconsistency("closure left the code");
    return i;
  };
  image[size_t(idx1(C1.zero_word()))] = C2.index_of(C2.zero_word());
  std::vector<int> queue{idx1(C1.zero_word())};
  for (size_t g = 0; g < generator_images.size(); ++g) {
    int i = idx1(C1.generators()[g]);
    int j = C2.index_of(generator_images[g]);
    if (j < 0) throw NotIsomorphism("generator image is not in the target code");
    if (image[size_t(i)] != miss && image[size_t(i)] != j)
      throw NotIsomorphism("conflicting generator images");
    image[size_t(i)] = j;
    queue.push_back(i);
  }
  // close under addition and the action; detect conflicts (ill-defined map)
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < words.size(); ++i) {
      if (image[i] == miss) continue;
      const auto& wi = words[i];
      const auto& fi = C2.codewords()[size_t(image[i])];
      for (int r = 0; r < C1.alphabet()->ring()->order(); ++r) {
        int src = idx1(C1.act(r, wi));
        int dst = C2.index_of(C2.act(r, fi));
        if (image[size_t(src)] == miss) {
          image[size_t(src)] = dst;
          grew = true;
        } else if (image[size_t(src)] != dst)
          throw NotIsomorphism("generator images do not define an R-linear map");
      }
      for (size_t j = 0; j < words.size(); ++j) {
        if (image[j] == miss) continue;
        int src = idx1(C1.add(wi, words[j]));
        int dst = C2.index_of(C2.add(fi, C2.codewords()[size_t(image[j])]));
        if (image[size_t(src)] == miss) {
          image[size_t(src)] = dst;
          grew = true;
        } else if (image[size_t(src)] != dst)
          throw NotIsomorphism("generator images do not define an additive map");
      }
    }
  }
  for (int v : image)
    if (v == miss) throw NotIsomorphism("generators do not span the source code");
  std::set<int> distinct(image.begin(), image.end());
  if (distinct.size() != image.size()) throw NotIsomorphism("map is not injective");
  return CodeIsomorphism{&C1, &C2, std::move(image)};
}

inline bool preserves_weight(const CodeIsomorphism& f, WeightKind kind,
                             const std::vector<ModuleMap>& G,
                             std::vector<int>* witness = nullptr) {
  const LinearCode& C1 = *f.from;
  const LinearCode& C2 = *f.to;
  const LeftModule& A = *C1.alphabet();
  std::vector<int> class_of;
  int classes = 0;
  if (kind == WeightKind::swc) {
    auto orbits = orbit_space(A, G);
    class_of = class_index_of(A, orbits);
    classes = int(orbits.size());
  } else if (kind == WeightKind::aw) {
    auto cls = annihilator_classes(A);
    class_of = class_index_of(A, cls);
    classes = int(cls.size());
  }
  for (size_t i = 0; i < C1.codewords().size(); ++i) {
    const auto& w = C1.codewords()[i];
    const auto& fw = C2.codewords()[size_t(f.image[i])];
    bool same;
    if (kind == WeightKind::hamming)
      same = hamming_weight(A, w) == hamming_weight(*C2.alphabet(), fw);
    else
      same = histogram_weight(w, class_of, classes) == histogram_weight(fw, class_of, classes);
    if (!same) {
      if (witness) *witness = w;
      return false;
    }
  }
  return true;
}

struct ExtensionSearchResult {
  std::optional<MonomialTransform> transform;
  std::uint64_t searched = 0;  // number of (perm, tau) combinations covered
  bool exhaustive = false;
};

// Searches for a G-monomial transform T with T(c) = f(c) for every codeword.
// The search over tau-tuples is organized per coordinate: for a fixed
// permutation the constraint at coordinate i is independent of the others, so
// scanning the per-coordinate candidate sets covers the full |G|^n space.
inline ExtensionSearchResult find_extension(const CodeIsomorphism& f, WeightKind kind,
                                            const std::vector<ModuleMap>& G) {
  const LinearCode& C1 = *f.from;
  const LinearCode& C2 = *f.to;
  if (C1.alphabet()->spec() != C2.alphabet()->spec())
    throw NotIsomorphism("extension search requires a common alphabet");
  std::vector<int> witness;
  if (!preserves_weight(f, kind, G, &witness))
    throw WeightNotPreserved("weight differs at a codeword of weight " +
                             std::to_string(hamming_weight(*C1.alphabet(), witness)));
  const int n = C1.length();
  // search-space size n! |G|^n against the cap
  BigInt space = 1;
  for (int i = 2; i <= n; ++i) space *= i;
  space *= boost::multiprecision::pow(BigInt(G.size()), unsigned(n));
  if (space > BigInt(caps().search))
    throw SearchCapExceeded("monomial search space " + space.str());

  const auto& words = C1.codewords();
  ExtensionSearchResult res;
  res.exhaustive = true;
  // valid[src][dst]: taus in G with tau(c_src) = f(c)_dst for all codewords
  std::vector<std::vector<std::vector<int>>> valid{
      size_t(n), std::vector<std::vector<int>>(size_t(n))};
  for (int src = 0; src < n; ++src)
    for (int dst = 0; dst < n; ++dst)
      for (size_t t = 0; t < G.size(); ++t) {
        bool ok = true;
        for (size_t i = 0; i < words.size() && ok; ++i) {
          const auto& fw = C2.codewords()[size_t(f.image[i])];
          if (G[t](words[i][size_t(src)]) != fw[size_t(dst)]) ok = false;
        }
        if (ok) valid[size_t(src)][size_t(dst)].push_back(int(t));
      }
  std::vector<int> perm(size_t(n), -1);
  std::vector<char> used(size_t(n), 0);
  std::vector<int> taus(size_t(n), -1);
  std::function<bool(int)> dfs = [&](int dst) -> bool {
    if (dst == n) return true;
    for (int src = 0; src < n; ++src) {
      if (used[size_t(src)]) continue;
      const auto& cands = valid[size_t(src)][size_t(dst)];
      if (cands.empty()) continue;
      used[size_t(src)] = 1;
      perm[size_t(dst)] = src;
      taus[size_t(dst)] = cands.front();
      if (dfs(dst + 1)) return true;
      used[size_t(src)] = 0;
    }
    return false;
  };
  res.searched = space.convert_to<std::uint64_t>();
  if (dfs(0)) {
    MonomialTransform T;
    T.perm.assign(perm.begin(), perm.end());
    for (int i = 0; i < n; ++i) T.taus.push_back(G[size_t(taus[size_t(i)])]);
    // post-validate on every codeword
    for (size_t i = 0; i < words.size(); ++i) {
      const auto& fw = C2.codewords()[size_t(f.image[i])];
      if (T.apply(words[i]) != fw)
        throw InternalInconsistency("extension candidate fails post-validation");
    }
    res.transform = std::move(T);
  }
  return res;
}

// Both sides of the Hamming/swc equivalence, under the hypotheses that make
// it a theorem: left principal ring and pseudo-injective alphabet.
inline bool hamming_vs_swc_equivalence_check(const CodeIsomorphism& f,
                                             const std::vector<ModuleMap>& aut) {
  const LeftModule::Ptr& A = f.from->alphabet();
  if (!A->ring()->is_left_principal())
    throw HypothesisUnverified("ring is not left principal");
  if (!is_pseudo_injective(A)) throw HypothesisUnverified("alphabet is not pseudo-injective");
  bool hamming = preserves_weight(f, WeightKind::hamming, aut);
  bool swc = preserves_weight(f, WeightKind::swc, aut);
  return hamming == swc;
}

}  // namespace ringcode
