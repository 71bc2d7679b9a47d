#pragma once

// Extension-property machinery: the W matrix on orbit multiplicity functions,
// kernel-derived isometric code pairs, the explicit counterexample pair over
// matrix modules, and the full socle-cyclicity verdict pipeline for general
// module alphabets.

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "code.hpp"
#include "common.hpp"
#include "frobenius.hpp"
#include "matrix.hpp"
#include "module.hpp"
#include "rational_linalg.hpp"

namespace ringcode {

// ---------- W matrix ----------

// Rows: nonzero m x l RREs (orbits of the information module under left
// invertible row operations).  Columns: nonzero l x k CREs (orbits of
// hom(M, A) under right invertible column operations).  Entry: the alphabet
// Hamming weight of X*lambda, which is 1 iff the product is nonzero.
struct WMatrix {
  long q = 0;
  int m = 0, k = 0, l = 0;
  std::vector<FqMatrix> row_reps;
  std::vector<FqMatrix> col_reps;
  QMatrix entries;
};

namespace detail {
inline bool is_zero_matrix(const FqMatrix& M) {
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (M.at(i, j) != 0) return false;
  return true;
}

inline std::vector<FqMatrix> nonzero_echelon(int rows, int cols, const Field& F, bool cre) {
  std::vector<FqMatrix> out;
  for (int r = 1; r <= std::min(rows, cols); ++r)
    for (auto& M : cre ? enumerate_cre(rows, cols, r, F) : enumerate_rre(rows, cols, r, F))
      out.push_back(std::move(M));
  return out;
}
}  // namespace detail

inline WMatrix build_w_matrix(long q, int m, int k, int l) {
  Field F = Field::make(q, 1, std::nullopt);
  WMatrix W;
  W.q = q;
  W.m = m;
  W.k = k;
  W.l = l;
  W.row_reps = detail::nonzero_echelon(m, l, F, false);
  W.col_reps = detail::nonzero_echelon(l, k, F, true);
  auto weight = [](const FqMatrix& M) { return detail::is_zero_matrix(M) ? 0 : 1; };
  W.entries.assign(W.row_reps.size(), std::vector<Rational>(W.col_reps.size()));
  // second representatives for the orbit-invariance check: fixed nontrivial
  // left and right invertible multipliers
  auto twist = [&](int n) {
    FqMatrix P = FqMatrix::identity(F, n);
    if (n >= 2) {
      P.at(0, 0) = 0;
      P.at(0, 1) = 1;
      P.at(1, 0) = 1;
      P.at(1, 1) = 0;
    }
    return P;
  };
  FqMatrix P = twist(m), Q = twist(k);
  for (size_t i = 0; i < W.row_reps.size(); ++i)
    for (size_t j = 0; j < W.col_reps.size(); ++j) {
      int w = weight(W.row_reps[i] * W.col_reps[j]);
      if (w != weight(P * W.row_reps[i] * W.col_reps[j] * Q))
        throw InternalInconsistency("W entry is not orbit-invariant");
      W.entries[i][j] = w;
    }
  return W;
}

struct WInjectivity {
  bool injective = false;
  std::vector<std::vector<Rational>> kernel_basis;
};

inline WInjectivity w_injectivity(const WMatrix& W) {
  WInjectivity out;
  out.kernel_basis = q_right_kernel(W.entries);
  out.injective = out.kernel_basis.empty();
  return out;
}

// ---------- kernel vectors to isometric parameterized codes ----------

// eta, indexed like the W columns, is split into nonnegative parts; each part
// lays out eta(lambda) copies of the column representative.  The resulting
// generator lists give codes with equal weight at every information word.
struct ParamCodePair {
  std::vector<FqMatrix> lambda_plus, lambda_minus;
  bool weights_match = false;
};

inline ParamCodePair kernel_to_codes(const WMatrix& W, const std::vector<Rational>& eta) {
  if (eta.size() != W.col_reps.size()) throw DegreeMismatch("eta length != #columns");
  bool all_zero = true;
  for (const auto& x : eta)
    if (x != 0) all_zero = false;
  if (all_zero) throw ZeroFunction("eta = 0");
  for (const auto& row : W.entries) {
    Rational dot = 0;
    for (size_t j = 0; j < eta.size(); ++j) dot += row[j] * eta[j];
    if (dot != 0) throw NotInKernel("W eta != 0");
  }
  auto cleared = q_primitive_integer(eta);
  ParamCodePair out;
  for (size_t j = 0; j < cleared.size(); ++j) {
    long c = cleared[j].convert_to<long>();
    for (long t = 0; t < c; ++t) out.lambda_plus.push_back(W.col_reps[j]);
    for (long t = 0; t < -c; ++t) out.lambda_minus.push_back(W.col_reps[j]);
  }
  // balance the lengths with zero columns; eta lives on nonzero orbits only
  // and zero columns contribute no weight
  FqMatrix zero_col(W.col_reps.front().field(), W.l, W.k);
  while (out.lambda_plus.size() < out.lambda_minus.size()) out.lambda_plus.push_back(zero_col);
  while (out.lambda_minus.size() < out.lambda_plus.size()) out.lambda_minus.push_back(zero_col);
  // w(X Lambda_+) = w(X Lambda_-) for every information word X, not just the
  // orbit representatives
  Field F = W.row_reps.front().field();
  std::vector<unsigned> vals(size_t(W.m) * W.l, 0);
  out.weights_match = true;
  while (true) {
    FqMatrix X(F, W.m, W.l, vals);
    int wp = 0, wm = 0;
    for (const auto& g : out.lambda_plus)
      if (!detail::is_zero_matrix(X * g)) ++wp;
    for (const auto& g : out.lambda_minus)
      if (!detail::is_zero_matrix(X * g)) ++wm;
    if (wp != wm) out.weights_match = false;
    size_t t = vals.size();
    while (t > 0 && vals[t - 1] + 1 == unsigned(F.q())) vals[--t] = 0;
    if (t == 0) break;
    ++vals[t - 1];
  }
  return out;
}

// ---------- the explicit counterexample pair ----------

inline int generator_word_weight(const std::vector<FqMatrix>& v, const FqMatrix& X) {
  int w = 0;
  for (const auto& g : v)
    if (!detail::is_zero_matrix(X * g)) ++w;
  return w;
}

struct WoodReport {
  long q = 0;
  int m = 0, k = 0;
  BigInt length;  // N = prod_{i=1}^{k-1} (1 + q^i)
  std::vector<FqMatrix> v_plus, v_minus;
  bool delta_all_zero = false;
  bool zero_column_in_plus = false;
  bool no_zero_column_in_minus = false;
  std::shared_ptr<LinearCode> c_plus, c_minus;
  std::optional<CodeIsomorphism> iso;  // points into c_plus / c_minus
  bool hamming_preserved = false;
  bool swc_preserved = false;
  bool aw_preserved = false;
  std::optional<ExtensionSearchResult> extension;  // when verification requested
};

namespace detail {
// v_+ : all k x k CREs of even rank, each repeated q^{C(r,2)} times; v_- the
// same for odd rank; canonical order (rank, entries), repetitions adjacent
inline void wood_generator_lists(const Field& F, int k, std::vector<FqMatrix>& v_plus,
                                 std::vector<FqMatrix>& v_minus) {
  for (int r = 0; r <= k; ++r) {
    BigInt reps = boost::multiprecision::pow(BigInt(F.q()), unsigned(r * (r - 1) / 2));
    auto& dst = (r % 2 == 0) ? v_plus : v_minus;
    for (const auto& M : enumerate_cre(k, k, r, F))
      for (BigInt t = 0; t < reps; ++t) dst.push_back(M);
  }
}
}  // namespace detail

inline WoodReport wood_counterexample(long q, int m, int k, bool verify_extension = false) {
  if (k <= m) throw KNotGreaterThanM("requires k > m");
  Field F = Field::make(q, 1, std::nullopt);
  WoodReport rep;
  rep.q = q;
  rep.m = m;
  rep.k = k;
  rep.length = 1;
  for (int i = 1; i < k; ++i)
    rep.length *= 1 + boost::multiprecision::pow(BigInt(q), unsigned(i));
  if (rep.length > BigInt(caps().enumeration))
    throw EnumerationCapExceeded("counterexample length " + rep.length.str());
  detail::wood_generator_lists(F, k, rep.v_plus, rep.v_minus);
  if (BigInt(rep.v_plus.size()) != rep.length || BigInt(rep.v_minus.size()) != rep.length)
    throw InternalInconsistency("generator list lengths disagree with the closed form");

  // Delta(X) = wt(X g_+) - wt(X g_-) over every m x k information word
  rep.delta_all_zero = true;
  std::vector<unsigned> vals(size_t(m) * k, 0);
  std::vector<FqMatrix> words;  // information words, odometer order
  while (true) {
    FqMatrix X(F, m, k, vals);
    if (generator_word_weight(rep.v_plus, X) != generator_word_weight(rep.v_minus, X))
      rep.delta_all_zero = false;
    words.push_back(std::move(X));
    size_t t = vals.size();
    while (t > 0 && vals[t - 1] + 1 == unsigned(F.q())) vals[--t] = 0;
    if (t == 0) break;
    ++vals[t - 1];
  }

  // zero-column certificate
  for (const auto& g : rep.v_plus)
    if (detail::is_zero_matrix(g)) rep.zero_column_in_plus = true;
  rep.no_zero_column_in_minus = true;
  for (const auto& g : rep.v_minus) {
    bool some_nonzero = false;
    for (const auto& X : words)
      if (!detail::is_zero_matrix(X * g)) some_nonzero = true;
    if (!some_nonzero) rep.no_zero_column_in_minus = false;
  }

  // materialize both codes over the alphabet matmod:q:m:k and the induced
  // isomorphism X g_+ -> X g_-
  auto A = LeftModule::make("matmod:" + std::to_string(q) + ":" + std::to_string(m) + ":" +
                            std::to_string(k));
  int n = int(rep.v_plus.size());
  auto encode = [&](const std::vector<FqMatrix>& v, const FqMatrix& X) {
    std::vector<int> w;
    w.reserve(v.size());
    for (const auto& g : v) w.push_back(A->mat_encode(X * g));
    return w;
  };
  std::vector<std::vector<int>> gens_plus, gens_minus;
  for (const auto& X : words) {
    gens_plus.push_back(encode(rep.v_plus, X));
    gens_minus.push_back(encode(rep.v_minus, X));
  }
  rep.c_plus = std::make_shared<LinearCode>(A, n, gens_plus);
  rep.c_minus = std::make_shared<LinearCode>(A, n, gens_minus);
  rep.iso = isomorphism_from_generators(*rep.c_plus, *rep.c_minus, gens_minus);

  auto auts = aut_group(A);
  rep.hamming_preserved = preserves_weight(*rep.iso, WeightKind::hamming, auts);
  rep.swc_preserved = preserves_weight(*rep.iso, WeightKind::swc, auts);
  rep.aw_preserved = preserves_weight(*rep.iso, WeightKind::aw, auts);
  if (verify_extension) rep.extension = find_extension(*rep.iso, WeightKind::hamming, auts);
  return rep;
}

// ---------- the socle-cyclicity verdict pipeline ----------

struct PipelineReport {
  bool socle_condition_verified = false;
  bool socle_cyclic = false;
  bool ep_holds = false;
  std::optional<int> socle_generator;
  std::optional<ModuleMap> embedding;  // injective A -> R-hat witness (positive case)
  // negative case: the offending homogeneous component and the produced pair
  int simple_order = 0;
  int mu = 0;  // multiplicity of the simple type in soc(_RR)
  int s = 0;   // its multiplicity in soc(A)
  long end_field_order = 0;
  BigInt length;
  std::shared_ptr<LinearCode> c_plus, c_minus;
  std::optional<CodeIsomorphism> iso;
  bool hamming_preserved = false;
  bool swc_preserved = false;
  std::optional<ExtensionSearchResult> extension;
};

namespace detail {
// Treats End(T) of a simple module T as a field: indices reordered so the
// zero map is 0 and the identity is 1, addition pointwise, multiplication by
// composition.
struct EndField {
  Field field;
  std::vector<ModuleMap> elems;  // elems[i] realizes scalar i on T
};

inline EndField end_field_of_simple(const LeftModule::Ptr& T) {
  auto endos = hom_set(T, T);
  std::vector<int> zero_values(size_t(T->size()), T->zero());
  std::vector<int> id_values(size_t(T->size()));
  for (int t = 0; t < T->size(); ++t) id_values[size_t(t)] = t;
  std::vector<ModuleMap> ordered;
  for (const auto& f : endos)
    if (f.values == zero_values) ordered.push_back(f);
  for (const auto& f : endos)
    if (f.values == id_values) ordered.push_back(f);
  if (ordered.size() != 2) throw InternalInconsistency("End(T) lacks zero or identity");
  for (const auto& f : endos)
    if (f.values != zero_values && f.values != id_values) ordered.push_back(f);
  const size_t e = ordered.size();
  auto index_of = [&](const std::vector<int>& v) {
    for (size_t i = 0; i < e; ++i)
      if (ordered[i].values == v) return unsigned(i);
    throw InternalInconsistency("End(T) is not closed");
  };
  std::vector<unsigned> add(e * e), mul(e * e);
  for (size_t i = 0; i < e; ++i)
    for (size_t j = 0; j < e; ++j) {
      std::vector<int> sum(size_t(T->size())), comp(size_t(T->size()));
      for (int t = 0; t < T->size(); ++t) {
        sum[size_t(t)] = T->add(ordered[i].values[size_t(t)], ordered[j].values[size_t(t)]);
        comp[size_t(t)] = ordered[i].values[size_t(ordered[j].values[size_t(t)])];
      }
      add[i * e + j] = index_of(sum);
      mul[i * e + j] = index_of(comp);
    }
  return EndField{Field::from_tables(std::move(add), std::move(mul)), std::move(ordered)};
}

// s independent minimal submodules spanning the homogeneous component, with
// isomorphisms from the sample simple onto each (as maps into A's indices)
inline std::vector<std::vector<int>> independent_simple_isos(
    const LeftModule::Ptr& A, const HomogeneousComponent& comp, const LeftModule::Ptr& T_mod) {
  std::set<int> span{A->zero()};
  std::vector<std::vector<int>> isos;
  for (int a : comp.component) {
    if (int(isos.size()) == comp.multiplicity) break;
    if (a == A->zero() || span.count(a)) continue;
    auto S = A->cyclic_submodule(a);
    bool minimal = true;
    for (int b : S)
      if (b != A->zero() && A->cyclic_submodule(b) != S) minimal = false;
    if (!minimal) continue;
    bool independent = true;
    for (int b : S)
      if (b != A->zero() && span.count(b)) independent = false;
    if (!independent) continue;
    auto [S_mod, incl] = submodule_as_module(A, S);
    std::optional<ModuleMap> h;
    for (const auto& f : hom_set(T_mod, S_mod))
      if (f.bijective()) {
        h = f;
        break;
      }
    if (!h) throw InternalInconsistency("sample simple does not map onto a component simple");
    std::vector<int> phi(size_t(T_mod->size()));
    for (int t = 0; t < T_mod->size(); ++t) phi[size_t(t)] = incl[size_t((*h)(t))];
    isos.push_back(std::move(phi));
    // grow the additive span
    std::vector<int> queue(S.begin(), S.end());
    for (int b : S) span.insert(b);
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (int y : std::vector<int>(span.begin(), span.end())) {
        int z = A->add(x, y);
        if (span.insert(z).second) queue.push_back(z);
      }
    }
  }
  return isos;
}
}  // namespace detail

inline PipelineReport theorem_main_pipeline(const LeftModule::Ptr& A,
                                            bool verify_extension = true) {
  PipelineReport rep;
  if (!socle_condition(A)) throw SocleConditionUnverified("alphabet fails the socle condition");
  rep.socle_condition_verified = true;
  auto R = A->ring();

  if (auto w = A->cyclic_socle_witness()) {
    rep.socle_cyclic = true;
    rep.socle_generator = *w;
    rep.ep_holds = true;
    // embedding witness into the character module of R
    auto rhat = character_left_module(R);
    for (const auto& f : hom_set(A, rhat))
      if (f.injective()) {
        rep.embedding = f;
        break;
      }
    if (!rep.embedding)
      throw InternalInconsistency("cyclic socle but no embedding into the character module");
    return rep;
  }

  // locate a homogeneous component of soc(A) whose multiplicity s exceeds its
  // multiplicity mu in soc(_RR)
  auto dec_a = homogeneous_decomposition(*A);
  auto dec_r = homogeneous_decomposition(*detail::build_ringself_from(R));
  const HomogeneousComponent* offender = nullptr;
  int mu = 0;
  for (const auto& c : dec_a) {
    int this_mu = 0;
    for (const auto& d : dec_r)
      if (d.simple_order == c.simple_order && d.annihilator == c.annihilator)
        this_mu = d.multiplicity;
    if (c.multiplicity > this_mu) {
      offender = &c;
      mu = this_mu;
      break;
    }
  }
  if (!offender) throw NoMatrixWitness("socle not cyclic yet every multiplicity is within bound");
  rep.simple_order = offender->simple_order;
  rep.mu = mu;
  rep.s = offender->multiplicity;

  // scalars: the endomorphism field of the simple type
  auto T_mod = submodule_as_module(A, offender->sample_simple).first;
  auto E = detail::end_field_of_simple(T_mod);
  rep.end_field_order = E.field.q();
  const int s = rep.s;

  // the component as T^s through independent simple submodules
  auto phis = detail::independent_simple_isos(A, *offender, T_mod);
  if (int(phis.size()) != s)
    throw NoMatrixWitness("component does not split into s independent simples");

  // counterexample pair: s x s CREs over End(T) acting on T^s on the right
  std::vector<FqMatrix> v_plus, v_minus;
  detail::wood_generator_lists(E.field, s, v_plus, v_minus);
  rep.length = 1;
  for (int i = 1; i < s; ++i)
    rep.length *= 1 + boost::multiprecision::pow(BigInt(E.field.q()), unsigned(i));
  if (BigInt(v_plus.size()) != rep.length || BigInt(v_minus.size()) != rep.length)
    throw InternalInconsistency("pulled-back generator lengths disagree with the closed form");

  auto embed = [&](const std::vector<int>& tuple) {
    int a = A->zero();
    for (int j = 0; j < s; ++j) a = A->add(a, phis[size_t(j)][size_t(tuple[size_t(j)])]);
    return a;
  };
  auto act_right = [&](const std::vector<int>& tuple, const FqMatrix& v) {
    std::vector<int> u(size_t(s), T_mod->zero());
    for (int c = 0; c < s; ++c)
      for (int a = 0; a < s; ++a)
        u[size_t(c)] =
            T_mod->add(u[size_t(c)], E.elems[v.at(a, c)].values[size_t(tuple[size_t(a)])]);
    return u;
  };
  auto codeword = [&](const std::vector<int>& tuple, const std::vector<FqMatrix>& v) {
    std::vector<int> w;
    w.reserve(v.size());
    for (const auto& g : v) w.push_back(embed(act_right(tuple, g)));
    return w;
  };
  std::vector<std::vector<int>> gens_plus, gens_minus;
  std::vector<int> tuple(size_t(s), 0);
  while (true) {
    gens_plus.push_back(codeword(tuple, v_plus));
    gens_minus.push_back(codeword(tuple, v_minus));
    size_t t = tuple.size();
    while (t > 0 && tuple[t - 1] + 1 == T_mod->size()) tuple[--t] = 0;
    if (t == 0) break;
    ++tuple[t - 1];
  }
  int n = int(v_plus.size());
  rep.c_plus = std::make_shared<LinearCode>(A, n, gens_plus);
  rep.c_minus = std::make_shared<LinearCode>(A, n, gens_minus);
  rep.iso = isomorphism_from_generators(*rep.c_plus, *rep.c_minus, gens_minus);

  auto auts = aut_group(A);
  rep.hamming_preserved = preserves_weight(*rep.iso, WeightKind::hamming, auts);
  rep.swc_preserved = preserves_weight(*rep.iso, WeightKind::swc, auts);
  if (!rep.swc_preserved)
    throw InternalInconsistency("pulled-back pair fails swc preservation");
  if (verify_extension) {
    rep.extension = find_extension(*rep.iso, WeightKind::swc, auts);
    rep.ep_holds = rep.extension->transform.has_value();
    if (rep.ep_holds)
      throw InternalInconsistency("pulled-back pair unexpectedly extends");
  }
  return rep;
}

}  // namespace ringcode
