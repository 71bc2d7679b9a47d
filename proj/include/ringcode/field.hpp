#pragma once

// Finite fields GF(p^m) with integer-encoded elements.
//
// An element sum c_j alpha^j (power basis, 0 <= c_j < p) is encoded as the
// integer sum c_j p^j, so 0 encodes zero and 1 encodes one.  Arithmetic is
// table-driven for q <= 4096 and falls back to polynomial arithmetic above.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace ringcode {

namespace detail {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, low degree first.
using Poly = std::vector<int>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = int((c[i + j] + long(a[i]) * b[j]) % p);
  poly_trim(c);
  return c;
}

// Remainder of a by monic b.
inline Poly poly_mod(Poly a, const Poly& b, long p) {
  poly_trim(a);
  while (a.size() >= b.size()) {
    long lead = a.back() % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      long v = (a[shift + i] - lead * b[i]) % p;
      a[shift + i] = int((v + p) % p);
    }
    poly_trim(a);
  }
  return a;
}

inline bool poly_is_zero(const Poly& a) { return a.empty(); }

// Irreducibility over GF(p) by trial division against every monic divisor
// candidate of degree at most deg/2.
inline bool poly_irreducible(const Poly& f, long p) {
  int deg = int(f.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    // candidates: monic degree-d polynomials, low coefficients counted in base p
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long t = 0; t < count; ++t) {
      Poly g(d + 1, 0);
      long tt = t;
      for (int i = 0; i < d; ++i) {
        g[i] = int(tt % p);
        tt /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace detail

class Field {
 public:
  // Prime field or extension field with the given (or default) modulus.
  static Field make(long p, int m, std::optional<std::vector<int>> modulus = std::nullopt) {
    if (!detail::is_prime(p)) throw NonPrime("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw DegreeMismatch("extension degree must be >= 1");
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = 1;
    for (int i = 0; i < m; ++i) {
      impl->q *= p;
      if (impl->q > (1L << 31)) throw OrderCapExceeded("field order exceeds 2^31");
    }
    if (m == 1) {
      if (modulus && (modulus->size() != 2 || (*modulus)[1] != 1))
        throw DegreeMismatch("modulus degree must equal m");
    } else if (modulus) {
      if (int(modulus->size()) != m + 1)
        throw DegreeMismatch("modulus must have m+1 coefficients");
      impl->modulus.assign(modulus->begin(), modulus->end());
      for (int& c : impl->modulus) c = int(((c % p) + p) % p);
      if (impl->modulus.back() != 1) throw DegreeMismatch("modulus must be monic");
      if (!detail::poly_irreducible(impl->modulus, p))
        throw ReducibleModulus("modulus is reducible over GF(" + std::to_string(p) + ")");
    } else {
      impl->modulus = default_modulus(p, m);
    }
    if (impl->q <= 4096) impl->build_tables();
    return Field(std::move(impl));
  }

  // Field structure given by explicit operation tables (encodings 0..q-1 with
  // zero at 0 and one at 1).  Used to treat an endomorphism ring of a simple
  // module as a scalar field.  Axioms are checked exhaustively.
  static Field from_tables(std::vector<unsigned> add, std::vector<unsigned> mul) {
    auto impl = std::make_shared<Impl>();
    long q = 0;
    while (long(q) * q < long(add.size())) ++q;
    if (long(q) * q != long(add.size()) || mul.size() != add.size() || q < 2)
      throw SpecParse("table field: tables must be square and equal-sized");
    impl->q = q;
    impl->custom = true;
    impl->add_t = std::move(add);
    impl->mul_t = std::move(mul);
    // characteristic and degree from the additive order of 1
    long p = 1;
    unsigned x = 1;
    while (x != 0) {
      x = impl->add_t[size_t(x) * q + 1];
      ++p;
      if (p > q + 1) throw AxiomViolation("table field: 1 has no finite additive order");
    }
    impl->p = p;
    impl->m = 0;
    long t = 1;
    while (t < q) {
      t *= p;
      ++impl->m;
    }
    if (t != q) throw AxiomViolation("table field: order is not a prime power of char");
    impl->build_inverse_table();
    impl->verify_axioms();
    return Field(std::move(impl));
  }

  // `gf:p` or `gf:p^m[:c0,c1,...,cm]`.
  static Field parse(std::string_view spec) {
    std::string s(spec);
    if (s.rfind("gf:", 0) != 0) throw SpecParse("field spec must start with gf: (got " + s + ")");
    s = s.substr(3);
    std::string head = s, tail;
    if (auto pos = s.find(':'); pos != std::string::npos) {
      head = s.substr(0, pos);
      tail = s.substr(pos + 1);
    }
    long p = 0;
    int m = 1;
    try {
      if (auto caret = head.find('^'); caret != std::string::npos) {
        p = std::stol(head.substr(0, caret));
        m = std::stoi(head.substr(caret + 1));
      } else {
        p = std::stol(head);
      }
    } catch (const std::exception&) {
      throw SpecParse("bad field spec: gf:" + s);
    }
    std::optional<std::vector<int>> modulus;
    if (!tail.empty()) {
      std::vector<int> coeffs;
      std::stringstream ss(tail);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          coeffs.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw SpecParse("bad modulus coefficient: " + item);
        }
      }
      modulus = std::move(coeffs);
    }
    return make(p, m, modulus);
  }

  long p() const { return impl_->p; }
  int m() const { return impl_->m; }
  long q() const { return impl_->q; }
  const std::vector<int>& modulus() const { return impl_->modulus; }
  bool is_table_backed() const { return impl_->custom; }

  std::string spec_string() const {
    if (impl_->custom) return "table";
    std::string s = "gf:" + std::to_string(impl_->p);
    if (impl_->m > 1) {
      s += "^" + std::to_string(impl_->m);
      s += ":";
      for (size_t i = 0; i < impl_->modulus.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(impl_->modulus[i]);
      }
    }
    return s;
  }

  unsigned add(unsigned a, unsigned b) const {
    check(a), check(b);
    if (!impl_->add_t.empty()) return impl_->add_t[size_t(a) * impl_->q + b];
    return impl_->poly_add(a, b);
  }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned neg(unsigned a) const {
    check(a);
    if (!impl_->add_t.empty()) {
      // table path caches negatives lazily per element via scan; small q
      for (unsigned b = 0; b < impl_->q; ++b)
        if (impl_->add_t[size_t(a) * impl_->q + b] == 0) return b;
      throw InternalInconsistency("no additive inverse");
    }
    return impl_->poly_neg(a);
  }
  unsigned mul(unsigned a, unsigned b) const {
    check(a), check(b);
    if (!impl_->mul_t.empty()) return impl_->mul_t[size_t(a) * impl_->q + b];
    return impl_->poly_mul_enc(a, b);
  }
  unsigned inv(unsigned a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    check(a);
    if (!impl_->inv_t.empty()) return impl_->inv_t[a];
    // Lagrange: a^(q-2)
    return pow(a, impl_->q - 2);
  }
  unsigned pow(unsigned a, long e) const {
    check(a);
    if (e < 0) return pow(inv(a), -e);
    unsigned r = 1, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Field& o) const {
    if (impl_ == o.impl_) return true;
    if (impl_->custom || o.impl_->custom) return false;
    return impl_->p == o.impl_->p && impl_->m == o.impl_->m && impl_->modulus == o.impl_->modulus;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  struct Impl {
    long p = 0;
    int m = 0;
    long q = 0;
    bool custom = false;
    std::vector<int> modulus;  // low degree first, monic; empty for m == 1
    std::vector<unsigned> add_t, mul_t, inv_t;

    unsigned poly_add(unsigned a, unsigned b) const {
      unsigned r = 0, mult = 1;
      for (int i = 0; i < m; ++i) {
        r += unsigned((a % p + b % p) % p) * mult;
        a /= unsigned(p), b /= unsigned(p);
        mult *= unsigned(p);
      }
      return r;
    }
    unsigned poly_neg(unsigned a) const {
      unsigned r = 0, mult = 1;
      for (int i = 0; i < m; ++i) {
        r += unsigned((p - a % p) % p) * mult;
        a /= unsigned(p);
        mult *= unsigned(p);
      }
      return r;
    }
    unsigned poly_mul_enc(unsigned a, unsigned b) const {
      detail::Poly pa = decode(a), pb = decode(b);
      detail::Poly prod = detail::poly_mul(pa, pb, p);
      if (m > 1) prod = detail::poly_mod(prod, modulus, p);
      return encode(prod);
    }
    detail::Poly decode(unsigned a) const {
      detail::Poly v;
      while (a) {
        v.push_back(int(a % p));
        a /= unsigned(p);
      }
      return v;
    }
    unsigned encode(const detail::Poly& v) const {
      unsigned r = 0, mult = 1;
      for (int c : v) {
        r += unsigned(c) * mult;
        mult *= unsigned(p);
      }
      return r;
    }

    void build_tables() {
      add_t.resize(size_t(q) * q);
      mul_t.resize(size_t(q) * q);
      for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) {
          add_t[size_t(a) * q + b] = poly_add(a, b);
          mul_t[size_t(a) * q + b] = poly_mul_enc(a, b);
        }
      build_inverse_table();
    }
    void build_inverse_table() {
      inv_t.assign(size_t(q), 0);
      for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
          if (mul_t[size_t(a) * q + b] == 1) {
            inv_t[a] = b;
            break;
          }
      for (unsigned a = 1; a < q; ++a)
        if (inv_t[a] == 0 && !(a == 1 && mul_t[size_t(1) * q + 1] == 1))
          if (mul_t[size_t(a) * q + inv_t[a]] != 1)
            throw AxiomViolation("element " + std::to_string(a) + " has no inverse");
    }
    void verify_axioms() const {
      auto A = [&](unsigned a, unsigned b) { return add_t[size_t(a) * q + b]; };
      auto M = [&](unsigned a, unsigned b) { return mul_t[size_t(a) * q + b]; };
      for (unsigned a = 0; a < q; ++a) {
        if (A(a, 0) != a) throw AxiomViolation("additive identity");
        if (M(a, 1) != a || M(1, a) != a) throw AxiomViolation("multiplicative identity");
        if (M(a, 0) != 0 || M(0, a) != 0) throw AxiomViolation("zero absorbs");
        for (unsigned b = 0; b < q; ++b) {
          if (A(a, b) != A(b, a)) throw AxiomViolation("addition commutes");
          if (M(a, b) != M(b, a)) throw AxiomViolation("multiplication commutes");
          for (unsigned c = 0; c < q; ++c) {
            if (A(A(a, b), c) != A(a, A(b, c))) throw AxiomViolation("addition associates");
            if (M(M(a, b), c) != M(a, M(b, c))) throw AxiomViolation("multiplication associates");
            if (M(a, A(b, c)) != A(M(a, b), M(a, c))) throw AxiomViolation("distributivity");
          }
        }
      }
    }
  };

  explicit Field(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

  void check(unsigned a) const {
    if (a >= unsigned(impl_->q)) throw FieldMismatch("encoding out of range");
  }

  // Least monic irreducible of degree m, ordered by the integer encoding of
  // the non-leading coefficients.
  static std::vector<int> default_modulus(long p, int m) {
    long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long t = 0; t < count; ++t) {
      detail::Poly f(size_t(m) + 1, 0);
      long tt = t;
      for (int i = 0; i < m; ++i) {
        f[i] = int(tt % p);
        tt /= p;
      }
      f[m] = 1;
      if (detail::poly_irreducible(f, p)) return f;
    }
    throw InternalInconsistency("no irreducible polynomial found");
  }

  std::shared_ptr<const Impl> impl_;
};

}  // namespace ringcode
