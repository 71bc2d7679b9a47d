#pragma once

// Finite unital rings as values.  Elements are indices 0..order-1 into
// addition/multiplication tables; structured builders (zmod, gf, mat, prod)
// materialize their tables so every backend presents the same interface.
// Units, radical, ideals and socle are computed lazily and cached.

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "common.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace ringcode {

class FiniteRing {
 public:
  using Ptr = std::shared_ptr<const FiniteRing>;

  // spec: zmod:n | gf:p^m | mat:q:n | prod:spec;spec[;spec...] | ex:f2xy
  //     | table:<json path>  (the table form is parsed by json_io.hpp)
  static Ptr build(const std::string& spec);

  static Ptr from_tables(int order, std::vector<int> add, std::vector<int> mul, int one,
                         std::string spec, std::vector<std::string> names = {}) {
    if (std::uint64_t(order) > caps().ring_order)
      throw OrderCapExceeded("ring order " + std::to_string(order) + " > cap " +
                             std::to_string(caps().ring_order));
    auto R = Ptr(new FiniteRing(order, std::move(add), std::move(mul), one, std::move(spec),
                                std::move(names)));
    R->verify_axioms();
    return R;
  }

  int order() const { return n_; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  int add(int a, int b) const { return add_[size_t(a) * n_ + b]; }
  int mul(int a, int b) const { return mul_[size_t(a) * n_ + b]; }
  int neg(int a) const { return neg_[size_t(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  const std::string& spec() const { return spec_; }

  std::string element_name(int a) const {
    if (a >= 0 && size_t(a) < names_.size()) return names_[size_t(a)];
    return std::to_string(a);
  }

  bool is_unit(int a) const {
    units();
    return unit_inverse_[size_t(a)] >= 0;
  }
  // two-sided inverse of a unit
  int inverse(int u) const {
    units();
    int v = unit_inverse_[size_t(u)];
    if (v < 0) throw DivisionByZero("element " + element_name(u) + " is not a unit");
    return v;
  }

  const std::vector<int>& units() const {
    std::scoped_lock lk(cache_mutex_);
    if (!units_) {
      unit_inverse_.assign(size_t(n_), -1);
      std::vector<int> us;
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          if (mul(a, b) == one_ && mul(b, a) == one_) {
            us.push_back(a);
            unit_inverse_[size_t(a)] = b;
            break;
          }
      units_ = std::move(us);
    }
    return *units_;
  }

  // Jacobson radical: {y : 1 - xy is a unit for all x}.  Left invertibility
  // coincides with invertibility here because the ring is finite.
  const std::vector<int>& radical() const {
    std::scoped_lock lk(cache_mutex_);
    if (!radical_) {
      units();  // fills unit_inverse_
      std::vector<int> rad;
      for (int y = 0; y < n_; ++y) {
        bool in = true;
        for (int x = 0; x < n_ && in; ++x)
          if (unit_inverse_[size_t(sub(one_, mul(x, y)))] < 0) in = false;
        if (in) rad.push_back(y);
      }
      radical_ = std::move(rad);
    }
    return *radical_;
  }

  std::vector<int> cyclic_left_ideal(int r) const {
    std::vector<char> mask(size_t(n_), 0);
    for (int x = 0; x < n_; ++x) mask[size_t(mul(x, r))] = 1;
    return mask_to_set(mask);
  }
  std::vector<int> cyclic_right_ideal(int r) const {
    std::vector<char> mask(size_t(n_), 0);
    for (int x = 0; x < n_; ++x) mask[size_t(mul(r, x))] = 1;
    return mask_to_set(mask);
  }

  // All left ideals, via join-closure of the cyclic left ideals under
  // subset sum; every left ideal is a finite sum of cyclic ones.
  const std::vector<std::vector<int>>& left_ideals() const {
    std::scoped_lock lk(cache_mutex_);
    if (!left_ideals_) left_ideals_ = ideal_closure(/*left=*/true);
    return *left_ideals_;
  }
  const std::vector<std::vector<int>>& right_ideals() const {
    std::scoped_lock lk(cache_mutex_);
    if (!right_ideals_) right_ideals_ = ideal_closure(/*left=*/false);
    return *right_ideals_;
  }

  // {r : S·r = {0}}
  std::vector<int> ann_r(const std::vector<int>& S) const {
    std::vector<int> out;
    for (int r = 0; r < n_; ++r) {
      bool ok = true;
      for (int s : S)
        if (mul(s, r) != zero_) {
          ok = false;
          break;
        }
      if (ok) out.push_back(r);
    }
    return out;
  }
  // {r : r·S = {0}}
  std::vector<int> ann_l(const std::vector<int>& S) const {
    std::vector<int> out;
    for (int r = 0; r < n_; ++r) {
      bool ok = true;
      for (int s : S)
        if (mul(r, s) != zero_) {
          ok = false;
          break;
        }
      if (ok) out.push_back(r);
    }
    return out;
  }

  // soc(_RR) = {m : rad·m = 0}; valid because finite rings are artinian.
  const std::vector<int>& socle_left() const {
    std::scoped_lock lk(cache_mutex_);
    if (!socle_left_) {
      const auto& rad = radical();  // recursive lock
      std::vector<int> soc;
      for (int m = 0; m < n_; ++m) {
        bool ok = true;
        for (int r : rad)
          if (mul(r, m) != zero_) {
            ok = false;
            break;
          }
        if (ok) soc.push_back(m);
      }
      socle_left_ = std::move(soc);
    }
    return *socle_left_;
  }

  bool is_left_principal() const {
    for (const auto& I : left_ideals()) {
      bool cyclic = false;
      for (int r : I)
        if (cyclic_left_ideal(r) == I) {
          cyclic = true;
          break;
        }
      if (!cyclic) return false;
    }
    return true;
  }

  // additive order of an element
  int additive_order(int a) const {
    int x = a, ord = 1;
    while (x != zero_) {
      x = add(x, a);
      ++ord;
    }
    return ord;
  }
  // exponent of the additive group
  int additive_exponent() const {
    long e = 1;
    for (int a = 0; a < n_; ++a) e = std::lcm(e, long(additive_order(a)));
    return int(e);
  }

 private:
  FiniteRing(int n, std::vector<int> add, std::vector<int> mul, int one, std::string spec,
             std::vector<std::string> names)
      : n_(n), add_(std::move(add)), mul_(std::move(mul)), one_(one), spec_(std::move(spec)),
        names_(std::move(names)) {
    if (add_.size() != size_t(n_) * n_ || mul_.size() != size_t(n_) * n_)
      throw AxiomViolation("operation tables must be order x order");
    // locate the additive identity
    zero_ = -1;
    for (int z = 0; z < n_; ++z) {
      bool ok = true;
      for (int a = 0; a < n_ && ok; ++a)
        if (add_[size_t(a) * n_ + z] != a) ok = false;
      if (ok) {
        zero_ = z;
        break;
      }
    }
    if (zero_ < 0) throw AxiomViolation("no additive identity");
    neg_.assign(size_t(n_), -1);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (add_[size_t(a) * n_ + b] == zero_) {
          neg_[size_t(a)] = b;
          break;
        }
    for (int a = 0; a < n_; ++a)
      if (neg_[size_t(a)] < 0) throw AxiomViolation("missing additive inverse");
  }

  void verify_axioms() const {
    for (int a = 0; a < n_; ++a) {
      if (mul(a, one_) != a || mul(one_, a) != a)
        throw AxiomViolation("identity fails at " + element_name(a));
      for (int b = 0; b < n_; ++b) {
        if (add(a, b) != add(b, a)) throw AxiomViolation("addition not commutative");
        for (int c = 0; c < n_; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c)))
            throw AxiomViolation("addition not associative");
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw AxiomViolation("multiplication not associative");
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            throw AxiomViolation("left distributivity fails");
          if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
            throw AxiomViolation("right distributivity fails");
        }
      }
    }
  }

  std::vector<int> mask_to_set(const std::vector<char>& mask) const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (mask[size_t(i)]) out.push_back(i);
    return out;
  }

  std::vector<std::vector<int>> ideal_closure(bool left) const {
    if (std::uint64_t(n_) > caps().ideal_enum)
      throw OrderCapExceeded("ideal enumeration for order " + std::to_string(n_) + " > cap " +
                             std::to_string(caps().ideal_enum));
    std::set<std::vector<int>> ideals;
    for (int r = 0; r < n_; ++r)
      ideals.insert(left ? cyclic_left_ideal(r) : cyclic_right_ideal(r));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<int>> snapshot(ideals.begin(), ideals.end());
      for (const auto& I : snapshot)
        for (const auto& J : snapshot) {
          std::vector<char> mask(size_t(n_), 0);
          for (int a : I)
            for (int b : J) mask[size_t(add(a, b))] = 1;
          auto sum = mask_to_set(mask);
          if (ideals.insert(std::move(sum)).second) grew = true;
        }
    }
    return {ideals.begin(), ideals.end()};
  }

  int n_;
  std::vector<int> add_, mul_, neg_;
  int zero_ = 0, one_;
  std::string spec_;
  std::vector<std::string> names_;

  mutable std::recursive_mutex cache_mutex_;
  mutable std::optional<std::vector<int>> units_, radical_, socle_left_;
  mutable std::vector<int> unit_inverse_;
  mutable std::optional<std::vector<std::vector<int>>> left_ideals_, right_ideals_;
};

namespace detail {

inline FiniteRing::Ptr build_zmod(long n) {
  if (n < 1) throw SpecParse("zmod modulus must be positive");
  std::vector<int> add(size_t(n) * n), mul(size_t(n) * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      add[size_t(a) * n + b] = int((a + b) % n);
      mul[size_t(a) * n + b] = int((a * b) % n);
    }
  return FiniteRing::from_tables(int(n), std::move(add), std::move(mul), n == 1 ? 0 : 1,
                                 "zmod:" + std::to_string(n));
}

inline FiniteRing::Ptr build_gf_ring(const Field& f) {
  long q = f.q();
  if (std::uint64_t(q) > caps().ring_order) throw OrderCapExceeded("field too large for ring table");
  std::vector<int> add(size_t(q) * q), mul(size_t(q) * q);
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b) {
      add[size_t(a) * q + b] = int(f.add(unsigned(a), unsigned(b)));
      mul[size_t(a) * q + b] = int(f.mul(unsigned(a), unsigned(b)));
    }
  return FiniteRing::from_tables(int(q), std::move(add), std::move(mul), 1, f.spec_string());
}

// M_n(F_q); a matrix with row-major entry encodings e_0..e_{n^2-1} is the
// index sum e_t q^t.
inline FiniteRing::Ptr build_mat(long q, int n, const std::string& spec) {
  long p = 2;
  while (q % p != 0 && p < q) ++p;
  int m = 0;
  long t = 1;
  while (t < q) t *= p, ++m;
  if (t != q) throw SpecParse("mat ring: q must be a prime power");
  Field f = Field::make(p, m);
  long order = 1;
  for (int i = 0; i < n * n; ++i) {
    order *= q;
    if (std::uint64_t(order) > caps().ring_order)
      throw OrderCapExceeded("matrix ring order exceeds cap");
  }
  auto decode = [&](long idx) {
    FqMatrix M(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        M.at(i, j) = unsigned(idx % q);
        idx /= q;
      }
    return M;
  };
  auto encode = [&](const FqMatrix& M) {
    long idx = 0, mult = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        idx += long(M.at(i, j)) * mult;
        mult *= q;
      }
    return idx;
  };
  std::vector<int> add(size_t(order) * order), mul_t(size_t(order) * order);
  std::vector<FqMatrix> mats;
  mats.reserve(size_t(order));
  for (long i = 0; i < order; ++i) mats.push_back(decode(i));
  for (long a = 0; a < order; ++a)
    for (long b = 0; b < order; ++b) {
      add[size_t(a) * order + b] = int(encode(mats[size_t(a)] + mats[size_t(b)]));
      mul_t[size_t(a) * order + b] = int(encode(mats[size_t(a)] * mats[size_t(b)]));
    }
  int one = int(encode(FqMatrix::identity(f, n)));
  return FiniteRing::from_tables(int(order), std::move(add), std::move(mul_t), one, spec);
}

inline FiniteRing::Ptr build_product(const std::vector<FiniteRing::Ptr>& parts,
                                     const std::string& spec) {
  long order = 1;
  for (const auto& R : parts) {
    order *= R->order();
    if (std::uint64_t(order) > caps().ring_order)
      throw OrderCapExceeded("product ring order exceeds cap");
  }
  // mixed-radix index, last factor fastest
  auto decode = [&](long idx) {
    std::vector<int> comp(parts.size());
    for (size_t i = parts.size(); i-- > 0;) {
      comp[i] = int(idx % parts[i]->order());
      idx /= parts[i]->order();
    }
    return comp;
  };
  auto encode = [&](const std::vector<int>& comp) {
    long idx = 0;
    for (size_t i = 0; i < parts.size(); ++i) idx = idx * parts[i]->order() + comp[i];
    return idx;
  };
  std::vector<int> add(size_t(order) * order), mul(size_t(order) * order);
  for (long a = 0; a < order; ++a) {
    auto ca = decode(a);
    for (long b = 0; b < order; ++b) {
      auto cb = decode(b);
      std::vector<int> s(parts.size()), p(parts.size());
      for (size_t i = 0; i < parts.size(); ++i) {
        s[i] = parts[i]->add(ca[i], cb[i]);
        p[i] = parts[i]->mul(ca[i], cb[i]);
      }
      add[size_t(a) * order + b] = int(encode(s));
      mul[size_t(a) * order + b] = int(encode(p));
    }
  }
  std::vector<int> ones(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) ones[i] = parts[i]->one();
  return FiniteRing::from_tables(int(order), std::move(add), std::move(mul), int(encode(ones)),
                                 spec);
}

// F_2[x,y]/(x,y)^2: basis {1,x,y}, index a + 2b + 4c for a + bx + cy.
inline FiniteRing::Ptr build_f2xy() {
  const int n = 8;
  auto bits = [](int v) { return std::array<int, 3>{v & 1, (v >> 1) & 1, (v >> 2) & 1}; };
  std::vector<int> add(64), mul(64);
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) {
    auto [a, b, c] = bits(v);
    std::string nm;
    if (a) nm = "1";
    if (b) nm += (nm.empty() ? "x" : "+x");
    if (c) nm += (nm.empty() ? "y" : "+y");
    if (nm.empty()) nm = "0";
    names.push_back(nm);
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      auto [a1, b1, c1] = bits(u);
      auto [a2, b2, c2] = bits(v);
      add[size_t(u) * n + v] = ((a1 ^ a2) | ((b1 ^ b2) << 1) | ((c1 ^ c2) << 2));
      // x^2 = y^2 = xy = 0
      int a = a1 & a2, b = (a1 & b2) ^ (b1 & a2), c = (a1 & c2) ^ (c1 & a2);
      mul[size_t(u) * n + v] = (a | (b << 1) | (c << 2));
    }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), 1, "ex:f2xy",
                                 std::move(names));
}

}  // namespace detail

// Table-ring JSON: {"order":8,"add":[[...]],"mul":[[...]],"one":1}.
inline FiniteRing::Ptr ring_from_table_json(const nlohmann::json& j, const std::string& spec) {
  if (!j.contains("order") || !j.contains("add") || !j.contains("mul") || !j.contains("one"))
    throw SpecParse("table ring JSON needs order, add, mul, one");
  int n = j.at("order").get<int>();
  auto read_table = [&](const char* key) {
    std::vector<int> t;
    const auto& rows = j.at(key);
    if (int(rows.size()) != n) throw SpecParse(std::string(key) + " table has wrong row count");
    for (const auto& row : rows) {
      if (int(row.size()) != n) throw SpecParse(std::string(key) + " table has a short row");
      for (const auto& v : row) {
        int x = v.get<int>();
        if (x < 0 || x >= n) throw SpecParse(std::string(key) + " entry out of range");
        t.push_back(x);
      }
    }
    return t;
  };
  return FiniteRing::from_tables(n, read_table("add"), read_table("mul"), j.at("one").get<int>(),
                                 spec);
}

inline FiniteRing::Ptr ring_from_table_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParse("cannot open table ring file: " + path);
  nlohmann::json j;
  in >> j;
  return ring_from_table_json(j, "table:" + path);
}

inline FiniteRing::Ptr FiniteRing::build(const std::string& spec) {
  auto starts = [&](const char* prefix) { return spec.rfind(prefix, 0) == 0; };
  try {
    if (starts("zmod:")) return detail::build_zmod(std::stol(spec.substr(5)));
    if (starts("gf:")) return detail::build_gf_ring(Field::parse(spec));
    if (starts("mat:")) {
      auto rest = spec.substr(4);
      auto pos = rest.find(':');
      if (pos == std::string::npos) throw SpecParse("mat spec needs q and n");
      long q = std::stol(rest.substr(0, pos));
      int n = std::stoi(rest.substr(pos + 1));
      if (n < 1) throw SpecParse("mat spec needs n >= 1");
      return detail::build_mat(q, n, spec);
    }
    if (starts("prod:")) {
      auto rest = spec.substr(5);
      std::vector<FiniteRing::Ptr> parts;
      size_t start = 0;
      while (start <= rest.size()) {
        auto pos = rest.find(';', start);
        std::string part =
            pos == std::string::npos ? rest.substr(start) : rest.substr(start, pos - start);
        if (part.rfind("prod:", 0) == 0)
          throw SpecParse("nested prod not supported; list all factors in one prod:");
        parts.push_back(build(part));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
      if (parts.size() < 2) throw SpecParse("prod needs at least two factors");
      return detail::build_product(parts, spec);
    }
    if (spec == "ex:f2xy") return detail::build_f2xy();
    if (starts("table:")) return ring_from_table_json_file(spec.substr(6));
  } catch (const std::invalid_argument&) {
    throw SpecParse("bad number in ring spec: " + spec);
  } catch (const std::out_of_range&) {
    throw SpecParse("number out of range in ring spec: " + spec);
  }
  throw SpecParse("unknown ring spec: " + spec);
}

}  // namespace ringcode
