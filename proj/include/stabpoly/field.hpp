/* Copyright 2026 The stabpoly Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

/**
 * @file field.hpp
 * @brief Finite fields F_p, F_{p^s} and one further tower step F_{q^k}.
 *
 * Every element is stored as a packed integer: for a field built over a base
 * of order B with modulus of degree m, the element c_0 + c_1 x + ... +
 * c_{m-1} x^{m-1} is encoded as sum c_i * B^i, where each c_i is itself the
 * encoding of a base element. Consequences used throughout the library:
 *
 *  - 0 and 1 encode as 0 and 1 in every field;
 *  - embedding a base element into an extension is the identity on the
 *    encoding, so a polynomial over F_q can be read over F_{q^k} unchanged;
 *  - the elements of a subfield in the tower are exactly the encodings
 *    below its order.
 *
 * Small fields (order up to kTableOrderLimit) use log/Zech tables; larger
 * ones fall back to schoolbook arithmetic on the unpacked digits.
 */

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabpoly/error.hpp"

namespace stabpoly {

using Elem = std::uint64_t;

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

inline constexpr unsigned kMaxExtensionDegree = 40;
inline constexpr std::uint64_t kTableOrderLimit = std::uint64_t{1} << 17;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 62;
inline constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 32;

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t i = 5; i * i <= n; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

class FieldCtx {
  struct PrivateTag {};

 public:
  enum class Arithmetic { Prime, Table, Schoolbook };

  FieldCtx(PrivateTag, std::uint64_t p) : p_(p), order_(p), base_order_(p) {}

  FieldCtx(PrivateTag, FieldRef base, std::vector<Elem> modulus)
      : p_(base->p_),
        degree_(static_cast<unsigned>(modulus.size() - 1)),
        abs_degree_(base->abs_degree_ * degree_),
        level_(base->level_ + 1),
        base_order_(base->order_),
        base_(std::move(base)),
        modulus_(std::move(modulus)),
        arith_(Arithmetic::Schoolbook) {
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < degree_; ++i) {
      q *= base_order_;
      if (q > kMaxFieldOrder) throw Error(ErrorKind::FieldTooLarge, "field order exceeds 2^62");
    }
    order_ = static_cast<std::uint64_t>(q);
    if (order_ <= kTableOrderLimit) build_tables();
  }

  /// Prime field F_p. No primality check here; see build_prime_field.
  static FieldRef make_prime(std::uint64_t p) { return std::make_shared<const FieldCtx>(PrivateTag{}, p); }

  /// Extension base[x]/(modulus). The modulus must be monic; irreducibility is
  /// the caller's responsibility (build_extension checks it).
  static FieldRef make_extension(FieldRef base, std::vector<Elem> modulus) {
    if (modulus.size() < 2 || modulus.back() != 1) {
      throw Error(ErrorKind::DegreeMismatch, "extension modulus must be monic of degree >= 1");
    }
    if (modulus.size() - 1 > kMaxExtensionDegree) {
      throw Error(ErrorKind::FieldTooLarge, "extension degree too large");
    }
    for (Elem c : modulus) {
      if (c >= base->order_) throw Error(ErrorKind::ContextMismatch, "modulus coefficient outside base field");
    }
    return std::make_shared<const FieldCtx>(PrivateTag{}, std::move(base), std::move(modulus));
  }

  std::uint64_t characteristic() const noexcept { return p_; }
  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t base_order() const noexcept { return base_order_; }
  /// Degree over the immediate base (1 for prime fields).
  unsigned degree() const noexcept { return degree_; }
  /// Degree over the prime field.
  unsigned absolute_degree() const noexcept { return abs_degree_; }
  /// 0 for F_p, 1 for F_{p^s}, 2 for F_{q^k}.
  unsigned level() const noexcept { return level_; }
  bool is_prime_field() const noexcept { return level_ == 0; }
  const FieldRef& base() const noexcept { return base_; }
  /// Monic modulus over the base, low-to-high; empty for prime fields.
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }
  Arithmetic arithmetic() const noexcept { return arith_; }

  bool contains(Elem a) const noexcept { return a < order_; }

  Elem from_int(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    switch (arith_) {
      case Arithmetic::Prime: {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
      }
      case Arithmetic::Table: return table_add(a, b);
      case Arithmetic::Schoolbook: break;
    }
    return school_add(a, b);
  }

  Elem neg(Elem a) const {
    if (a == 0) return 0;
    switch (arith_) {
      case Arithmetic::Prime: return p_ - a;
      case Arithmetic::Table: return exp_[log_[a] + (order_ - 1) / 2];
      case Arithmetic::Schoolbook: break;
    }
    auto d = unpack(a);
    for (unsigned i = 0; i < degree_; ++i) d[i] = base_->neg(d[i]);
    return pack(d);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    switch (arith_) {
      case Arithmetic::Prime: return a * b % p_;
      case Arithmetic::Table: return (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
      case Arithmetic::Schoolbook: break;
    }
    return school_mul(a, b);
  }

  Elem sqr(Elem a) const { return mul(a, a); }

  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    switch (arith_) {
      case Arithmetic::Prime: return prime_inv(a);
      case Arithmetic::Table: return exp_[(order_ - 1) - log_[a]];
      case Arithmetic::Schoolbook: break;
    }
    return school_pow(a, order_ - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (arith_ == Arithmetic::Table) {
      return exp_[detail::mul_mod(log_[a], e % (order_ - 1), order_ - 1)];
    }
    return school_pow(a, e);
  }

  /// Integer exponent of either sign; negative powers need a != 0.
  Elem pow_signed(Elem a, std::int64_t e) const {
    if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    // |e| mod (q-1) avoids overflow on INT64_MIN.
    const std::uint64_t m = order_ - 1;
    const std::uint64_t mag = static_cast<std::uint64_t>(-(e + 1)) + 1;
    return pow(inv(a), mag % m);
  }

  /// Quadratic character: +1 nonzero square, -1 nonsquare, 0 for zero.
  int quadratic_character(Elem a) const {
    if (a == 0) return 0;
    if (arith_ == Arithmetic::Table) return (log_[a] % 2 == 0) ? 1 : -1;
    return pow(a, (order_ - 1) / 2) == 1 ? 1 : -1;
  }

  /// A square root of a, or nullopt for nonsquares. Of the two roots the one
  /// with the smaller encoding is returned.
  std::optional<Elem> sqrt(Elem a) const {
    if (a == 0) return Elem{0};
    if (quadratic_character(a) != 1) return std::nullopt;
    Elem r = 0;
    if (arith_ == Arithmetic::Table) {
      r = exp_[log_[a] / 2];
    } else {
      r = tonelli_shanks(a);
    }
    Elem s = neg(r);
    return s < r ? s : r;
  }

  Elem frobenius(Elem a) const { return pow(a, p_); }

  /// Base-field coefficients of a, low-to-high, always degree() entries.
  std::vector<Elem> digits(Elem a) const {
    std::vector<Elem> out(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
      out[i] = a % base_order_;
      a /= base_order_;
    }
    return out;
  }

  Elem from_digits(std::span<const Elem> d) const {
    if (d.size() > degree_) throw Error(ErrorKind::DegreeMismatch, "too many coefficients for field element");
    Elem v = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (d[i] >= base_order_) throw Error(ErrorKind::ContextMismatch, "coefficient outside base field");
      v = v * base_order_ + d[i];
    }
    return v;
  }

 private:
  using Digits = std::array<Elem, kMaxExtensionDegree>;
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  std::uint64_t p_;
  unsigned degree_ = 1;
  unsigned abs_degree_ = 1;
  unsigned level_ = 0;
  std::uint64_t order_;
  std::uint64_t base_order_;
  FieldRef base_;
  std::vector<Elem> modulus_;
  Arithmetic arith_ = Arithmetic::Prime;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;

  Elem prime_inv(Elem a) const {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      const std::int64_t qt = r / nr;
      t = std::exchange(nt, t - qt * nt);
      r = std::exchange(nr, r - qt * nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }

  Digits unpack(Elem a) const {
    Digits d{};
    for (unsigned i = 0; i < degree_; ++i) {
      d[i] = a % base_order_;
      a /= base_order_;
    }
    return d;
  }

  Elem pack(const Digits& d) const {
    Elem v = 0;
    for (unsigned i = degree_; i-- > 0;) v = v * base_order_ + d[i];
    return v;
  }

  Elem school_add(Elem a, Elem b) const {
    auto da = unpack(a);
    auto db = unpack(b);
    for (unsigned i = 0; i < degree_; ++i) da[i] = base_->add(da[i], db[i]);
    return pack(da);
  }

  Elem school_mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    const auto da = unpack(a);
    const auto db = unpack(b);
    const FieldCtx& B = *base_;
    std::array<Elem, 2 * kMaxExtensionDegree> prod{};
    for (unsigned i = 0; i < degree_; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < degree_; ++j) {
        if (db[j] == 0) continue;
        prod[i + j] = B.add(prod[i + j], B.mul(da[i], db[j]));
      }
    }
    for (unsigned i = 2 * degree_ - 1; i-- > degree_;) {
      const Elem c = prod[i];
      if (c == 0) continue;
      const unsigned shift = i - degree_;
      for (unsigned j = 0; j < degree_; ++j) {
        if (modulus_[j] != 0) prod[shift + j] = B.sub(prod[shift + j], B.mul(c, modulus_[j]));
      }
    }
    Digits out{};
    for (unsigned i = 0; i < degree_; ++i) out[i] = prod[i];
    return pack(out);
  }

  Elem school_pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Elem table_add(Elem a, Elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint64_t n = order_ - 1;
    const std::uint64_t la = log_[a];
    const std::uint64_t lb = log_[b];
    const std::uint64_t d = lb >= la ? lb - la : lb + n - la;
    const std::uint32_t z = zech_[d];
    if (z == kNoLog) return 0;
    return exp_[la + z];
  }

  Elem tonelli_shanks(Elem a) const {
    std::uint64_t q = order_ - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Elem z = 2;
    while (quadratic_character(z) != -1) ++z;
    unsigned m = s;
    Elem c = pow(z, q);
    Elem t = pow(a, q);
    Elem r = pow(a, (q + 1) / 2);
    while (t != 1) {
      unsigned i = 0;
      Elem tt = t;
      while (tt != 1) {
        tt = mul(tt, tt);
        ++i;
      }
      Elem b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    return r;
  }

  void build_tables() {
    const std::uint64_t n = order_ - 1;
    const auto primes = detail::distinct_prime_factors(n);
    Elem g = 2;
    for (;; ++g) {
      bool primitive = true;
      for (auto l : primes) {
        if (school_pow(g, n / l) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
    exp_.assign(2 * n, 0);
    log_.assign(order_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = school_mul(x, g);
    }
    for (std::uint64_t i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
    zech_.assign(n, kNoLog);
    for (std::uint64_t e = 0; e < n; ++e) {
      const Elem s = school_add(1, exp_[e]);
      if (s != 0) zech_[e] = log_[s];
    }
    arith_ = Arithmetic::Table;
  }
};

/// Structural equality: same characteristic, same tower, same moduli.
inline bool same_field(const FieldCtx& a, const FieldCtx& b) {
  if (&a == &b) return true;
  if (a.characteristic() != b.characteristic() || a.level() != b.level() || a.degree() != b.degree()) {
    return false;
  }
  if (a.is_prime_field()) return true;
  return same_field(*a.base(), *b.base()) && a.modulus() == b.modulus();
}

/// True iff `sub` appears in the tower chain of `ext` (including ext itself).
inline bool in_tower(const FieldCtx& sub, const FieldCtx& ext) {
  for (const FieldCtx* cur = &ext; cur != nullptr; cur = cur->base().get()) {
    if (same_field(sub, *cur)) return true;
  }
  return false;
}

/// The prime field at the bottom of ctx's tower.
inline FieldRef prime_subfield(const FieldRef& ctx) {
  FieldRef cur = ctx;
  while (!cur->is_prime_field()) cur = cur->base();
  return cur;
}

class FieldElement {
 public:
  FieldElement() = default;

  FieldElement(FieldRef field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_->contains(value_)) throw Error(ErrorKind::ContextMismatch, "value outside field");
  }

  static FieldElement from_int(FieldRef field, std::int64_t v) {
    const Elem e = field->from_int(v);
    return {std::move(field), e};
  }

  const FieldRef& field() const noexcept { return field_; }
  const FieldCtx& ctx() const noexcept { return *field_; }
  Elem raw() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inv() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::int64_t e) const { return {field_, field_->pow_signed(value_, e)}; }
  int quadratic_character() const { return field_->quadratic_character(value_); }

  FieldElement& operator+=(const FieldElement& o) {
    check(o);
    value_ = field_->add(value_, o.value_);
    return *this;
  }
  FieldElement& operator-=(const FieldElement& o) {
    check(o);
    value_ = field_->sub(value_, o.value_);
    return *this;
  }
  FieldElement& operator*=(const FieldElement& o) {
    check(o);
    value_ = field_->mul(value_, o.value_);
    return *this;
  }
  FieldElement& operator/=(const FieldElement& o) {
    check(o);
    value_ = field_->div(value_, o.value_);
    return *this;
  }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.field_ || !b.field_) return a.field_ == b.field_ && a.value_ == b.value_;
    return a.value_ == b.value_ && same_field(*a.field_, *b.field_);
  }

 private:
  void check(const FieldElement& o) const {
    if (!field_ || !o.field_ || !same_field(*field_, *o.field_)) {
      throw Error(ErrorKind::ContextMismatch, "operands live in different fields");
    }
  }

  FieldRef field_;
  Elem value_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv, Pow };

/// Single entry point for element arithmetic (used by the CLI `field` command).
/// `b` is the second operand for binary ops; `exponent` is used by Pow.
inline FieldElement elem_arith(const FieldRef& ctx, ArithOp op, const FieldElement& a,
                               const std::optional<FieldElement>& b = std::nullopt, std::int64_t exponent = 0) {
  if (!same_field(*ctx, a.ctx())) throw Error(ErrorKind::ContextMismatch, "operand not in context");
  auto need_b = [&]() -> const FieldElement& {
    if (!b) throw Error(ErrorKind::PreconditionViolated, "binary operation needs a second operand");
    return *b;
  };
  switch (op) {
    case ArithOp::Add: return a + need_b();
    case ArithOp::Sub: return a - need_b();
    case ArithOp::Mul: return a * need_b();
    case ArithOp::Div: return a / need_b();
    case ArithOp::Neg: return -a;
    case ArithOp::Inv: return a.inv();
    case ArithOp::Pow: return a.pow(exponent);
  }
  return a;
}

inline int quadratic_character(const FieldElement& a) { return a.quadratic_character(); }

namespace detail {

inline unsigned tower_degree_or_throw(const FieldCtx& ext, const FieldCtx& base) {
  if (!in_tower(base, ext)) throw Error(ErrorKind::NotASubfield, "field is not a subfield in the tower");
  return ext.absolute_degree() / base.absolute_degree();
}

}  // namespace detail

/// Tr_{ext|base}(a) = a + a^Q + ... + a^{Q^{m-1}}, Q = |base|, m = [ext:base].
inline FieldElement trace_to_subfield(const FieldElement& a, const FieldRef& base) {
  const FieldCtx& ext = a.ctx();
  const unsigned m = detail::tower_degree_or_throw(ext, *base);
  Elem acc = 0;
  Elem x = a.raw();
  for (unsigned i = 0; i < m; ++i) {
    acc = ext.add(acc, x);
    x = ext.pow(x, base->order());
  }
  return {base, acc};
}

/// Nm_{ext|base}(a) = a * a^Q * ... * a^{Q^{m-1}}.
inline FieldElement norm_to_subfield(const FieldElement& a, const FieldRef& base) {
  const FieldCtx& ext = a.ctx();
  const unsigned m = detail::tower_degree_or_throw(ext, *base);
  Elem acc = 1;
  Elem x = a.raw();
  for (unsigned i = 0; i < m; ++i) {
    acc = ext.mul(acc, x);
    x = ext.pow(x, base->order());
  }
  return {base, acc};
}

/// Canonical image of a subfield element in ext.
inline FieldElement embed(const FieldElement& a, const FieldRef& ext) {
  detail::tower_degree_or_throw(*ext, a.ctx());
  return {ext, a.raw()};
}

}  // namespace stabpoly
