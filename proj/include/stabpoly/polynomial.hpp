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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabpoly/field.hpp"

namespace stabpoly {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Largest degree compose() will materialize.
inline constexpr std::size_t kDefaultDegreeCap = 4096;

/// Dense univariate polynomial; coefficient i multiplies X^i. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(FieldRef field) : field_(std::move(field)) {}
  Polynomial(FieldRef field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Elem e : c_) {
      if (!field_->contains(e)) throw Error(ErrorKind::ContextMismatch, "coefficient outside field");
    }
    trim();
  }

  /// Coefficients given as integers reduced mod p (prime-subfield constants).
  static Polynomial from_ints(FieldRef field, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(field->from_int(v));
    return {std::move(field), std::move(c)};
  }
  static Polynomial constant(FieldRef field, Elem c) { return {std::move(field), std::vector<Elem>{c}}; }
  static Polynomial x(FieldRef field) { return {std::move(field), std::vector<Elem>{0, 1}}; }
  static Polynomial monomial(FieldRef field, Elem c, std::size_t power) {
    std::vector<Elem> v(power + 1, 0);
    v[power] = c;
    return {std::move(field), std::move(v)};
  }

  const FieldRef& field() const noexcept { return field_; }
  const FieldCtx& ctx() const noexcept { return *field_; }

  int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::span<const Elem> coeffs() const noexcept { return c_; }
  Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  FieldElement coefficient(std::size_t i) const { return {field_, coeff(i)}; }
  FieldElement leading_coefficient() const { return {field_, leading()}; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_ != b.c_) return false;
    if (!a.field_ || !b.field_) return a.field_ == b.field_;
    return same_field(*a.field_, *b.field_);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  FieldRef field_;
  std::vector<Elem> c_;
};

namespace detail {

inline void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (!a.field() || !b.field() || !same_field(a.ctx(), b.ctx())) {
    throw Error(ErrorKind::ContextMismatch, "polynomials over different fields");
  }
}

inline std::vector<Elem> add_raw(const FieldCtx& F, std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<Elem> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Elem x = i < a.size() ? a[i] : 0;
    const Elem y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  return r;
}

inline std::vector<Elem> mul_raw(const FieldCtx& F, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Elem> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
  }
  return r;
}

inline void trim_raw(std::vector<Elem>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

/// In-place remainder of r modulo the nonzero polynomial m; optionally
/// collects the quotient.
inline void rem_raw(const FieldCtx& F, std::vector<Elem>& r, std::span<const Elem> m,
                    std::vector<Elem>* quotient = nullptr) {
  trim_raw(r);
  const std::size_t dm = m.size() - 1;
  const Elem lead_inv = F.inv(m.back());
  if (quotient) quotient->assign(r.size() >= m.size() ? r.size() - dm : 0, 0);
  while (r.size() >= m.size()) {
    const std::size_t shift = r.size() - m.size();
    const Elem c = F.mul(r.back(), lead_inv);
    if (quotient) (*quotient)[shift] = c;
    for (std::size_t j = 0; j < dm; ++j) {
      if (m[j] != 0) r[shift + j] = F.sub(r[shift + j], F.mul(c, m[j]));
    }
    r.pop_back();
    trim_raw(r);
  }
}

}  // namespace detail

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  detail::require_same_field(a, b);
  return {a.field(), detail::add_raw(a.ctx(), a.coeffs(), b.coeffs())};
}

inline Polynomial operator-(const Polynomial& a) {
  std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
  for (auto& e : r) e = a.ctx().neg(e);
  return {a.field(), std::move(r)};
}

inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  detail::require_same_field(a, b);
  return {a.field(), detail::mul_raw(a.ctx(), a.coeffs(), b.coeffs())};
}

inline Polynomial scale(const Polynomial& a, Elem s) {
  std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
  for (auto& e : r) e = a.ctx().mul(e, s);
  return {a.field(), std::move(r)};
}

inline Polynomial operator*(const Polynomial& a, const FieldElement& s) {
  if (!same_field(a.ctx(), s.ctx())) throw Error(ErrorKind::ContextMismatch, "scalar from another field");
  return scale(a, s.raw());
}

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

inline DivRem divrem(const Polynomial& f, const Polynomial& g) {
  detail::require_same_field(f, g);
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<Elem> q;
  detail::rem_raw(f.ctx(), r, g.coeffs(), &q);
  return {Polynomial(f.field(), std::move(q)), Polynomial(f.field(), std::move(r))};
}

inline Polynomial operator%(const Polynomial& f, const Polynomial& g) {
  detail::require_same_field(f, g);
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
  detail::rem_raw(f.ctx(), r, g.coeffs());
  return {f.field(), std::move(r)};
}

inline Polynomial operator/(const Polynomial& f, const Polynomial& g) { return divrem(f, g).quotient; }

inline Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(f, f.ctx().inv(f.leading()));
}

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  detail::require_same_field(a, b);
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

inline Polynomial derivative(const Polynomial& f) {
  if (f.degree() < 1) return Polynomial(f.field());
  const FieldCtx& F = f.ctx();
  std::vector<Elem> r(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i % F.characteristic())), f.coeff(i));
  }
  return {f.field(), std::move(r)};
}

/// Reads f over a field that contains its coefficient field in the tower.
inline Polynomial with_field(const Polynomial& f, const FieldRef& ext) {
  if (!in_tower(f.ctx(), *ext)) throw Error(ErrorKind::NotASubfield, "coefficient field not below target");
  return {ext, std::vector<Elem>(f.coeffs().begin(), f.coeffs().end())};
}

/// Horner evaluation; a may live in any extension of f's field in the tower.
inline FieldElement evaluate(const Polynomial& f, const FieldElement& a) {
  if (!in_tower(f.ctx(), a.ctx())) throw Error(ErrorKind::NotASubfield, "point not in an extension of the field");
  const FieldCtx& E = a.ctx();
  Elem acc = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = E.add(E.mul(acc, a.raw()), f.coeff(i));
  return {a.field(), acc};
}

/// Exact f(g(X)); refuses results above `cap` in degree.
inline Polynomial compose(const Polynomial& f, const Polynomial& g, std::size_t cap = kDefaultDegreeCap) {
  detail::require_same_field(f, g);
  if (f.degree() >= 1 && g.degree() >= 1) {
    const auto deg = static_cast<std::uint64_t>(f.degree()) * static_cast<std::uint64_t>(g.degree());
    if (deg > cap) throw Error(ErrorKind::DegreeCapExceeded, "composition degree " + std::to_string(deg));
  }
  const FieldCtx& F = f.ctx();
  std::vector<Elem> acc;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = detail::mul_raw(F, acc, g.coeffs());
    if (acc.empty()) acc.push_back(0);
    acc[0] = F.add(acc[0], f.coeff(i));
    detail::trim_raw(acc);
  }
  return {f.field(), std::move(acc)};
}

inline Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) {
  detail::require_same_field(a, b);
  detail::require_same_field(a, m);
  auto r = detail::mul_raw(a.ctx(), a.coeffs(), b.coeffs());
  detail::rem_raw(a.ctx(), r, m.coeffs());
  return {a.field(), std::move(r)};
}

/// f(g) mod h by Horner in F[X]/(h); the full composition is never formed.
inline Polynomial compose_mod(const Polynomial& f, const Polynomial& g, const Polynomial& h) {
  detail::require_same_field(f, g);
  detail::require_same_field(f, h);
  if (h.is_zero()) throw Error(ErrorKind::DivisionByZero, "compose_mod by zero modulus");
  const FieldCtx& F = f.ctx();
  std::vector<Elem> gr(g.coeffs().begin(), g.coeffs().end());
  detail::rem_raw(F, gr, h.coeffs());
  std::vector<Elem> acc;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = detail::mul_raw(F, acc, gr);
    if (acc.empty()) acc.push_back(0);
    acc[0] = F.add(acc[0], f.coeff(i));
    detail::rem_raw(F, acc, h.coeffs());
  }
  return {f.field(), std::move(acc)};
}

/// base^e mod m.
inline Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m) {
  detail::require_same_field(base, m);
  if (m.is_zero()) throw Error(ErrorKind::DivisionByZero, "powmod by zero modulus");
  const FieldCtx& F = base.ctx();
  std::vector<Elem> result{1};
  detail::rem_raw(F, result, m.coeffs());
  std::vector<Elem> b(base.coeffs().begin(), base.coeffs().end());
  detail::rem_raw(F, b, m.coeffs());
  while (e) {
    if (e & 1) {
      result = detail::mul_raw(F, result, b);
      detail::rem_raw(F, result, m.coeffs());
    }
    e >>= 1;
    if (e) {
      b = detail::mul_raw(F, b, b);
      detail::rem_raw(F, b, m.coeffs());
    }
  }
  return {base.field(), std::move(result)};
}

/// Res(f, g) by the Euclidean remainder sequence. Constants follow
/// Res(f, c) = c^{deg f} and Res(c, g) = c^{deg g}.
inline FieldElement resultant(const Polynomial& f, const Polynomial& g) {
  detail::require_same_field(f, g);
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
  const FieldCtx& F = f.ctx();
  std::vector<Elem> a(f.coeffs().begin(), f.coeffs().end());
  std::vector<Elem> b(g.coeffs().begin(), g.coeffs().end());
  Elem acc = 1;
  for (;;) {
    const std::size_t da = a.size() - 1;
    const std::size_t db = b.size() - 1;
    if (db == 0) return {f.field(), F.mul(acc, F.pow(b[0], da))};
    if (da == 0) return {f.field(), F.mul(acc, F.pow(a[0], db))};
    std::vector<Elem> r = a;
    detail::rem_raw(F, r, b);
    if (r.empty()) return {f.field(), 0};
    // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
    if ((da & 1) && (db & 1)) acc = F.neg(acc);
    acc = F.mul(acc, F.pow(b.back(), da - (r.size() - 1)));
    a = std::move(b);
    b = std::move(r);
  }
}

struct Discriminant {
  FieldElement value;
  /// f' = 0: repeated roots, value is 0 and the resultant relation does not apply.
  bool inseparable = false;
};

/// Disc(f) = (-1)^{d(d-1)/2} a_d^{d-k-2} Res(f, f'), k = deg f'.
inline Discriminant discriminant(const Polynomial& f) {
  const int d = f.degree();
  if (d < 2) throw Error(ErrorKind::WrongDegree, "discriminant needs degree >= 2");
  const Polynomial fp = derivative(f);
  if (fp.is_zero()) return {FieldElement(f.field(), 0), true};
  const int k = fp.degree();
  const FieldCtx& F = f.ctx();
  Elem c = F.pow_signed(f.leading(), d - k - 2);
  if ((static_cast<std::int64_t>(d) * (d - 1) / 2) % 2 != 0) c = F.neg(c);
  return {FieldElement(f.field(), c) * resultant(f, fp), false};
}

/// X^{deg g} g(1/X): the coefficient list reversed.
inline Polynomial reciprocal(const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "reciprocal of the zero polynomial");
  std::vector<Elem> r(g.coeffs().rbegin(), g.coeffs().rend());
  return {g.field(), std::move(r)};
}

}  // namespace stabpoly
