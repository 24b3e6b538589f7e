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
#include <cstdint>
#include <utility>
#include <vector>

#include "stabpoly/field.hpp"
#include "stabpoly/polynomial.hpp"

namespace stabpoly {

/// Roots are found by scanning every element for fields up to this order.
inline constexpr std::uint64_t kExhaustiveRootScanLimit = 10000;

/// h -> h^q mod f for h in F_q[X]/(f), as the linear map with columns
/// X^{qj} mod f. Coefficients are fixed by x -> x^q, so h^q = sum h_j X^{qj}.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const Polynomial& modulus) : mod_(make_monic(modulus)) {
    const int m = mod_.degree();
    const FieldRef& F = mod_.field();
    const Polynomial xq = powmod(Polynomial::x(F), F->order(), mod_);
    cols_.reserve(static_cast<std::size_t>(m));
    Polynomial cur = Polynomial::constant(F, 1) % mod_;
    for (int j = 0; j < m; ++j) {
      cols_.push_back(cur);
      cur = mulmod(cur, xq, mod_);
    }
  }

  const Polynomial& modulus() const noexcept { return mod_; }

  Polynomial apply(const Polynomial& h) const {
    const FieldCtx& F = mod_.ctx();
    const std::size_t m = cols_.size();
    std::vector<Elem> acc(m, 0);
    const auto hc = h.coeffs();
    for (std::size_t j = 0; j < hc.size() && j < m; ++j) {
      if (hc[j] == 0) continue;
      const auto col = cols_[j].coeffs();
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i] != 0) acc[i] = F.add(acc[i], F.mul(hc[j], col[i]));
      }
    }
    return {mod_.field(), std::move(acc)};
  }

 private:
  Polynomial mod_;
  std::vector<Polynomial> cols_;
};

/// Rabin: f of degree m is irreducible iff X^{q^m} = X mod f and
/// gcd(X^{q^{m/l}} - X, f) = 1 for each prime l | m.
inline bool is_irreducible(const Polynomial& f) {
  const int m = f.degree();
  if (m < 1) throw Error(ErrorKind::ConstantPolynomial, "irreducibility of a constant");
  if (m == 1) return true;
  const Polynomial g = make_monic(f);
  const FieldRef& F = g.field();
  const Polynomial x = Polynomial::x(F);
  const auto primes = detail::distinct_prime_factors(static_cast<std::uint64_t>(m));

  const FrobeniusMap frob(g);
  std::vector<Polynomial> powers;  // powers[i] = X^{q^{i+1}} mod g
  powers.reserve(static_cast<std::size_t>(m));
  Polynomial h = frob.apply(x);
  powers.push_back(h);
  for (int i = 1; i < m; ++i) {
    h = frob.apply(h);
    powers.push_back(h);
  }
  if (!(powers.back() == x)) return false;
  for (auto l : primes) {
    const auto idx = static_cast<std::size_t>(m / static_cast<int>(l)) - 1;
    if (gcd(powers[idx] - x, g).degree() != 0) return false;
  }
  return true;
}

/// Coefficient-wise p-th root of a polynomial whose derivative vanishes.
inline Polynomial pth_root(const Polynomial& f) {
  const FieldCtx& F = f.ctx();
  const std::uint64_t p = F.characteristic();
  const std::uint64_t root_exp = F.order() / p;  // a^{q/p} is the p-th root of a
  std::vector<Elem> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(F.pow(f.coeff(i), root_exp));
  return {f.field(), std::move(r)};
}

namespace detail {

/// Coprime squarefree monic parts whose product is rad(f).
inline void radical_parts(const Polynomial& f, std::vector<Polynomial>& out) {
  if (f.degree() <= 0) return;
  const Polynomial fp = derivative(f);
  if (fp.is_zero()) {
    radical_parts(make_monic(pth_root(f)), out);
    return;
  }
  const Polynomial g = gcd(f, fp);
  const Polynomial w = make_monic(f / g);
  if (w.degree() > 0) out.push_back(w);
  Polynomial z = g;
  for (;;) {
    const Polynomial y = gcd(z, w);
    if (y.degree() <= 0) break;
    z = z / y;
  }
  z = make_monic(z);
  if (z.degree() > 0) radical_parts(make_monic(pth_root(z)), out);
}

}  // namespace detail

struct DegreePart {
  int degree;        // degree of each irreducible factor in the part
  Polynomial part;   // product of all such factors
};

/// Distinct-degree factorization of a squarefree polynomial.
inline std::vector<DegreePart> distinct_degree_factorization(const Polynomial& f) {
  std::vector<DegreePart> out;
  Polynomial rest = make_monic(f);
  if (rest.degree() < 1) return out;
  const FieldRef& F = rest.field();
  const Polynomial x = Polynomial::x(F);
  Polynomial h = x % rest;
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    h = powmod(h, F->order(), rest);
    const Polynomial g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.push_back({i, g});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back({rest.degree(), rest});
  return out;
}

struct FactorCount {
  int count = 0;
  bool squarefree = false;
};

/// Number of distinct monic irreducible factors, and whether every
/// multiplicity is 1.
inline FactorCount count_distinct_irreducible_factors(const Polynomial& f) {
  if (f.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "factor count of a constant");
  const Polynomial g = make_monic(f);
  const Polynomial fp = derivative(g);
  FactorCount out;
  out.squarefree = !fp.is_zero() && gcd(g, fp).degree() == 0;
  std::vector<Polynomial> parts;
  detail::radical_parts(g, parts);
  for (const auto& part : parts) {
    for (const auto& dp : distinct_degree_factorization(part)) out.count += dp.part.degree() / dp.degree;
  }
  return out;
}

/// Degrees of the distinct irreducible factors (sorted ascending).
inline std::vector<int> irreducible_factor_degrees(const Polynomial& f) {
  if (f.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "factor degrees of a constant");
  std::vector<Polynomial> parts;
  detail::radical_parts(make_monic(f), parts);
  std::vector<int> out;
  for (const auto& part : parts) {
    for (const auto& dp : distinct_degree_factorization(part)) {
      for (int i = 0; i < dp.part.degree() / dp.degree; ++i) out.push_back(dp.degree);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// Deterministic equal-degree splitting of a product of distinct linear
/// factors: gcd with (X + delta)^{(Q-1)/2} - 1 for delta = 0, 1, 2, ...
inline void split_linear(const Polynomial& g, std::vector<Elem>& roots) {
  const FieldCtx& F = g.ctx();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    roots.push_back(F.neg(F.div(g.coeff(0), g.coeff(1))));
    return;
  }
  const std::uint64_t half = (F.order() - 1) / 2;
  for (Elem delta = 0; delta < F.order(); ++delta) {
    const Polynomial shifted(g.field(), std::vector<Elem>{delta, 1});
    const Polynomial t = powmod(shifted, half, g) - Polynomial::constant(g.field(), 1);
    const Polynomial h = gcd(t, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, roots);
      split_linear(g / h, roots);
      return;
    }
  }
  throw Error(ErrorKind::PreconditionViolated, "split_linear: input is not a product of distinct linear factors");
}

}  // namespace detail

/// All roots of f in ext (an extension of f's field in the tower), each
/// repeated per multiplicity, sorted by encoding.
inline std::vector<FieldElement> roots_in_context(const Polynomial& f, const FieldRef& ext) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const Polynomial F = with_field(f, ext);
  const FieldCtx& E = *ext;
  std::vector<Elem> distinct;
  if (F.degree() >= 1) {
    if (E.order() <= kExhaustiveRootScanLimit) {
      for (Elem v = 0; v < E.order(); ++v) {
        if (evaluate(F, FieldElement(ext, v)).is_zero()) distinct.push_back(v);
      }
    } else {
      const Polynomial x = Polynomial::x(ext);
      const Polynomial lin = gcd(powmod(x, E.order(), F) - x, F);
      detail::split_linear(lin, distinct);
    }
  }
  std::sort(distinct.begin(), distinct.end());
  std::vector<FieldElement> out;
  for (Elem r : distinct) {
    const Polynomial lin(ext, std::vector<Elem>{E.neg(r), 1});
    Polynomial rest = F;
    for (;;) {
      auto [q, rem] = divrem(rest, lin);
      if (!rem.is_zero()) break;
      out.emplace_back(ext, r);
      rest = std::move(q);
    }
  }
  return out;
}

struct StickelbergerResult {
  /// False when f is not squarefree; the parity relation is then not asserted.
  bool applicable = false;
  /// (r = d mod 2) <=> Disc(f) is a square.
  bool consistent = false;
  int disc_char = 0;
  /// r = d mod 2.
  bool parity_match = false;
  int factor_count = 0;
  int degree = 0;
};

inline StickelbergerResult stickelberger_check(const Polynomial& f) {
  const int d = f.degree();
  if (d < 1) throw Error(ErrorKind::ConstantPolynomial, "stickelberger check of a constant");
  StickelbergerResult out;
  out.degree = d;
  const FactorCount fc = count_distinct_irreducible_factors(f);
  out.factor_count = fc.count;
  if (!fc.squarefree) return out;
  out.applicable = true;
  out.disc_char = d == 1 ? 1 : discriminant(f).value.quadratic_character();
  out.parity_match = (fc.count % 2) == (d % 2);
  out.consistent = out.parity_match == (out.disc_char == 1);
  return out;
}

}  // namespace stabpoly
