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
 * @file oracle.hpp
 * @brief Slow reference computations used to cross-check the fast paths.
 *
 * None of these share code with the Euclidean resultant or the Rabin test:
 * resultants come from the Sylvester determinant or from products over roots
 * in a splitting field, and irreducibility from trial division by every
 * monic polynomial of degree <= m/2.
 */

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "stabpoly/extension.hpp"
#include "stabpoly/factor.hpp"
#include "stabpoly/field.hpp"
#include "stabpoly/polynomial.hpp"

namespace stabpoly::oracle {

/// Determinant of a square matrix over F by Gaussian elimination.
inline Elem determinant(const FieldCtx& F, std::vector<std::vector<Elem>> m) {
  const std::size_t n = m.size();
  Elem det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = F.neg(det);
    }
    det = F.mul(det, m[col][col]);
    const Elem inv = F.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Elem factor = F.mul(m[r][col], inv);
      for (std::size_t c = col; c < n; ++c) m[r][c] = F.sub(m[r][c], F.mul(factor, m[col][c]));
    }
  }
  return det;
}

/// Res(a, b) as the determinant of the Sylvester matrix.
inline FieldElement sylvester_resultant(const Polynomial& a, const Polynomial& b) {
  detail::require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return {a.field(), 0};
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  const std::size_t N = m + n;
  if (N == 0) return {a.field(), 1};
  std::vector<std::vector<Elem>> S(N, std::vector<Elem>(N, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) S[r][r + i] = a.coeff(m - i);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) S[n + r][r + i] = b.coeff(n - i);
  }
  return {a.field(), determinant(a.ctx(), std::move(S))};
}

/// Smallest extension of f's field in which f splits.
inline FieldRef splitting_field(const Polynomial& f) {
  unsigned L = 1;
  for (int deg : irreducible_factor_degrees(f)) L = std::lcm(L, static_cast<unsigned>(deg));
  return build_extension(f.field(), L);
}

/// Res(a, b) = lc(a)^{deg b} prod_{a(alpha) = 0} b(alpha) over a splitting field of a.
inline FieldElement root_product_resultant(const Polynomial& a, const Polynomial& b) {
  detail::require_same_field(a, b);
  const FieldCtx& F = a.ctx();
  if (a.is_zero() || b.is_zero()) return {a.field(), 0};
  const Elem head = F.pow(a.leading(), static_cast<std::uint64_t>(b.degree()));
  if (a.degree() == 0) return {a.field(), head};
  const FieldRef ext = splitting_field(a);
  const auto roots = roots_in_context(a, ext);
  FieldElement prod(ext, head);
  const Polynomial be = with_field(b, ext);
  for (const auto& alpha : roots) prod *= evaluate(be, alpha);
  return {a.field(), prod.raw()};
}

/// Disc(f) = a_d^{2d-2} prod_{i<j} (alpha_i - alpha_j)^2.
inline FieldElement root_product_discriminant(const Polynomial& f) {
  const int d = f.degree();
  if (d < 2) throw Error(ErrorKind::WrongDegree, "discriminant needs degree >= 2");
  const FieldRef ext = splitting_field(f);
  const auto roots = roots_in_context(f, ext);
  const FieldCtx& E = *ext;
  Elem prod = E.pow(f.leading(), static_cast<std::uint64_t>(2 * d - 2));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) prod = E.mul(prod, E.sqr(E.sub(roots[i].raw(), roots[j].raw())));
  }
  return {f.field(), prod};
}

/// prod over the roots gamma of f' (with multiplicity) of f^(n)(gamma),
/// by iterating f on each gamma in a splitting field of f'.
inline FieldElement critical_product_by_evaluation(const Polynomial& f, std::uint64_t n) {
  const Polynomial fp = derivative(f);
  if (fp.degree() < 1) throw Error(ErrorKind::ConstantDerivative, "f' has no roots");
  const FieldRef ext = splitting_field(fp);
  const Polynomial fe = with_field(f, ext);
  FieldElement prod(ext, 1);
  for (FieldElement g : roots_in_context(fp, ext)) {
    for (std::uint64_t i = 0; i < n; ++i) g = evaluate(fe, g);
    prod *= g;
  }
  return {f.field(), prod.raw()};
}

/// Irreducibility by trial division through all monic divisors of degree
/// <= deg f / 2. Exponential; meant for tiny fields and degrees.
inline bool trial_division_irreducible(const Polynomial& f) {
  const int m = f.degree();
  if (m < 1) throw Error(ErrorKind::ConstantPolynomial, "irreducibility of a constant");
  const FieldRef& F = f.field();
  const std::uint64_t q = F->order();
  for (int j = 1; 2 * j <= m; ++j) {
    std::vector<Elem> c(static_cast<std::size_t>(j) + 1, 0);
    c[static_cast<std::size_t>(j)] = 1;
    for (;;) {
      if ((f % Polynomial(F, c)).is_zero()) return false;
      int i = 0;
      while (i < j && ++c[static_cast<std::size_t>(i)] == q) c[static_cast<std::size_t>(i++)] = 0;
      if (i == j) break;
    }
  }
  return true;
}

/// Uniform random polynomial of exact degree deg; coefficients are rng() % q.
inline Polynomial random_polynomial(const FieldRef& F, int deg, std::mt19937_64& rng, bool monic = false) {
  const std::uint64_t q = F->order();
  std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = rng() % q;
  c[static_cast<std::size_t>(deg)] = monic ? 1 : 1 + rng() % (q - 1);
  return {F, std::move(c)};
}

}  // namespace stabpoly::oracle
