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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabpoly/factor.hpp"
#include "stabpoly/field.hpp"
#include "stabpoly/polynomial.hpp"

namespace stabpoly {

inline FieldRef build_prime_field(std::uint64_t p) {
  if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
  if (!detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) throw Error(ErrorKind::FieldTooLarge, "characteristic must be below 2^32");
  return FieldCtx::make_prime(p);
}

/// Smallest monic irreducible of the given degree over base, scanning the
/// non-leading coefficients as an integer c_0 + c_1 B + ... ascending.
inline Polynomial canonical_modulus(const FieldRef& base, unsigned degree) {
  if (degree < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");
  const std::uint64_t B = base->order();
  std::vector<Elem> c(degree + 1, 0);
  c[degree] = 1;
  for (;;) {
    Polynomial cand(base, c);
    if (is_irreducible(cand)) return cand;
    unsigned i = 0;
    while (i < degree && ++c[i] == B) c[i++] = 0;
    if (i == degree) break;
  }
  throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");  // unreachable over finite fields
}

/// F_{|base|^degree} over base. Without a modulus the canonical one is used.
/// Degree 1 returns base itself.
inline FieldRef build_extension(const FieldRef& base, unsigned degree,
                                const std::optional<Polynomial>& modulus = std::nullopt) {
  if (degree < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");
  if (modulus) {
    if (!same_field(modulus->ctx(), *base)) throw Error(ErrorKind::ContextMismatch, "modulus over another field");
    if (modulus->degree() != static_cast<int>(degree) || !modulus->is_monic()) {
      throw Error(ErrorKind::DegreeMismatch, "modulus must be monic of degree " + std::to_string(degree));
    }
  }
  if (degree == 1) return base;
  if (base->level() >= 2) throw Error(ErrorKind::TowerTooDeep, "at most two extension layers are supported");
  Polynomial mod = modulus ? *modulus : canonical_modulus(base, degree);
  if (modulus && !is_irreducible(mod)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible");
  return FieldCtx::make_extension(base, std::vector<Elem>(mod.coeffs().begin(), mod.coeffs().end()));
}

/// F_{p^s} as a single extension of the prime field.
inline FieldRef build_field(std::uint64_t p, unsigned s, const std::optional<std::vector<Elem>>& modulus = std::nullopt) {
  FieldRef prime = build_prime_field(p);
  if (!modulus) return build_extension(prime, s);
  return build_extension(prime, s, Polynomial(prime, *modulus));
}

}  // namespace stabpoly
