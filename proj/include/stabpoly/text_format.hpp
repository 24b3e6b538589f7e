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

// Text forms.
//
// Field specs:  "p", "p^s", "p^s:c0,...,1", optionally followed by
// "/k" or "/k:e0,...,1" for a second layer over F_{p^s}.
// Elements:     an integer (prime field, or a prime-field element of an
// extension) or a bracketed list of base elements, low-to-high.
// Polynomials:  comma-separated elements, low-to-high degree.

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabpoly/extension.hpp"
#include "stabpoly/field.hpp"
#include "stabpoly/polynomial.hpp"

namespace stabpoly::text {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

/// Splits on sep outside of brackets.
inline std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']' && --depth < 0) throw Error(ErrorKind::ParseError, "unbalanced ']' in '" + std::string(s) + "'");
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(ErrorKind::ParseError, "unbalanced '[' in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

template <class Int>
Int parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

inline Elem parse_element(const FieldRef& F, std::string_view tok) {
  tok = detail::trim(tok);
  if (tok.empty()) throw Error(ErrorKind::ParseError, "empty element");
  if (tok.front() != '[') {
    const auto v = detail::parse_int<std::int64_t>(tok);
    const auto p = static_cast<std::int64_t>(F->characteristic());
    if (F->is_prime_field() || (v > -p && v < p)) return F->from_int(v);
    throw Error(ErrorKind::ParseError, "integer " + std::string(tok) + " is not a prime-field element; use [..]");
  }
  if (tok.back() != ']') throw Error(ErrorKind::ParseError, "missing ']' in '" + std::string(tok) + "'");
  if (F->is_prime_field()) throw Error(ErrorKind::ParseError, "bracketed element in a prime field");
  const auto parts = detail::split_top_level(tok.substr(1, tok.size() - 2), ',');
  if (parts.size() > F->degree()) throw Error(ErrorKind::ParseError, "too many digits in '" + std::string(tok) + "'");
  std::vector<Elem> digits;
  for (auto part : parts) digits.push_back(parse_element(F->base(), part));
  return F->from_digits(digits);
}

inline std::string format_element(const FieldCtx& F, Elem a) {
  if (F.is_prime_field()) return std::to_string(a);
  std::string out = "[";
  const auto digits = F.digits(a);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += format_element(*F.base(), digits[i]);
  }
  return out + "]";
}

inline std::string format_element(const FieldElement& a) { return format_element(a.ctx(), a.raw()); }

inline FieldElement parse_field_element(const FieldRef& F, std::string_view tok) { return {F, parse_element(F, tok)}; }

inline Polynomial parse_polynomial(const FieldRef& F, std::string_view text) {
  std::vector<Elem> c;
  for (auto tok : detail::split_top_level(text, ',')) c.push_back(parse_element(F, tok));
  return {F, std::move(c)};
}

inline std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += format_element(f.ctx(), f.coeff(i));
  }
  return out;
}

inline FieldRef parse_field_spec(std::string_view spec) {
  const auto layers = detail::split_top_level(spec, '/');
  if (layers.size() > 2) throw Error(ErrorKind::TowerTooDeep, "at most two extension layers are supported");
  const std::string_view first = layers[0];
  const auto colon = first.find(':');
  const std::string_view head = detail::trim(first.substr(0, colon));
  const auto caret = head.find('^');
  const auto p = detail::parse_int<std::uint64_t>(head.substr(0, caret));
  const unsigned s = caret == std::string_view::npos ? 1 : detail::parse_int<unsigned>(head.substr(caret + 1));
  FieldRef F = build_prime_field(p);
  if (colon != std::string_view::npos) {
    F = build_extension(F, s, parse_polynomial(F, first.substr(colon + 1)));
  } else {
    F = build_extension(F, s);
  }
  if (layers.size() == 2) {
    const std::string_view second = layers[1];
    const auto c2 = second.find(':');
    const auto k = detail::parse_int<unsigned>(second.substr(0, c2));
    if (F->level() == 0) throw Error(ErrorKind::ParseError, "tower layer needs an extension base 'p^s/k'");
    if (c2 != std::string_view::npos) {
      F = build_extension(F, k, parse_polynomial(F, second.substr(c2 + 1)));
    } else {
      F = build_extension(F, k);
    }
  }
  return F;
}

inline std::string format_field_spec(const FieldCtx& F) {
  if (F.is_prime_field()) return std::to_string(F.characteristic());
  std::string out;
  if (F.level() == 2) out = format_field_spec(*F.base()) + "/" + std::to_string(F.degree());
  else out = std::to_string(F.characteristic()) + "^" + std::to_string(F.degree());
  out += ':';
  for (std::size_t i = 0; i < F.modulus().size(); ++i) {
    if (i) out += ',';
    out += format_element(*F.base(), F.modulus()[i]);
  }
  return out;
}

}  // namespace stabpoly::text
