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

#include <gtest/gtest.h>

#include "stabpoly/census.hpp"
#include "stabpoly/extension.hpp"
#include "stabpoly/report_json.hpp"
#include "stabpoly/text_format.hpp"

namespace stabpoly {
namespace {

using P = Polynomial;

TEST(FieldSpec, ParseAndFormat) {
  auto F = text::parse_field_spec("5");
  EXPECT_EQ(F->order(), 5u);
  EXPECT_EQ(text::format_field_spec(*F), "5");
  F = text::parse_field_spec("3^2");
  EXPECT_EQ(text::format_field_spec(*F), "3^2:1,0,1");
  F = text::parse_field_spec("3^2:2,2,1");
  EXPECT_EQ(F->modulus(), (std::vector<Elem>{2, 2, 1}));
  F = text::parse_field_spec("3^2/3");
  EXPECT_EQ(F->order(), 729u);
  EXPECT_EQ(text::parse_field_spec(text::format_field_spec(*F))->modulus(), F->modulus());
  EXPECT_EQ(text::format_field_spec(*text::parse_field_spec("3^1")), "3");
}

TEST(FieldSpec, Errors) {
  const std::pair<const char*, ErrorKind> cases[] = {
      {"", ErrorKind::ParseError},         {"x", ErrorKind::ParseError},
      {"2", ErrorKind::EvenCharacteristic}, {"9", ErrorKind::NotPrime},
      {"3^2/2/2", ErrorKind::TowerTooDeep}, {"3/2", ErrorKind::ParseError},
      {"3^2:2,0,1", ErrorKind::ReducibleModulus}, {"5^2:1,x", ErrorKind::ParseError},
  };
  for (const auto& [spec, kind] : cases) {
    try {
      text::parse_field_spec(spec);
      ADD_FAILURE() << spec;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), kind) << spec << ": " << e.what();
    }
  }
}

TEST(Polynomials, RoundTrip) {
  const auto F9 = build_field(3, 2);
  const P f = text::parse_polynomial(F9, "1, [0,1], 2, [2,2]");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.coeff(1), 3u);
  EXPECT_EQ(text::format_polynomial(f), "[1,0],[0,1],[2,0],[2,2]");
  EXPECT_EQ(text::parse_polynomial(F9, text::format_polynomial(f)), f);
  const auto F5 = build_prime_field(5);
  EXPECT_EQ(text::parse_polynomial(F5, "-1,0,1"), P::from_ints(F5, {4, 0, 1}));
  EXPECT_EQ(text::format_polynomial(P(F5)), "0");
  EXPECT_THROW(text::parse_polynomial(F5, "1,,2"), Error);
  EXPECT_THROW(text::parse_polynomial(F9, "7"), Error);
  EXPECT_THROW(text::parse_polynomial(F5, "[1]"), Error);
  const auto T = build_extension(F9, 3);
  const P g = text::parse_polynomial(T, "[[0,1],1],[0,0,[2,1]]");
  EXPECT_EQ(text::parse_polynomial(T, text::format_polynomial(g)), g);
}

TEST(Json, ElementsAndReports) {
  const auto F9 = build_field(3, 2);
  EXPECT_EQ(json::element(FieldElement(F9, 5)).dump(), "[2,1]");
  EXPECT_EQ(json::element(FieldElement(build_prime_field(7), 4)).dump(), "4");
  const auto F3 = build_prime_field(3);
  const auto rep = json::stability_report(stability_report(P::from_ints(F3, {1, 0, 1}), 3));
  EXPECT_EQ(rep["schema_version"], 1);
  EXPECT_EQ(rep["kind"], "stability_report");
  EXPECT_EQ(rep["verdict"], "Stable");
  EXPECT_EQ(rep["poly"].dump(), "[1,0,1]");
  EXPECT_TRUE(rep["witness"].is_null());
  EXPECT_EQ(rep["depth_verified"], 3);
  const auto c = json::census(stability_census(F3, 2, true), false);
  EXPECT_EQ(c["counts"]["stable"], 1);
  EXPECT_FALSE(c.contains("seconds"));
  EXPECT_TRUE(json::census(stability_census(F3, 2, true), true).contains("seconds"));
}

TEST(Json, Tsv) {
  const auto r = stability_census(build_prime_field(3), 2, true);
  const std::string row = json::census_tsv_row(r);
  EXPECT_EQ(std::count(row.begin(), row.end(), '\t'), 10);
  EXPECT_EQ(row.rfind("3\t2\t1\t9\t1\t0\t8\t0\t", 0), 0u) << row;
  const std::string header = json::census_tsv_header();
  EXPECT_EQ(std::count(header.begin(), header.end(), '\t'), 10);
}

}  // namespace
}  // namespace stabpoly
