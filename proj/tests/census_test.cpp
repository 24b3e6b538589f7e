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

#include <set>

#include "stabpoly/census.hpp"
#include "stabpoly/extension.hpp"
#include "stabpoly/report_json.hpp"

namespace stabpoly {
namespace {

using P = Polynomial;

TEST(Enumeration, Order) {
  const auto F3 = build_prime_field(3);
  const auto monic = enumerate_polynomials(F3, 2, true);
  ASSERT_EQ(monic.size(), 9u);
  EXPECT_EQ(monic.front(), P::from_ints(F3, {0, 0, 1}));
  EXPECT_EQ(monic[1], P::from_ints(F3, {0, 1, 1}));
  EXPECT_EQ(monic[3], P::from_ints(F3, {1, 0, 1}));
  EXPECT_EQ(monic.back(), P::from_ints(F3, {2, 2, 1}));
  const auto all = enumerate_polynomials(F3, 2, false);
  ASSERT_EQ(all.size(), 18u);
  EXPECT_EQ(all[0], P::from_ints(F3, {0, 0, 1}));
  EXPECT_EQ(all[1], P::from_ints(F3, {0, 0, 2}));
  std::set<std::vector<Elem>> distinct;
  for (const auto& f : all) distinct.emplace(f.coeffs().begin(), f.coeffs().end());
  EXPECT_EQ(distinct.size(), 18u);
  EXPECT_EQ(PolynomialSpace(build_prime_field(5), 3, false).size(), 500u);
  EXPECT_THROW(PolynomialSpace(F3, 1, true), Error);
}

TEST(Enumeration, ZeroCoefficients) {
  const auto F9 = build_field(3, 2);
  const PolynomialSpace space(F9, 3, false, {2});
  EXPECT_EQ(space.size(), 9u * 9u * 8u);
  for (std::uint64_t i = 0; i < space.size(); i += 37) EXPECT_EQ(space.at(i).coeff(2), 0u);
}

TEST(Census, QuadraticsOverF3) {
  const auto F3 = build_prime_field(3);
  CensusOptions o;
  o.collect_survivors = true;
  const CensusResult r = stability_census(F3, 2, true, o);
  EXPECT_EQ(r.population, 9u);
  EXPECT_EQ(r.counts.stable, 1u);
  EXPECT_EQ(r.counts.stable + r.counts.not_stable, 9u);
  EXPECT_EQ(r.counts.inapplicable, 0u);
  EXPECT_EQ(r.counts.contradictions, 0u);
  EXPECT_EQ(r.counts.route_disagreements, 0u);
  ASSERT_EQ(r.survivors.size(), 1u);
  EXPECT_EQ(r.survivors[0], P::from_ints(F3, {1, 0, 1}));
}

TEST(Census, QuadraticCountsMatchBruteForce) {
  // Monic stable quadratics over F_5 and F_7, confirmed by direct factorization to depth 6.
  const std::pair<std::uint64_t, std::uint64_t> expected[] = {{5, 4}, {7, 3}};
  for (auto [p, stable] : expected) {
    const CensusResult r = stability_census(build_prime_field(p), 2, true);
    EXPECT_EQ(r.counts.stable, stable) << p;
    EXPECT_EQ(r.counts.stable + r.counts.not_stable, p * p);
    EXPECT_EQ(r.counts.contradictions, 0u);
  }
}

TEST(Census, CubicSliceHasNoSurvivors) {
  for (auto F : {build_prime_field(3), build_field(3, 2)}) {
    CensusOptions o;
    o.zero_coefficients = {2};
    o.depth = 3;
    const CensusResult r = stability_census(F, 3, false, o);
    EXPECT_EQ(r.counts.stable + r.counts.candidate, 0u);
    EXPECT_EQ(r.counts.verified_survivors, 0u);
  }
}

TEST(Census, ParallelMatchesSerial) {
  const auto F5 = build_prime_field(5);
  CensusOptions serial;
  serial.jobs = 1;
  serial.depth = 3;
  serial.collect_survivors = true;
  CensusOptions parallel = serial;
  parallel.jobs = 7;
  const auto a = stability_census(F5, 3, false, serial);
  const auto b = stability_census(F5, 3, false, parallel);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.survivors, b.survivors);
  EXPECT_EQ(json::census(a, false).dump(), json::census(b, false).dump());
  EXPECT_EQ(a.counts.stable + a.counts.candidate + a.counts.not_stable + a.counts.inapplicable, 500u);
}

TEST(Census, PopulationLimit) {
  CensusOptions o;
  o.max_population = 10;
  try {
    stability_census(build_prime_field(5), 2, true, o);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Census, QuadraticStabilityIsScalingInvariant) {
  // g(X) = a^{-1} f(aX) has g^(n)(X) = a^{-1} f^(n)(aX).
  const auto F7 = build_prime_field(7);
  const PolynomialSpace space(F7, 2, false);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const P f = space.at(i);
    const Verdict v = quadratic_stability_test(f).verdict;
    for (Elem a = 1; a < 7; ++a) {
      const P g = compose(f, P(F7, {0, a})) * FieldElement(F7, F7->inv(a));
      ASSERT_EQ(quadratic_stability_test(g).verdict, v);
      ASSERT_EQ(necessary_condition_test(g).verdict, v);
    }
  }
}

TEST(Bound, Reference) {
  for (int d = 2; d <= 8; ++d) {
    EXPECT_LT(bound_exponent(d), d + 1.0);
    EXPECT_GT(bound_exponent(d + 1), bound_exponent(d));
  }
  EXPECT_NEAR(bound_exponent(2), 3.0 - 1.0 / std::log(8.0), 1e-12);
  EXPECT_NEAR(bound_reference(3, 2), std::pow(3.0, bound_exponent(2)), 1e-9);
  EXPECT_THROW(bound_reference(2, 2), Error);
  EXPECT_THROW(bound_reference(3, 1), Error);
}

}  // namespace
}  // namespace stabpoly
