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

#include <numeric>
#include <random>

#include "stabpoly/census.hpp"
#include "stabpoly/extension.hpp"
#include "stabpoly/factor.hpp"
#include "stabpoly/oracle.hpp"

namespace stabpoly {
namespace {

using P = Polynomial;

TEST(Irreducible, Examples) {
  const auto F3 = build_prime_field(3);
  const auto F5 = build_prime_field(5);
  EXPECT_TRUE(is_irreducible(P::from_ints(F3, {1, 0, 1})));
  EXPECT_FALSE(is_irreducible(P::from_ints(F5, {-1, 0, 1})));
  EXPECT_TRUE(is_irreducible(P::from_ints(F3, {-1, -1, 0, 1})));
  EXPECT_TRUE(is_irreducible(P::from_ints(F3, {2, 0, 2, 0, 1})));
  try {
    is_irreducible(P::from_ints(F3, {2}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstantPolynomial);
  }
}

TEST(Irreducible, AgreesWithTrialDivisionExhaustive) {
  for (std::uint64_t p : {3u, 5u}) {
    const auto F = build_prime_field(p);
    for (int d = 2; d <= 4; ++d) {
      const PolynomialSpace space(F, d, false);
      for (std::uint64_t i = 0; i < space.size(); ++i) {
        const P f = space.at(i);
        ASSERT_EQ(is_irreducible(f), oracle::trial_division_irreducible(f)) << p << " " << i;
      }
    }
  }
}

TEST(Irreducible, CountsMatchGaussFormula) {
  // Number of monic irreducibles of degree n over F_q: (1/n) sum_{e|n} mu(e) q^{n/e}.
  const auto F9 = build_field(3, 2);
  std::uint64_t deg3 = 0;
  const PolynomialSpace space(F9, 3, true);
  for (std::uint64_t i = 0; i < space.size(); ++i) deg3 += is_irreducible(space.at(i));
  EXPECT_EQ(deg3, (729u - 9u) / 3u);
}

TEST(FactorCount, Examples) {
  const auto F5 = build_prime_field(5);
  const auto F3 = build_prime_field(3);
  const P a = P::from_ints(F5, {-1, 1}), b = P::from_ints(F5, {-2, 1});
  auto fc = count_distinct_irreducible_factors(a * b);
  EXPECT_EQ(fc.count, 2);
  EXPECT_TRUE(fc.squarefree);
  fc = count_distinct_irreducible_factors(a * a);
  EXPECT_EQ(fc.count, 1);
  EXPECT_FALSE(fc.squarefree);
  fc = count_distinct_irreducible_factors(P::from_ints(F3, {2, 0, 2, 0, 1}));
  EXPECT_EQ(fc.count, 1);
  EXPECT_TRUE(fc.squarefree);
}

TEST(FactorCount, PerfectPowersInCharacteristicThree) {
  const auto F9 = build_field(3, 2);
  const P lin = P::from_ints(F9, {1, 1});
  const P quad(F9, {8, 0, 1});  // X^2 - (1 + x), 1 + x a nonsquare
  ASSERT_TRUE(is_irreducible(quad));
  const P f = lin * lin * lin * quad * quad * quad;  // p-th power: f' = 0
  ASSERT_TRUE(derivative(f).is_zero());
  const auto fc = count_distinct_irreducible_factors(f);
  EXPECT_EQ(fc.count, 2);
  EXPECT_FALSE(fc.squarefree);
  EXPECT_EQ(irreducible_factor_degrees(f * lin), (std::vector<int>{1, 2}));
}

TEST(FactorCount, DegreesSumOverSquarefreeInputs) {
  const auto F5 = build_prime_field(5);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const P f = oracle::random_polynomial(F5, 1 + static_cast<int>(rng() % 7), rng);
    const auto fc = count_distinct_irreducible_factors(f);
    const auto degs = irreducible_factor_degrees(f);
    ASSERT_EQ(static_cast<int>(degs.size()), fc.count);
    if (fc.squarefree) {
      ASSERT_EQ(std::accumulate(degs.begin(), degs.end(), 0), f.degree());
    }
  }
}

TEST(Roots, Examples) {
  const auto F3 = build_prime_field(3);
  const auto F9 = build_extension(F3, 2);
  auto r = roots_in_context(P::from_ints(F3, {0, 2}), F3);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].raw(), 0u);
  r = roots_in_context(P::from_ints(F3, {1, 0, 1}), F9);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].raw(), 3u);  // x
  EXPECT_EQ(r[1].raw(), 6u);  // 2x
  EXPECT_TRUE(roots_in_context(P::from_ints(F3, {1, 0, 1}), F3).empty());
  const auto F5 = build_prime_field(5);
  try {
    roots_in_context(P::from_ints(F5, {1, 1}), F9);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASubfield);
  }
}

TEST(Roots, SplittingFieldGivesFullMultiset) {
  const auto F5 = build_prime_field(5);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const P f = oracle::random_polynomial(F5, 1 + static_cast<int>(rng() % 6), rng);
    const auto ext = oracle::splitting_field(f);
    const auto roots = roots_in_context(f, ext);
    ASSERT_EQ(static_cast<int>(roots.size()), f.degree());
    for (const auto& a : roots) ASSERT_TRUE(evaluate(f, a).is_zero());
  }
  // Large extension: the equal-degree splitting path.
  const auto E = build_extension(F5, 7);
  const P f = P::from_ints(F5, {2, 1, 0, 0, 0, 0, 0, 1});
  if (is_irreducible(f)) {
    EXPECT_EQ(roots_in_context(f, E).size(), 7u);
  }
}

TEST(Stickelberger, Examples) {
  const auto F3 = build_prime_field(3);
  const auto F5 = build_prime_field(5);
  auto s = stickelberger_check(P::from_ints(F3, {1, 0, 1}));
  EXPECT_TRUE(s.applicable);
  EXPECT_TRUE(s.consistent);
  EXPECT_EQ(s.disc_char, -1);
  EXPECT_FALSE(s.parity_match);
  s = stickelberger_check(P::from_ints(F5, {-1, 1}) * P::from_ints(F5, {-2, 1}));
  EXPECT_TRUE(s.consistent);
  EXPECT_EQ(s.disc_char, 1);
  s = stickelberger_check(P::from_ints(F5, {1, -2, 1}));
  EXPECT_FALSE(s.applicable);
  EXPECT_FALSE(s.consistent);
  EXPECT_EQ(s.disc_char, 0);
}

}  // namespace
}  // namespace stabpoly
