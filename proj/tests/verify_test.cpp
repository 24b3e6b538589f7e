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

#include "stabpoly/extension.hpp"
#include "stabpoly/verify.hpp"

namespace stabpoly {
namespace {

TEST(Verify, SmallSuitesPass) {
  const auto F3 = build_prime_field(3);
  const auto F5 = build_prime_field(5);
  const auto F9 = build_field(3, 2);
  const verify::SuiteResult runs[] = {
      verify::stickelberger(F3, 4),
      verify::stickelberger(F9, 3),
      verify::cubic_char3(F3),
      verify::lemma42(F9),
      verify::resultant_identities(F5, 1, 50),
      verify::norm_identity(F3, 2),
      verify::norm_identity(F5, 3),
      verify::counterexample(F9, 5, FieldElement(F9, 1)),
      verify::quadratic_iff(F5),
      verify::soundness(F3, 2, 3),
      verify::orbit_equivalence(F9, 2, 100),
  };
  for (const auto& r : runs) {
    EXPECT_TRUE(r.ok()) << r.suite << " " << r.field << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checked, 0u) << r.suite;
  }
}

TEST(Verify, QuadraticIffListsStable) {
  const auto r = verify::quadratic_iff(build_prime_field(3));
  EXPECT_EQ(r.tallies.at("stable"), 1u);
  EXPECT_EQ(r.details["stable"].dump(), R"(["1,0,1"])");
}

TEST(Verify, JsonShape) {
  const auto r = verify::cubic_char3(build_prime_field(3));
  EXPECT_EQ(r.checked, 18u);
  const auto j = verify::to_json(r, false);
  EXPECT_EQ(j["kind"], "verify");
  EXPECT_EQ(j["suite"], "cubic-char3");
  EXPECT_EQ(j["violations"], 0);
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_TRUE(verify::to_json(r, true).contains("seconds"));
}

TEST(Verify, FailureListIsBounded) {
  verify::SuiteResult r;
  for (int i = 0; i < 25; ++i) r.fail("x");
  EXPECT_EQ(r.violations, 25u);
  EXPECT_EQ(r.failures.size(), verify::kMaxListedFailures);
  EXPECT_FALSE(r.ok());
}

}  // namespace
}  // namespace stabpoly
