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
 * @file census.hpp
 * @brief Exhaustive sweeps over all degree-d polynomials over F_q.
 *
 * Polynomials are indexed lexicographically by (a_0, ..., a_d) with a_0 most
 * significant and a_d (nonzero, or 1 when monic) least significant. Work is
 * split into contiguous index ranges, one per thread, and the per-range
 * counts are summed, so the result does not depend on the job count.
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "stabpoly/dynamics.hpp"
#include "stabpoly/field.hpp"
#include "stabpoly/polynomial.hpp"

namespace stabpoly {

/// Default refusal threshold on the number of polynomials in one sweep.
inline constexpr std::uint64_t kDefaultMaxPopulation = 20'000'000;

/// Index space of degree-d polynomials, optionally with some coefficients
/// pinned to zero.
class PolynomialSpace {
 public:
  PolynomialSpace(FieldRef field, int d, bool monic, std::vector<int> zero_coefficients = {})
      : field_(std::move(field)), d_(d), monic_(monic) {
    if (d < 2) throw Error(ErrorKind::WrongDegree, "enumeration needs degree >= 2");
    for (int i = d - 1; i >= 0; --i) {
      if (std::find(zero_coefficients.begin(), zero_coefficients.end(), i) == zero_coefficients.end()) free_.push_back(i);
    }
    for (int z : zero_coefficients) {
      if (z < 0 || z >= d) throw Error(ErrorKind::PreconditionViolated, "pinned coefficient index must be in [0, d)");
    }
    const std::uint64_t q = field_->order();
    unsigned __int128 n = monic ? 1 : q - 1;
    for (std::size_t i = 0; i < free_.size(); ++i) {
      n *= q;
      if (n > (static_cast<unsigned __int128>(1) << 62)) throw Error(ErrorKind::BudgetExceeded, "population too large");
    }
    size_ = static_cast<std::uint64_t>(n);
  }

  std::uint64_t size() const noexcept { return size_; }
  const FieldRef& field() const noexcept { return field_; }
  int degree() const noexcept { return d_; }
  bool monic() const noexcept { return monic_; }

  Polynomial at(std::uint64_t index) const {
    const std::uint64_t q = field_->order();
    std::vector<Elem> c(static_cast<std::size_t>(d_) + 1, 0);
    if (monic_) {
      c.back() = 1;
    } else {
      c.back() = 1 + index % (q - 1);
      index /= q - 1;
    }
    for (int pos : free_) {  // a_{d-1} varies fastest, a_0 slowest
      c[static_cast<std::size_t>(pos)] = index % q;
      index /= q;
    }
    return {field_, std::move(c)};
  }

 private:
  FieldRef field_;
  int d_;
  bool monic_;
  std::vector<int> free_;
  std::uint64_t size_ = 0;
};

/// All degree-d polynomials in enumeration order.
inline std::vector<Polynomial> enumerate_polynomials(const FieldRef& field, int d, bool monic) {
  const PolynomialSpace space(field, d, monic);
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(space.size()));
  for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.at(i));
  return out;
}

inline double bound_exponent(int d) { return d + 1.0 - 1.0 / std::log(2.0 * d * d); }

/// q^{d + 1 - 1/ln(2 d^2)}: a reference scale, not a threshold.
inline double bound_reference(std::uint64_t q, int d) {
  if (q < 3 || d < 2) throw Error(ErrorKind::PreconditionViolated, "bound reference needs q >= 3, d >= 2");
  return std::pow(static_cast<double>(q), bound_exponent(d));
}

struct CensusOptions {
  int depth = 5;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::size_t degree_cap = kDefaultDegreeCap;
  std::uint64_t max_population = kDefaultMaxPopulation;
  std::uint64_t orbit_budget = kDefaultOrbitBudget;
  std::vector<int> zero_coefficients;
  bool collect_survivors = false;
};

struct CensusCounts {
  std::uint64_t stable = 0;
  std::uint64_t candidate = 0;
  std::uint64_t not_stable = 0;
  std::uint64_t inapplicable = 0;
  /// Stable or CandidateStable by the character criterion alone.
  std::uint64_t criterion_survivors = 0;
  /// Criterion survivors with f^(1..depth) all irreducible.
  std::uint64_t verified_survivors = 0;
  /// Inapplicable items with f^(1..depth) all irreducible.
  std::uint64_t inapplicable_survivors = 0;
  /// Items moved to NotStable by the direct check.
  std::uint64_t demoted = 0;
  /// d = 2 items on which the residue and critical-point routes disagree.
  std::uint64_t route_disagreements = 0;
  /// d = 2 items with criterion Stable but a reducible iterate.
  std::uint64_t contradictions = 0;

  CensusCounts& operator+=(const CensusCounts& o) {
    stable += o.stable;
    candidate += o.candidate;
    not_stable += o.not_stable;
    inapplicable += o.inapplicable;
    criterion_survivors += o.criterion_survivors;
    verified_survivors += o.verified_survivors;
    inapplicable_survivors += o.inapplicable_survivors;
    demoted += o.demoted;
    route_disagreements += o.route_disagreements;
    contradictions += o.contradictions;
    return *this;
  }
  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

struct CensusResult {
  FieldRef field;
  int d = 0;
  bool monic = false;
  std::vector<int> zero_coefficients;
  std::uint64_t population = 0;
  CensusCounts counts;
  int depth_requested = 0;
  int depth = 0;  // effective, after clamping to the degree cap
  std::size_t degree_cap = 0;
  double bound_reference = 0.0;
  double seconds = 0.0;
  /// Final Stable / CandidateStable items in enumeration order (if collected).
  std::vector<Polynomial> survivors;
};

struct CensusItem {
  Verdict criterion = Verdict::Inapplicable;
  Verdict verdict = Verdict::Inapplicable;
};

/// Classifies one polynomial and adds it to the counts.
inline CensusItem census_classify(const Polynomial& f, int depth, std::size_t cap, std::uint64_t budget,
                                  CensusCounts& c) {
  CensusItem item;
  const StabilityReport r = necessary_condition_test(f, budget);
  item.criterion = item.verdict = r.verdict;
  if (f.degree() == 2 && r.verdict != Verdict::Inapplicable) {
    if (quadratic_stability_test(f, budget).verdict != r.verdict) ++c.route_disagreements;
  }
  const bool survivor = r.verdict == Verdict::Stable || r.verdict == Verdict::CandidateStable;
  if (survivor) ++c.criterion_survivors;
  if (r.verdict != Verdict::NotStable && depth > 0) {
    const DirectCheck dc = direct_iterate_check(f, depth, cap);
    if (dc.first_reducible) {
      if (r.verdict == Verdict::Stable) ++c.contradictions;
      ++c.demoted;
      item.verdict = Verdict::NotStable;
    } else if (survivor) {
      ++c.verified_survivors;
    } else {
      ++c.inapplicable_survivors;
    }
  }
  switch (item.verdict) {
    case Verdict::Stable: ++c.stable; break;
    case Verdict::CandidateStable: ++c.candidate; break;
    case Verdict::NotStable: ++c.not_stable; break;
    case Verdict::Inapplicable: ++c.inapplicable; break;
  }
  return item;
}

inline CensusResult stability_census(const FieldRef& field, int d, bool monic, const CensusOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const PolynomialSpace space(field, d, monic, opts.zero_coefficients);
  if (space.size() > opts.max_population) {
    throw Error(ErrorKind::BudgetExceeded, "population " + std::to_string(space.size()) + " exceeds the limit");
  }
  CensusResult res;
  res.field = field;
  res.d = d;
  res.monic = monic;
  res.zero_coefficients = opts.zero_coefficients;
  std::sort(res.zero_coefficients.begin(), res.zero_coefficients.end());
  res.population = space.size();
  res.depth_requested = opts.depth;
  res.depth = std::max(0, std::min(opts.depth, max_direct_depth(d, opts.degree_cap)));
  res.degree_cap = opts.degree_cap;
  res.bound_reference = bound_reference(field->order(), d);

  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(1, space.size())));
  std::vector<CensusCounts> counts(jobs);
  std::vector<std::vector<Polynomial>> survivors(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned j) {
    try {
      const std::uint64_t lo = space.size() * j / jobs;
      const std::uint64_t hi = space.size() * (j + 1) / jobs;
      for (std::uint64_t i = lo; i < hi; ++i) {
        const Polynomial f = space.at(i);
        const CensusItem item = census_classify(f, res.depth, opts.degree_cap, opts.orbit_budget, counts[j]);
        if (opts.collect_survivors && (item.verdict == Verdict::Stable || item.verdict == Verdict::CandidateStable)) {
          survivors[j].push_back(f);
        }
      }
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  for (unsigned j = 0; j < jobs; ++j) {
    if (errors[j]) std::rethrow_exception(errors[j]);
    res.counts += counts[j];
    for (auto& f : survivors[j]) res.survivors.push_back(std::move(f));
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace stabpoly
