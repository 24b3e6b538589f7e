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
 * @file dynamics.hpp
 * @brief Critical orbits and stability criteria for iterated polynomials.
 *
 * For f of degree d with derivative f' of degree k >= 1, the quantity
 * v_n = prod_i f^(n)(gamma_i) over the roots gamma_i of f' (with
 * multiplicity) only depends on t_n = f^(n) mod f', because f'(gamma_i) = 0.
 * The residues obey t_{n+1} = f(t_n) mod f', a self-map of the finite ring
 * F_q[X]/(f'), so the sequence is eventually periodic. Detecting the cycle
 * (Brent) turns "for all n >= 1" into a finite walk over tail + cycle, and
 * v_n is read off t_n through a resultant against f' without ever finding
 * gamma_i or building f^(n).
 *
 * Stable polynomials have uniform quadratic characters on the adjusted
 * values:
 *   even d: (-1)^{d/2} a_d^k v_1 and a_d^k v_n (n > 1) are nonsquares;
 *   odd d:  (-1)^{(d-1)/2+k} (k+1) a_{k+1} a_d^{nk+1} v_n are squares.
 * For d = 2 the condition is also sufficient; for d >= 3 it is necessary
 * only, so passing it yields CandidateStable.
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabpoly/extension.hpp"
#include "stabpoly/factor.hpp"
#include "stabpoly/field.hpp"
#include "stabpoly/polynomial.hpp"

namespace stabpoly {

enum class Verdict { Stable, NotStable, CandidateStable, Inapplicable };

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Stable: return "Stable";
    case Verdict::NotStable: return "NotStable";
    case Verdict::CandidateStable: return "CandidateStable";
    case Verdict::Inapplicable: return "Inapplicable";
  }
  return "Unknown";
}

/// Upper bound on residue-orbit steps before giving up.
inline constexpr std::uint64_t kDefaultOrbitBudget = 10'000'000;

struct OrbitRecord {
  std::uint64_t n = 0;
  Polynomial residue;  // t_n = f^(n) mod f'
  FieldElement value;  // v_n
  std::uint64_t tail_length = 0;
  std::uint64_t cycle_length = 0;
};

namespace detail {

struct CriticalData {
  Polynomial fp;
  int d = 0;
  int k = 0;
};

inline CriticalData critical_data(const Polynomial& f) {
  CriticalData c;
  c.d = f.degree();
  c.fp = derivative(f);
  if (c.fp.is_zero()) throw Error(ErrorKind::ZeroDerivative, "f' = 0");
  c.k = c.fp.degree();
  if (c.k == 0) throw Error(ErrorKind::ConstantDerivative, "f' is constant");
  return c;
}

/// prod_{fp(g)=0} t(g) = (-1)^{k deg t} lc(fp)^{-deg t} Res(t, fp).
inline Elem critical_product(const Polynomial& t, const Polynomial& fp) {
  const FieldCtx& F = fp.ctx();
  if (t.is_zero()) return 0;
  const int k = fp.degree();
  if (t.degree() == 0) return F.pow(t.coeff(0), static_cast<std::uint64_t>(k));
  const int dt = t.degree();
  Elem v = F.mul(resultant(t, fp).raw(), F.pow_signed(fp.leading(), -dt));
  if ((k & 1) && (dt & 1)) v = F.neg(v);
  return v;
}

/// (base * n + add) mod m without overflow.
inline std::uint64_t affine_mod(std::uint64_t n, std::uint64_t base, std::uint64_t add, std::uint64_t m) {
  const auto r = (static_cast<unsigned __int128>(n % m) * base + add) % m;
  return static_cast<std::uint64_t>(r);
}

/// Brent cycle detection on x0, step(x0), ... : returns (mu, lambda).
template <class State, class Step>
std::pair<std::uint64_t, std::uint64_t> brent(const State& x0, Step step, std::uint64_t budget) {
  std::uint64_t power = 1;
  std::uint64_t lam = 1;
  std::uint64_t steps = 0;
  State tortoise = x0;
  State hare = step(x0);
  while (!(tortoise == hare)) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = step(hare);
    ++lam;
    if (++steps > budget) throw Error(ErrorKind::BudgetExceeded, "orbit did not close within the step budget");
  }
  tortoise = x0;
  hare = x0;
  for (std::uint64_t i = 0; i < lam; ++i) hare = step(hare);
  std::uint64_t mu = 0;
  while (!(tortoise == hare)) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  return {mu, lam};
}

}  // namespace detail

/// Lazy walk t_1, t_2, ... of the critical residues.
class ResidueOrbit {
 public:
  explicit ResidueOrbit(const Polynomial& f) : f_(f), data_(detail::critical_data(f)), t_(f % data_.fp) {}

  std::uint64_t index() const noexcept { return n_; }
  const Polynomial& residue() const noexcept { return t_; }
  FieldElement value() const { return {f_.field(), detail::critical_product(t_, data_.fp)}; }
  const Polynomial& derivative_poly() const noexcept { return data_.fp; }

  void advance() {
    t_ = compose_mod(f_, t_, data_.fp);
    ++n_;
  }

 private:
  Polynomial f_;
  detail::CriticalData data_;
  Polynomial t_;
  std::uint64_t n_ = 1;
};

/// Records n = 1 .. tail + cycle of the critical residue orbit; every
/// larger n maps into the cycle.
class CriticalOrbit {
 public:
  CriticalOrbit(Polynomial f, std::vector<OrbitRecord> records, std::uint64_t tail, std::uint64_t cycle, int d, int k)
      : f_(std::move(f)), records_(std::move(records)), tail_(tail), cycle_(cycle), d_(d), k_(k) {}

  const Polynomial& polynomial() const noexcept { return f_; }
  const std::vector<OrbitRecord>& records() const noexcept { return records_; }
  std::uint64_t tail_length() const noexcept { return tail_; }
  std::uint64_t cycle_length() const noexcept { return cycle_; }
  int degree() const noexcept { return d_; }
  int derivative_degree() const noexcept { return k_; }

  /// Index in 1 .. tail + cycle carrying the same residue as n.
  std::uint64_t canonical_index(std::uint64_t n) const {
    if (n == 0) throw Error(ErrorKind::PreconditionViolated, "orbit index starts at 1");
    if (n <= tail_ + cycle_) return n;
    return tail_ + 1 + (n - tail_ - 1) % cycle_;
  }

  const OrbitRecord& at(std::uint64_t n) const { return records_[canonical_index(n) - 1]; }

 private:
  Polynomial f_;
  std::vector<OrbitRecord> records_;
  std::uint64_t tail_;
  std::uint64_t cycle_;
  int d_;
  int k_;
};

inline CriticalOrbit critical_residue_orbit(const Polynomial& f, std::uint64_t budget = kDefaultOrbitBudget) {
  const auto data = detail::critical_data(f);
  const Polynomial t1 = f % data.fp;
  auto step = [&](const Polynomial& t) { return compose_mod(f, t, data.fp); };
  const auto [mu, lam] = detail::brent(t1, step, budget);
  std::vector<OrbitRecord> records;
  records.reserve(static_cast<std::size_t>(mu + lam));
  Polynomial t = t1;
  for (std::uint64_t n = 1; n <= mu + lam; ++n) {
    records.push_back({n, t, FieldElement(f.field(), detail::critical_product(t, data.fp)), mu, lam});
    if (n < mu + lam) t = step(t);
  }
  return {f, std::move(records), mu, lam, f.degree(), data.k};
}

struct CriterionValue {
  std::uint64_t n = 0;
  FieldElement element;
  int character = 0;
};

struct OrbitSets {
  bool even_degree = false;
  int d = 0;
  int k = 0;
  std::uint64_t tail_length = 0;
  std::uint64_t cycle_length = 0;
  /// Elements for n = 1 .. N, where N covers every character class of
  /// every n >= 1.
  std::vector<CriterionValue> values;
};

namespace detail {

/// Adjusted set element for index n given v_n (see file comment).
inline Elem orbit_set_element(const Polynomial& f, int k, std::uint64_t n, Elem v) {
  const FieldCtx& F = f.ctx();
  const int d = f.degree();
  const Elem ad = f.leading();
  const Elem adk = F.pow(ad, static_cast<std::uint64_t>(k));
  if (d % 2 == 0) {
    Elem e = F.mul(adk, v);
    if (n == 1 && (d / 2) % 2 == 1) e = F.neg(e);
    return e;
  }
  const std::uint64_t m = F.order() - 1;
  const std::uint64_t exp = affine_mod(n, static_cast<std::uint64_t>(k) % m, 1, m);
  const Elem lc_fp = F.mul(F.from_int(k + 1), f.coeff(static_cast<std::size_t>(k) + 1));
  Elem e = F.mul(F.mul(lc_fp, F.pow(ad, exp)), v);
  if ((((d - 1) / 2) + k) % 2 == 1) e = F.neg(e);
  return e;
}

/// Number of indices to walk so that every n >= 1 is represented.
inline std::uint64_t orbit_set_span(const Polynomial& f, int k, std::uint64_t mu, std::uint64_t lam) {
  if (f.degree() % 2 == 0) return mu + lam + (mu == 0 ? 1 : 0);
  const bool alternating = (k % 2 == 1) && f.ctx().quadratic_character(f.leading()) == -1;
  return mu + ((alternating && lam % 2 == 1) ? 2 * lam : lam);
}

}  // namespace detail

inline OrbitSets orbit_sets(const Polynomial& f, std::uint64_t budget = kDefaultOrbitBudget) {
  if (f.degree() < 2) throw Error(ErrorKind::WrongDegree, "orbit sets need degree >= 2");
  const CriticalOrbit orbit = critical_residue_orbit(f, budget);
  OrbitSets out;
  out.d = f.degree();
  out.k = orbit.derivative_degree();
  out.even_degree = out.d % 2 == 0;
  out.tail_length = orbit.tail_length();
  out.cycle_length = orbit.cycle_length();
  const std::uint64_t span = detail::orbit_set_span(f, out.k, out.tail_length, out.cycle_length);
  out.values.reserve(static_cast<std::size_t>(span));
  for (std::uint64_t n = 1; n <= span; ++n) {
    const Elem e = detail::orbit_set_element(f, out.k, n, orbit.at(n).value.raw());
    out.values.push_back({n, FieldElement(f.field(), e), f.ctx().quadratic_character(e)});
  }
  return out;
}

struct Witness {
  std::uint64_t n = 0;
  std::string reason;
};

struct StabilityReport {
  Polynomial poly;
  Verdict verdict = Verdict::Inapplicable;
  /// Verdict of the character criterion alone, before any direct check.
  Verdict criterion_verdict = Verdict::Inapplicable;
  std::optional<Witness> witness;
  std::vector<CriterionValue> criterion_values;
  std::uint64_t tail_length = 0;
  std::uint64_t cycle_length = 0;
  /// Largest n with f^(1..n) directly verified irreducible.
  int depth_verified = 0;
  std::optional<int> first_reducible;
  std::string applicability;
  std::vector<std::string> notes;
};

namespace detail {

inline std::string failure_reason(int character, bool even) {
  if (character == 0) return "critical orbit hits a root: f^(n) has a root in F_{q^k}";
  return even ? "criterion element is a square" : "criterion element is a nonsquare";
}

inline void apply_criterion(StabilityReport& r, const std::vector<CriterionValue>& values, bool even, int d) {
  const int want = even ? -1 : 1;
  for (const auto& cv : values) {
    if (cv.character != want) {
      r.verdict = Verdict::NotStable;
      r.witness = Witness{cv.n, failure_reason(cv.character, even)};
      break;
    }
  }
  if (!r.witness) r.verdict = d == 2 ? Verdict::Stable : Verdict::CandidateStable;
  r.criterion_verdict = r.verdict;
}

}  // namespace detail

/// Character criterion over the whole (eventually periodic) critical orbit.
inline StabilityReport necessary_condition_test(const Polynomial& f, std::uint64_t budget = kDefaultOrbitBudget) {
  const int d = f.degree();
  if (d < 2) throw Error(ErrorKind::WrongDegree, "stability needs degree >= 2");
  StabilityReport r;
  r.poly = f;
  const Polynomial fp = derivative(f);
  if (fp.degree() < 1) {
    r.verdict = r.criterion_verdict = Verdict::Inapplicable;
    r.applicability = fp.is_zero() ? "f' = 0: criterion hypotheses violated" : "f' constant: criterion hypotheses violated";
    return r;
  }
  const OrbitSets sets = orbit_sets(f, budget);
  r.tail_length = sets.tail_length;
  r.cycle_length = sets.cycle_length;
  r.criterion_values = sets.values;
  r.applicability = d == 2 ? "d = 2: criterion is necessary and sufficient"
                           : "d >= 3: criterion is necessary only";
  detail::apply_criterion(r, sets.values, sets.even_degree, d);
  return r;
}

/// Quadratic test on the orbit of the critical point gamma = -a_1/(2 a_2):
/// Stable iff -a_2 f(gamma) and a_2 f^(n)(gamma), n >= 2, are all nonsquares.
inline StabilityReport quadratic_stability_test(const Polynomial& f, std::uint64_t budget = kDefaultOrbitBudget) {
  if (f.degree() != 2) throw Error(ErrorKind::WrongDegree, "quadratic test needs degree 2");
  const FieldCtx& F = f.ctx();
  const Elem a2 = f.coeff(2);
  const Elem gamma = F.neg(F.div(f.coeff(1), F.add(a2, a2)));
  auto step = [&](Elem x) { return F.add(F.mul(F.add(F.mul(a2, x), f.coeff(1)), x), f.coeff(0)); };
  const Elem u1 = step(gamma);
  const auto [mu, lam] = detail::brent(u1, step, budget);
  const std::uint64_t span = mu + lam + (mu == 0 ? 1 : 0);

  StabilityReport r;
  r.poly = f;
  r.tail_length = mu;
  r.cycle_length = lam;
  r.applicability = "d = 2: criterion is necessary and sufficient";
  Elem u = u1;
  for (std::uint64_t n = 1; n <= span; ++n) {
    Elem e = F.mul(a2, u);
    if (n == 1) e = F.neg(e);
    r.criterion_values.push_back({n, FieldElement(f.field(), e), F.quadratic_character(e)});
    u = step(u);
  }
  detail::apply_criterion(r, r.criterion_values, true, 2);
  return r;
}

struct DirectCheck {
  int depth_verified = 0;
  std::optional<int> first_reducible;
};

/// Builds f^(1..n_max) and tests each for irreducibility.
inline DirectCheck direct_iterate_check(const Polynomial& f, int n_max, std::size_t cap = kDefaultDegreeCap) {
  const int d = f.degree();
  if (d < 2) throw Error(ErrorKind::WrongDegree, "iterates need degree >= 2");
  std::uint64_t deg = 1;
  for (int i = 0; i < n_max; ++i) {
    deg *= static_cast<std::uint64_t>(d);
    if (deg > cap) throw Error(ErrorKind::DegreeCapExceeded, "d^n_max exceeds the degree cap");
  }
  DirectCheck out;
  Polynomial it = f;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) it = compose(it, f, cap);
    if (!is_irreducible(it)) {
      out.first_reducible = n;
      return out;
    }
    out.depth_verified = n;
  }
  return out;
}

/// Largest n with d^n <= cap.
inline int max_direct_depth(int d, std::size_t cap) {
  int n = 0;
  std::uint64_t deg = 1;
  while (deg * static_cast<std::uint64_t>(d) <= cap) {
    deg *= static_cast<std::uint64_t>(d);
    ++n;
  }
  return n;
}

/// Criterion plus a direct check to `depth` (clamped to the cap). A reducible
/// iterate demotes Stable/CandidateStable/Inapplicable to NotStable; the
/// criterion verdict is kept alongside.
inline StabilityReport stability_report(const Polynomial& f, int depth, std::size_t cap = kDefaultDegreeCap,
                                        std::uint64_t budget = kDefaultOrbitBudget) {
  StabilityReport r = necessary_condition_test(f, budget);
  if (f.degree() == 2) {
    const StabilityReport q = quadratic_stability_test(f, budget);
    if (q.verdict != r.verdict) r.notes.push_back("critical-point route disagrees with residue route");
  }
  const int n_max = std::min(depth, max_direct_depth(f.degree(), cap));
  if (n_max <= 0) return r;
  const DirectCheck dc = direct_iterate_check(f, n_max, cap);
  r.depth_verified = dc.depth_verified;
  r.first_reducible = dc.first_reducible;
  if (dc.first_reducible && r.verdict != Verdict::NotStable) {
    const auto n = static_cast<std::uint64_t>(*dc.first_reducible);
    if (r.verdict == Verdict::CandidateStable) {
      r.notes.push_back("converse failure: criterion holds for all n but f^(" + std::to_string(n) +
                        ") is reducible");
    } else if (r.verdict == Verdict::Stable) {
      r.notes.push_back("contradiction: quadratic criterion passed but f^(" + std::to_string(n) + ") is reducible");
    }
    r.verdict = Verdict::NotStable;
    r.witness = Witness{n, "f^(" + std::to_string(n) + ") is reducible (direct check)"};
  }
  return r;
}

enum class ResultantMethod { Explicit, Orbit };

/// even d: a_d^k Res(f^(n), f');  odd d: (-1)^{(d-1)/2} a_d^{nk+1} Res(f^(n), f').
inline FieldElement adjusted_resultant(const Polynomial& f, std::uint64_t n, ResultantMethod method,
                                       std::size_t cap = kDefaultDegreeCap,
                                       std::uint64_t budget = kDefaultOrbitBudget) {
  const int d = f.degree();
  if (d < 2) throw Error(ErrorKind::WrongDegree, "adjusted resultant needs degree >= 2");
  if (n < 1) throw Error(ErrorKind::PreconditionViolated, "iterate index starts at 1");
  const auto data = detail::critical_data(f);
  const FieldCtx& F = f.ctx();
  const std::uint64_t m = F.order() - 1;
  Elem res = 0;
  if (method == ResultantMethod::Explicit) {
    Polynomial it = f;
    for (std::uint64_t i = 1; i < n; ++i) it = compose(it, f, cap);
    res = resultant(it, data.fp).raw();
  } else {
    const CriticalOrbit orbit = critical_residue_orbit(f, budget);
    const Elem v = orbit.at(n).value.raw();
    // Res(f^(n), f') = (-1)^{d^n k} lc(f')^{d^n} v_n
    const std::uint64_t dn = detail::pow_mod(static_cast<std::uint64_t>(d), n, m);
    res = F.mul(F.pow(data.fp.leading(), dn == 0 ? m : dn), v);
    if ((d & 1) && (data.k & 1)) res = F.neg(res);
  }
  const Elem ad = f.leading();
  if (d % 2 == 0) return {f.field(), F.mul(F.pow(ad, static_cast<std::uint64_t>(data.k)), res)};
  const std::uint64_t exp = detail::affine_mod(n, static_cast<std::uint64_t>(data.k) % m, 1, m);
  Elem out = F.mul(F.pow(ad, exp), res);
  if (((d - 1) / 2) % 2 == 1) out = F.neg(out);
  return {f.field(), out};
}

struct NormIdentity {
  FieldElement lhs;  // prod over roots alpha of f^(n-1) of Disc(f - alpha)
  FieldElement rhs;  // A^{-k} C_f^{d^{n-1}} Res(f^(n), f'), A = lc f^(n-1)
  bool holds = false;
};

inline NormIdentity norm_identity_check(const Polynomial& f, int n, std::size_t cap = kDefaultDegreeCap) {
  const int d = f.degree();
  if (d < 2 || n < 2) throw Error(ErrorKind::PreconditionViolated, "norm identity needs d >= 2 and n >= 2");
  const Polynomial fp = derivative(f);
  if (fp.is_zero()) throw Error(ErrorKind::ZeroDerivative, "f' = 0");
  std::uint64_t deg = 1;
  for (int i = 0; i < n; ++i) {
    deg *= static_cast<std::uint64_t>(d);
    if (deg > cap) throw Error(ErrorKind::DegreeCapExceeded, "d^n exceeds the degree cap");
  }
  Polynomial prev = f;  // f^(n-1)
  for (int i = 2; i < n; ++i) prev = compose(prev, f, cap);
  if (!is_irreducible(prev)) throw Error(ErrorKind::ReducibleIterate, "f^(n-1) is reducible");
  const Polynomial full = compose(prev, f, cap);

  const FieldRef& F = f.field();
  const auto D = static_cast<unsigned>(prev.degree());
  const FieldRef ext = build_extension(F, D);
  const auto alphas = roots_in_context(prev, ext);
  const Polynomial fe = with_field(f, ext);
  FieldElement prod(ext, 1);
  for (const auto& alpha : alphas) {
    const Polynomial shifted = fe - Polynomial::constant(ext, alpha.raw());
    prod *= discriminant(shifted).value;
  }

  const FieldCtx& Fq = *F;
  const int k = fp.degree();
  Elem cf = Fq.pow_signed(f.leading(), d - k - 2);
  if ((static_cast<std::int64_t>(d) * (d - 1) / 2) % 2 != 0) cf = Fq.neg(cf);
  const Elem A = prev.leading();
  Elem rhs = Fq.mul(Fq.pow_signed(A, -k), Fq.pow(cf, D));
  rhs = Fq.mul(rhs, resultant(full, fp).raw());

  NormIdentity out;
  out.rhs = FieldElement(F, rhs);
  out.holds = alphas.size() == D && Fq.contains(prod.raw()) && prod.raw() == rhs;
  out.lhs = Fq.contains(prod.raw()) ? FieldElement(F, prod.raw()) : prod;
  return out;
}

namespace detail {

inline void require_char3_cubic(const Polynomial& f) {
  if (f.ctx().characteristic() != 3) throw Error(ErrorKind::WrongCharacteristic, "characteristic 3 required");
  if (f.degree() != 3) throw Error(ErrorKind::WrongDegree, "cubic required");
}

}  // namespace detail

/// Irreducibility of a cubic over F_{3^s} from traces and square roots. For
/// monic X^3 - a_2 X^2 - a_1 X - a_0:
///  - a_2 = 0, a_1 != 0: irreducible iff a_1 = b^2 and Tr(a_0 / b^3) != 0;
///  - a_2 = 0, a_1 = 0: X^3 - a_0 is a cube, reducible;
///  - a_2 != 0: with D = a_2^2 a_1^2 + a_1^3 - a_0 a_2^3, reducible if D = 0,
///    else irreducible iff a_2^4 / D = b^2 and Tr(1 / (a_2 b)) != 0.
inline bool cubic_char3_irreducible(const Polynomial& f) {
  detail::require_char3_cubic(f);
  const Polynomial g = make_monic(f);
  const FieldRef& F = g.field();
  const FieldCtx& K = *F;
  const FieldRef prime = prime_subfield(F);
  const Elem a2 = K.neg(g.coeff(2));
  const Elem a1 = K.neg(g.coeff(1));
  const Elem a0 = K.neg(g.coeff(0));
  auto trace_nonzero = [&](Elem x) { return !trace_to_subfield(FieldElement(F, x), prime).is_zero(); };

  if (a2 == 0) {
    if (a1 == 0) return false;
    const auto b = K.sqrt(a1);
    if (!b) return false;
    return trace_nonzero(K.div(a0, K.pow(*b, 3)));
  }
  const Elem a2sq = K.sqr(a2);
  Elem D = K.mul(a2sq, K.sqr(a1));
  D = K.add(D, K.pow(a1, 3));
  D = K.sub(D, K.mul(a0, K.mul(a2sq, a2)));
  if (D == 0) return false;
  const auto b = K.sqrt(K.div(K.sqr(a2sq), D));
  if (!b) return false;
  return trace_nonzero(K.inv(K.mul(a2, *b)));
}

struct CubicTheoremCheck {
  std::vector<int> reducible_at;  // subset of {1, 2, 3}
  bool theorem_holds = false;     // reducible_at is nonempty
};

/// For a_3 X^3 - a_1 X - a_0 in characteristic 3, tests f, f^(2), f^(3)
/// directly; at least one must be reducible.
inline CubicTheoremCheck cubic_char3_theorem_check(const Polynomial& f) {
  detail::require_char3_cubic(f);
  if (f.coeff(2) != 0) throw Error(ErrorKind::WrongShape, "X^2 coefficient must vanish");
  CubicTheoremCheck out;
  Polynomial it = f;
  for (int n = 1; n <= 3; ++n) {
    if (n > 1) it = compose(it, f);
    if (!is_irreducible(it)) out.reducible_at.push_back(n);
  }
  out.theorem_holds = !out.reducible_at.empty();
  return out;
}

struct ConverseCertificate {
  Polynomial f;
  std::uint64_t inverse_exponent = 0;  // e with e d = 1 mod (q - 1)
  FieldElement root;                   // a0 - a0^e
  bool root_verified = false;
  std::vector<CriterionValue> s2;
  bool s2_all_squares = false;
  bool f_reducible = false;
};

/// f = (X - a0)^d + a0 over F_q with q = p^s, s even, gcd(d, q - 1) =
/// gcd(d, p) = 1 and a0 a nonzero square: passes the odd-degree criterion for
/// every n yet has the root a0 - a0^e.
inline ConverseCertificate converse_counterexample(const FieldRef& ctx, int d, const FieldElement& a0) {
  if (!same_field(*ctx, a0.ctx())) throw Error(ErrorKind::ContextMismatch, "a0 not in the field");
  const std::uint64_t q = ctx->order();
  const std::uint64_t p = ctx->characteristic();
  if (d < 2) throw Error(ErrorKind::PreconditionViolated, "degree must be >= 2");
  const auto ud = static_cast<std::uint64_t>(d);
  if (std::gcd(ud, q - 1) != 1) throw Error(ErrorKind::PreconditionViolated, "gcd(d, q-1) != 1");
  if (std::gcd(ud, p) != 1) throw Error(ErrorKind::PreconditionViolated, "gcd(d, p) != 1");
  if (ctx->absolute_degree() % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "field must have even degree over F_p");
  if (a0.quadratic_character() != 1) throw Error(ErrorKind::PreconditionViolated, "a0 must be a nonzero square");

  const FieldCtx& F = *ctx;
  const Polynomial lin(ctx, std::vector<Elem>{F.neg(a0.raw()), 1});
  Polynomial f = Polynomial::constant(ctx, 1);
  for (int i = 0; i < d; ++i) f = f * lin;
  f = f + Polynomial::constant(ctx, a0.raw());

  ConverseCertificate out;
  out.f = f;
  std::uint64_t e = 1;
  while (detail::mul_mod(e, ud, q - 1) != 1 % (q - 1)) ++e;
  out.inverse_exponent = e;
  out.root = a0 - a0.pow(static_cast<std::int64_t>(e));
  out.root_verified = evaluate(f, out.root).is_zero();
  const OrbitSets sets = orbit_sets(f);
  out.s2 = sets.values;
  out.s2_all_squares = true;
  for (const auto& cv : sets.values) out.s2_all_squares = out.s2_all_squares && cv.character == 1;
  out.f_reducible = !is_irreducible(f);
  return out;
}

}  // namespace stabpoly
