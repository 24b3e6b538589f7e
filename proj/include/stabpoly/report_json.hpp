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

// JSON documents (keys sorted, "schema_version" present) and TSV rows.
// Field elements are rendered exactly: an integer in a prime field, a list
// of base-field digits (low-to-high) in an extension.

#include <cstdio>
#include <string>

#include "json.hpp"
#include "stabpoly/census.hpp"
#include "stabpoly/dynamics.hpp"
#include "stabpoly/text_format.hpp"

namespace stabpoly::json {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
/// Criterion values beyond this many are counted but not listed.
inline constexpr std::size_t kMaxListedValues = 64;

inline json element(const FieldCtx& F, Elem a) {
  if (F.is_prime_field()) return a;
  json arr = json::array();
  for (Elem d : F.digits(a)) arr.push_back(element(*F.base(), d));
  return arr;
}

inline json element(const FieldElement& a) { return element(a.ctx(), a.raw()); }

inline json polynomial(const Polynomial& f) {
  json arr = json::array();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) arr.push_back(element(f.ctx(), f.coeff(i)));
  return arr;
}

inline json document(const char* kind) {
  json j = json::object();
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

inline json field_info(const FieldRef& F) {
  json j = document("field");
  j["field"] = text::format_field_spec(*F);
  j["characteristic"] = F->characteristic();
  j["order"] = F->order();
  j["degree"] = F->degree();
  j["absolute_degree"] = F->absolute_degree();
  j["level"] = F->level();
  j["modulus"] = json::array();
  if (!F->is_prime_field()) {
    for (Elem c : F->modulus()) j["modulus"].push_back(element(*F->base(), c));
  }
  return j;
}

inline json criterion_values(const std::vector<CriterionValue>& values) {
  json arr = json::array();
  for (std::size_t i = 0; i < values.size() && i < kMaxListedValues; ++i) {
    arr.push_back({{"n", values[i].n}, {"element", element(values[i].element)}, {"character", values[i].character}});
  }
  return arr;
}

inline json stability_report(const StabilityReport& r) {
  json j = document("stability_report");
  j["field"] = text::format_field_spec(r.poly.ctx());
  j["poly"] = polynomial(r.poly);
  j["degree"] = r.poly.degree();
  j["verdict"] = std::string(to_string(r.verdict));
  j["criterion_verdict"] = std::string(to_string(r.criterion_verdict));
  j["witness"] = r.witness ? json{{"n", r.witness->n}, {"reason", r.witness->reason}} : json(nullptr);
  j["criterion_values"] = criterion_values(r.criterion_values);
  j["criterion_values_total"] = r.criterion_values.size();
  j["tail_length"] = r.tail_length;
  j["cycle_length"] = r.cycle_length;
  j["depth_verified"] = r.depth_verified;
  j["first_reducible"] = r.first_reducible ? json(*r.first_reducible) : json(nullptr);
  j["applicability"] = r.applicability;
  j["notes"] = r.notes;
  return j;
}

inline json orbit(const CriticalOrbit& o, const OrbitSets& sets) {
  json j = document("orbit");
  j["field"] = text::format_field_spec(o.polynomial().ctx());
  j["poly"] = polynomial(o.polynomial());
  j["degree"] = o.degree();
  j["derivative_degree"] = o.derivative_degree();
  j["tail_length"] = o.tail_length();
  j["cycle_length"] = o.cycle_length();
  json recs = json::array();
  for (const auto& r : o.records()) {
    if (recs.size() >= kMaxListedValues) break;
    recs.push_back({{"n", r.n}, {"residue", polynomial(r.residue)}, {"value", element(r.value)}});
  }
  j["records"] = recs;
  j["records_total"] = o.records().size();
  j["set"] = sets.even_degree ? "S1" : "S2";
  j["criterion_values"] = criterion_values(sets.values);
  j["criterion_values_total"] = sets.values.size();
  return j;
}

inline json census(const CensusResult& c, bool timing) {
  json j = document("census");
  j["field"] = text::format_field_spec(*c.field);
  j["q"] = c.field->order();
  j["degree"] = c.d;
  j["monic"] = c.monic;
  j["zero_coefficients"] = c.zero_coefficients;
  j["population"] = c.population;
  j["counts"] = {{"stable", c.counts.stable},
                 {"candidate", c.counts.candidate},
                 {"not_stable", c.counts.not_stable},
                 {"inapplicable", c.counts.inapplicable}};
  j["criterion_survivors"] = c.counts.criterion_survivors;
  j["verified_survivors"] = c.counts.verified_survivors;
  j["inapplicable_survivors"] = c.counts.inapplicable_survivors;
  j["demoted"] = c.counts.demoted;
  j["route_disagreements"] = c.counts.route_disagreements;
  j["contradictions"] = c.counts.contradictions;
  j["depth_requested"] = c.depth_requested;
  j["depth"] = c.depth;
  j["degree_cap"] = c.degree_cap;
  j["bound_reference"] = c.bound_reference;
  j["bound_reference_approximate"] = true;
  j["bound_exponent"] = bound_exponent(c.d);
  if (timing) j["seconds"] = c.seconds;
  return j;
}

inline std::string census_tsv_header() {
  return "field\td\tmonic\tpopulation\tstable\tcandidate\tnot_stable\tinapplicable\tdepth\tbound_reference\tseconds";
}

inline std::string census_tsv_row(const CensusResult& c) {
  char bound[64];
  char secs[64];
  std::snprintf(bound, sizeof bound, "%.6g", c.bound_reference);
  std::snprintf(secs, sizeof secs, "%.3f", c.seconds);
  std::string row = text::format_field_spec(*c.field);
  for (const std::string& cell :
       {std::to_string(c.d), std::string(c.monic ? "1" : "0"), std::to_string(c.population),
        std::to_string(c.counts.stable), std::to_string(c.counts.candidate), std::to_string(c.counts.not_stable),
        std::to_string(c.counts.inapplicable), std::to_string(c.depth), std::string(bound), std::string(secs)}) {
    row += '\t';
    row += cell;
  }
  return row;
}

}  // namespace stabpoly::json
