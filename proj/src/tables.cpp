/*
 * Copyright 2026 The hecke-models Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hecke/tables.hpp"

#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {
namespace {

std::vector<RootTerm> pairs(std::initializer_list<std::uint64_t> residues, int delta_coeff,
                            int offset) {
  std::vector<RootTerm> out;
  for (std::uint64_t r : residues) out.push_back({r, delta_coeff, offset});
  return out;
}

std::vector<RootTerm> concat(std::initializer_list<std::vector<RootTerm>> parts) {
  std::vector<RootTerm> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<TableRow> build_rows() {
  std::vector<TableRow> rows;
  const RootTerm x2{0, 0, 2};
  const RootTerm x6{0, 0, 6};
  const RootTerm x8{0, 0, 8};

  // p = 3
  rows.push_back({"T1.0.1", 3, 0, 1, concat({{x2}, pairs({1, 2}, 2, 0)}), {},
                  "x^2(x-1)^{2d}(x-2)^{2d}", ""});
  rows.push_back({"T1.1.1a", 3, 1, 1, concat({{x2}, pairs({1, 2}, 2, 0)}), {},
                  "x^2(x-1)^{2d}(x-2)^{2d}", ""});
  rows.push_back({"T1.1.1b", 3, 1, 1, concat({{x2}, pairs({1, 2}, 2, -2)}), {},
                  "x^2(x-1)^{2d-2}(x-2)^{2d-2}", ""});
  rows.push_back({"T1.1.2", 3, 1, 2, concat({{x8}, pairs({1, 2}, 2, -6)}),
                  {{1, 2}, {2, 2}, {7, 2}},
                  "x^8(x-1)^{2d-6}(x-2)^{2d-6} O(t)^2 O(t^2)^2 O(t^7)^2", ""});
  rows.push_back({"T1.2.1a", 3, 2, 1, pairs({1, 2}, 2, 1), {}, "(x-1)^{2d+1}(x-2)^{2d+1}", ""});
  rows.push_back({"T1.2.1b", 3, 2, 1, concat({{x6}, pairs({1, 2}, 2, -1)}), {},
                  "x^6(x-1)^{2d-1}(x-2)^{2d-1}", ""});

  // p = 5
  rows.push_back({"T2.0.1", 5, 0, 1, concat({pairs({1, 4}, 2, 2), pairs({2, 3}, 2, 0)}), {},
                  "(x-1)^{2d+2}(x-4)^{2d+2}(x-2)^{2d}(x-3)^{2d}", ""});
  rows.push_back({"T2.1.4", 5, 1, 4, pairs({1, 2, 3, 4}, 2, 0), {{91, 1}},
                  "(x-1)^{2d}(x-4)^{2d}(x-2)^{2d}(x-3)^{2d} O(t^91)", ""});
  rows.push_back({"T2.2.4", 5, 2, 4, concat({pairs({1, 4}, 2, 0), pairs({2, 3}, 2, 1)}),
                  {{169, 1}}, "(x-1)^{2d}(x-4)^{2d}(x-2)^{2d+1}(x-3)^{2d+1} O(t^169)", ""});
  rows.push_back({"T2.3.6", 5, 3, 6, concat({pairs({1, 4}, 2, 0), pairs({2, 3}, 2, 1)}),
                  {{2961, 1}}, "(x-1)^{2d}(x-4)^{2d}(x-2)^{2d+1}(x-3)^{2d+1} O(t^2961)", ""});
  rows.push_back({"T2.4.1", 5, 4, 1, pairs({1, 2, 3, 4}, 2, 2), {},
                  "(x-1)^{2d+2}(x-2)^{2d+2}(x-3)^{2d+2}(x-4)^{2d+2}", ""});

  // p = 7
  const std::vector<RootTerm> p7_common =
      concat({pairs({1, 3, 4, 6}, 2, 0), pairs({2, 5}, 2, 1)});
  rows.push_back({"T3.0.4", 7, 0, 4,
                  concat({pairs({1, 6}, 2, -2), pairs({2, 5}, 2, 0), pairs({3, 4}, 2, 1)}),
                  {{173, 1}, {260, 1}},
                  "(x-1)^{2d-2}(x-6)^{2d-2}(x-2)^{2d}(x-5)^{2d}(x-3)^{2d+1}(x-4)^{2d+1} "
                  "O(t^173) O(t^260)",
                  ""});
  rows.push_back({"T3.1.4", 7, 1, 4, pairs({1, 2, 3, 4, 5, 6}, 2, 0), {{75, 1}},
                  "(x-1)^{2d}(x-2)^{2d}(x-3)^{2d}(x-3)^{2d}(x-5)^{2d}(x-6)^{2d} O(t^75)",
                  "repeated (x-3) factor read as (x-3)(x-4)"});
  rows.push_back({"T3.2.2", 7, 2, 2, p7_common, {{4, 2}},
                  "(x-1)^{2d}(x-3)^{2d}(x-4)^{2d}(x-6)^{2d}(x-2)^{2d+1}(x-5)^{2d+1} O(t^4)^2",
                  ""});
  rows.push_back({"T3.3.2", 7, 3, 2, p7_common, {{7, 1}, {12, 1}, {25, 1}},
                  "(x-1)^{2d}(x-3)^{2d}(x-4)^{2d}(x-6)^{2d}(x-2)^{2d+1}(x-5)^{2d+1} "
                  "O(t^7) O(t^12) O(t^25)",
                  ""});
  rows.push_back({"T3.4.6", 7, 4, 6, p7_common, {{29412, 1}, {41280, 1}, {81528, 1}},
                  "(x-1)^{2d}(x-3)^{2d}(x-4)^{2d}(x-6)^{2d}(x-2)^{2d+1}(x-5)^{2d+1} "
                  "O(t^29412) O(t^41280) O(t^81528)",
                  ""});
  rows.push_back({"T3.5.5", 7, 5, 5, p7_common, {{1513, 1}, {11020, 1}},
                  "(x-1)^{2d}(x-3)^{2d}(x-4)^{2d}(x-6)^{2d}(x-2)^{2d+1}(x-5)^{2d+1} "
                  "O(t^1513) O(t^11020)",
                  ""});
  rows.push_back({"T3.6.1", 7, 6, 1, pairs({1, 2, 3, 4, 5, 6}, 2, 2), {},
                  "(x-1)^{2d+2}(x-2)^{2d+2}(x-3)^{2d+2}(x-4)^{2d+2}(x-5)^{2d+2}(x-6)^{2d+2}",
                  ""});
  return rows;
}

}  // namespace

const std::vector<TableRow>& shape_rows() {
  static const std::vector<TableRow> rows = build_rows();
  return rows;
}

std::vector<TableRow> shape_rows(std::uint64_t p, std::uint64_t residue, int splitting_degree) {
  std::vector<TableRow> out;
  for (const TableRow& row : shape_rows()) {
    if (row.p == p && row.residue == residue && row.splitting_degree == splitting_degree) {
      out.push_back(row);
    }
  }
  return out;
}

ExpectedShape expected_shape(const TableRow& row, std::int64_t delta) {
  ExpectedShape shape;
  for (const RootTerm& term : row.roots) {
    const std::int64_t mult = term.delta_coeff * delta + term.offset;
    if (mult < 0) shape.applicable = false;
    if (mult > 0) shape.roots[term.residue] += static_cast<int>(mult);
  }
  for (const OrbitTerm& term : row.orbits) {
    const int size = orbit_size_of_exponent(term.exponent, row.p, row.splitting_degree);
    shape.orbits[{size, term.multiplicity}] += 1;
  }
  return shape;
}

std::string to_string(ShapeOutcome o) {
  switch (o) {
    case ShapeOutcome::kMatched:
      return "matched";
    case ShapeOutcome::kMismatch:
      return "mismatch";
    case ShapeOutcome::kInapplicable:
      return "inapplicable";
    case ShapeOutcome::kUnlisted:
      return "unlisted";
    case ShapeOutcome::kExceptional:
      return "exceptional";
  }
  return "unknown";
}

std::string shape_summary(const std::map<std::uint64_t, int>& roots,
                          const std::map<std::pair<int, int>, int>& orbits) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [res, mult] : roots) {
    os << (first ? "" : ",") << res << ":" << mult;
    first = false;
  }
  if (first) os << "-";
  os << "|";
  first = true;
  for (const auto& [key, count] : orbits) {
    for (int i = 0; i < count; ++i) {
      os << (first ? "" : ",") << key.first << "x" << key.second;
      first = false;
    }
  }
  if (first) os << "-";
  return os.str();
}

ShapeMatch shape_match(const RootProfile& profile) {
  ShapeMatch match;
  std::map<std::uint64_t, int> roots;
  for (const auto& [res, mult] : profile.prime_subfield_roots) {
    if (mult > 0) roots[res] += mult;
  }
  std::map<std::pair<int, int>, int> orbits;
  for (const OrbitEntry& e : profile.orbits) orbits[{e.size, e.multiplicity}] += 1;
  match.observed = shape_summary(roots, orbits);

  if (profile.n <= 0) {
    match.outcome = ShapeOutcome::kExceptional;
    return match;
  }
  const std::uint64_t residue = static_cast<std::uint64_t>(profile.n) % profile.p;
  const auto rows = shape_rows(profile.p, residue, profile.splitting_degree);
  if (rows.empty()) {
    match.outcome = ShapeOutcome::kUnlisted;
    return match;
  }
  bool any_applicable = false;
  for (const TableRow& row : rows) {
    match.candidate_rows.push_back(row.id);
    const ExpectedShape shape = expected_shape(row, profile.delta);
    if (!shape.applicable) {
      match.inapplicable_rows.push_back(row.id);
      continue;
    }
    any_applicable = true;
    match.expected[row.id] = shape_summary(shape.roots, shape.orbits);
    if (match.matched_row.empty() && shape.roots == roots && shape.orbits == orbits) {
      match.matched_row = row.id;
    }
  }
  if (!match.matched_row.empty()) {
    match.outcome = ShapeOutcome::kMatched;
  } else {
    match.outcome = any_applicable ? ShapeOutcome::kMismatch : ShapeOutcome::kInapplicable;
  }
  return match;
}

}  // namespace hecke
