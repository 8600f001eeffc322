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

#ifndef HECKE_TABLES_HPP_
#define HECKE_TABLES_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/orbits.hpp"

namespace hecke {

// Multiplicity of a prime-subfield root as an affine expression in delta:
// delta_coeff * delta + offset.
struct RootTerm {
  std::uint64_t residue = 0;
  int delta_coeff = 0;
  int offset = 0;
};

// Complete Frobenius orbit of t^exponent with the given multiplicity.
struct OrbitTerm {
  std::uint64_t exponent = 0;
  int multiplicity = 1;
};

// One printed row: residue of n mod p, splitting degree, and the factored
// shape of the model up to a constant factor.
struct TableRow {
  std::string id;
  std::uint64_t p = 0;
  std::uint64_t residue = 0;
  int splitting_degree = 0;
  std::vector<RootTerm> roots;
  std::vector<OrbitTerm> orbits;
  std::string printed;  // row as typeset, for reports
  std::string note;     // transcription remark, empty when verbatim
};

// Rows for p = 3, 5 and 7, in printed order.
const std::vector<TableRow>& shape_rows();
std::vector<TableRow> shape_rows(std::uint64_t p, std::uint64_t residue, int splitting_degree);

// Prime-subfield multiplicities and orbit (size, multiplicity) counts that a
// row predicts at a given delta.
struct ExpectedShape {
  bool applicable = true;  // false when some exponent is negative
  std::map<std::uint64_t, int> roots;
  std::map<std::pair<int, int>, int> orbits;
};

ExpectedShape expected_shape(const TableRow& row, std::int64_t delta);

enum class ShapeOutcome {
  kMatched,
  kMismatch,
  kInapplicable,  // every candidate row has a negative exponent at this delta
  kUnlisted,      // no row for this (residue, s_A)
  kExceptional,   // n in {-1, 0}
};

std::string to_string(ShapeOutcome o);

struct ShapeMatch {
  ShapeOutcome outcome = ShapeOutcome::kUnlisted;
  std::string matched_row;                 // id, when matched
  std::vector<std::string> candidate_rows;
  std::vector<std::string> inapplicable_rows;
  std::string observed;                    // canonical summary of the profile
  std::map<std::string, std::string> expected;  // row id -> summary
};

// Summary text "res:mult,...|size x mult,..." used in match payloads.
std::string shape_summary(const std::map<std::uint64_t, int>& roots,
                          const std::map<std::pair<int, int>, int>& orbits);

// Generator-independent comparison of a profile against every candidate
// row; any one matching row suffices.
ShapeMatch shape_match(const RootProfile& profile);

}  // namespace hecke

#endif  // HECKE_TABLES_HPP_
