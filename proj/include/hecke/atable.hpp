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

#ifndef HECKE_ATABLE_HPP_
#define HECKE_ATABLE_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/interpolation.hpp"

namespace hecke {

// ATABLE 1
// A <n> <degree> <c0> <c1> ... <cdeg>
//
// Coefficients are "num" or "num/den" in lowest terms with den > 0,
// ascending powers, single spaces, LF line endings, no trailing
// whitespace.
std::string write_atable(const std::vector<InterpolatedA>& table);
// Parsed entries carry source = ingested. Throws ParseError with the
// 1-based line number. An empty input yields an empty table.
std::vector<InterpolatedA> parse_atable(std::string_view text);
std::vector<InterpolatedA> ingest_table(const std::filesystem::path& path);

// PHI 1
// <index> <integer>
std::string write_phi(const PhiSequence& phi);
PhiSequence parse_phi(std::string_view text);
PhiSequence read_phi(const std::filesystem::path& path);

// Structural observations on ingested entries (reported, not asserted).
struct IngestFinding {
  int n = 0;
  std::string message;
};
std::vector<IngestFinding> audit_ingested(const std::vector<InterpolatedA>& table);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hecke

#endif  // HECKE_ATABLE_HPP_
