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

#ifndef HECKE_REPORT_HPP_
#define HECKE_REPORT_HPP_

#include <string>

#include "hecke/verifier.hpp"

namespace hecke {

enum class ReportFormat { kCsv, kMarkdown, kJson };

ReportFormat parse_report_format(const std::string& name);
std::string extension(ReportFormat format);

// Columns: p, n, mod_np, s_A, delta, unit, profile, matched_row, verdict.
std::string render_csv(const VerificationReport& report);
std::string render_markdown(const VerificationReport& report);
std::string render_json(const VerificationReport& report);
std::string render(const VerificationReport& report, ReportFormat format);

}  // namespace hecke

#endif  // HECKE_REPORT_HPP_
