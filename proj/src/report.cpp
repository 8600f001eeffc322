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

#include "hecke/report.hpp"

#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string join_primes(const std::vector<std::uint64_t>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? "," : "") + std::to_string(ps[i]);
  return out;
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "md") return ReportFormat::kMarkdown;
  if (name == "json") return ReportFormat::kJson;
  throw ArgumentError("unknown report format '" + name + "' (csv, md, json)");
}

std::string extension(ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv:
      return "csv";
    case ReportFormat::kMarkdown:
      return "md";
    case ReportFormat::kJson:
      return "json";
  }
  return "txt";
}

std::string render_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "p,n,mod_np,s_A,delta,unit,profile,matched_row,verdict\n";
  for (const PairRow& r : report.rows) {
    os << r.p << "," << r.n << "," << r.mod_np << "," << csv_field(r.s_a) << "," << r.delta << ","
       << csv_field(r.unit) << "," << csv_field(r.profile) << "," << csv_field(r.matched_row) << ","
       << to_string(r.verdict) << "\n";
  }
  return os.str();
}

std::string render_markdown(const VerificationReport& report) {
  const VerifyOptions& o = report.options;
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "- source: " << report.source << "\n";
  os << "- nmax: " << o.nmax << "\n";
  os << "- primes: " << join_primes(o.primes) << "\n";
  os << "- clause-4 primes: " << join_primes(o.clause4_primes) << "\n";
  os << "- budget: " << o.budget << "\n";
  os << "- seed: " << o.seed << "\n";
  os << "- result: " << (report.has_fail() ? "FAIL" : "PASS") << "\n\n";

  os << "## Summary\n\n| clause | verdict | count |\n|---|---|---|\n";
  for (const auto& [key, count] : report.tally()) {
    os << "| " << key.first << " | " << key.second << " | " << count << " |\n";
  }

  const auto section = [&](const std::string& title, Verdict v) {
    os << "\n## " << title << "\n\n";
    bool any = false;
    for (const VerdictRecord& r : report.records) {
      if (r.verdict != v) continue;
      os << "- `" << r.task_id() << "`: " << r.detail << "\n";
      any = true;
    }
    if (!any) os << "none\n";
  };
  section("Failures", Verdict::kFail);
  section("Exceptional", Verdict::kExceptional);
  section("Inapplicable", Verdict::kInapplicable);
  section("Skipped (budget)", Verdict::kSkippedBudget);
  section("Report-only", Verdict::kReportOnly);

  if (!report.findings.empty()) {
    os << "\n## Ingestion findings\n\n";
    for (const IngestFinding& f : report.findings) os << "- A_" << f.n << ": " << f.message << "\n";
  }

  os << "\n## Profiles\n\n| p | n | mod_np | s_A | delta | unit | profile | matched_row | verdict |\n"
     << "|---|---|---|---|---|---|---|---|---|\n";
  for (const PairRow& r : report.rows) {
    os << "| " << r.p << " | " << r.n << " | " << r.mod_np << " | " << r.s_a << " | " << r.delta
       << " | " << r.unit << " | " << md_cell(r.profile) << " | " << r.matched_row << " | "
       << to_string(r.verdict) << " |\n";
  }
  return os.str();
}

std::string render_json(const VerificationReport& report) {
  using nlohmann::ordered_json;
  const VerifyOptions& o = report.options;
  ordered_json j;
  j["parameters"] = {{"source", report.source}, {"nmax", o.nmax},     {"primes", o.primes},
                     {"clause4_primes", o.clause4_primes},           {"budget", o.budget},
                     {"seed", o.seed}};
  j["result"] = report.has_fail() ? "fail" : "pass";
  ordered_json summary = ordered_json::array();
  for (const auto& [key, count] : report.tally()) {
    summary.push_back({{"clause", key.first}, {"verdict", key.second}, {"count", count}});
  }
  j["summary"] = summary;
  ordered_json rows = ordered_json::array();
  for (const PairRow& r : report.rows) {
    rows.push_back({{"p", r.p},
                    {"n", r.n},
                    {"mod_np", r.mod_np},
                    {"s_A", r.s_a},
                    {"delta", r.delta},
                    {"unit", r.unit},
                    {"profile", r.profile},
                    {"matched_row", r.matched_row},
                    {"verdict", to_string(r.verdict)}});
  }
  j["rows"] = rows;
  ordered_json records = ordered_json::array();
  for (const VerdictRecord& r : report.records) {
    records.push_back({{"task", r.task_id()},
                       {"clause", r.clause},
                       {"n", r.n},
                       {"p", r.p},
                       {"verdict", to_string(r.verdict)},
                       {"detail", r.detail}});
  }
  j["records"] = records;
  ordered_json findings = ordered_json::array();
  for (const IngestFinding& f : report.findings) findings.push_back({{"n", f.n}, {"message", f.message}});
  j["findings"] = findings;
  return j.dump(2) + "\n";
}

std::string render(const VerificationReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv:
      return render_csv(report);
    case ReportFormat::kMarkdown:
      return render_markdown(report);
    case ReportFormat::kJson:
      return render_json(report);
  }
  return render_csv(report);
}

}  // namespace hecke
