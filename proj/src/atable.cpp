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

#include "hecke/atable.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/series_engine.hpp"

namespace hecke {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Strict single-space tokenization; empty tokens are rejected.
std::vector<std::string_view> split_tokens(std::string_view line, int line_no) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(' ', start);
    std::string_view token = line.substr(start, end == std::string_view::npos ? end : end - start);
    if (token.empty()) throw ParseError("empty field (extra or trailing space)", line_no);
    tokens.push_back(token);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return tokens;
}

int parse_int(std::string_view token, int line_no, const char* what) {
  auto value = parse_rational(token);
  if (!value || value->get_den() != 1 || !value->get_num().fits_sint_p()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(token) + "'", line_no);
  }
  return static_cast<int>(value->get_num().get_si());
}

}  // namespace

std::string write_atable(const std::vector<InterpolatedA>& table) {
  std::ostringstream out;
  out << "ATABLE 1\n";
  for (const InterpolatedA& a : table) {
    const int degree = std::max(a.poly.degree(), 0);
    out << "A " << a.n << " " << degree;
    for (int i = 0; i <= degree; ++i) out << " " << to_string(a.poly.coeff(i));
    out << "\n";
  }
  return out.str();
}

std::vector<InterpolatedA> parse_atable(std::string_view text) {
  std::vector<InterpolatedA> out;
  if (text.empty()) return out;
  if (text.find('\r') != std::string_view::npos) throw ParseError("CR line ending", 1);
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "ATABLE 1") throw ParseError("expected header 'ATABLE 1'", 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const auto tokens = split_tokens(lines[i], line_no);
    if (tokens.size() < 4 || tokens[0] != "A") throw ParseError("expected 'A <n> <degree> <coeffs>'", line_no);
    InterpolatedA entry;
    entry.n = parse_int(tokens[1], line_no, "index");
    const int degree = parse_int(tokens[2], line_no, "degree");
    if (degree < 0 || static_cast<std::size_t>(degree) + 4 != tokens.size()) {
      throw ParseError("coefficient count does not match degree " + std::to_string(degree), line_no);
    }
    std::vector<Rational> coeffs;
    for (std::size_t t = 3; t < tokens.size(); ++t) {
      auto c = parse_rational(tokens[t], /*strict=*/true);
      if (!c) throw ParseError("bad coefficient '" + std::string(tokens[t]) + "'", line_no);
      coeffs.push_back(*c);
    }
    if (degree > 0 && coeffs.back() == 0) throw ParseError("zero leading coefficient", line_no);
    entry.poly = QPoly(std::move(coeffs));
    entry.pi_set = pi_set(entry.poly);
    entry.source = Source::kIngested;
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<InterpolatedA> ingest_table(const std::filesystem::path& path) {
  return parse_atable(read_text_file(path));
}

std::string write_phi(const PhiSequence& phi) {
  std::ostringstream out;
  out << "PHI 1\n";
  for (std::size_t i = 0; i < phi.values.size(); ++i) {
    out << static_cast<int>(i) - 1 << " " << phi.values[i].get_str() << "\n";
  }
  return out.str();
}

PhiSequence parse_phi(std::string_view text) {
  PhiSequence phi;
  if (text.empty()) return phi;
  const auto lines = split_lines(text);
  if (lines[0] != "PHI 1") throw ParseError("expected header 'PHI 1'", 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const auto tokens = split_tokens(lines[i], line_no);
    if (tokens.size() != 2) throw ParseError("expected '<index> <integer>'", line_no);
    const int index = parse_int(tokens[0], line_no, "index");
    if (index != static_cast<int>(phi.values.size()) - 1) {
      throw ParseError("indices must run -1, 0, 1, ... without gaps", line_no);
    }
    auto value = parse_rational(tokens[1]);
    if (!value || value->get_den() != 1) throw ParseError("bad integer '" + std::string(tokens[1]) + "'", line_no);
    phi.values.push_back(Integer(value->get_num()));
  }
  if (!phi.values.empty() && phi.values[0] != 1) throw ParseError("phi_{-1} must be 1", 2);
  if (phi.values.size() > 1 && phi.values[1] != 24) throw ParseError("phi_0 must be 24", 3);
  return phi;
}

PhiSequence read_phi(const std::filesystem::path& path) { return parse_phi(read_text_file(path)); }

std::vector<IngestFinding> audit_ingested(const std::vector<InterpolatedA>& table) {
  std::vector<IngestFinding> findings;
  for (const InterpolatedA& a : table) {
    if (a.n == -1 && a.poly != QPoly{1}) findings.push_back({a.n, "A_{-1} is not identically 1"});
    if (a.n >= 0 && a.poly.degree() != 2 * a.n + 2) {
      findings.push_back({a.n, "degree " + std::to_string(a.poly.degree()) + " != 2n+2"});
    }
    for (int i = 1; i <= a.poly.degree(); i += 2) {
      if (a.poly.coeff(i) != 0) {
        findings.push_back({a.n, "nonzero odd coefficient x^" + std::to_string(i)});
        break;
      }
    }
    if (a.n == 0 && a.poly != anchor_a0()) findings.push_back({a.n, "disagrees with A_0 = 3x^2 + 4"});
    if (a.n == 1 && a.poly != anchor_a1()) {
      findings.push_back({a.n, "disagrees with A_1 = 69x^4 - 8x^2 - 48"});
    }
  }
  return findings;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace hecke
