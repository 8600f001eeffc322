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

#include "hecke/cache.hpp"

#include <map>
#include <sstream>

#include "hecke/atable.hpp"
#include "hecke/errors.hpp"
#include "hecke/generation.hpp"
#include "hecke/sha256.hpp"

namespace hecke {
namespace {

constexpr const char* kFormat = "hecke-cache-1";
constexpr const char* kFiles[] = {"atable.txt", "calibration.txt", "jtable.txt"};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream is(line);
  for (std::string w; is >> w;) words.push_back(w);
  return words;
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ParseError("bad integer '" + s + "'", line);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + s + "'", line);
  }
}

Rational parse_value(const std::string& s, int line) {
  auto r = parse_rational(s);
  if (!r) throw ParseError("bad rational '" + s + "'", line);
  return *r;
}

std::string root_name(RootChoice r) { return r == RootChoice::kPositive ? "positive" : "negative"; }

}  // namespace

std::string write_calibrations(const std::vector<Calibration>& calibrations) {
  std::ostringstream os;
  os << "CALIBRATION 1\n";
  for (const Calibration& c : calibrations) {
    os << c.m << " " << to_string(c.scale) << " " << to_string(c.shift) << "\n";
  }
  return os.str();
}

std::vector<Calibration> parse_calibrations(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "CALIBRATION 1") throw ParseError("missing CALIBRATION header", 1);
  std::vector<Calibration> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    const auto w = split_words(lines[i]);
    if (w.size() != 3) throw ParseError("expected '<m> <scale> <shift>'", line);
    out.push_back({parse_int(w[0], line), parse_value(w[1], line), parse_value(w[2], line)});
  }
  return out;
}

std::string write_jtable(const Conj1Data& data) {
  std::ostringstream os;
  os << "JTABLE 1\n";
  os << "nmax " << data.nmax << "\n";
  os << "guard " << data.guard << "\n";
  for (const auto& [m, cs] : data.c_values) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      os << "C " << m << " " << static_cast<int>(i) - 1 << " " << to_string(cs[i]) << "\n";
    }
  }
  for (std::size_t i = 0; i < data.classical_j.size(); ++i) {
    os << "J " << static_cast<int>(i) - 1 << " " << to_string(data.classical_j[i]) << "\n";
  }
  return os.str();
}

Conj1Data parse_jtable(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "JTABLE 1") throw ParseError("missing JTABLE header", 1);
  Conj1Data data;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    const auto w = split_words(lines[i]);
    if (w.size() == 2 && w[0] == "nmax") {
      data.nmax = parse_int(w[1], line);
    } else if (w.size() == 2 && w[0] == "guard") {
      data.guard = parse_int(w[1], line);
    } else if (w.size() == 4 && w[0] == "C") {
      auto& cs = data.c_values[parse_int(w[1], line)];
      if (parse_int(w[2], line) != static_cast<int>(cs.size()) - 1) {
        throw ParseError("C entries out of order", line);
      }
      cs.push_back(parse_value(w[3], line));
    } else if (w.size() == 3 && w[0] == "J") {
      if (parse_int(w[1], line) != static_cast<int>(data.classical_j.size()) - 1) {
        throw ParseError("J entries out of order", line);
      }
      data.classical_j.push_back(parse_value(w[2], line));
    } else {
      throw ParseError("unrecognized line", line);
    }
  }
  return data;
}

PipelineData compute_pipeline(const CacheParams& params) {
  GenerationOptions options;
  options.nmax = params.nmax;
  options.guard = params.guard;
  options.jobs = params.jobs;
  const GeneratedTable generated = generate_table(options);
  PipelineData data;
  data.table = generated.polys;
  data.calibrations = generated.calibrations;
  data.root = generated.root;
  data.conj1 = conj1_data(generated, params.conj1_nmax);
  return data;
}

std::optional<PipelineData> load_cache(const std::filesystem::path& dir, const CacheParams& params) {
  const auto manifest_path = dir / "manifest.txt";
  if (!std::filesystem::exists(manifest_path)) return std::nullopt;
  std::map<std::string, std::string> keys;
  std::map<std::string, std::string> sums;
  for (const std::string& line : split_lines(read_text_file(manifest_path))) {
    const auto w = split_words(line);
    if (w.size() == 3 && w[0] == "sha256") {
      sums[w[2]] = w[1];
    } else if (const auto eq = line.find('='); eq != std::string::npos) {
      keys[line.substr(0, eq)] = line.substr(eq + 1);
    } else {
      throw CacheCorruptionError("cache manifest " + manifest_path.string() +
                                 " is malformed; delete the cache directory to regenerate");
    }
  }
  if (keys["format"] != kFormat) return std::nullopt;
  try {
    if (std::stoi(keys["guard"]) != params.guard || std::stoi(keys["nmax"]) < params.nmax ||
        std::stoi(keys["conj1_nmax"]) < params.conj1_nmax) {
      return std::nullopt;
    }
  } catch (const std::logic_error&) {
    throw CacheCorruptionError("cache manifest " + manifest_path.string() +
                               " has bad parameters; delete the cache directory to regenerate");
  }
  std::map<std::string, std::string> contents;
  for (const char* name : kFiles) {
    const auto path = dir / name;
    auto it = sums.find(name);
    if (it == sums.end() || !std::filesystem::exists(path)) {
      throw CacheCorruptionError("cache file " + path.string() +
                                 " is missing; delete the cache directory to regenerate");
    }
    std::string text = read_text_file(path);
    if (sha256_hex(text) != it->second) {
      throw CacheCorruptionError("checksum mismatch for " + path.string() +
                                 "; delete the cache directory to regenerate");
    }
    contents[name] = std::move(text);
  }

  PipelineData data;
  data.cache_hit = true;
  data.root = keys["root"] == "negative" ? RootChoice::kNegative : RootChoice::kPositive;
  for (InterpolatedA& a : parse_atable(contents["atable.txt"])) {
    if (a.n > params.nmax) continue;
    a.source = Source::kGenerated;
    data.table.push_back(std::move(a));
  }
  data.calibrations = parse_calibrations(contents["calibration.txt"]);
  data.conj1 = parse_jtable(contents["jtable.txt"]);
  if (data.conj1.nmax > params.conj1_nmax) {
    data.conj1.nmax = params.conj1_nmax;
    const int m_last = 3 * params.conj1_nmax + 6 + data.conj1.guard;
    for (auto it = data.conj1.c_values.begin(); it != data.conj1.c_values.end();) {
      if (it->first > m_last) {
        it = data.conj1.c_values.erase(it);
      } else {
        it->second.resize(static_cast<std::size_t>(params.conj1_nmax) + 2);
        ++it;
      }
    }
    data.conj1.classical_j.resize(static_cast<std::size_t>(params.conj1_nmax) + 2);
  }
  return data;
}

void store_cache(const std::filesystem::path& dir, const PipelineData& data,
                 const CacheParams& params) {
  std::filesystem::create_directories(dir);
  const std::map<std::string, std::string> files = {
      {"atable.txt", write_atable(data.table)},
      {"calibration.txt", write_calibrations(data.calibrations)},
      {"jtable.txt", write_jtable(data.conj1)},
  };
  std::ostringstream manifest;
  manifest << "format=" << kFormat << "\n"
           << "nmax=" << params.nmax << "\n"
           << "guard=" << params.guard << "\n"
           << "conj1_nmax=" << params.conj1_nmax << "\n"
           << "root=" << root_name(data.root) << "\n";
  for (const char* name : kFiles) {
    const std::string& text = files.at(name);
    const auto tmp = dir / (std::string(name) + ".tmp");
    write_text_file(tmp, text);
    std::filesystem::rename(tmp, dir / name);
    manifest << "sha256 " << sha256_hex(text) << " " << name << "\n";
  }
  const auto tmp = dir / "manifest.txt.tmp";
  write_text_file(tmp, manifest.str());
  std::filesystem::rename(tmp, dir / "manifest.txt");
}

PipelineData load_or_compute(const std::optional<std::filesystem::path>& dir,
                             const CacheParams& params) {
  if (dir) {
    if (auto cached = load_cache(*dir, params)) return *std::move(cached);
  }
  PipelineData data = compute_pipeline(params);
  if (dir) store_cache(*dir, data, params);
  return data;
}

}  // namespace hecke
