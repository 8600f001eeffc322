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

#ifndef HECKE_CACHE_HPP_
#define HECKE_CACHE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hecke/interpolation.hpp"
#include "hecke/series_engine.hpp"
#include "hecke/verifier.hpp"

namespace hecke {

// Cache directory layout:
//   manifest.txt     key=value lines, then "sha256 <hex> <file>" lines
//   atable.txt       A_{-1} .. A_nmax in ATABLE format
//   calibration.txt  "CALIBRATION 1", then "<m> <scale> <shift>"
//   jtable.txt       "JTABLE 1", "guard <g>", "C <m> <n> <c_m(n)>", "J <n> <c(n)>"
struct CacheParams {
  int nmax = 30;
  int guard = 2;
  int conj1_nmax = 10;
  int jobs = 1;
};

struct PipelineData {
  std::vector<InterpolatedA> table;  // index n + 1
  std::vector<Calibration> calibrations;
  RootChoice root = RootChoice::kPositive;
  Conj1Data conj1;
  bool cache_hit = false;
};

// Runs the series engine and interpolation.
PipelineData compute_pipeline(const CacheParams& params);

// Reads a cache that covers params. Returns nullopt when the directory
// has no manifest or was built for a smaller range. Throws
// CacheCorruptionError when a checksum does not match.
std::optional<PipelineData> load_cache(const std::filesystem::path& dir, const CacheParams& params);

void store_cache(const std::filesystem::path& dir, const PipelineData& data,
                 const CacheParams& params);

// Cache hit, or compute and store.
PipelineData load_or_compute(const std::optional<std::filesystem::path>& dir,
                             const CacheParams& params);

std::string write_calibrations(const std::vector<Calibration>& calibrations);
std::vector<Calibration> parse_calibrations(const std::string& text);
std::string write_jtable(const Conj1Data& data);
Conj1Data parse_jtable(const std::string& text);

}  // namespace hecke

#endif  // HECKE_CACHE_HPP_
