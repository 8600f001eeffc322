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

#ifndef HECKE_GENERATION_HPP_
#define HECKE_GENERATION_HPP_

#include <vector>

#include "hecke/interpolation.hpp"
#include "hecke/series_engine.hpp"

namespace hecke {

struct GenerationOptions {
  int nmax = 30;
  int guard = 2;
  int jobs = 1;
};

// A_{-1} .. A_{nmax} together with the per-m data they were built from.
struct GeneratedTable {
  int nmax = 0;
  std::vector<InterpolatedA> polys;        // index n + 1
  std::vector<NaturalExpansion> natural;   // m = 3 .. 2 nmax + 5 + guard
  std::vector<Calibration> calibrations;   // same m range
  RootChoice root = RootChoice::kPositive;

  const InterpolatedA& at(int n) const;
};

// Largest Hecke index sampled for nmax with the given guard.
int max_abscissa(int nmax, int guard);

// Computes natural expansions for every needed m (in parallel when
// jobs > 1), calibrates with the positive root, and interpolates each
// A_n. If any interpolation fails its guard check the whole table is
// rebuilt with the negative root before the error propagates.
GeneratedTable generate_table(const GenerationOptions& options);

}  // namespace hecke

#endif  // HECKE_GENERATION_HPP_
