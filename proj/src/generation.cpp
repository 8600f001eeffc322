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

#include "hecke/generation.hpp"

#include <algorithm>

#include "hecke/errors.hpp"
#include "hecke/parallel.hpp"

namespace hecke {

const InterpolatedA& GeneratedTable::at(int n) const {
  if (n < -1 || n > nmax) throw ArgumentError("A_" + std::to_string(n) + " was not generated");
  return polys[static_cast<std::size_t>(n + 1)];
}

int max_abscissa(int nmax, int guard) { return 2 * nmax + 5 + guard; }

namespace {

std::vector<InterpolatedA> interpolate_all(const GenerationOptions& options,
                                           const std::vector<NaturalExpansion>& natural,
                                           const std::vector<Calibration>& calibrations) {
  std::vector<JExpansion> expansions;
  expansions.reserve(natural.size());
  for (std::size_t i = 0; i < natural.size(); ++i) {
    expansions.push_back(calibrated_expansion(natural[i], calibrations[i]));
  }
  std::vector<InterpolatedA> polys(static_cast<std::size_t>(options.nmax) + 2);
  parallel_for(polys.size(), options.jobs, [&](std::size_t i) {
    polys[i] = recover_an(static_cast<int>(i) - 1, expansions, options.guard);
  });
  return polys;
}

}  // namespace

GeneratedTable generate_table(const GenerationOptions& options) {
  if (options.nmax < -1) throw ArgumentError("generate_table: nmax must be >= -1");
  const int order = std::max(options.nmax + 1, 2);
  const int m_last = max_abscissa(options.nmax, options.guard);
  GeneratedTable table;
  table.nmax = options.nmax;
  table.natural.resize(static_cast<std::size_t>(m_last - 2));
  parallel_for(table.natural.size(), options.jobs, [&](std::size_t i) {
    table.natural[i] = natural_expansion(static_cast<int>(i) + 3, order);
  });
  for (RootChoice root : {RootChoice::kPositive, RootChoice::kNegative}) {
    table.root = root;
    table.calibrations.clear();
    for (const NaturalExpansion& e : table.natural) table.calibrations.push_back(calibrate(e, root));
    try {
      table.polys = interpolate_all(options, table.natural, table.calibrations);
      return table;
    } catch (const InterpolationError&) {
      if (root == RootChoice::kNegative) throw;
    }
  }
  return table;
}

}  // namespace hecke
