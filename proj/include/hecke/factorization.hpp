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

#ifndef HECKE_FACTORIZATION_HPP_
#define HECKE_FACTORIZATION_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "hecke/fq_poly.hpp"

namespace hecke {

struct FactorPower {
  FqPoly factor;  // monic
  int multiplicity = 0;
};

// unit * prod factor^multiplicity == input. Factors are monic irreducible,
// pairwise distinct, and sorted by (degree, coefficient codes).
struct Factorization {
  FFElem unit;
  std::vector<FactorPower> factors;
};

// Squarefree decomposition of a nonzero polynomial, handling the
// zero-derivative (p-th power) branch. Returned parts are monic,
// squarefree, pairwise coprime, and reassemble the monic input.
std::vector<FactorPower> squarefree(const PolyRing& ring, const FqPoly& f);

// Distinct-degree split of a squarefree monic f: pairs (product of all
// irreducible factors of degree d, d).
std::vector<FactorPower> distinct_degree(const PolyRing& ring, const FqPoly& f);

// Cantor-Zassenhaus split of a monic f whose irreducible factors all have
// degree d.
std::vector<FqPoly> equal_degree(const PolyRing& ring, const FqPoly& f, int d,
                                 std::mt19937_64& rng);

// Seed for the splitting randomness, from the field, the polynomial and
// the caller's seed.
std::uint64_t factor_seed(const Field& field, const FqPoly& f, std::uint64_t user_seed);

Factorization factor(const PolyRing& ring, const FqPoly& f, std::uint64_t user_seed = 0);

FqPoly expand(const PolyRing& ring, const Factorization& factorization);

// lcm of the irreducible factor degrees; 1 for constants.
int splitting_degree_of(const Factorization& factorization);

}  // namespace hecke

#endif  // HECKE_FACTORIZATION_HPP_
