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

#ifndef HECKE_ORBITS_HPP_
#define HECKE_ORBITS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/factorization.hpp"
#include "hecke/finite_field.hpp"

namespace hecke {

inline constexpr std::uint64_t kDefaultFieldBudget = 1ULL << 31;

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n);

std::uint64_t multiplicative_order(const Field& field, const FFElem& a);

// Smallest element, by code, of multiplicative order |F| - 1. Throws
// BudgetExceeded when |F| > budget.
FFElem find_generator(const Field& field, std::uint64_t budget = kDefaultFieldBudget);

// k in [0, |F| - 2] with t^k = s, by Pohlig-Hellman over baby-step /
// giant-step. t must generate F^*; s must be nonzero.
std::uint64_t dlog(const Field& field, const FFElem& t, const FFElem& s);

// Least significant digit first, zero padded to width.
std::vector<std::uint32_t> base_p_expansion(std::uint64_t k, std::uint64_t p, int width);

// Smallest cyclic shift; Frobenius acts on digit tuples by rotation.
std::vector<std::uint32_t> min_rotation(std::vector<std::uint32_t> digits);
// Length of the cyclic-shift orbit of digits.
int rotation_period(const std::vector<std::uint32_t>& digits);

// s, s^p, s^{p^2}, ... until it closes, in that order.
std::vector<FFElem> frobenius_orbit(const Field& field, const FFElem& s);

// Size of the Frobenius orbit of t^k in F_{p^s} for any generator t:
// least d with k (p^d - 1) = 0 mod (p^s - 1).
int orbit_size_of_exponent(std::uint64_t k, std::uint64_t p, int s);

struct OrbitEntry {
  int size = 0;
  int multiplicity = 0;
  // Canonical (minimal) rotation of the base-p digits of dlog, width k.
  std::vector<std::uint32_t> signature;

  friend bool operator==(const OrbitEntry&, const OrbitEntry&) = default;
};

struct RootProfile {
  int n = 0;
  std::uint64_t p = 0;
  int splitting_degree = 0;
  std::int64_t delta = 0;
  std::uint64_t unit = 0;  // residue of the factorization unit
  // (residue, multiplicity), ascending residue; includes 0.
  std::vector<std::pair<std::uint64_t, int>> prime_subfield_roots;
  std::vector<OrbitEntry> orbits;  // sorted by (size, multiplicity, signature)
  // Total degree of the part that does not split over the field.
  int nonlinear_remainder = 0;
  // Root multiset closed under x -> x^p.
  bool frobenius_closed = true;
  // Every orbit's digit-signature period equals its size.
  bool signature_periods_match = true;

  // n p s_A delta unit | res:mult,... | orbit(size,mult,signature);...
  std::string serialize() const;
};

struct RootProfileContext {
  int n = 0;
  int splitting_degree = 0;
  std::int64_t delta = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultFieldBudget;
  // Reused across calls on one field when present.
  std::optional<FFElem> generator;
};

// Full linear factorization of a model over its splitting field, grouped
// into prime-subfield roots and Frobenius orbits.
RootProfile root_profile(const Field& field, const FqPoly& model, const RootProfileContext& ctx);

}  // namespace hecke

#endif  // HECKE_ORBITS_HPP_
