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

#ifndef HECKE_INTERPOLATION_HPP_
#define HECKE_INTERPOLATION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke/qpoly.hpp"
#include "hecke/rational.hpp"
#include "hecke/series_engine.hpp"

namespace hecke {

enum class Source { kGenerated, kIngested };

// A_n(x) with A_n(m) = m^{2n+2} a_m(n), and pi_n, the primes dividing a
// coefficient denominator.
struct InterpolatedA {
  int n = 0;
  QPoly poly;
  std::vector<std::uint64_t> pi_set;
  Source source = Source::kGenerated;
};

struct PhiSequence {
  // phi_{-1}, phi_0, ...; index i holds phi_{i-1}.
  std::vector<Integer> values;

  std::optional<Integer> at(int n) const;
};

// Unique interpolant of degree < points.size(). Throws ArgumentError on a
// repeated abscissa.
QPoly lagrange(std::span<const std::pair<Rational, Rational>> points);

// Sample points (m, m^{2n+2} a_m(n)) for consecutive m starting at 3.
std::vector<std::pair<Rational, Rational>> an_samples(int n, std::span<const JExpansion> expansions);

// Interpolates A_n from the first 2n+3 expansions (m = 3, 4, ...) and
// checks the next `guard` ones. Throws InterpolationError on a guard
// mismatch and StructureError when the degree is not 2n+2 or an odd
// power appears.
InterpolatedA recover_an(int n, std::span<const JExpansion> expansions, int guard = 2);
// Computes the expansions it needs with the positive calibration root.
InterpolatedA recover_an(int n, int guard = 2);

// lcm of coefficient denominators; d(0) = 1.
Integer d_of(const QPoly& poly);
// p^{ord_p d(P)}
Integer mu_p(const QPoly& poly, std::uint64_t p);
// d(P) P, an integer polynomial.
QPoly k_of(const QPoly& poly);
// mu_p(P) P, all coefficients p-integral.
QPoly kp_of(const QPoly& poly, std::uint64_t p);

std::vector<std::uint64_t> pi_set(const QPoly& poly);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

enum class PiClass {
  kTwo,                    // n = 2
  kOddPrime,               // pi_n = primes <= greatest prime below n
  kCompositePrimeSuccessor,  // pi_n = primes <= n + 1
  kDoublyComposite,        // pi_n = primes <= greatest prime below n
  kOutOfRange,             // n < 2
};

std::string to_string(PiClass c);
PiClass classify_pi(int n);
// The pi_n predicted for n >= 2.
std::vector<std::uint64_t> expected_pi(int n);

struct PiClauseReport {
  int n = 0;
  PiClass cls = PiClass::kOutOfRange;
  std::vector<std::uint64_t> observed;
  std::vector<std::uint64_t> expected;
  // Clause id ("2a".."2e") -> pass; only applicable clauses are present.
  std::map<std::string, bool> clauses;

  bool all_pass() const;
};

bool is_gap_free(const std::vector<std::uint64_t>& primes);
PiClauseReport check_pi_clauses(const InterpolatedA& a);

// Evidence on C_n(x) = phi_n (x - 2)(x + 2) x^{n+1} gamma_n(x), with
// C_n := 2^{6n+6} x^{n+1} A_n(x). Never throws on a failed sub-claim.
struct McKayReport {
  int n = 0;
  bool skipped = false;
  QPoly c_poly;
  bool divisible = false;          // by (x-2)(x+2)x^{n+1}
  Rational value_at_2;             // A_n(2)
  std::optional<QPoly> quotient;   // when divisible
  std::optional<Rational> phi_observed;
  std::optional<Integer> phi_expected;
  bool phi_matches = false;
  bool quotient_monic_after_phi = false;
  bool degree_is_2n = false;
};

McKayReport mckay_structure_report(const InterpolatedA& a, const PhiSequence& phi);

}  // namespace hecke

#endif  // HECKE_INTERPOLATION_HPP_
