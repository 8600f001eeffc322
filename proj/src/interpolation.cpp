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

#include "hecke/interpolation.hpp"

#include <algorithm>
#include <set>

#include "hecke/errors.hpp"

namespace hecke {

std::optional<Integer> PhiSequence::at(int n) const {
  const int index = n + 1;
  if (index < 0 || index >= static_cast<int>(values.size())) return std::nullopt;
  return values[static_cast<std::size_t>(index)];
}

QPoly lagrange(std::span<const std::pair<Rational, Rational>> points) {
  const std::size_t count = points.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (points[i].first == points[j].first) {
        throw ArgumentError("lagrange: duplicate abscissa " + to_string(points[i].first));
      }
    }
  }
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> table(count);
  for (std::size_t i = 0; i < count; ++i) table[i] = points[i].second;
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      table[i] = (table[i] - table[i - 1]) / (points[i].first - points[i - level].first);
      if (i == level) break;
    }
  }
  QPoly result;
  for (std::size_t i = count; i-- > 0;) {
    result = result * QPoly{-points[i].first, 1} + QPoly{table[i]};
  }
  return result;
}

std::vector<std::pair<Rational, Rational>> an_samples(int n, std::span<const JExpansion> expansions) {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(expansions.size());
  for (const JExpansion& e : expansions) {
    Rational scale = 1;
    for (int i = 0; i < 2 * n + 2; ++i) scale *= e.m;
    out.emplace_back(Rational(e.m), scale * e.at(n));
  }
  return out;
}

InterpolatedA recover_an(int n, std::span<const JExpansion> expansions, int guard) {
  if (n < -1) throw ArgumentError("recover_an: n must be >= -1");
  if (guard < 0) throw ArgumentError("recover_an: negative guard");
  const std::size_t needed = static_cast<std::size_t>(2 * n + 3 + guard);
  if (expansions.size() < needed) {
    throw PrecisionError("recover_an: n = " + std::to_string(n) + " needs " +
                         std::to_string(needed) + " expansions, have " +
                         std::to_string(expansions.size()));
  }
  for (std::size_t i = 0; i < needed; ++i) {
    if (expansions[i].m != static_cast<int>(i) + 3) {
      throw ArgumentError("recover_an: expansions must cover m = 3, 4, ... consecutively");
    }
  }
  const auto samples = an_samples(n, expansions.first(needed));
  const std::size_t fit = static_cast<std::size_t>(2 * n + 3);
  QPoly poly = lagrange(std::span(samples).first(fit));
  for (std::size_t i = fit; i < needed; ++i) {
    if (poly(samples[i].first) != samples[i].second) {
      throw InterpolationError("recover_an: guard sample m = " + to_string(samples[i].first) +
                               " disagrees with the degree-" + std::to_string(2 * n + 2) +
                               " interpolant for n = " + std::to_string(n));
    }
  }
  if (poly.degree() != 2 * n + 2) {
    throw StructureError("recover_an: A_" + std::to_string(n) + " has degree " +
                         std::to_string(poly.degree()) + ", expected " + std::to_string(2 * n + 2));
  }
  for (int i = 1; i <= poly.degree(); i += 2) {
    if (poly.coeff(i) != 0) {
      throw StructureError("recover_an: A_" + std::to_string(n) + " has a nonzero x^" +
                           std::to_string(i) + " coefficient");
    }
  }
  InterpolatedA out;
  out.n = n;
  out.pi_set = pi_set(poly);
  out.poly = std::move(poly);
  out.source = Source::kGenerated;
  return out;
}

InterpolatedA recover_an(int n, int guard) {
  std::vector<JExpansion> expansions;
  const int order = std::max(n + 1, 2);
  for (int m = 3; m < 3 + 2 * n + 3 + guard; ++m) expansions.push_back(calibrated_expansion(m, order));
  return recover_an(n, expansions, guard);
}

Integer d_of(const QPoly& poly) {
  Integer d = 1;
  for (const Rational& c : poly.coeffs()) {
    if (c != 0) d = lcm(d, Integer(c.get_den()));
  }
  return d;
}

Integer mu_p(const QPoly& poly, std::uint64_t p) {
  const Integer d = d_of(poly);
  const long e = ord_p(d, p);
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(e));
  return out;
}

QPoly k_of(const QPoly& poly) { return Rational(d_of(poly)) * poly; }

QPoly kp_of(const QPoly& poly, std::uint64_t p) { return Rational(mu_p(poly, p)) * poly; }

std::vector<std::uint64_t> pi_set(const QPoly& poly) {
  std::set<std::uint64_t> primes;
  for (const Rational& c : poly.coeffs()) {
    if (c == 0) continue;
    Integer den(c.get_den());
    for (std::uint64_t d = 2; den > 1; ++d) {
      if (Integer(d) * d > den) {
        primes.insert(std::stoull(den.get_str()));
        break;
      }
      if (mpz_divisible_ui_p(den.get_mpz_t(), d)) {
        primes.insert(d);
        while (mpz_divisible_ui_p(den.get_mpz_t(), d)) den /= d;
      }
    }
  }
  return {primes.begin(), primes.end()};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

std::string to_string(PiClass c) {
  switch (c) {
    case PiClass::kTwo: return "n=2";
    case PiClass::kOddPrime: return "odd-prime";
    case PiClass::kCompositePrimeSuccessor: return "composite-with-prime-successor";
    case PiClass::kDoublyComposite: return "doubly-composite";
    case PiClass::kOutOfRange: return "out-of-range";
  }
  return "unknown";
}

PiClass classify_pi(int n) {
  if (n < 2) return PiClass::kOutOfRange;
  if (n == 2) return PiClass::kTwo;
  const auto un = static_cast<std::uint64_t>(n);
  if (is_prime(un)) return PiClass::kOddPrime;
  if (is_prime(un + 1)) return PiClass::kCompositePrimeSuccessor;
  return PiClass::kDoublyComposite;
}

namespace {

std::uint64_t greatest_prime_below(std::uint64_t n) {
  for (std::uint64_t q = n - 1; q >= 2; --q) {
    if (is_prime(q)) return q;
  }
  return 0;
}

}  // namespace

std::vector<std::uint64_t> expected_pi(int n) {
  switch (classify_pi(n)) {
    case PiClass::kTwo: return {3};
    case PiClass::kOddPrime:
    case PiClass::kDoublyComposite:
      return primes_up_to(greatest_prime_below(static_cast<std::uint64_t>(n)));
    case PiClass::kCompositePrimeSuccessor: return primes_up_to(static_cast<std::uint64_t>(n) + 1);
    case PiClass::kOutOfRange: break;
  }
  return {};
}

bool is_gap_free(const std::vector<std::uint64_t>& primes) {
  for (std::size_t i = 1; i < primes.size(); ++i) {
    for (std::uint64_t q = primes[i - 1] + 1; q < primes[i]; ++q) {
      if (is_prime(q)) return false;
    }
  }
  return true;
}

bool PiClauseReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const auto& kv) { return kv.second; });
}

PiClauseReport check_pi_clauses(const InterpolatedA& a) {
  PiClauseReport report;
  report.n = a.n;
  report.cls = classify_pi(a.n);
  report.observed = pi_set(a.poly);
  if (report.cls == PiClass::kOutOfRange) return report;
  report.expected = expected_pi(a.n);
  report.clauses["2b"] = is_gap_free(report.observed);
  const bool exact = report.observed == report.expected;
  switch (report.cls) {
    case PiClass::kTwo: report.clauses["2a"] = exact; break;
    case PiClass::kOddPrime: report.clauses["2c"] = exact; break;
    case PiClass::kCompositePrimeSuccessor: report.clauses["2d"] = exact; break;
    case PiClass::kDoublyComposite: report.clauses["2e"] = exact; break;
    case PiClass::kOutOfRange: break;
  }
  return report;
}

McKayReport mckay_structure_report(const InterpolatedA& a, const PhiSequence& phi) {
  McKayReport report;
  report.n = a.n;
  report.phi_expected = phi.at(a.n);
  if (a.n < 0) {
    report.skipped = true;
    return report;
  }
  const int n = a.n;
  Integer two_power;
  mpz_ui_pow_ui(two_power.get_mpz_t(), 2, static_cast<unsigned long>(6 * n + 6));
  report.c_poly = Rational(two_power) * (QPoly::monomial(1, n + 1) * a.poly);
  report.value_at_2 = a.poly(2);
  const QPoly divisor = QPoly{-4, 0, 1} * QPoly::monomial(1, n + 1);
  auto [quot, rem] = divrem(report.c_poly, divisor);
  report.divisible = rem.is_zero();
  if (report.divisible) {
    report.degree_is_2n = quot.degree() == 2 * n;
    report.phi_observed = quot.leading();
    if (report.phi_expected) {
      report.phi_matches = *report.phi_observed == Rational(*report.phi_expected);
      report.quotient_monic_after_phi = report.phi_matches;
    }
    report.quotient = std::move(quot);
  }
  return report;
}

}  // namespace hecke
