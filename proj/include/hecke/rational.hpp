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

#ifndef HECKE_RATIONAL_HPP_
#define HECKE_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hecke {

using Integer = mpz_class;
// GMP keeps mpq_class canonical after every arithmetic operation; values
// built from a raw numerator/denominator go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

bool is_prime(std::uint64_t n);
bool is_prime(const Integer& n);

// Exponent of p in r. Throws UndefinedOrderError for r == 0 and
// ArgumentError when p is not prime.
long ord_p(const Rational& r, std::uint64_t p);
long ord_p(const Integer& z, std::uint64_t p);

// "num" or "num/den" in lowest terms.
std::string to_string(const Rational& r);
// Accepts "num" or "num/den"; rejects den <= 0 and non-reduced input
// when strict is set.
std::optional<Rational> parse_rational(std::string_view text, bool strict = true);

// Exact square root when r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace hecke

#endif  // HECKE_RATIONAL_HPP_
