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

#include "hecke/rational.hpp"

#include <cctype>

#include "hecke/errors.hpp"

namespace hecke {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % d == 0) return n == d;
  }
  return is_prime(Integer(std::to_string(n)));
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

long ord_p(const Integer& z, std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("ord_p: " + std::to_string(p) + " is not prime");
  if (z == 0) throw UndefinedOrderError("ord_p of zero is undefined");
  Integer prime(std::to_string(p));
  Integer rest = abs(z);
  long order = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
    rest /= prime;
    ++order;
  }
  return order;
}

long ord_p(const Rational& r, std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("ord_p: " + std::to_string(p) + " is not prime");
  if (r == 0) throw UndefinedOrderError("ord_p of zero is undefined");
  return ord_p(Integer(r.get_num()), p) - ord_p(Integer(r.get_den()), p);
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text, bool strict) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
  } else {
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    std::string_view den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+') return std::nullopt;
    if (!parse_integer(den_text, den) || den <= 0) return std::nullopt;
    if (strict && den == 1) return std::nullopt;
  }
  Rational r(num, den);
  if (strict) {
    Integer g = gcd(num, den);
    if (g != 1) return std::nullopt;
  }
  r.canonicalize();
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  return make_rational(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace hecke
