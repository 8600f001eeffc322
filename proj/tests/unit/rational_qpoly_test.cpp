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

#include <gtest/gtest.h>

#include <random>

#include "hecke/errors.hpp"
#include "hecke/qpoly.hpp"
#include "hecke/rational.hpp"

namespace hecke {
namespace {

Rational random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 20001) - 10000;
  if (num == 0) num = 1;
  const long den = static_cast<long>(rng() % 5000) + 1;
  return make_rational(num, den);
}

QPoly random_qpoly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng));
  return QPoly(c);
}

TEST(Rational, OrdExamples) {
  EXPECT_EQ(ord_p(Rational(6), 3), 1);
  EXPECT_EQ(ord_p(make_rational(3, 8), 2), -3);
  EXPECT_EQ(ord_p(make_rational(10, 3), 5), 1);
  EXPECT_EQ(ord_p(make_rational(10, 3), 3), -1);
}

TEST(Rational, OrdErrors) {
  EXPECT_THROW(ord_p(Rational(0), 3), UndefinedOrderError);
  EXPECT_THROW(ord_p(Rational(5), 4), ArgumentError);
}

TEST(Rational, OrdIsAdditive) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
      EXPECT_EQ(ord_p(Rational(a * b), p), ord_p(a, p) + ord_p(b, p));
    }
  }
}

TEST(Rational, CanonicalForm) {
  const Rational r = make_rational(4, -6);
  EXPECT_EQ(r.get_num(), -2);
  EXPECT_EQ(r.get_den(), 3);
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(to_string(r), "-2/3");
  EXPECT_THROW(make_rational(1, 0), ArgumentError);
}

TEST(Rational, ParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = random_rational(rng);
    const auto back = parse_rational(to_string(r));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, r);
  }
  EXPECT_FALSE(parse_rational("4/6").has_value());
  EXPECT_FALSE(parse_rational("1/-3").has_value());
  EXPECT_FALSE(parse_rational("1/0").has_value());
  EXPECT_FALSE(parse_rational("abc").has_value());
  EXPECT_FALSE(parse_rational("").has_value());
  EXPECT_EQ(parse_rational("4/6", false), make_rational(2, 3));
}

TEST(Rational, SqrtAndPrimes) {
  EXPECT_EQ(rational_sqrt(make_rational(9, 4)), make_rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(rational_sqrt(Rational(-4)).has_value());
  EXPECT_TRUE(is_prime(std::uint64_t{2}));
  EXPECT_TRUE(is_prime(std::uint64_t{41}));
  EXPECT_FALSE(is_prime(std::uint64_t{1}));
  EXPECT_FALSE(is_prime(std::uint64_t{91}));
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
}

TEST(QPoly, Evaluation) {
  const QPoly a0{4, 0, 3};
  EXPECT_EQ(a0(3), 31);
  EXPECT_EQ(QPoly::x()(5), 5);
  const QPoly a1{-48, 0, -8, 0, 69};
  EXPECT_EQ(a1(3), 5469);
}

TEST(QPoly, Trimmed) {
  const QPoly p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(QPoly({0, 0}).is_zero());
  EXPECT_EQ(QPoly().degree(), -1);
  EXPECT_EQ((QPoly{1, 1} - QPoly{1, 1}).degree(), -1);
}

TEST(QPoly, ArithmeticExamples) {
  auto [q, r] = divrem(QPoly{1, 0, 1}, QPoly::x());
  EXPECT_EQ(q, QPoly::x());
  EXPECT_EQ(r, QPoly{1});
  EXPECT_EQ(gcd(QPoly{-1, 0, 1}, QPoly{-1, 1}), (QPoly{-1, 1}));
  EXPECT_EQ(derivative(QPoly{4, 0, 3}), (QPoly{0, 6}));
  EXPECT_EQ(content(QPoly{make_rational(2, 3), make_rational(4, 9)}), make_rational(2, 9));
  EXPECT_EQ(content(QPoly{}), 0);
  EXPECT_THROW(divrem(QPoly{1}, QPoly{}), ArgumentError);
}

TEST(QPoly, DivremIdentity) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const QPoly a = random_qpoly(rng, static_cast<int>(rng() % 8));
    const QPoly b = random_qpoly(rng, static_cast<int>(rng() % 4));
    auto [q, r] = divrem(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(QPoly, GcdDividesBoth) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const QPoly common = random_qpoly(rng, 2);
    const QPoly a = common * random_qpoly(rng, 3);
    const QPoly b = common * random_qpoly(rng, 2);
    const QPoly g = gcd(a, b);
    EXPECT_EQ(g.leading(), 1);
    EXPECT_TRUE(divrem(a, g).second.is_zero());
    EXPECT_TRUE(divrem(b, g).second.is_zero());
    EXPECT_GE(g.degree(), 2);
  }
}

}  // namespace
}  // namespace hecke
