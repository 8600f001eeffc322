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

#include "../support/field_oracles.hpp"
#include "hecke/errors.hpp"
#include "hecke/factorization.hpp"
#include "hecke/finite_field.hpp"
#include "hecke/fq_poly.hpp"

namespace hecke {
namespace {

TEST(BuildField, Examples) {
  EXPECT_EQ(build_field(3, 2).modulus, (std::vector<std::uint32_t>{1, 0}));
  EXPECT_EQ(build_field(2, 2).modulus, (std::vector<std::uint32_t>{1, 1}));
  EXPECT_EQ(build_field(5, 2).modulus, (std::vector<std::uint32_t>{2, 0}));
  EXPECT_TRUE(build_field(7, 1).modulus.empty());
  EXPECT_EQ(build_field(3, 2).name(), "GF(3^2)/<1,0>");
  EXPECT_THROW(build_field(4, 1), ArgumentError);
  EXPECT_THROW(build_field(3, 0), ArgumentError);
  EXPECT_THROW(build_field(2, 63), ArgumentError);
}

TEST(BuildField, DeterministicAndMinimal) {
  for (auto [p, k] : oracle::prime_powers_upto(2000)) {
    const FieldSpec spec = build_field(p, k);
    EXPECT_EQ(spec, build_field(p, k));
    if (k == 1 || p > 13) continue;
    const Field fp(build_field(p, 1));
    const PolyRing ring(fp);
    auto irreducible = [&](std::uint64_t code) {
      std::vector<std::int64_t> c;
      for (int i = 0; i < k; ++i, code /= p) c.push_back(static_cast<std::int64_t>(code % p));
      c.push_back(1);
      const Factorization f = factor(ring, ring.from_ints(c));
      return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
    };
    std::uint64_t chosen = 0;
    for (int i = k - 1; i >= 0; --i) chosen = chosen * p + spec.modulus[static_cast<std::size_t>(i)];
    EXPECT_TRUE(irreducible(chosen)) << spec.name();
    for (std::uint64_t c = 0; c < chosen; ++c) EXPECT_FALSE(irreducible(c)) << spec.name() << " code " << c;
  }
}

TEST(Field, OrderAndGenerator) {
  const Field f9(build_field(3, 2));
  EXPECT_EQ(f9.order(), 9u);
  const FFElem x = f9.generator_image();
  EXPECT_EQ(f9.code(x), 3u);
  EXPECT_EQ(f9.mul(x, x), f9.from_int(-1));
  EXPECT_EQ(f9.pow(x, 9), x);
}

TEST(Field, InversesExhaustive) {
  for (auto [p, k] : oracle::prime_powers_upto(625)) {
    const Field f(build_field(p, k));
    for (std::uint64_t c = 1; c < f.order(); ++c) {
      const FFElem a = f.from_code(c);
      ASSERT_EQ(f.mul(a, f.inv(a)), f.one()) << f.spec().name() << " code " << c;
    }
    EXPECT_THROW(f.inv(f.zero()), ArgumentError);
  }
}

TEST(Field, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(41);
  for (auto [p, k] : oracle::prime_powers_upto(3000)) {
    const Field f(build_field(p, k));
    for (int i = 0; i < 50; ++i) {
      const FFElem a = f.from_code(rng() % f.order());
      const FFElem b = f.from_code(rng() % f.order());
      const FFElem c = f.from_code(rng() % f.order());
      EXPECT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
      EXPECT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
      EXPECT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
      EXPECT_EQ(f.pow(a, f.order()), a);
      EXPECT_EQ(f.from_code(f.code(a)), a);
    }
  }
}

TEST(Field, PrimeSubfield) {
  const Field f(build_field(5, 3));
  for (std::uint64_t c = 0; c < f.order(); ++c) {
    const FFElem a = f.from_code(c);
    EXPECT_EQ(f.in_prime_subfield(a), f.frobenius(a) == a);
  }
  EXPECT_EQ(f.residue(f.from_int(-2)), 3u);
}

TEST(Coerce, Examples) {
  const Field f7(build_field(7, 1));
  EXPECT_EQ(coerce(make_rational(1, 2), f7), f7.from_int(4));
  const Field f3(build_field(3, 1));
  EXPECT_EQ(coerce(Rational(-8), f3), f3.one());
  const Field f9(build_field(3, 2));
  EXPECT_THROW(coerce(make_rational(1, 3), f9), CoercionDomainError);
  EXPECT_EQ(coerce(make_rational(3, 2), f9), f9.zero());
}

TEST(Coerce, IsHomomorphism) {
  std::mt19937_64 rng(43);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const Field f(build_field(p, 2));
    for (int i = 0; i < 200; ++i) {
      auto draw = [&] {
        long den = static_cast<long>(rng() % 500) + 1;
        while (den % static_cast<long>(p) == 0) ++den;
        return make_rational(static_cast<long>(rng() % 2001) - 1000, den);
      };
      const Rational a = draw();
      const Rational b = draw();
      EXPECT_EQ(coerce(a + b, f), f.add(coerce(a, f), coerce(b, f)));
      EXPECT_EQ(coerce(a * b, f), f.mul(coerce(a, f), coerce(b, f)));
      EXPECT_TRUE(f.in_prime_subfield(coerce(a, f)));
    }
  }
}

TEST(ModP, Canonical) {
  EXPECT_EQ(mod_p(std::int64_t{-1}, 7), 6u);
  EXPECT_EQ(mod_p(Integer(-15), 5), 0u);
  EXPECT_EQ(mod_p(std::int64_t{17}, 5), 2u);
}

TEST(FqPoly, DivremIdentity) {
  std::mt19937_64 rng(47);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {7, 1}, {5, 2}}) {
    const Field f(build_field(p, k));
    const PolyRing ring(f);
    for (int i = 0; i < 100; ++i) {
      const FqPoly a = oracle::random_poly(f, static_cast<int>(rng() % 10), rng);
      const FqPoly b = oracle::random_poly(f, static_cast<int>(rng() % 5), rng);
      auto [q, r] = ring.divrem(a, b);
      EXPECT_EQ(ring.add(ring.mul(q, b), r), a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

}  // namespace
}  // namespace hecke
