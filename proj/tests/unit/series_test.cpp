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
#include "hecke/series.hpp"

namespace hecke {
namespace {

LaurentSeries random_series(std::mt19937_64& rng, int lead, int truncation) {
  std::vector<Rational> c;
  for (int e = lead; e < truncation; ++e) {
    c.push_back(make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1));
  }
  if (!c.empty() && c.front() == 0) c.front() = 1;
  return LaurentSeries(lead, c, truncation);
}

TEST(Series, ReciprocalOfGeometric) {
  const LaurentSeries f(0, {1, -1}, 3);
  EXPECT_EQ(series_reciprocal(f), LaurentSeries(0, {1, 1, 1}, 3));
}

TEST(Series, ExpOfZero) {
  EXPECT_EQ(series_exp(LaurentSeries::zero(6)), LaurentSeries::constant(1, 6));
}

TEST(Series, RevertCatalan) {
  const LaurentSeries f(1, {1, -1, 0, 0}, 5);
  const LaurentSeries g = series_revert(f);
  EXPECT_EQ(g, LaurentSeries(1, {1, 1, 2, 5}, 5));
  EXPECT_EQ(series_compose(f, g), LaurentSeries(1, {1, 0, 0, 0}, 5));
}

TEST(Series, PrecisionIsTracked) {
  const LaurentSeries a(0, {1, 2, 3}, 3);
  const LaurentSeries b(0, {1, 1}, 2);
  EXPECT_EQ((a + b).truncation(), 2);
  EXPECT_EQ((a * b).truncation(), 2);
  EXPECT_THROW(a.coeff(3), PrecisionError);
  EXPECT_EQ(a.coeff(-4), 0);
  // X^{-1} (1 + O(X^3)) * X (1 + O(X^3)) = 1 + O(X^3)
  const LaurentSeries p(-1, {1, 0, 0}, 2);
  const LaurentSeries q(1, {1, 0, 0}, 4);
  EXPECT_EQ((p * q).truncation(), 3);
}

TEST(Series, ContractErrors) {
  EXPECT_THROW(series_exp(LaurentSeries::constant(1, 4)), ContractError);
  EXPECT_THROW(series_reciprocal(LaurentSeries::zero(4)), ContractError);
  EXPECT_THROW(series_revert(LaurentSeries(1, {2, 1}, 3)), ContractError);
  EXPECT_THROW(series_compose(LaurentSeries(-1, {1}, 3), LaurentSeries(1, {1}, 3)), ContractError);
}

TEST(Series, ExpTimesExpOfNegationIsOne) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const LaurentSeries a = random_series(rng, 1, 9);
    EXPECT_EQ(series_exp(a) * series_exp(-a), LaurentSeries::constant(1, 9));
  }
}

TEST(Series, RevertRoundTrip) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    LaurentSeries f = random_series(rng, 1, 10);
    f = f + LaurentSeries::monomial(1 - f.coeff(1), 1, 10);
    const LaurentSeries g = series_revert(f);
    EXPECT_EQ(series_compose(f, g), LaurentSeries::monomial(1, 1, 10));
    EXPECT_EQ(series_compose(g, f), LaurentSeries::monomial(1, 1, 10));
  }
}

TEST(Series, ReciprocalIsInverse) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const LaurentSeries f = random_series(rng, -2, 7);
    const LaurentSeries r = series_reciprocal(f);
    EXPECT_EQ(r.lead_index(), 2);
    const LaurentSeries prod = f * r;
    EXPECT_EQ(prod.truncation(), 9);
    EXPECT_EQ(prod, LaurentSeries::constant(1, 9));
  }
}

}  // namespace
}  // namespace hecke
