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

#ifndef HECKE_SERIES_ENGINE_HPP_
#define HECKE_SERIES_ENGINE_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "hecke/qpoly.hpp"
#include "hecke/rational.hpp"
#include "hecke/series.hpp"

namespace hecke {

// Parameters of the Gauss hypergeometric equation whose solution ratio
// uniformizes the Hecke triangle with angles pi/m, pi/2 and 0.
// The upper parameters are a and a + 1 - c; the lower one is 1.
struct HeckeParams {
  int m;
  Rational a;  // 1/4 - 1/(2m)
  Rational c;  // 1 - 1/m

  Rational upper_a() const { return a; }
  Rational upper_b() const { return a + 1 - c; }
};

HeckeParams hyper_params(int m);

struct FrobeniusPair {
  LaurentSeries holomorphic;    // F(w), f_0 = 1
  LaurentSeries log_partner;    // G(w), g_0 = 0
};

// Both series exact to O(w^order).
FrobeniusPair frobenius_pair(int m, int order);

// Coefficients of Jhat = 1/Xhat + sum_n ahat_n Xhat^n, where Xhat =
// w exp(G/F) and Jhat = 1/w. index 0 holds ahat_{-1} = 1.
struct NaturalExpansion {
  int m = 0;
  int order = 0;  // ahat_{-1} .. ahat_{order-1}
  std::vector<Rational> coeffs;

  const Rational& at(int n) const;
};

NaturalExpansion natural_expansion(int m, int order);

// Number of natural_expansion calls made by this process.
std::uint64_t natural_expansion_count();

enum class RootChoice { kPositive, kNegative };

// Affine change J = c Jhat + s, X = Xhat / c pinning the normalization.
struct Calibration {
  int m = 0;
  Rational scale;  // c_m
  Rational shift;  // s_m
};

// Anchor polynomials A_0 = 3x^2 + 4 and A_1 = 69x^4 - 8x^2 - 48.
const QPoly& anchor_a0();
const QPoly& anchor_a1();

Calibration calibrate(const NaturalExpansion& natural, RootChoice root = RootChoice::kPositive);
Calibration calibrate(int m, RootChoice root = RootChoice::kPositive);

// a_m(-1..order-1), with a_m(-1) = 1.
struct JExpansion {
  int m = 0;
  int order = 0;
  std::vector<Rational> coeffs;

  const Rational& at(int n) const;
  LaurentSeries as_series() const;
};

JExpansion calibrated_expansion(const NaturalExpansion& natural, const Calibration& calibration);
JExpansion calibrated_expansion(int m, int order, RootChoice root = RootChoice::kPositive);

// X -> 2^6 m^3 X, then divide by the new leading coefficient.
LaurentSeries bar(const LaurentSeries& f, int m);

// bar(J_m): 1/X + sum c_m(n) X^n.
LaurentSeries j_expansion(const JExpansion& expansion);
LaurentSeries j_expansion(int m, int order);

}  // namespace hecke

#endif  // HECKE_SERIES_ENGINE_HPP_
