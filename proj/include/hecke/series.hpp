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

#ifndef HECKE_SERIES_HPP_
#define HECKE_SERIES_HPP_

#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Truncated Laurent series sum_{e >= lead} c_e X^e + O(X^truncation).
//
// Coefficients are stored densely for every exponent in
// [lead_index, truncation). The coefficient at lead_index is nonzero
// unless the series vanishes to its precision, in which case
// lead_index == truncation. Every operation returns a series whose
// truncation is what the inputs actually determine; precision is never
// extended silently.
class LaurentSeries {
 public:
  LaurentSeries(int lead, std::vector<Rational> coeffs, int truncation);

  static LaurentSeries zero(int truncation);
  static LaurentSeries constant(const Rational& c, int truncation);
  // X^exponent
  static LaurentSeries monomial(const Rational& c, int exponent, int truncation);

  int lead_index() const { return lead_; }
  int truncation() const { return truncation_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Throws PrecisionError for exponent >= truncation.
  Rational coeff(int exponent) const;
  const Rational& leading_coeff() const;

  LaurentSeries truncated(int truncation) const;
  // Multiply by X^k.
  LaurentSeries shifted(int k) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const Rational& c, const LaurentSeries& a);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

  std::string to_string(const std::string& var = "X", int max_terms = 6) const;

 private:
  void normalize();

  int lead_;
  std::vector<Rational> coeffs_;
  int truncation_;
};

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);
// Requires a series that is nonzero to its precision.
LaurentSeries series_reciprocal(const LaurentSeries& f);
// Requires lead_index >= 1 (no constant or polar part).
LaurentSeries series_exp(const LaurentSeries& a);
// f(g) for a power series f (lead >= 0) and g with lead >= 1.
LaurentSeries series_compose(const LaurentSeries& f, const LaurentSeries& g);
// Compositional inverse of f = X + O(X^2).
LaurentSeries series_revert(const LaurentSeries& f);

}  // namespace hecke

#endif  // HECKE_SERIES_HPP_
