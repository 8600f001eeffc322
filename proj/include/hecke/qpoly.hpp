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

#ifndef HECKE_QPOLY_HPP_
#define HECKE_QPOLY_HPP_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Dense univariate polynomial over Q, ascending powers. The coefficient
// vector never carries a trailing zero; the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<Rational> coeffs);

  static QPoly monomial(const Rational& c, int degree);
  static QPoly x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Zero for indices above the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& c, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};


// (quotient, remainder) with deg r < deg b. Throws ArgumentError for b == 0.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& p);
// Positive rational c with p = c * (primitive integer polynomial with the
// sign of p's leading coefficient); content(0) = 0.
Rational content(const QPoly& p);
QPoly derivative(const QPoly& p);

}  // namespace hecke

#endif  // HECKE_QPOLY_HPP_
