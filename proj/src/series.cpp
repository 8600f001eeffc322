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

#include "hecke/series.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

LaurentSeries::LaurentSeries(int lead, std::vector<Rational> coeffs, int truncation)
    : lead_(lead), coeffs_(std::move(coeffs)), truncation_(truncation) {
  normalize();
}

void LaurentSeries::normalize() {
  if (lead_ >= truncation_) {
    coeffs_.clear();
    lead_ = truncation_;
    return;
  }
  coeffs_.resize(static_cast<std::size_t>(truncation_ - lead_));
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(skip));
    lead_ += static_cast<int>(skip);
  }
}

LaurentSeries LaurentSeries::zero(int truncation) { return {truncation, {}, truncation}; }

LaurentSeries LaurentSeries::constant(const Rational& c, int truncation) {
  return {0, {c}, truncation};
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int truncation) {
  return {exponent, {c}, truncation};
}

Rational LaurentSeries::coeff(int exponent) const {
  if (exponent >= truncation_) {
    throw PrecisionError("coefficient X^" + std::to_string(exponent) +
                         " requested beyond truncation O(X^" + std::to_string(truncation_) + ")");
  }
  if (exponent < lead_) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - lead_)];
}

const Rational& LaurentSeries::leading_coeff() const {
  if (is_zero()) throw ContractError("leading coefficient of a zero series " + to_string());
  return coeffs_.front();
}

LaurentSeries LaurentSeries::truncated(int truncation) const {
  return {lead_, coeffs_, std::min(truncation, truncation_)};
}

LaurentSeries LaurentSeries::shifted(int k) const {
  return {lead_ + k, coeffs_, truncation_ + k};
}

LaurentSeries LaurentSeries::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return {lead_, std::move(out), truncation_};
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  int trunc = std::min(a.truncation_, b.truncation_);
  int lead = std::min(a.lead_, b.lead_);
  if (lead >= trunc) return LaurentSeries::zero(trunc);
  std::vector<Rational> out(static_cast<std::size_t>(trunc - lead));
  for (int e = lead; e < trunc; ++e) {
    out[static_cast<std::size_t>(e - lead)] = a.coeff(e) + b.coeff(e);
  }
  return {lead, std::move(out), trunc};
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_zero() || b.is_zero()) {
    // Only the valuation bound survives.
    int trunc = std::min(a.truncation_ + b.lead_, b.truncation_ + a.lead_);
    return LaurentSeries::zero(trunc);
  }
  int lead = a.lead_ + b.lead_;
  int trunc = std::min(a.truncation_ + b.lead_, b.truncation_ + a.lead_);
  std::size_t len = static_cast<std::size_t>(std::max(0, trunc - lead));
  std::vector<Rational> out(len);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return {lead, std::move(out), trunc};
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& a) {
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = c * a.coeffs_[i];
  return {a.lead_, std::move(out), a.truncation_};
}

std::string LaurentSeries::to_string(const std::string& var, int max_terms) const {
  std::ostringstream out;
  int shown = 0;
  for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    if (coeffs_[i] == 0) continue;
    int e = lead_ + static_cast<int>(i);
    if (shown > 0) out << " + ";
    out << "(" << hecke::to_string(coeffs_[i]) << ")";
    if (e != 0) out << var << "^" << e;
    ++shown;
  }
  if (shown > 0) out << " + ";
  out << "O(" << var << "^" << truncation_ << ")";
  return out.str();
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }

LaurentSeries series_reciprocal(const LaurentSeries& f) {
  if (f.is_zero()) {
    throw ContractError("series_reciprocal: series vanishes to its precision: " + f.to_string());
  }
  const int v = f.lead_index();
  const int rel = f.truncation() - v;
  const Rational inv_lead = 1 / f.leading_coeff();
  std::vector<Rational> out(static_cast<std::size_t>(rel));
  out[0] = inv_lead;
  for (int k = 1; k < rel; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) {
      const Rational c = f.coeff(v + j);
      if (c != 0) acc += c * out[static_cast<std::size_t>(k - j)];
    }
    out[static_cast<std::size_t>(k)] = -acc * inv_lead;
  }
  return {-v, std::move(out), -v + rel};
}

LaurentSeries series_exp(const LaurentSeries& a) {
  const int t = a.truncation();
  if (!a.is_zero() && a.lead_index() < 1) {
    throw ContractError("series_exp: argument has a constant or polar term: " + a.to_string());
  }
  if (t <= 0) return LaurentSeries::zero(t);
  // e' = a' e, coefficientwise k e_k = sum_j j a_j e_{k-j}.
  std::vector<Rational> e(static_cast<std::size_t>(t));
  e[0] = 1;
  for (int k = 1; k < t; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) {
      const Rational c = a.coeff(j);
      if (c != 0) acc += Rational(j) * c * e[static_cast<std::size_t>(k - j)];
    }
    e[static_cast<std::size_t>(k)] = acc / k;
  }
  return {0, std::move(e), t};
}

LaurentSeries series_compose(const LaurentSeries& f, const LaurentSeries& g) {
  if (!f.is_zero() && f.lead_index() < 0) {
    throw ContractError("series_compose: outer series has a polar part: " + f.to_string());
  }
  if (g.is_zero() || g.lead_index() < 1) {
    throw ContractError("series_compose: inner series must have positive valuation: " +
                        g.to_string());
  }
  const int vg = g.lead_index();
  const int vf = f.is_zero() ? f.truncation() : f.lead_index();
  // Error terms: O(g^tf) from truncating f, and g^i's error starting at
  // tg + (i-1) vg for the lowest surviving power i of f.
  int trunc = f.truncation() * vg;
  trunc = std::min(trunc, g.truncation() + (std::max(vf, 1) - 1) * vg);
  if (f.is_zero()) return LaurentSeries::zero(trunc);
  LaurentSeries acc = LaurentSeries::zero(trunc);
  LaurentSeries power = LaurentSeries::constant(1, trunc);
  for (int i = 0; i < f.truncation() && i * vg < trunc; ++i) {
    if (i > 0) power = (power * g).truncated(trunc);
    const Rational c = f.coeff(i);
    if (c != 0) acc = acc + c * power;
  }
  return acc.truncated(trunc);
}

LaurentSeries series_revert(const LaurentSeries& f) {
  if (f.is_zero() || f.lead_index() != 1 || f.leading_coeff() != 1) {
    throw ContractError("series_revert: expected X + O(X^2), got " + f.to_string());
  }
  const int t = f.truncation();
  // Lagrange inversion: [X^n] g = (1/n) [w^{n-1}] (w / f(w))^n.
  const LaurentSeries h = series_reciprocal(f.shifted(-1));
  std::vector<Rational> out(static_cast<std::size_t>(t));
  LaurentSeries power = LaurentSeries::constant(1, h.truncation());
  for (int n = 1; n < t; ++n) {
    power = power * h;
    out[static_cast<std::size_t>(n)] = power.coeff(n - 1) / n;
  }
  return {0, std::move(out), t};
}

}  // namespace hecke
