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

#include "hecke/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw ArgumentError("negative monomial degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return QPoly(std::move(coeffs));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& QPoly::leading() const {
  if (is_zero()) throw ContractError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return QPoly(std::move(out));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(const Rational& c, const QPoly& a) {
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = c * a.coeffs_[i];
  return QPoly(std::move(out));
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << hecke::to_string(mag);
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw ArgumentError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {QPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1);
  Rational inv_lead = 1 / b.leading();
  for (int i = dq; i >= 0; --i) {
    Rational q = rem[static_cast<std::size_t>(i + db)] * inv_lead;
    quot[static_cast<std::size_t>(i)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return (1 / p.leading()) * p;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Rational content(const QPoly& p) {
  if (p.is_zero()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const Rational& c : p.coeffs()) {
    if (c == 0) continue;
    num_gcd = gcd(num_gcd, Integer(c.get_num()));
    den_lcm = lcm(den_lcm, Integer(c.get_den()));
  }
  return make_rational(abs(num_gcd), den_lcm);
}

QPoly derivative(const QPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = Rational(i) * p.coeffs()[static_cast<std::size_t>(i)];
  }
  return QPoly(std::move(out));
}

}  // namespace hecke
