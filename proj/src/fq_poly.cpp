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

#include "hecke/fq_poly.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

FqPoly PolyRing::trim(FqPoly a) const {
  while (!a.coeffs.empty() && f_.is_zero(a.coeffs.back())) a.coeffs.pop_back();
  return a;
}

FqPoly PolyRing::constant(const FFElem& c) const { return trim(FqPoly{{c}}); }

FqPoly PolyRing::x() const { return FqPoly{{f_.zero(), f_.one()}}; }

FqPoly PolyRing::linear(const FFElem& root) const { return FqPoly{{f_.neg(root), f_.one()}}; }

FqPoly PolyRing::from_ints(const std::vector<std::int64_t>& coeffs) const {
  FqPoly out;
  for (std::int64_t c : coeffs) out.coeffs.push_back(f_.from_int(c));
  return trim(std::move(out));
}

const FFElem& PolyRing::leading(const FqPoly& a) const {
  if (a.is_zero()) throw ContractError("leading coefficient of the zero polynomial");
  return a.coeffs.back();
}

bool PolyRing::is_one(const FqPoly& a) const {
  return a.degree() == 0 && a.coeffs[0] == f_.one();
}

FqPoly PolyRing::add(const FqPoly& a, const FqPoly& b) const {
  FqPoly out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    if (i < a.coeffs.size() && i < b.coeffs.size()) {
      out.coeffs[i] = f_.add(a.coeffs[i], b.coeffs[i]);
    } else {
      out.coeffs[i] = i < a.coeffs.size() ? a.coeffs[i] : b.coeffs[i];
    }
  }
  return trim(std::move(out));
}

FqPoly PolyRing::sub(const FqPoly& a, const FqPoly& b) const {
  FqPoly neg_b;
  neg_b.coeffs.reserve(b.coeffs.size());
  for (const FFElem& c : b.coeffs) neg_b.coeffs.push_back(f_.neg(c));
  return add(a, neg_b);
}

FqPoly PolyRing::mul(const FqPoly& a, const FqPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  FqPoly out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, f_.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (f_.is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (f_.is_zero(b.coeffs[j])) continue;
      out.coeffs[i + j] = f_.add(out.coeffs[i + j], f_.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return trim(std::move(out));
}

FqPoly PolyRing::scale(const FFElem& c, const FqPoly& a) const {
  FqPoly out;
  out.coeffs.reserve(a.coeffs.size());
  for (const FFElem& x : a.coeffs) out.coeffs.push_back(f_.mul(c, x));
  return trim(std::move(out));
}

std::pair<FqPoly, FqPoly> PolyRing::divrem(const FqPoly& a, const FqPoly& b) const {
  if (b.is_zero()) throw ArgumentError("polynomial division by zero over " + f_.spec().name());
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {FqPoly{}, a};
  std::vector<FFElem> rem = a.coeffs;
  FqPoly quot;
  quot.coeffs.assign(static_cast<std::size_t>(dq) + 1, f_.zero());
  const FFElem inv_lead = f_.inv(b.coeffs.back());
  for (int i = dq; i >= 0; --i) {
    const FFElem q = f_.mul(rem[static_cast<std::size_t>(i + db)], inv_lead);
    quot.coeffs[static_cast<std::size_t>(i)] = q;
    if (f_.is_zero(q)) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i + j)];
      slot = f_.sub(slot, f_.mul(q, b.coeffs[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {trim(std::move(quot)), trim(FqPoly{std::move(rem)})};
}

FqPoly PolyRing::monic(const FqPoly& a) const {
  if (a.is_zero()) return a;
  return scale(f_.inv(a.coeffs.back()), a);
}

FqPoly PolyRing::gcd(const FqPoly& a, const FqPoly& b) const {
  FqPoly x = a;
  FqPoly y = b;
  while (!y.is_zero()) {
    FqPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

FqPoly PolyRing::derivative(const FqPoly& a) const {
  if (a.degree() < 1) return {};
  FqPoly out;
  out.coeffs.reserve(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) {
    out.coeffs.push_back(f_.mul(f_.from_int(i), a.coeffs[static_cast<std::size_t>(i)]));
  }
  return trim(std::move(out));
}

FqPoly PolyRing::pow(const FqPoly& base, std::uint64_t e) const {
  FqPoly result = constant(f_.one());
  FqPoly b = base;
  while (e > 0) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e > 0) b = mul(b, b);
  }
  return result;
}

FqPoly PolyRing::powmod(FqPoly base, std::uint64_t e, const FqPoly& modulus) const {
  FqPoly result = rem(constant(f_.one()), modulus);
  base = rem(base, modulus);
  while (e > 0) {
    if (e & 1) result = rem(mul(result, base), modulus);
    e >>= 1;
    if (e > 0) base = rem(mul(base, base), modulus);
  }
  return result;
}

FFElem PolyRing::eval(const FqPoly& a, const FFElem& x) const {
  FFElem acc = f_.zero();
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) acc = f_.add(f_.mul(acc, x), *it);
  return acc;
}

std::string PolyRing::to_string(const FqPoly& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const FFElem& c = a.coeffs[static_cast<std::size_t>(i)];
    if (f_.is_zero(c)) continue;
    if (!first) out << " + ";
    first = false;
    const bool unit = c == f_.one();
    if (!unit || i == 0) out << f_.to_string(c);
    if (i >= 1) out << (unit ? "" : "*") << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

}  // namespace hecke
