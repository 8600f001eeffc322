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

#ifndef HECKE_FQ_POLY_HPP_
#define HECKE_FQ_POLY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hecke/finite_field.hpp"

namespace hecke {

// Dense polynomial over a finite field, ascending powers, trimmed.
struct FqPoly {
  std::vector<FFElem> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const FqPoly&, const FqPoly&) = default;
};

// Polynomial arithmetic over one field. Holds a reference; the field must
// outlive the ring.
class PolyRing {
 public:
  explicit PolyRing(const Field& field) : f_(field) {}

  const Field& field() const { return f_; }

  FqPoly trim(FqPoly a) const;
  FqPoly constant(const FFElem& c) const;
  FqPoly x() const;
  // x - r
  FqPoly linear(const FFElem& root) const;
  FqPoly from_ints(const std::vector<std::int64_t>& coeffs) const;

  const FFElem& leading(const FqPoly& a) const;
  bool is_one(const FqPoly& a) const;

  FqPoly add(const FqPoly& a, const FqPoly& b) const;
  FqPoly sub(const FqPoly& a, const FqPoly& b) const;
  FqPoly mul(const FqPoly& a, const FqPoly& b) const;
  FqPoly scale(const FFElem& c, const FqPoly& a) const;
  std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b) const;
  FqPoly rem(const FqPoly& a, const FqPoly& b) const { return divrem(a, b).second; }
  FqPoly quo(const FqPoly& a, const FqPoly& b) const { return divrem(a, b).first; }
  FqPoly monic(const FqPoly& a) const;
  FqPoly gcd(const FqPoly& a, const FqPoly& b) const;
  FqPoly derivative(const FqPoly& a) const;
  FqPoly pow(const FqPoly& base, std::uint64_t e) const;
  FqPoly powmod(FqPoly base, std::uint64_t e, const FqPoly& modulus) const;
  FFElem eval(const FqPoly& a, const FFElem& x) const;

  std::string to_string(const FqPoly& a) const;

 private:
  const Field& f_;
};

}  // namespace hecke

#endif  // HECKE_FQ_POLY_HPP_
