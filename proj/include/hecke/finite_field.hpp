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

#ifndef HECKE_FINITE_FIELD_HPP_
#define HECKE_FINITE_FIELD_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

inline constexpr int kMaxExtensionDegree = 32;

// F_{p^k} = F_p[x] / (modulus). The modulus is the monic irreducible of
// degree k whose low coefficients, read as the base-p integer
// c_0 + c_1 p + ... + c_{k-1} p^{k-1}, are smallest.
struct FieldSpec {
  std::uint64_t p = 0;
  int k = 1;
  // c_0 .. c_{k-1}; empty for k = 1.
  std::vector<std::uint32_t> modulus;

  // GF(p^k)/<c0,...,c_{k-1}>
  std::string name() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Element of F_{p^k}: residues of the powers 1, g, ..., g^{k-1} of the
// generator image. Entries at index >= k are always zero.
struct FFElem {
  std::array<std::uint32_t, kMaxExtensionDegree> c{};

  friend bool operator==(const FFElem&, const FFElem&) = default;
};

class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t p() const { return spec_.p; }
  int k() const { return spec_.k; }
  std::uint64_t order() const { return order_; }

  FFElem zero() const { return {}; }
  FFElem one() const { return from_int(1); }
  // Image of the integer n under Z -> F_p -> F.
  FFElem from_int(std::int64_t n) const;
  // The class of x (the generator image); for k = 1 that is 0.
  FFElem generator_image() const;

  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem pow(FFElem a, std::uint64_t e) const;
  // Throws ArgumentError for zero.
  FFElem inv(const FFElem& a) const;
  FFElem frobenius(const FFElem& a) const { return pow(a, spec_.p); }

  bool is_zero(const FFElem& a) const { return a == FFElem{}; }
  bool in_prime_subfield(const FFElem& a) const;
  // Residue 0..p-1 of a prime-subfield element.
  std::uint64_t residue(const FFElem& a) const;

  // Base-p value sum c_i p^i; a bijection onto [0, order).
  std::uint64_t code(const FFElem& a) const;
  FFElem from_code(std::uint64_t code) const;

  std::string to_string(const FFElem& a) const;

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const { return (a * b) % spec_.p; }

  FieldSpec spec_;
  std::uint64_t order_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Throws ArgumentError for composite p, k < 1, k > kMaxExtensionDegree or
// p^k >= 2^62.
FieldSpec build_field(std::uint64_t p, int k);
FieldPtr make_field(std::uint64_t p, int k);

// Homomorphic image of r in the prime subfield of F. Throws
// CoercionDomainError when ord_p(r) < 0.
FFElem coerce(const Rational& r, const Field& field);
// Canonical representative of n modulo p in 0..p-1.
std::uint64_t mod_p(const Integer& n, std::uint64_t p);
std::uint64_t mod_p(std::int64_t n, std::uint64_t p);

}  // namespace hecke

#endif  // HECKE_FINITE_FIELD_HPP_
