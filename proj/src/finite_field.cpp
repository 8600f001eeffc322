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

#include "hecke/finite_field.hpp"

#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/fq_poly.hpp"

namespace hecke {

std::string FieldSpec::name() const {
  std::ostringstream out;
  out << "GF(" << p << "^" << k << ")/<";
  for (std::size_t i = 0; i < modulus.size(); ++i) {
    if (i > 0) out << ",";
    out << modulus[i];
  }
  out << ">";
  return out.str();
}

std::uint64_t mod_p(std::int64_t n, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = n % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_p(const Integer& n, std::uint64_t p) {
  Integer r;
  Integer modulus(std::to_string(p));
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t());
  return std::stoull(r.get_str());
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), order_(1) {
  if (!is_prime(spec_.p) || spec_.p >= (1ULL << 31)) {
    throw ArgumentError("field characteristic must be a prime below 2^31");
  }
  if (spec_.k < 1 || spec_.k > kMaxExtensionDegree) {
    throw ArgumentError("extension degree out of range: " + std::to_string(spec_.k));
  }
  if (static_cast<int>(spec_.modulus.size()) != (spec_.k == 1 ? 0 : spec_.k)) {
    throw ArgumentError("modulus length does not match extension degree");
  }
  for (int i = 0; i < spec_.k; ++i) {
    if (order_ > (1ULL << 62) / spec_.p) throw ArgumentError("field order exceeds 2^62");
    order_ *= spec_.p;
  }
}

FFElem Field::from_int(std::int64_t n) const {
  FFElem out;
  out.c[0] = static_cast<std::uint32_t>(mod_p(n, spec_.p));
  return out;
}

FFElem Field::generator_image() const {
  FFElem out;
  if (spec_.k == 1) return out;
  out.c[1] = 1;
  return out;
}

FFElem Field::add(const FFElem& a, const FFElem& b) const {
  FFElem out;
  for (int i = 0; i < spec_.k; ++i) {
    std::uint64_t s = std::uint64_t{a.c[i]} + b.c[i];
    if (s >= spec_.p) s -= spec_.p;
    out.c[i] = static_cast<std::uint32_t>(s);
  }
  return out;
}

FFElem Field::neg(const FFElem& a) const {
  FFElem out;
  for (int i = 0; i < spec_.k; ++i) {
    out.c[i] = a.c[i] == 0 ? 0 : static_cast<std::uint32_t>(spec_.p - a.c[i]);
  }
  return out;
}

FFElem Field::sub(const FFElem& a, const FFElem& b) const { return add(a, neg(b)); }

FFElem Field::mul(const FFElem& a, const FFElem& b) const {
  const int k = spec_.k;
  const std::uint64_t p = spec_.p;
  if (k == 1) {
    FFElem out;
    out.c[0] = static_cast<std::uint32_t>(mulmod(a.c[0], b.c[0]));
    return out;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
  for (int i = 0; i < k; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < k; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a.c[i], b.c[j])) % p;
    }
  }
  // x^k = -(c_0 + ... + c_{k-1} x^{k-1})
  for (int d = 2 * k - 2; d >= k; --d) {
    const std::uint64_t top = prod[d];
    if (top == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i) {
      const std::uint64_t sub = mulmod(top, spec_.modulus[i]);
      prod[d - k + i] = (prod[d - k + i] + p - sub) % p;
    }
  }
  FFElem out;
  for (int i = 0; i < k; ++i) out.c[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

FFElem Field::pow(FFElem a, std::uint64_t e) const {
  FFElem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    e >>= 1;
    if (e > 0) a = mul(a, a);
  }
  return result;
}

FFElem Field::inv(const FFElem& a) const {
  if (is_zero(a)) throw ArgumentError("inverse of zero in " + spec_.name());
  return pow(a, order_ - 2);
}

bool Field::in_prime_subfield(const FFElem& a) const {
  for (int i = 1; i < spec_.k; ++i) {
    if (a.c[i] != 0) return false;
  }
  return true;
}

std::uint64_t Field::residue(const FFElem& a) const {
  if (!in_prime_subfield(a)) throw ArgumentError("element is not in the prime subfield");
  return a.c[0];
}

std::uint64_t Field::code(const FFElem& a) const {
  std::uint64_t value = 0;
  for (int i = spec_.k - 1; i >= 0; --i) value = value * spec_.p + a.c[i];
  return value;
}

FFElem Field::from_code(std::uint64_t code) const {
  if (code >= order_) throw ArgumentError("element code out of range");
  FFElem out;
  for (int i = 0; i < spec_.k; ++i) {
    out.c[i] = static_cast<std::uint32_t>(code % spec_.p);
    code /= spec_.p;
  }
  return out;
}

std::string Field::to_string(const FFElem& a) const {
  if (spec_.k == 1) return std::to_string(a.c[0]);
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < spec_.k; ++i) {
    if (i > 0) out << ",";
    out << a.c[i];
  }
  out << ")";
  return out.str();
}

namespace {

// Rabin's test for a monic f over the prime field.
bool is_irreducible_monic(const PolyRing& ring, const FqPoly& f, std::uint64_t p) {
  const int k = f.degree();
  if (k <= 1) return k == 1;
  std::vector<int> prime_divisors;
  for (int d = 2, rest = k; rest > 1; ++d) {
    if (rest % d == 0) {
      prime_divisors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  // frob[j] = x^{p^j} mod f
  std::vector<FqPoly> frob(static_cast<std::size_t>(k) + 1);
  frob[0] = ring.x();
  for (int j = 1; j <= k; ++j) frob[j] = ring.powmod(frob[j - 1], p, f);
  if (!ring.sub(frob[k], ring.x()).is_zero()) return false;
  for (int ell : prime_divisors) {
    const FqPoly g = ring.gcd(ring.sub(frob[k / ell], ring.x()), f);
    if (!ring.is_one(g)) return false;
  }
  return true;
}

}  // namespace

FieldSpec build_field(std::uint64_t p, int k) {
  if (!is_prime(p)) throw ArgumentError("build_field: " + std::to_string(p) + " is not prime");
  if (k < 1 || k > kMaxExtensionDegree) {
    throw ArgumentError("build_field: extension degree out of range: " + std::to_string(k));
  }
  if (k == 1) return {p, 1, {}};
  const Field prime_field(FieldSpec{p, 1, {}});
  const PolyRing ring(prime_field);
  std::uint64_t low_count = 1;
  for (int i = 0; i < k; ++i) {
    if (low_count > (1ULL << 62) / p) throw ArgumentError("build_field: p^k too large");
    low_count *= p;
  }
  for (std::uint64_t code = 0; code < low_count; ++code) {
    FqPoly candidate;
    candidate.coeffs.resize(static_cast<std::size_t>(k) + 1);
    std::uint64_t rest = code;
    for (int i = 0; i < k; ++i) {
      candidate.coeffs[i] = prime_field.from_int(static_cast<std::int64_t>(rest % p));
      rest /= p;
    }
    candidate.coeffs[k] = prime_field.one();
    if (candidate.coeffs[0] == prime_field.zero()) continue;  // divisible by x
    if (is_irreducible_monic(ring, candidate, p)) {
      FieldSpec spec{p, k, {}};
      for (int i = 0; i < k; ++i) spec.modulus.push_back(candidate.coeffs[i].c[0]);
      return spec;
    }
  }
  throw Error("build_field: no irreducible polynomial found");  // unreachable
}

FieldPtr make_field(std::uint64_t p, int k) { return std::make_shared<const Field>(build_field(p, k)); }

FFElem coerce(const Rational& r, const Field& field) {
  if (r == 0) return field.zero();
  if (ord_p(r, field.p()) < 0) {
    throw CoercionDomainError("cannot coerce " + to_string(r) + " into characteristic " +
                              std::to_string(field.p()) + ": negative p-order");
  }
  const std::uint64_t num = mod_p(Integer(r.get_num()), field.p());
  const std::uint64_t den = mod_p(Integer(r.get_den()), field.p());
  const FFElem den_elem = field.from_int(static_cast<std::int64_t>(den));
  return field.mul(field.from_int(static_cast<std::int64_t>(num)), field.inv(den_elem));
}

}  // namespace hecke
