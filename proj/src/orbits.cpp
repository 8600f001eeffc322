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

#include "hecke/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hecke/errors.hpp"

namespace hecke {

std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t multiplicative_order(const Field& field, const FFElem& a) {
  if (field.is_zero(a)) throw ArgumentError("multiplicative order of zero");
  std::uint64_t order = field.order() - 1;
  for (const auto& [prime, exponent] : factor_integer(order)) {
    for (int i = 0; i < exponent; ++i) {
      if (field.pow(a, order / prime) == field.one()) {
        order /= prime;
      } else {
        break;
      }
    }
  }
  return order;
}

FFElem find_generator(const Field& field, std::uint64_t budget) {
  if (field.order() > budget) {
    throw BudgetExceeded("field " + field.spec().name() + " exceeds order budget " +
                         std::to_string(budget));
  }
  const std::uint64_t group = field.order() - 1;
  const auto primes = factor_integer(group);
  for (std::uint64_t code = 1; code < field.order(); ++code) {
    const FFElem candidate = field.from_code(code);
    bool generates = true;
    for (const auto& [prime, exponent] : primes) {
      if (field.pow(candidate, group / prime) == field.one()) {
        generates = false;
        break;
      }
    }
    if (generates) return candidate;
  }
  throw Error("find_generator: no generator found");  // unreachable for a field
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// x in [0, order) with base^x = target, where base has prime order.
std::uint64_t baby_giant(const Field& field, const FFElem& base, const FFElem& target,
                         std::uint64_t order) {
  std::uint64_t steps = 1;
  while (steps * steps < order) ++steps;
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(static_cast<std::size_t>(steps) * 2);
  FFElem cur = field.one();
  for (std::uint64_t j = 0; j < steps; ++j) {
    baby.emplace(field.code(cur), j);
    cur = field.mul(cur, base);
  }
  const FFElem giant = field.inv(field.pow(base, steps));
  FFElem gamma = target;
  for (std::uint64_t i = 0; i <= steps; ++i) {
    auto it = baby.find(field.code(gamma));
    if (it != baby.end()) return (i * steps + it->second) % order;
    gamma = field.mul(gamma, giant);
  }
  throw ArgumentError("dlog: element is not in the subgroup generated by the base");
}

// Extended Euclid inverse of a mod m (gcd 1).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

std::uint64_t dlog(const Field& field, const FFElem& t, const FFElem& s) {
  if (field.is_zero(s)) throw ArgumentError("dlog of zero");
  const std::uint64_t group = field.order() - 1;
  if (group == 1) return 0;
  std::uint64_t result = 0;
  std::uint64_t modulus = 1;
  for (const auto& [prime, exponent] : factor_integer(group)) {
    std::uint64_t prime_power = 1;
    for (int i = 0; i < exponent; ++i) prime_power *= prime;
    const FFElem gamma = field.pow(t, group / prime);
    // Digits of x mod prime^exponent, lowest first.
    std::uint64_t x = 0;
    std::uint64_t place = 1;
    const FFElem t_inv = field.inv(t);
    for (int i = 0; i < exponent; ++i) {
      const FFElem reduced = field.mul(field.pow(t_inv, x), s);
      const FFElem h = field.pow(reduced, group / (place * prime));
      const std::uint64_t digit = baby_giant(field, gamma, h, prime);
      x += digit * place;
      place *= prime;
    }
    // CRT: result mod modulus, x mod prime_power.
    const std::uint64_t combined = modulus * prime_power;
    const std::uint64_t diff = (x + prime_power - result % prime_power) % prime_power;
    const std::uint64_t k = mul_mod(diff, inverse_mod(modulus % prime_power, prime_power), prime_power);
    result = (result + modulus * k) % combined;
    modulus = combined;
  }
  return result;
}

std::vector<std::uint32_t> base_p_expansion(std::uint64_t k, std::uint64_t p, int width) {
  if (width < 0) throw ArgumentError("base_p_expansion: negative width");
  std::vector<std::uint32_t> digits;
  digits.reserve(static_cast<std::size_t>(width));
  std::uint64_t rest = k;
  for (int i = 0; i < width; ++i) {
    digits.push_back(static_cast<std::uint32_t>(rest % p));
    rest /= p;
  }
  if (rest != 0) {
    throw ArgumentError("base_p_expansion: " + std::to_string(k) + " needs more than " +
                        std::to_string(width) + " base-" + std::to_string(p) + " digits");
  }
  return digits;
}

std::vector<std::uint32_t> min_rotation(std::vector<std::uint32_t> digits) {
  std::vector<std::uint32_t> best = digits;
  for (std::size_t i = 1; i < digits.size(); ++i) {
    std::rotate(digits.begin(), digits.begin() + 1, digits.end());
    if (digits < best) best = digits;
  }
  return best;
}

int rotation_period(const std::vector<std::uint32_t>& digits) {
  const std::size_t n = digits.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i) periodic = digits[i] == digits[(i + d) % n];
    if (periodic) return static_cast<int>(d);
  }
  return static_cast<int>(n);
}

std::vector<FFElem> frobenius_orbit(const Field& field, const FFElem& s) {
  std::vector<FFElem> orbit{s};
  for (FFElem next = field.frobenius(s); !(next == s); next = field.frobenius(next)) {
    orbit.push_back(next);
  }
  return orbit;
}

int orbit_size_of_exponent(std::uint64_t k, std::uint64_t p, int s) {
  std::uint64_t q_minus_1 = 1;
  for (int i = 0; i < s; ++i) q_minus_1 *= p;
  q_minus_1 -= 1;
  std::uint64_t pd = 1;
  for (int d = 1; d <= s; ++d) {
    pd *= p;
    if (q_minus_1 == 0 || mul_mod(k % q_minus_1, pd - 1, q_minus_1) == 0) return d;
  }
  return s;
}

std::string RootProfile::serialize() const {
  std::ostringstream out;
  out << n << " " << p << " " << splitting_degree << " " << delta << " " << unit << " | ";
  if (prime_subfield_roots.empty()) out << "-";
  for (std::size_t i = 0; i < prime_subfield_roots.size(); ++i) {
    if (i > 0) out << ",";
    out << prime_subfield_roots[i].first << ":" << prime_subfield_roots[i].second;
  }
  out << " | ";
  if (orbits.empty()) out << "-";
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (i > 0) out << ";";
    out << "orbit(" << orbits[i].size << "," << orbits[i].multiplicity << ",";
    for (std::size_t j = 0; j < orbits[i].signature.size(); ++j) {
      if (j > 0) out << ".";
      out << orbits[i].signature[j];
    }
    out << ")";
  }
  return out.str();
}

RootProfile root_profile(const Field& field, const FqPoly& model, const RootProfileContext& ctx) {
  if (model.is_zero()) throw DegenerateModelError("root_profile: zero model");
  if (field.order() > ctx.budget) {
    throw BudgetExceeded("field " + field.spec().name() + " exceeds order budget " +
                         std::to_string(ctx.budget));
  }
  const PolyRing ring(field);
  RootProfile profile;
  profile.n = ctx.n;
  profile.p = field.p();
  profile.splitting_degree = ctx.splitting_degree;
  profile.delta = ctx.delta;

  const Factorization fact = factor(ring, model, ctx.seed);
  profile.unit = field.in_prime_subfield(fact.unit) ? field.residue(fact.unit) : 0;

  std::map<std::uint64_t, int> root_mult;  // by code
  for (const FactorPower& fp : fact.factors) {
    if (fp.factor.degree() == 1) {
      const FFElem root = field.neg(fp.factor.coeffs[0]);
      root_mult[field.code(root)] += fp.multiplicity;
    } else {
      profile.nonlinear_remainder += fp.factor.degree() * fp.multiplicity;
    }
  }

  std::optional<FFElem> generator = ctx.generator;
  std::set<std::uint64_t> seen;
  for (const auto& [code, mult] : root_mult) {
    if (seen.count(code)) continue;
    const FFElem root = field.from_code(code);
    if (field.in_prime_subfield(root)) {
      profile.prime_subfield_roots.emplace_back(field.residue(root), mult);
      seen.insert(code);
      continue;
    }
    const std::vector<FFElem> orbit = frobenius_orbit(field, root);
    for (const FFElem& member : orbit) {
      const std::uint64_t member_code = field.code(member);
      seen.insert(member_code);
      auto it = root_mult.find(member_code);
      if (it == root_mult.end() || it->second != mult) profile.frobenius_closed = false;
    }
    if (!generator) generator = find_generator(field, ctx.budget);
    const std::uint64_t k = dlog(field, *generator, root);
    auto digits = base_p_expansion(k, field.p(), field.k());
    OrbitEntry entry;
    entry.size = static_cast<int>(orbit.size());
    entry.multiplicity = mult;
    if (rotation_period(digits) != entry.size) profile.signature_periods_match = false;
    entry.signature = min_rotation(std::move(digits));
    profile.orbits.push_back(std::move(entry));
  }
  std::sort(profile.prime_subfield_roots.begin(), profile.prime_subfield_roots.end());
  std::sort(profile.orbits.begin(), profile.orbits.end(), [](const OrbitEntry& a, const OrbitEntry& b) {
    return std::tie(a.size, a.multiplicity, a.signature) < std::tie(b.size, b.multiplicity, b.signature);
  });
  return profile;
}

}  // namespace hecke
