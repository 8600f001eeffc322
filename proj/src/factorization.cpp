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

#include "hecke/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hecke/errors.hpp"
#include "hecke/sha256.hpp"

namespace hecke {

namespace {

// Inverse Frobenius coefficientwise on a polynomial in x^p.
FqPoly pth_root(const PolyRing& ring, const FqPoly& f) {
  const Field& field = ring.field();
  const std::uint64_t p = field.p();
  // a^{1/p} = a^{p^{k-1}}
  std::uint64_t root_exp = 1;
  for (int i = 1; i < field.k(); ++i) root_exp *= p;
  FqPoly out;
  for (std::size_t i = 0; i < f.coeffs.size(); i += p) {
    out.coeffs.push_back(field.pow(f.coeffs[i], root_exp));
  }
  return ring.trim(std::move(out));
}

std::vector<FactorPower> squarefree_monic(const PolyRing& ring, const FqPoly& f) {
  std::vector<FactorPower> out;
  if (f.degree() < 1) return out;
  const std::uint64_t p = ring.field().p();
  const FqPoly df = ring.derivative(f);
  if (df.is_zero()) {
    for (auto& part : squarefree_monic(ring, pth_root(ring, f))) {
      part.multiplicity *= static_cast<int>(p);
      out.push_back(std::move(part));
    }
    return out;
  }
  FqPoly c = ring.gcd(f, df);
  FqPoly w = ring.quo(f, c);
  int i = 1;
  while (!ring.is_one(w)) {
    FqPoly y = ring.gcd(w, c);
    FqPoly fac = ring.quo(w, y);
    if (fac.degree() > 0) out.push_back({ring.monic(fac), i});
    ++i;
    w = std::move(y);
    c = ring.quo(c, w);
  }
  if (!ring.is_one(c)) {
    for (auto& part : squarefree_monic(ring, pth_root(ring, c))) {
      part.multiplicity *= static_cast<int>(p);
      out.push_back(std::move(part));
    }
  }
  return out;
}

FqPoly random_poly(const PolyRing& ring, int degree_below, std::mt19937_64& rng) {
  const Field& field = ring.field();
  std::uniform_int_distribution<std::uint64_t> pick(0, field.order() - 1);
  FqPoly out;
  for (int i = 0; i < degree_below; ++i) out.coeffs.push_back(field.from_code(pick(rng)));
  return ring.trim(std::move(out));
}

bool poly_less(const Field& field, const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ca = field.code(a.coeffs[static_cast<std::size_t>(i)]);
    const auto cb = field.code(b.coeffs[static_cast<std::size_t>(i)]);
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

std::vector<FactorPower> squarefree(const PolyRing& ring, const FqPoly& f) {
  if (f.is_zero()) throw ArgumentError("squarefree: zero polynomial");
  auto parts = squarefree_monic(ring, ring.monic(f));
  std::sort(parts.begin(), parts.end(), [](const FactorPower& a, const FactorPower& b) {
    return a.multiplicity < b.multiplicity;
  });
  return parts;
}

std::vector<FactorPower> distinct_degree(const PolyRing& ring, const FqPoly& f) {
  std::vector<FactorPower> out;
  const std::uint64_t q = ring.field().order();
  FqPoly rest = ring.monic(f);
  FqPoly h = ring.rem(ring.x(), rest.degree() > 0 ? rest : ring.x());
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = ring.powmod(h, q, rest);
    FqPoly g = ring.gcd(rest, ring.sub(h, ring.x()));
    if (!ring.is_one(g)) {
      out.push_back({g, d});
      rest = ring.quo(rest, g);
      h = ring.rem(h, rest);
    }
  }
  if (rest.degree() > 0) out.push_back({rest, rest.degree()});
  return out;
}

std::vector<FqPoly> equal_degree(const PolyRing& ring, const FqPoly& f, int d,
                                 std::mt19937_64& rng) {
  const Field& field = ring.field();
  const int n = f.degree();
  if (n <= 0 || d <= 0 || n % d != 0) {
    throw ArgumentError("equal_degree: degree " + std::to_string(n) + " is not a multiple of " +
                        std::to_string(d));
  }
  const std::size_t count = static_cast<std::size_t>(n / d);
  std::vector<FqPoly> parts{ring.monic(f)};
  const std::uint64_t q = field.order();
  const bool char_two = field.p() == 2;
  while (parts.size() < count) {
    const FqPoly a = random_poly(ring, n, rng);
    if (a.degree() < 1) continue;
    FqPoly b;
    if (char_two) {
      // Trace a + a^2 + ... + a^{2^{kd-1}}.
      FqPoly term = ring.rem(a, f);
      b = term;
      for (int i = 1; i < field.k() * d; ++i) {
        term = ring.rem(ring.mul(term, term), f);
        b = ring.add(b, term);
      }
    } else {
      // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
      FqPoly power = ring.rem(a, f);
      FqPoly norm = power;
      for (int i = 1; i < d; ++i) {
        power = ring.powmod(power, q, f);
        norm = ring.rem(ring.mul(norm, power), f);
      }
      b = ring.sub(ring.powmod(norm, (q - 1) / 2, f), ring.constant(field.one()));
    }
    std::vector<FqPoly> next;
    for (const FqPoly& u : parts) {
      if (u.degree() == d) {
        next.push_back(u);
        continue;
      }
      const FqPoly g = ring.gcd(b, u);
      if (g.degree() > 0 && g.degree() < u.degree()) {
        next.push_back(g);
        next.push_back(ring.monic(ring.quo(u, g)));
      } else {
        next.push_back(u);
      }
    }
    parts = std::move(next);
  }
  std::sort(parts.begin(), parts.end(),
            [&](const FqPoly& a, const FqPoly& b) { return poly_less(field, a, b); });
  return parts;
}

std::uint64_t factor_seed(const Field& field, const FqPoly& f, std::uint64_t user_seed) {
  std::string bytes = field.spec().name();
  bytes += "|" + std::to_string(user_seed) + "|";
  for (const FFElem& c : f.coeffs) bytes += std::to_string(field.code(c)) + ",";
  const Digest digest = sha256(bytes);
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | digest[static_cast<std::size_t>(i)];
  return seed;
}

Factorization factor(const PolyRing& ring, const FqPoly& f, std::uint64_t user_seed) {
  if (f.is_zero()) throw ArgumentError("factor: zero polynomial");
  const Field& field = ring.field();
  std::mt19937_64 rng(factor_seed(field, f, user_seed));
  Factorization out;
  out.unit = ring.leading(f);
  for (const FactorPower& part : squarefree(ring, f)) {
    for (const FactorPower& block : distinct_degree(ring, part.factor)) {
      for (FqPoly& irreducible : equal_degree(ring, block.factor, block.multiplicity, rng)) {
        out.factors.push_back({std::move(irreducible), part.multiplicity});
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [&](const FactorPower& a, const FactorPower& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return poly_less(field, a.factor, b.factor);
  });
  return out;
}

FqPoly expand(const PolyRing& ring, const Factorization& factorization) {
  FqPoly out = ring.constant(factorization.unit);
  for (const FactorPower& fp : factorization.factors) {
    out = ring.mul(out, ring.pow(fp.factor, static_cast<std::uint64_t>(fp.multiplicity)));
  }
  return out;
}

int splitting_degree_of(const Factorization& factorization) {
  int result = 1;
  for (const FactorPower& fp : factorization.factors) result = std::lcm(result, fp.factor.degree());
  return result;
}

}  // namespace hecke
