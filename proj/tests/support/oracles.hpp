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

// Independent reference computations used only by the tests. Nothing here
// calls into the library under test except the value types.

#ifndef HECKE_TESTS_ORACLES_HPP_
#define HECKE_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<std::uint64_t> primes_upto(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

inline bool prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline mpz_class sigma(int k, int n) {
  mpz_class s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) {
      mpz_class t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
      s += t;
    }
  }
  return s;
}

// Power series product truncated to `len` terms.
inline std::vector<mpz_class> mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                  std::size_t len) {
  std::vector<mpz_class> c(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Coefficients c(-1), c(0), ..., c(nmax) of the classical j-invariant,
// j = E4^3 / Delta with Delta = (E4^3 - E6^2) / 1728 and both Eisenstein
// series from divisor sums.
inline std::vector<mpz_class> classical_j(int nmax) {
  const std::size_t len = static_cast<std::size_t>(nmax) + 3;
  std::vector<mpz_class> e4(len), e6(len);
  e4[0] = 1;
  e6[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    e4[n] = 240 * sigma(3, static_cast<int>(n));
    e6[n] = -504 * sigma(5, static_cast<int>(n));
  }
  const auto e4c = mul(mul(e4, e4, len), e4, len);
  const auto e6s = mul(e6, e6, len);
  // delta = q * u with u(0) = 1.
  std::vector<mpz_class> u(len - 1);
  for (std::size_t n = 0; n + 1 < len; ++n) u[n] = (e4c[n + 1] - e6s[n + 1]) / 1728;
  // v = 1/u, integral since u(0) = 1.
  std::vector<mpz_class> v(u.size(), 0);
  v[0] = 1;
  for (std::size_t n = 1; n < v.size(); ++n) {
    mpz_class s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += u[k] * v[n - k];
    v[n] = -s;
  }
  // j = q^{-1} e4c v
  return mul(e4c, v, static_cast<std::size_t>(nmax) + 2);
}

// Conjectured denominator primes of A_n for n >= 2.
inline std::vector<std::uint64_t> expected_pi(int n) {
  if (n == 2) return {3};
  auto below = [](std::uint64_t k) {
    std::uint64_t q = k - 1;
    while (!prime(q)) --q;
    return q;
  };
  const auto un = static_cast<std::uint64_t>(n);
  if (prime(un)) return primes_upto(below(un));
  if (prime(un + 1)) return primes_upto(un + 1);
  return primes_upto(below(un));
}

// Printed splitting degrees per residue class.
inline const std::map<std::uint64_t, std::vector<std::set<int>>>& printed_sa() {
  static const std::map<std::uint64_t, std::vector<std::set<int>>> tables = {
      {3, {{1}, {1, 2, 3}, {1, 2, 3, 4}}},
      {5, {{1, 2}, {4}, {4}, {6}, {1}}},
      {7, {{4}, {4}, {2}, {2}, {6}, {5}, {1}}},
  };
  return tables;
}

}  // namespace oracle

#endif  // HECKE_TESTS_ORACLES_HPP_
