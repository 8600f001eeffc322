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

#include "hecke/series_engine.hpp"

#include <algorithm>
#include <atomic>

#include "hecke/errors.hpp"

namespace hecke {

HeckeParams hyper_params(int m) {
  if (m < 3) throw ArgumentError("Hecke index m must be >= 3, got " + std::to_string(m));
  return {m, make_rational(1, 4) - make_rational(1, 2L * m), 1 - make_rational(1, m)};
}

FrobeniusPair frobenius_pair(int m, int order) {
  if (order < 2) throw ArgumentError("frobenius_pair: order must be >= 2");
  const HeckeParams params = hyper_params(m);
  const Rational a = params.upper_a();
  const Rational b = params.upper_b();
  std::vector<Rational> f(static_cast<std::size_t>(order));
  std::vector<Rational> g(static_cast<std::size_t>(order));
  f[0] = 1;
  g[0] = 0;
  Rational harmonic = 0;
  for (int k = 1; k < order; ++k) {
    const Rational j = k - 1;
    f[static_cast<std::size_t>(k)] =
        f[static_cast<std::size_t>(k - 1)] * (a + j) * (b + j) / (Rational(k) * k);
    harmonic += 1 / (a + j) + 1 / (b + j) - make_rational(2, k);
    g[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)] * harmonic;
  }
  return {LaurentSeries(0, std::move(f), order), LaurentSeries(0, std::move(g), order)};
}

const Rational& NaturalExpansion::at(int n) const {
  if (n < -1 || n >= order) {
    throw PrecisionError("ahat_" + std::to_string(n) + " outside computed order " +
                         std::to_string(order));
  }
  return coeffs[static_cast<std::size_t>(n + 1)];
}

namespace {
std::atomic<std::uint64_t> g_natural_count{0};
}  // namespace

std::uint64_t natural_expansion_count() { return g_natural_count.load(); }

NaturalExpansion natural_expansion(int m, int order) {
  if (order < 1) throw ArgumentError("natural_expansion: order must be >= 1");
  ++g_natural_count;
  // 1/w(Xhat) loses two orders relative to Xhat(w).
  const int t = order + 1;
  const FrobeniusPair pair = frobenius_pair(m, t);
  const LaurentSeries ratio = pair.log_partner * series_reciprocal(pair.holomorphic);
  const LaurentSeries xhat = series_exp(ratio).shifted(1);
  const LaurentSeries w = series_revert(xhat);
  const LaurentSeries jhat = series_reciprocal(w);
  if (jhat.truncation() < order) {
    throw PrecisionError("natural_expansion: series reached O(X^" +
                         std::to_string(jhat.truncation()) + "), need " + std::to_string(order));
  }
  NaturalExpansion out;
  out.m = m;
  out.order = order;
  out.coeffs.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = -1; n < order; ++n) out.coeffs.push_back(jhat.coeff(n));
  return out;
}

const QPoly& anchor_a0() {
  static const QPoly poly{4, 0, 3};
  return poly;
}

const QPoly& anchor_a1() {
  static const QPoly poly{-48, 0, -8, 0, 69};
  return poly;
}

Calibration calibrate(const NaturalExpansion& natural, RootChoice root) {
  if (natural.order < 2) throw PrecisionError("calibrate: natural expansion needs order >= 2");
  const int m = natural.m;
  const Rational& ahat0 = natural.at(0);
  const Rational& ahat1 = natural.at(1);
  if (ahat1 == 0) throw CalibrationError("calibrate: ahat_1 vanishes for m = " + std::to_string(m));
  const Rational mm = Rational(m) * m;
  const Rational target = anchor_a1()(m) / (mm * mm) / ahat1;
  std::optional<Rational> scale = rational_sqrt(target);
  if (!scale) {
    throw CalibrationError("calibrate: (A_1(m)/m^4)/ahat_1 = " + to_string(target) +
                           " is not a rational square for m = " + std::to_string(m));
  }
  if (root == RootChoice::kNegative) *scale = -*scale;
  Calibration out;
  out.m = m;
  out.scale = *scale;
  out.shift = anchor_a0()(m) / mm - out.scale * ahat0;
  return out;
}

Calibration calibrate(int m, RootChoice root) { return calibrate(natural_expansion(m, 2), root); }

const Rational& JExpansion::at(int n) const {
  if (n < -1 || n >= order) {
    throw PrecisionError("a_m(" + std::to_string(n) + ") outside computed order " +
                         std::to_string(order));
  }
  return coeffs[static_cast<std::size_t>(n + 1)];
}

LaurentSeries JExpansion::as_series() const { return {-1, coeffs, order}; }

JExpansion calibrated_expansion(const NaturalExpansion& natural, const Calibration& calibration) {
  if (natural.m != calibration.m) throw ArgumentError("calibrated_expansion: calibration is for another m");
  JExpansion out;
  out.m = natural.m;
  out.order = natural.order;
  out.coeffs.resize(natural.coeffs.size());
  out.coeffs[0] = 1;
  if (natural.order >= 1) out.coeffs[1] = calibration.scale * natural.at(0) + calibration.shift;
  Rational power = calibration.scale;
  for (int n = 1; n < natural.order; ++n) {
    power *= calibration.scale;
    out.coeffs[static_cast<std::size_t>(n + 1)] = power * natural.at(n);
  }
  return out;
}

JExpansion calibrated_expansion(int m, int order, RootChoice root) {
  const NaturalExpansion natural = natural_expansion(m, std::max(order, 2));
  JExpansion full = calibrated_expansion(natural, calibrate(natural, root));
  full.order = order;
  full.coeffs.resize(static_cast<std::size_t>(order) + 1);
  return full;
}

LaurentSeries bar(const LaurentSeries& f, int m) {
  if (f.is_zero()) throw ContractError("bar: zero series " + f.to_string());
  const Rational factor = 64 * Rational(m) * m * m;
  const int lead = f.lead_index();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(f.truncation() - lead));
  // (2^6 m^3)^(e - lead) / k_lead
  Rational scale = 1 / f.leading_coeff();
  for (int e = lead; e < f.truncation(); ++e) {
    out.push_back(f.coeff(e) * scale);
    scale *= factor;
  }
  return {lead, std::move(out), f.truncation()};
}

LaurentSeries j_expansion(const JExpansion& expansion) { return bar(expansion.as_series(), expansion.m); }

LaurentSeries j_expansion(int m, int order) { return j_expansion(calibrated_expansion(m, order)); }

}  // namespace hecke
