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

#include "hecke/models.hpp"

#include "hecke/errors.hpp"

namespace hecke {

std::string to_string(ModelVariant v) { return v == ModelVariant::kK ? "K" : "Kp"; }

ModelPoly model(const InterpolatedA& a, const FieldPtr& field, ModelVariant variant) {
  const QPoly cleared = variant == ModelVariant::kK ? k_of(a.poly) : kp_of(a.poly, field->p());
  const PolyRing ring(*field);
  FqPoly coeffs;
  for (const Rational& c : cleared.coeffs()) coeffs.coeffs.push_back(coerce(c, *field));
  ModelPoly out;
  out.field = field;
  out.coeffs = ring.trim(std::move(coeffs));
  out.variant = variant;
  out.n = a.n;
  out.p = field->p();
  return out;
}

int splitting_degree(const InterpolatedA& a, std::uint64_t p, std::uint64_t seed) {
  const FieldPtr prime_field = make_field(p, 1);
  const ModelPoly m = model(a, prime_field, ModelVariant::kKp);
  if (m.coeffs.is_zero()) {
    throw DegenerateModelError("model of A_" + std::to_string(a.n) + " vanishes mod " +
                               std::to_string(p));
  }
  if (m.coeffs.degree() == 0) return 1;
  const PolyRing ring(*prime_field);
  return splitting_degree_of(factor(ring, m.coeffs, seed));
}

std::int64_t delta_of(std::int64_t n, std::uint64_t p) {
  const auto residue = static_cast<std::int64_t>(mod_p(n, p));
  return (n - residue) / static_cast<std::int64_t>(p);
}

ModelMeta model_meta(const InterpolatedA& a, std::uint64_t p, const Field& field) {
  if (field.p() != p) throw ArgumentError("model_meta: field characteristic differs from p");
  ModelMeta meta;
  meta.modnp = mod_p(static_cast<std::int64_t>(a.n), p);
  meta.delta = delta_of(a.n, p);

  const QPoly k_poly = k_of(a.poly);
  bool found = false;
  for (int i = k_poly.degree(); i >= 0 && !found; --i) {
    const Rational& c = k_poly.coeffs()[static_cast<std::size_t>(i)];
    if (c != 0 && mod_p(Integer(c.get_num()), p) != 0) {
      meta.a = c.get_num();
      found = true;
    }
  }
  if (!found) {
    throw DegenerateModelError("model_meta: every coefficient of K(A_" + std::to_string(a.n) +
                               ") is divisible by " + std::to_string(p));
  }
  const QPoly kp_poly = kp_of(a.poly, p);
  found = false;
  for (int i = kp_poly.degree(); i >= 0 && !found; --i) {
    const Rational& c = kp_poly.coeffs()[static_cast<std::size_t>(i)];
    if (c != 0 && ord_p(c, p) == 0) {
      meta.a_star = c;
      found = true;
    }
  }
  if (!found) {
    throw DegenerateModelError("model_meta: every coefficient of K_p(A_" + std::to_string(a.n) +
                               ") is divisible by " + std::to_string(p));
  }
  meta.r = mod_p(meta.a, p);
  meta.alpha = field.from_int(static_cast<std::int64_t>(meta.r));
  meta.alpha_star = coerce(meta.a_star, field);
  meta.r_star = field.residue(meta.alpha_star);
  return meta;
}

bool equivalent_ap(int n1, int s1, int n2, int s2, std::uint64_t p) {
  return mod_p(static_cast<std::int64_t>(n1), p) == mod_p(static_cast<std::int64_t>(n2), p) &&
         s1 == s2;
}

bool equivalent_ap(const InterpolatedA& a1, const InterpolatedA& a2, std::uint64_t p) {
  if (mod_p(static_cast<std::int64_t>(a1.n), p) != mod_p(static_cast<std::int64_t>(a2.n), p)) {
    return false;
  }
  return splitting_degree(a1, p) == splitting_degree(a2, p);
}

bool equal_as_maps(const ModelPoly& f, const ModelPoly& g) {
  if (!f.field || !g.field || !(f.field->spec() == g.field->spec())) {
    throw ArgumentError("equal_as_maps: models live over different fields");
  }
  const Field& field = *f.field;
  const PolyRing ring(field);
  for (std::uint64_t code = 0; code < field.order(); ++code) {
    const FFElem s = field.from_code(code);
    if (!(ring.eval(f.coeffs, s) == ring.eval(g.coeffs, s))) return false;
  }
  return true;
}

}  // namespace hecke
