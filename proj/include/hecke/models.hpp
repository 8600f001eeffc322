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

#ifndef HECKE_MODELS_HPP_
#define HECKE_MODELS_HPP_

#include <cstdint>
#include <string>

#include "hecke/factorization.hpp"
#include "hecke/finite_field.hpp"
#include "hecke/fq_poly.hpp"
#include "hecke/interpolation.hpp"

namespace hecke {

enum class ModelVariant {
  kK,   // coercion of K(A_n) = d(A_n) A_n
  kKp,  // coercion of K_p(A_n) = mu_p(A_n) A_n
};

std::string to_string(ModelVariant v);

struct ModelPoly {
  FieldPtr field;
  FqPoly coeffs;
  ModelVariant variant = ModelVariant::kKp;
  int n = 0;
  std::uint64_t p = 0;
};

// Coefficients of K(A_n) or K_p(A_n) coerced into `field`.
ModelPoly model(const InterpolatedA& a, const FieldPtr& field, ModelVariant variant);

// s_A(n, p): lcm of the irreducible factor degrees of the mod-p model over
// F_p. Throws DegenerateModelError when the model vanishes mod p.
int splitting_degree(const InterpolatedA& a, std::uint64_t p, std::uint64_t seed = 0);

struct ModelMeta {
  std::uint64_t modnp = 0;
  std::int64_t delta = 0;
  Integer a;        // leading coefficient of K(A_n) not divisible by p
  Rational a_star;  // same for K_p(A_n), p-adically
  std::uint64_t r = 0;
  std::uint64_t r_star = 0;
  FFElem alpha;
  FFElem alpha_star;
};

// Throws DegenerateModelError when every coefficient is divisible by p.
ModelMeta model_meta(const InterpolatedA& a, std::uint64_t p, const Field& field);

std::int64_t delta_of(std::int64_t n, std::uint64_t p);

// n1 = n2 mod p and equal splitting degrees.
bool equivalent_ap(int n1, int s1, int n2, int s2, std::uint64_t p);
bool equivalent_ap(const InterpolatedA& a1, const InterpolatedA& a2, std::uint64_t p);

// f(s) = g(s) for every s in the field, by exhaustive evaluation. Throws
// ArgumentError when the fields differ.
bool equal_as_maps(const ModelPoly& f, const ModelPoly& g);

}  // namespace hecke

#endif  // HECKE_MODELS_HPP_
