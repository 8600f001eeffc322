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

#include <gtest/gtest.h>

#include "hecke/errors.hpp"
#include "hecke/generation.hpp"
#include "hecke/models.hpp"
#include "hecke/tables.hpp"
#include "hecke/verifier.hpp"

namespace hecke {
namespace {

const GeneratedTable& table() {
  static const GeneratedTable t = [] {
    GenerationOptions o;
    o.nmax = 14;
    return generate_table(o);
  }();
  return t;
}

TEST(Model, Examples) {
  const FieldPtr f2 = make_field(2, 1);
  const PolyRing r2(*f2);
  EXPECT_EQ(model(table().at(1), f2, ModelVariant::kKp).coeffs, r2.pow(r2.x(), 4));
  const FieldPtr f3 = make_field(3, 1);
  const PolyRing r3(*f3);
  EXPECT_EQ(model(table().at(0), f3, ModelVariant::kKp).coeffs, r3.constant(f3->one()));
  const FieldPtr f7 = make_field(7, 1);
  const PolyRing r7(*f7);
  EXPECT_EQ(model(table().at(0), f7, ModelVariant::kKp).coeffs, r7.from_ints({4, 0, 3}));
}

TEST(Model, CoefficientsInPrimeSubfield) {
  for (std::uint64_t p : {3, 5, 7}) {
    const FieldPtr f = make_field(p, 2);
    for (int n = -1; n <= 8; ++n) {
      for (ModelVariant v : {ModelVariant::kK, ModelVariant::kKp}) {
        const ModelPoly m = model(table().at(n), f, v);
        for (const FFElem& c : m.coeffs.coeffs) EXPECT_TRUE(f->in_prime_subfield(c));
      }
    }
  }
}

TEST(Model, VariantsAgreeUpToScalar) {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    const FieldPtr f = make_field(p, 1);
    const PolyRing ring(*f);
    for (int n = -1; n <= 14; ++n) {
      const FqPoly k = model(table().at(n), f, ModelVariant::kK).coeffs;
      const FqPoly kp = model(table().at(n), f, ModelVariant::kKp).coeffs;
      if (kp.is_zero()) continue;
      // d / mu_p is prime to p.
      const Integer ratio = d_of(table().at(n).poly) / mu_p(table().at(n).poly, p);
      EXPECT_EQ(k, ring.scale(f->from_int(static_cast<std::int64_t>(mod_p(ratio, p))), kp));
    }
  }
}

TEST(Meta, Examples) {
  EXPECT_EQ(delta_of(17, 5), 3);
  EXPECT_EQ(delta_of(-1, 7), -1);
  EXPECT_EQ(mod_p(std::int64_t{7}, 3), 1u);
  const Field f3(build_field(3, 1));
  const ModelMeta m = model_meta(table().at(1), 3, f3);
  EXPECT_EQ(m.a, -8);
  EXPECT_EQ(m.r, 1u);
  EXPECT_EQ(m.modnp, 1u);
  EXPECT_EQ(m.delta, 0);
  EXPECT_EQ(m.alpha, f3.one());
}

TEST(Meta, DeltaIdentity) {
  for (std::int64_t n = -1; n <= 60; ++n) {
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
      EXPECT_EQ(delta_of(n, p) * static_cast<std::int64_t>(p) + static_cast<std::int64_t>(mod_p(n, p)), n);
    }
  }
}

TEST(SplittingDegree, Examples) {
  EXPECT_EQ(splitting_degree(table().at(0), 5), 2);
  EXPECT_EQ(splitting_degree(table().at(1), 5), 4);
  EXPECT_EQ(splitting_degree(table().at(0), 7), 1);
}

TEST(SplittingDegree, TwoIsAlwaysOne) {
  for (int n = -1; n <= table().nmax; ++n) {
    int s = 0;
    try {
      s = splitting_degree(table().at(n), 2);
    } catch (const DegenerateModelError& e) {
      ADD_FAILURE() << "n=" << n << ": " << e.what();
      continue;
    }
    EXPECT_EQ(s, 1) << "n=" << n;
  }
}

TEST(Equivalence, Examples) {
  EXPECT_TRUE(equivalent_ap(5, 2, 5, 2, 7));
  EXPECT_TRUE(equivalent_ap(table().at(3), table().at(3), 5));
  EXPECT_FALSE(equivalent_ap(1, 1, 2, 1, 3));
  EXPECT_TRUE(equivalent_ap(0, 1, 4, 1, 2));
}

TEST(Equivalence, ZeroAndFourModTwo) {
  EXPECT_TRUE(equivalent_ap(table().at(0), table().at(4), 2));
}

TEST(EqualAsMaps, Examples) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const FieldPtr f = make_field(p, 1);
    const PolyRing ring(*f);
    const ModelPoly xp{f, ring.pow(ring.x(), p), ModelVariant::kKp, 0, p};
    const ModelPoly x{f, ring.x(), ModelVariant::kKp, 0, p};
    EXPECT_TRUE(equal_as_maps(xp, x));
  }
  const FieldPtr f3 = make_field(3, 1);
  const PolyRing r3(*f3);
  EXPECT_FALSE(equal_as_maps({f3, r3.pow(r3.x(), 2), ModelVariant::kKp, 0, 3},
                             {f3, r3.x(), ModelVariant::kKp, 0, 3}));
  const FieldPtr f9 = make_field(3, 2);
  EXPECT_THROW(equal_as_maps({f3, r3.x(), ModelVariant::kKp, 0, 3}, {f9, PolyRing(*f9).x(), ModelVariant::kKp, 0, 3}),
               ArgumentError);
}

TEST(EqualAsMaps, VariantsIffRatioIsOne) {
  for (std::uint64_t p : {5, 7}) {
    for (int n = 1; n <= 8; ++n) {
      const InterpolatedA& a = table().at(n);
      const int s = splitting_degree(a, p);
      const FieldPtr f = make_field(p, s);
      const ModelPoly k = model(a, f, ModelVariant::kK);
      const ModelPoly kp = model(a, f, ModelVariant::kKp);
      const bool unit_ratio = mod_p(d_of(a.poly) / mu_p(a.poly, p), p) == 1;
      EXPECT_EQ(equal_as_maps(k, kp), unit_ratio) << "n=" << n << " p=" << p;
    }
  }
}

TEST(Tables, RowsPresent) {
  EXPECT_EQ(shape_rows(3, 1, 1).size(), 2u);
  EXPECT_EQ(shape_rows(5, 1, 4).size(), 1u);
  EXPECT_TRUE(shape_rows(5, 0, 2).empty());
  for (const TableRow& r : shape_rows()) {
    EXPECT_FALSE(r.printed.empty()) << r.id;
    for (const OrbitTerm& o : r.orbits) {
      EXPECT_EQ(r.splitting_degree % orbit_size_of_exponent(o.exponent, r.p, r.splitting_degree), 0) << r.id;
    }
  }
}

TEST(Tables, ResidueSixRow) {
  const auto rows = shape_rows(7, 6, 1);
  ASSERT_EQ(rows.size(), 1u);
  const ExpectedShape e = expected_shape(rows[0], 0);
  EXPECT_TRUE(e.applicable);
  EXPECT_EQ(e.roots, (std::map<std::uint64_t, int>{{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}}));
  EXPECT_TRUE(e.orbits.empty());
}

TEST(Tables, NegativeExponentIsInapplicable) {
  const auto rows = shape_rows(3, 2, 1);
  bool some_inapplicable = false;
  for (const TableRow& r : rows) some_inapplicable = some_inapplicable || !expected_shape(r, 0).applicable;
  EXPECT_TRUE(some_inapplicable);
}

TEST(Tables, MatchExamples) {
  VerifyOptions o;
  const PairAnalysis a13 = analyze_pair(table().at(1), 3, o);
  ASSERT_TRUE(a13.shape.has_value());
  EXPECT_EQ(a13.shape->outcome, ShapeOutcome::kMatched);
  const PairAnalysis a15 = analyze_pair(table().at(1), 5, o);
  ASSERT_TRUE(a15.shape.has_value());
  EXPECT_EQ(a15.shape->outcome, ShapeOutcome::kMatched);
  EXPECT_EQ(a15.shape->matched_row, "T2.1.4");
  const PairAnalysis a67 = analyze_pair(table().at(6), 7, o);
  ASSERT_TRUE(a67.shape.has_value());
  EXPECT_EQ(a67.shape->outcome, ShapeOutcome::kMatched);
  EXPECT_EQ(a67.shape->matched_row, "T3.6.1");
  const PairAnalysis a03 = analyze_pair(table().at(0), 3, o);
  ASSERT_TRUE(a03.shape.has_value());
  EXPECT_EQ(a03.shape->outcome, ShapeOutcome::kExceptional);
}

}  // namespace
}  // namespace hecke
