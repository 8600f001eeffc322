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

// Runs acceptance criteria 1-10 and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/field_oracles.hpp"
#include "../support/oracles.hpp"
#include "hecke/cache.hpp"
#include "hecke/errors.hpp"
#include "hecke/factorization.hpp"
#include "hecke/finite_field.hpp"
#include "hecke/fq_poly.hpp"
#include "hecke/interpolation.hpp"
#include "hecke/models.hpp"
#include "hecke/orbits.hpp"
#include "hecke/report.hpp"
#include "hecke/series_engine.hpp"
#include "hecke/verifier.hpp"

namespace {

using hecke::FqPoly;
using hecke::InterpolatedA;
using hecke::Integer;
using hecke::QPoly;
using hecke::Rational;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures with a short list of examples.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (examples_.size() < 12) examples_.push_back(what);
  }
  Outcome outcome() const {
    std::ostringstream os;
    os << checked_ << " checks, " << failed_ << " failed";
    for (std::size_t i = 0; i < examples_.size(); ++i) os << (i ? "; " : ": ") << examples_[i];
    if (failed_ > static_cast<int>(examples_.size())) os << "; ...";
    return {failed_ == 0, os.str()};
  }

 private:
  int checked_ = 0;
  int failed_ = 0;
  std::vector<std::string> examples_;
};

struct Context {
  hecke::PipelineData data;
  const InterpolatedA& a(int n) const { return data.table.at(static_cast<std::size_t>(n + 1)); }
};

QPoly even_poly(const std::vector<long>& even_coeffs) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < even_coeffs.size(); ++i) {
    c.emplace_back(even_coeffs[i]);
    if (i + 1 < even_coeffs.size()) c.emplace_back(0);
  }
  return QPoly(c);
}

Outcome anchors(const Context& ctx) {
  Tally t;
  t.check(ctx.a(-1).poly == QPoly{Rational(1)}, "A_-1 = " + ctx.a(-1).poly.to_string());
  t.check(ctx.a(0).poly == even_poly({4, 3}), "A_0 = " + ctx.a(0).poly.to_string());
  t.check(ctx.a(1).poly == even_poly({-48, -8, 69}), "A_1 = " + ctx.a(1).poly.to_string());
  return t.outcome();
}

Outcome classical_j(const Context&) {
  Tally t;
  const int nmax = 6;
  const auto j = oracle::classical_j(nmax);
  t.check(j[2] == 196884 && j[3] == 21493760, "divisor-sum oracle disagrees with 196884, 21493760");
  const hecke::NaturalExpansion nat = hecke::natural_expansion(3, nmax + 2);
  Rational scale = 1;
  for (int n = -1; n <= nmax; ++n) {
    const Rational c = scale * nat.at(n);
    t.check(c == Rational(j[static_cast<std::size_t>(n + 1)]),
            "n=" + std::to_string(n) + ": 1728^(n+1) ahat_n = " + hecke::to_string(c));
    scale *= 1728;
  }
  return t.outcome();
}

std::string set_text(const std::vector<std::uint64_t>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

Outcome pi_structure(const Context& ctx) {
  Tally t;
  for (int n = 2; n <= 20; ++n) {
    const auto observed = hecke::pi_set(ctx.a(n).poly);
    const auto expected = oracle::expected_pi(n);
    std::vector<std::uint64_t> run;
    for (std::uint64_t q : oracle::primes_upto(observed.empty() ? 1 : observed.back())) {
      if (q >= observed.front()) run.push_back(q);
    }
    t.check(observed == run, "pi_" + std::to_string(n) + " has a gap: " + set_text(observed));
    t.check(observed == expected,
            "pi_" + std::to_string(n) + " = " + set_text(observed) + ", expected " + set_text(expected));
  }
  return t.outcome();
}

Outcome two_models(const Context& ctx) {
  Tally t;
  const auto f2 = hecke::make_field(2, 1);
  const hecke::PolyRing ring(*f2);
  for (int n = -1; n <= 30; ++n) {
    const auto m = hecke::model(ctx.a(n), f2, hecke::ModelVariant::kKp);
    const FqPoly expected = ring.pow(ring.x(), static_cast<std::uint64_t>(2 * n + 2));
    t.check(m.coeffs == expected, "n=" + std::to_string(n) + ": " + ring.to_string(m.coeffs));
  }
  return t.outcome();
}

Outcome zero_model_seven(const Context& ctx) {
  Tally t;
  const auto f7 = hecke::make_field(7, 1);
  const hecke::PolyRing ring(*f7);
  const auto m = hecke::model(ctx.a(0), f7, hecke::ModelVariant::kKp);
  const hecke::Factorization f = hecke::factor(ring, m.coeffs, 1);
  t.check(f.unit == f7->from_int(3), "unit " + f7->to_string(f.unit));
  std::set<std::uint64_t> roots;
  for (const auto& fp : f.factors) {
    if (fp.factor.degree() == 1 && fp.multiplicity == 1) {
      roots.insert(f7->residue(f7->neg(fp.factor.coeffs[0])));
    }
  }
  t.check(f.factors.size() == 2 && roots == std::set<std::uint64_t>{1, 6},
          "factors differ from (x-1)(x-6)");
  t.check(hecke::expand(ring, f) == m.coeffs, "product identity");
  return t.outcome();
}

std::optional<int> s_a(const InterpolatedA& a, std::uint64_t p) {
  try {
    return hecke::splitting_degree(a, p, 1);
  } catch (const hecke::DegenerateModelError&) {
    return std::nullopt;
  }
}

std::string s_text(const std::optional<int>& s) { return s ? std::to_string(*s) : "degenerate"; }

Outcome sa_tables(const Context& ctx) {
  Tally t;
  for (const auto& [p, rows] : oracle::printed_sa()) {
    for (int n = 1; n <= 30; ++n) {
      const auto s = s_a(ctx.a(n), p);
      const auto& allowed = rows[static_cast<std::size_t>(n) % p];
      t.check(s && allowed.count(*s) > 0,
              "s_A(" + std::to_string(n) + "," + std::to_string(p) + ")=" + s_text(s));
    }
  }
  for (int n = -1; n <= 30; ++n) {
    const auto s = s_a(ctx.a(n), 2);
    t.check(s == 1, "s_A(" + std::to_string(n) + ",2)=" + s_text(s));
  }
  for (std::uint64_t p : {5, 7, 11, 13}) {
    for (int n = -1; n <= 30; ++n) {
      if (hecke::mod_p(static_cast<std::int64_t>(n), p) != p - 1) continue;
      const auto s = s_a(ctx.a(n), p);
      t.check(s == 1, "clause 3 s_A(" + std::to_string(n) + "," + std::to_string(p) + ")=" + s_text(s));
    }
  }
  return t.outcome();
}

Outcome clause_four(const Context& ctx) {
  Tally t;
  for (std::uint64_t p : oracle::primes_upto(47)) {
    if (p < 5) continue;
    const auto s = s_a(ctx.a(0), p);
    const int expected = p % 3 == 1 ? 1 : 2;
    t.check(s == expected, "s_A(0," + std::to_string(p) + ")=" + s_text(s));
  }
  return t.outcome();
}

hecke::VerifyInputs inputs_of(const Context& ctx) {
  hecke::VerifyInputs in;
  in.table = ctx.data.table;
  in.conj1 = ctx.data.conj1;
  return in;
}

Outcome table_shapes(const Context& ctx) {
  Tally t;
  hecke::VerifyOptions options;
  options.primes = {3, 5, 7};
  const hecke::VerificationReport report = hecke::verify(inputs_of(ctx), options);
  const std::string markdown = hecke::render_markdown(report);
  int matched = 0;
  for (const hecke::VerdictRecord& r : report.records) {
    if (r.clause != "C4.tables" || r.n < 1) continue;
    switch (r.verdict) {
      case hecke::Verdict::kPass:
        ++matched;
        break;
      case hecke::Verdict::kFail:
        t.check(false, r.task_id() + " " + r.detail.substr(0, 80));
        break;
      default:
        t.check(markdown.find(r.task_id()) != std::string::npos,
                r.task_id() + " not enumerated in the report");
    }
  }
  // Every analyzed profile accounts for the whole degree.
  const auto pairs = hecke::analyze_pairs(ctx.data.table, options);
  for (const hecke::PairAnalysis& pa : pairs) {
    if (!pa.profile || pa.n < 1) continue;
    const auto fp = hecke::make_field(pa.p, 1);
    const int model_degree = hecke::model(ctx.a(pa.n), fp, hecke::ModelVariant::kKp).coeffs.degree();
    int degree = 0;
    for (const auto& [res, mult] : pa.profile->prime_subfield_roots) degree += mult;
    for (const auto& o : pa.profile->orbits) degree += o.size * o.multiplicity;
    t.check(degree == model_degree && pa.profile->nonlinear_remainder == 0,
            "profile degree n=" + std::to_string(pa.n) + " p=" + std::to_string(pa.p));
  }
  Outcome o = t.outcome();
  o.detail = std::to_string(matched) + " matched; " + o.detail;
  return o;
}

Outcome property_suites(const Context& ctx) {
  Tally t;
  std::mt19937_64 rng(20261019);

  // Factorization product identity.
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{
           {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {5, 2}, {7, 2}, {5, 4}}) {
    const auto f = hecke::make_field(p, k);
    const hecke::PolyRing ring(*f);
    for (int i = 0; i < 200; ++i) {
      const FqPoly a = oracle::random_poly(*f, 1 + static_cast<int>(rng() % 12), rng);
      const auto fac = hecke::factor(ring, a, rng());
      t.check(hecke::expand(ring, fac) == a, "factor identity in " + f->spec().name());
    }
  }

  // Discrete logarithms, every nonzero element of every field of order <= 625.
  for (auto [p, k] : oracle::prime_powers_upto(625)) {
    const auto f = hecke::make_field(p, k);
    const hecke::FFElem g = hecke::find_generator(*f);
    hecke::FFElem s = f->one();
    for (std::uint64_t e = 0; e + 1 < f->order(); ++e) {
      t.check(hecke::dlog(*f, g, s) == e, "dlog in " + f->spec().name());
      s = f->mul(s, g);
    }
  }

  // Splitting degree against root counts in every F_{p^s} of order <= 81.
  for (std::uint64_t p : oracle::primes_upto(81)) {
    std::vector<hecke::FieldPtr> exts;
    for (int s = 1; [&] {
           std::uint64_t q = 1;
           for (int i = 0; i < s; ++i) q *= p;
           return q <= 81;
         }();
         ++s) {
      exts.push_back(hecke::make_field(p, s));
    }
    const auto fp = exts.front();
    const hecke::PolyRing ring(*fp);
    const int trials = p <= 3 ? 200 : 40;
    for (int i = 0; i < trials; ++i) {
      const auto c = oracle::random_int_poly(p, 1 + static_cast<int>(rng() % 8), rng);
      const int sd = hecke::splitting_degree_of(hecke::factor(ring, ring.from_ints(c), rng()));
      for (const auto& e : exts) {
        const bool splits = oracle::count_roots(*e, oracle::lift(*e, c)) == static_cast<int>(c.size()) - 1;
        t.check(splits == (e->k() % sd == 0),
                "splitting degree " + std::to_string(sd) + " vs roots in " + e->spec().name());
      }
      // Closure of the root set under x -> x^p in the largest field.
      const auto& big = *exts.back();
      const auto roots = oracle::roots_of(big, oracle::lift(big, c));
      const std::set<std::uint64_t> codes = [&] {
        std::set<std::uint64_t> out;
        for (const auto& r : roots) out.insert(big.code(r));
        return out;
      }();
      for (const auto& r : roots) {
        t.check(codes.count(big.code(big.frobenius(r))) > 0, "brute-force closure in " + big.spec().name());
      }
    }
  }

  // Closure and signature periods of every computed root profile.
  hecke::VerifyOptions options;
  for (const hecke::PairAnalysis& pa : hecke::analyze_pairs(ctx.data.table, options)) {
    if (!pa.profile) continue;
    const std::string id = "n=" + std::to_string(pa.n) + " p=" + std::to_string(pa.p);
    t.check(pa.profile->frobenius_closed, "profile not closed " + id);
    t.check(pa.profile->signature_periods_match, "signature period " + id);
    for (const auto& o : pa.profile->orbits) {
      t.check(*pa.s_a % o.size == 0, "orbit size does not divide s_A " + id);
    }
  }
  return t.outcome();
}

Outcome determinism(const Context& ctx) {
  Tally t;
  std::vector<std::string> csv;
  for (int jobs : {1, 1, 4, 4}) {
    hecke::VerifyOptions options;
    options.jobs = jobs;
    csv.push_back(hecke::render_csv(hecke::verify(inputs_of(ctx), options)));
  }
  for (std::size_t i = 1; i < csv.size(); ++i) {
    t.check(csv[i] == csv[0], "run " + std::to_string(i) + " differs from run 0");
  }
  // Parallel generation gives the same table.
  hecke::CacheParams params;
  params.jobs = 4;
  const hecke::PipelineData par = hecke::compute_pipeline(params);
  t.check(hecke::write_atable(par.table) == hecke::write_atable(ctx.data.table), "parallel ATABLE");
  return t.outcome();
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  Context ctx{hecke::compute_pipeline(hecke::CacheParams{})};

  const std::vector<std::pair<std::string, std::function<Outcome(const Context&)>>> criteria = {
      {"anchor recovery", anchors},
      {"classical j cross-check", classical_j},
      {"pi structure", pi_structure},
      {"p=2 models are x^(2n+2)", two_models},
      {"A_0 model over F_7", zero_model_seven},
      {"s_A tables", sa_tables},
      {"clause 4 dichotomy", clause_four},
      {"table shape matching", table_shapes},
      {"property suites", property_suites},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " (" << o.detail << ")" << std::endl;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed in "
            << secs << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}
