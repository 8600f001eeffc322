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

#include "hecke/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/factorization.hpp"
#include "hecke/finite_field.hpp"
#include "hecke/fq_poly.hpp"
#include "hecke/models.hpp"
#include "hecke/parallel.hpp"

namespace hecke {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkippedBudget:
      return "skipped-budget";
    case Verdict::kReportOnly:
      return "report-only";
    case Verdict::kExceptional:
      return "exceptional";
    case Verdict::kInapplicable:
      return "inapplicable";
  }
  return "unknown";
}

std::string VerdictRecord::task_id() const {
  std::ostringstream os;
  os << clause << ":n=" << n;
  if (p != 0) os << ":p=" << p;
  return os.str();
}

std::vector<std::uint64_t> VerifyOptions::primes_up_to_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q : primes_up_to(hi)) {
    if (q >= lo) out.push_back(q);
  }
  return out;
}

namespace {

// p^s, or nullopt when it exceeds limit.
std::optional<std::uint64_t> bounded_power(std::uint64_t p, int s, std::uint64_t limit) {
  std::uint64_t q = 1;
  for (int i = 0; i < s; ++i) {
    if (q > limit / p) return std::nullopt;
    q *= p;
  }
  return q;
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "}";
  return os.str();
}

VerdictRecord record(std::string clause, int n, std::uint64_t p, Verdict v, std::string detail) {
  return {std::move(clause), n, p, v, std::move(detail)};
}

}  // namespace

Conj1Data conj1_data(const GeneratedTable& table, int conj1_nmax) {
  Conj1Data data;
  data.nmax = conj1_nmax;
  data.guard = 2;
  const int order = conj1_nmax + 2;
  const int m_last = 3 * conj1_nmax + 6 + data.guard;
  for (int m = 3; m <= m_last; ++m) {
    const std::size_t idx = static_cast<std::size_t>(m - 3);
    NaturalExpansion natural;
    if (idx < table.natural.size() && table.natural[idx].order >= order) {
      natural = table.natural[idx];
    } else {
      natural = natural_expansion(m, order);
    }
    const Calibration cal = idx < table.calibrations.size() ? table.calibrations[idx]
                                                            : calibrate(natural, table.root);
    const LaurentSeries j = j_expansion(calibrated_expansion(natural, cal));
    std::vector<Rational> cs;
    for (int n = -1; n <= conj1_nmax; ++n) cs.push_back(j.coeff(n));
    data.c_values[m] = std::move(cs);
    if (m == 3) {
      // c(n) = 1728^{n+1} ahat_n
      Rational scale = 1;
      for (int n = -1; n <= conj1_nmax; ++n) {
        data.classical_j.push_back(n == -1 ? Rational(1) : natural.at(n) * scale);
        scale *= 1728;
      }
    }
  }
  return data;
}

PairAnalysis analyze_pair(const InterpolatedA& a, std::uint64_t p, const VerifyOptions& options) {
  PairAnalysis pa;
  pa.n = a.n;
  pa.p = p;
  pa.mod_np = mod_p(static_cast<std::int64_t>(a.n), p);
  pa.delta = delta_of(a.n, p);
  try {
    const FieldPtr prime_field = make_field(p, 1);
    const PolyRing ring(*prime_field);
    const ModelPoly kp = model(a, prime_field, ModelVariant::kKp);
    pa.kp_model = ring.to_string(kp.coeffs);
    if (kp.coeffs.is_zero()) {
      pa.degenerate = true;
      return pa;
    }
    const ModelMeta meta = model_meta(a, p, *prime_field);
    pa.alpha = meta.r;
    pa.alpha_star = meta.r_star;

    const Factorization fkp = factor(ring, kp.coeffs, options.seed);
    pa.unit = prime_field->residue(fkp.unit);
    const ModelPoly kk = model(a, prime_field, ModelVariant::kK);
    if (!kk.coeffs.is_zero()) {
      pa.unit_k = prime_field->residue(factor(ring, kk.coeffs, options.seed).unit);
    }
    pa.s_a = kp.coeffs.degree() <= 0 ? 1 : splitting_degree_of(fkp);

    const auto order = bounded_power(p, *pa.s_a, options.budget);
    if (!order) {
      pa.over_budget = true;
      return pa;
    }
    const FieldPtr field = make_field(p, *pa.s_a);
    const ModelPoly over = model(a, field, ModelVariant::kKp);
    RootProfileContext ctx;
    ctx.n = a.n;
    ctx.splitting_degree = *pa.s_a;
    ctx.delta = pa.delta;
    ctx.seed = options.seed;
    ctx.budget = options.budget;
    pa.profile = root_profile(*field, over.coeffs, ctx);
    if (p == 3 || p == 5 || p == 7) pa.shape = shape_match(*pa.profile);
  } catch (const BudgetExceeded&) {
    pa.over_budget = true;
  } catch (const Error& e) {
    pa.error = e.what();
  }
  return pa;
}

std::vector<PairAnalysis> analyze_pairs(const std::vector<InterpolatedA>& table,
                                        const VerifyOptions& options) {
  std::vector<std::pair<std::size_t, std::uint64_t>> tasks;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].n > options.nmax) continue;
    for (std::uint64_t p : options.primes) tasks.emplace_back(i, p);
  }
  std::vector<PairAnalysis> out(tasks.size());
  parallel_for(tasks.size(), options.jobs, [&](std::size_t k) {
    out[k] = analyze_pair(table[tasks[k].first], tasks[k].second, options);
  });
  std::stable_sort(out.begin(), out.end(), [](const PairAnalysis& x, const PairAnalysis& y) {
    return std::pair(x.n, x.p) < std::pair(y.n, y.p);
  });
  return out;
}

std::vector<VerdictRecord> verify_conj1(const std::vector<InterpolatedA>& table,
                                        const Conj1Data* data, const PhiSequence* phi) {
  std::vector<VerdictRecord> out;
  if (data == nullptr) {
    out.push_back(record("C1.1", -1, 0, Verdict::kReportOnly,
                         "expansions unavailable for this source; McKay-Thompson checks skipped"));
    return out;
  }
  const PhiSequence empty_phi;
  for (int n = 0; n <= data->nmax; ++n) {
    const std::size_t idx = static_cast<std::size_t>(n + 1);
    const int degree = 3 * n + 3;
    std::vector<std::pair<Rational, Rational>> points;
    for (const auto& [m, cs] : data->c_values) points.emplace_back(Rational(m), cs[idx]);
    std::ostringstream os;
    const std::size_t needed = static_cast<std::size_t>(degree + 1 + data->guard);
    if (points.size() < needed) {
      os << "samples=" << points.size() << "; needed=" << needed;
      out.push_back(record("C1.1", n, 0, Verdict::kReportOnly, os.str()));
    } else {
      std::vector<std::pair<Rational, Rational>> head(points.begin(),
                                                      points.begin() + degree + 1);
      const QPoly c_poly = lagrange(head);
      bool guards_ok = true;
      for (std::size_t i = static_cast<std::size_t>(degree + 1); i < needed; ++i) {
        guards_ok = guards_ok && c_poly(points[i].first) == points[i].second;
      }
      os << "interpolable=" << (guards_ok ? "yes" : "no") << "; degree=" << c_poly.degree();
      if (idx < table.size()) {
        Rational scale = 1;
        for (int i = 0; i < 6 * n + 6; ++i) scale *= 2;
        const QPoly expected = QPoly::monomial(scale, n + 1) * table[idx].poly;
        os << "; C_n=2^(6n+6)x^(n+1)A_n:" << (expected == c_poly ? "holds" : "fails");
      }
      out.push_back(record("C1.1", n, 0, Verdict::kReportOnly, os.str()));
    }
  }
  for (int n = 0; n <= data->nmax && static_cast<std::size_t>(n + 1) < table.size(); ++n) {
    const McKayReport rep =
        mckay_structure_report(table[static_cast<std::size_t>(n + 1)], phi ? *phi : empty_phi);
    std::ostringstream os;
    os << "divisible_by_(x-2)(x+2)x^(n+1)=" << (rep.divisible ? "yes" : "no")
       << "; A_n(2)=" << to_string(rep.value_at_2);
    if (rep.phi_expected) {
      os << "; phi_expected=" << rep.phi_expected->get_str();
      os << "; phi_observed=" << (rep.phi_observed ? to_string(*rep.phi_observed) : "-");
      os << "; phi_matches=" << (rep.phi_matches ? "yes" : "no");
    } else {
      os << "; phi=unavailable";
    }
    if (rep.quotient) {
      os << "; quotient_monic_after_phi=" << (rep.quotient_monic_after_phi ? "yes" : "no")
         << "; quotient_degree_2n=" << (rep.degree_is_2n ? "yes" : "no");
    }
    out.push_back(record("C1.2", n, 0, Verdict::kReportOnly, os.str()));
  }
  auto it = data->c_values.find(3);
  if (it != data->c_values.end()) {
    std::ostringstream os;
    int first = -2;
    for (std::size_t i = 0; i < it->second.size() && i < data->classical_j.size(); ++i) {
      if (it->second[i] != data->classical_j[i]) {
        first = static_cast<int>(i) - 1;
        break;
      }
    }
    if (first == -2) {
      os << "j_3 agrees with classical j through n=" << data->nmax;
    } else {
      const std::size_t i = static_cast<std::size_t>(first + 1);
      os << "first mismatch at n=" << first << "; j_3=" << to_string(it->second[i])
         << "; j=" << to_string(data->classical_j[i]);
    }
    out.push_back(record("C1.3", 3, 0, Verdict::kReportOnly, os.str()));
  }
  return out;
}

std::vector<VerdictRecord> verify_conj2_clause1(const std::vector<InterpolatedA>& table) {
  std::vector<VerdictRecord> out;
  for (const InterpolatedA& a : table) {
    std::ostringstream os;
    Verdict v = Verdict::kPass;
    if (a.n == -1 || a.n == 0 || a.n == 1) {
      const QPoly expected = a.n == -1 ? QPoly::monomial(1, 0) : a.n == 0 ? anchor_a0() : anchor_a1();
      os << "observed=" << a.poly.to_string() << "; expected=" << expected.to_string();
      if (a.poly != expected) v = Verdict::kFail;
    } else {
      bool odd_zero = true;
      for (int i = 1; i <= a.poly.degree(); i += 2) odd_zero = odd_zero && a.poly.coeff(i) == 0;
      const bool degree_ok = a.poly.degree() == 2 * a.n + 2;
      os << "degree=" << a.poly.degree() << "; expected_degree=" << 2 * a.n + 2
         << "; odd_coefficients_zero=" << (odd_zero ? "yes" : "no");
      if (!degree_ok || !odd_zero) {
        v = a.source == Source::kIngested ? Verdict::kReportOnly : Verdict::kFail;
      }
    }
    out.push_back(record("C2.1", a.n, 0, v, os.str()));
  }
  return out;
}

std::vector<VerdictRecord> verify_conj2_clause2(const std::vector<InterpolatedA>& table, int nmax) {
  std::vector<VerdictRecord> out;
  for (const InterpolatedA& a : table) {
    if (a.n < 2 || a.n > nmax) continue;
    const PiClauseReport rep = check_pi_clauses(a);
    std::ostringstream os;
    os << "class=" << to_string(rep.cls) << "; observed=" << join(rep.observed)
       << "; expected=" << join(rep.expected);
    for (const auto& [clause, ok] : rep.clauses) os << "; " << clause << "=" << (ok ? "pass" : "fail");
    out.push_back(record("C2.2", a.n, 0, rep.all_pass() ? Verdict::kPass : Verdict::kFail, os.str()));
  }
  return out;
}

namespace {

// Printed splitting degrees per residue for p = 3, 5, 7.
std::optional<std::set<int>> table_s_values(std::uint64_t p, std::uint64_t residue) {
  static const std::map<std::uint64_t, std::vector<std::set<int>>> tables = {
      {3, {{1}, {1, 2, 3}, {1, 2, 3, 4}}},
      {5, {{1, 2}, {4}, {4}, {6}, {1}}},
      {7, {{4}, {4}, {2}, {2}, {6}, {5}, {1}}},
  };
  auto it = tables.find(p);
  if (it == tables.end()) return std::nullopt;
  return it->second[residue];
}

std::string set_text(const std::set<int>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

std::vector<VerdictRecord> verify_conj3(const std::vector<PairAnalysis>& pairs,
                                        const std::vector<PairAnalysis>& clause4_pairs) {
  std::vector<VerdictRecord> out;

  // Residue classes with n > p for the constancy part of clause 2.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::set<int>> classes;
  for (const PairAnalysis& pa : pairs) {
    if (pa.p > 3 && pa.p <= 17 && static_cast<std::uint64_t>(std::max(pa.n, 0)) > pa.p && pa.s_a) {
      classes[{pa.p, pa.mod_np}].insert(*pa.s_a);
    }
  }

  for (const PairAnalysis& pa : pairs) {
    // Clause 1: factorization units.
    {
      std::ostringstream os;
      Verdict v;
      if (!pa.error.empty()) {
        v = Verdict::kFail;
        os << "error=" << pa.error;
      } else if (pa.degenerate) {
        v = Verdict::kInapplicable;
        os << "model vanishes mod " << pa.p;
      } else {
        const bool kp_ok = pa.unit && pa.alpha_star && *pa.unit == *pa.alpha_star;
        const bool k_ok = pa.unit_k && pa.alpha && *pa.unit_k == *pa.alpha;
        v = kp_ok && k_ok ? Verdict::kPass : Verdict::kFail;
        os << "gamma*=" << (pa.unit ? std::to_string(*pa.unit) : "-")
           << "; alpha*=" << (pa.alpha_star ? std::to_string(*pa.alpha_star) : "-")
           << "; gamma=" << (pa.unit_k ? std::to_string(*pa.unit_k) : "-")
           << "; alpha=" << (pa.alpha ? std::to_string(*pa.alpha) : "-");
      }
      out.push_back(record("C3.1", pa.n, pa.p, v, os.str()));
    }

    // Clause 2: tables, s_A(n, 2) = 1, constancy for 3 < p <= 17, p < n.
    {
      std::ostringstream os;
      std::optional<Verdict> v;
      const std::string s_text = pa.s_a ? std::to_string(*pa.s_a) : "undefined";
      if (pa.p == 2) {
        os << "s_A=" << s_text << "; expected=1";
        if (pa.degenerate) os << "; model vanishes mod 2";
        v = pa.s_a && *pa.s_a == 1 ? Verdict::kPass : Verdict::kFail;
      } else if (auto allowed = table_s_values(pa.p, pa.mod_np)) {
        os << "s_A=" << s_text << "; printed=" << set_text(*allowed);
        const bool ok = pa.s_a && allowed->count(*pa.s_a) > 0;
        if (ok) {
          v = Verdict::kPass;
        } else if (pa.n <= 0 && pa.s_a) {
          v = Verdict::kExceptional;
        } else {
          v = Verdict::kFail;
        }
      }
      auto cls = classes.find({pa.p, pa.mod_np});
      if (pa.p > 3 && pa.p <= 17 && pa.n > 0 && static_cast<std::uint64_t>(pa.n) > pa.p) {
        const bool constant = cls != classes.end() && cls->second.size() == 1 && pa.s_a;
        os << (os.tellp() > 0 ? "; " : "") << "residue_class_values="
           << (cls != classes.end() ? set_text(cls->second) : "{}");
        if (!constant) {
          v = Verdict::kFail;
        } else if (!v) {
          v = Verdict::kPass;
        }
      }
      if (v) out.push_back(record("C3.2", pa.n, pa.p, *v, os.str()));
    }

    // Clause 3: n = p - 1 mod p implies s_A = 1.
    if (pa.p > 3 && pa.mod_np == pa.p - 1) {
      std::ostringstream os;
      os << "s_A=" << (pa.s_a ? std::to_string(*pa.s_a) : "undefined") << "; expected=1";
      out.push_back(record("C3.3", pa.n, pa.p,
                           pa.s_a && *pa.s_a == 1 ? Verdict::kPass : Verdict::kFail, os.str()));
    }
  }

  // Clause 4: s_A(0, p) in {1, 2} with the mod-3 dichotomy.
  for (const PairAnalysis& pa : clause4_pairs) {
    if (pa.n != 0 || pa.p <= 3) continue;
    std::ostringstream os;
    const int expected = pa.p % 3 == 1 ? 1 : 2;
    os << "s_A(0," << pa.p << ")=" << (pa.s_a ? std::to_string(*pa.s_a) : "undefined")
       << "; p mod 3=" << pa.p % 3 << "; expected=" << expected;
    out.push_back(record("C3.4", 0, pa.p,
                         pa.s_a && *pa.s_a == expected ? Verdict::kPass : Verdict::kFail, os.str()));
  }
  return out;
}

std::vector<VerdictRecord> verify_conj4(const std::vector<PairAnalysis>& pairs) {
  std::vector<VerdictRecord> out;
  for (const PairAnalysis& pa : pairs) {
    // Clause 1.
    if (pa.p == 2) {
      std::ostringstream os;
      const std::string expected = pa.n == -1 ? "1" : "x^" + std::to_string(2 * pa.n + 2);
      os << "observed=" << pa.kp_model << "; expected=" << expected;
      out.push_back(record("C4.1", pa.n, pa.p,
                           pa.kp_model == expected ? Verdict::kPass : Verdict::kFail, os.str()));
    }

    // Tables 1-3.
    if (pa.p == 3 || pa.p == 5 || pa.p == 7) {
      std::ostringstream os;
      Verdict v = Verdict::kFail;
      if (pa.n <= 0) {
        v = Verdict::kExceptional;
        os << "n in {-1, 0}";
        if (pa.shape) os << "; observed=" << pa.shape->observed;
      } else if (pa.over_budget) {
        v = Verdict::kSkippedBudget;
        os << "field order exceeds budget";
      } else if (!pa.error.empty()) {
        os << "error=" << pa.error;
      } else if (pa.degenerate || !pa.shape) {
        os << "model vanishes mod " << pa.p;
      } else {
        const ShapeMatch& sm = *pa.shape;
        os << "outcome=" << to_string(sm.outcome) << "; observed=" << sm.observed;
        for (const auto& [id, text] : sm.expected) os << "; " << id << "=" << text;
        for (const auto& id : sm.inapplicable_rows) os << "; " << id << "=negative exponent";
        switch (sm.outcome) {
          case ShapeOutcome::kMatched:
            v = Verdict::kPass;
            break;
          case ShapeOutcome::kMismatch:
            v = Verdict::kFail;
            break;
          case ShapeOutcome::kInapplicable:
            v = Verdict::kInapplicable;
            break;
          case ShapeOutcome::kUnlisted:
            v = Verdict::kReportOnly;
            break;
          case ShapeOutcome::kExceptional:
            v = Verdict::kExceptional;
            break;
        }
      }
      out.push_back(record("C4.tables", pa.n, pa.p, v, os.str()));
    }

    // Orbit sizes and Frobenius closure.
    {
      std::ostringstream os;
      Verdict v;
      if (pa.over_budget) {
        v = Verdict::kSkippedBudget;
        os << "field order exceeds budget";
      } else if (!pa.error.empty()) {
        v = Verdict::kFail;
        os << "error=" << pa.error;
      } else if (pa.degenerate || !pa.profile) {
        v = Verdict::kInapplicable;
        os << "model vanishes mod " << pa.p;
      } else {
        const RootProfile& prof = *pa.profile;
        bool sizes_divide = true;
        bool sizes_full = true;
        std::map<int, int> spectrum;
        for (const OrbitEntry& e : prof.orbits) {
          spectrum[e.size] += e.multiplicity;
          sizes_divide = sizes_divide && prof.splitting_degree % e.size == 0;
          sizes_full = sizes_full && e.size == prof.splitting_degree;
        }
        const bool structural = prof.frobenius_closed && prof.signature_periods_match &&
                                sizes_divide && prof.nonlinear_remainder == 0;
        os << "frobenius_closed=" << (prof.frobenius_closed ? "yes" : "no")
           << "; signature_periods_match=" << (prof.signature_periods_match ? "yes" : "no")
           << "; sizes_divide_s_A=" << (sizes_divide ? "yes" : "no") << "; spectrum=";
        if (spectrum.empty()) os << "-";
        bool first = true;
        for (const auto& [size, count] : spectrum) {
          os << (first ? "" : ",") << size << "x" << count;
          first = false;
        }
        if (!structural) {
          v = Verdict::kFail;
        } else if (pa.p == 2 || pa.p == 3 || pa.p == 5) {
          os << "; all_sizes_equal_s_A=" << (sizes_full ? "yes" : "no");
          v = sizes_full ? Verdict::kPass : Verdict::kFail;
        } else {
          v = Verdict::kReportOnly;
        }
      }
      out.push_back(record("C4.orbits", pa.n, pa.p, v, os.str()));
    }
  }
  return out;
}

bool VerificationReport::has_fail() const {
  return std::any_of(records.begin(), records.end(),
                     [](const VerdictRecord& r) { return r.verdict == Verdict::kFail; });
}

std::map<std::pair<std::string, std::string>, int> VerificationReport::tally() const {
  std::map<std::pair<std::string, std::string>, int> out;
  for (const VerdictRecord& r : records) out[{r.clause, to_string(r.verdict)}] += 1;
  return out;
}

namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::kFail:
      return 5;
    case Verdict::kSkippedBudget:
      return 4;
    case Verdict::kPass:
      return 3;
    case Verdict::kExceptional:
      return 2;
    case Verdict::kInapplicable:
      return 1;
    case Verdict::kReportOnly:
      return 0;
  }
  return 0;
}

std::string record_order_key(const VerdictRecord& r) {
  static const std::vector<std::string> order = {"C1.1", "C1.2", "C1.3", "C2.1",   "C2.2",
                                                 "C3.1", "C3.2", "C3.3", "C3.4",   "C4.1",
                                                 "C4.tables", "C4.orbits"};
  const auto it = std::find(order.begin(), order.end(), r.clause);
  return std::to_string(it - order.begin());
}

}  // namespace

VerificationReport verify(const VerifyInputs& inputs, const VerifyOptions& options) {
  VerificationReport report;
  report.options = options;
  report.source = inputs.source;

  std::vector<InterpolatedA> table;
  for (const InterpolatedA& a : inputs.table) {
    if (a.n <= options.nmax) table.push_back(a);
  }
  std::sort(table.begin(), table.end(),
            [](const InterpolatedA& x, const InterpolatedA& y) { return x.n < y.n; });
  if (inputs.source != "generated") report.findings = audit_ingested(table);

  const std::vector<PairAnalysis> pairs = analyze_pairs(table, options);

  std::vector<PairAnalysis> clause4;
  const InterpolatedA* a0 = nullptr;
  for (const InterpolatedA& a : table) {
    if (a.n == 0) a0 = &a;
  }
  if (a0 != nullptr) {
    clause4.resize(options.clause4_primes.size());
    VerifyOptions light = options;
    light.budget = 0;  // s_A only
    parallel_for(clause4.size(), options.jobs, [&](std::size_t i) {
      clause4[i] = analyze_pair(*a0, options.clause4_primes[i], light);
    });
  }

  const Conj1Data* c1 = inputs.conj1 ? &*inputs.conj1 : nullptr;
  const PhiSequence* phi = inputs.phi ? &*inputs.phi : nullptr;
  for (auto&& part : {verify_conj1(table, c1, phi), verify_conj2_clause1(table),
                      verify_conj2_clause2(table, options.nmax), verify_conj3(pairs, clause4),
                      verify_conj4(pairs)}) {
    report.records.insert(report.records.end(), part.begin(), part.end());
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const VerdictRecord& x, const VerdictRecord& y) {
                     const auto kx = std::stoi(record_order_key(x));
                     const auto ky = std::stoi(record_order_key(y));
                     return std::tie(kx, x.n, x.p) < std::tie(ky, y.n, y.p);
                   });

  for (const PairAnalysis& pa : pairs) {
    PairRow row;
    row.p = pa.p;
    row.n = pa.n;
    row.mod_np = pa.mod_np;
    row.s_a = pa.s_a ? std::to_string(*pa.s_a) : (pa.degenerate ? "degenerate" : "-");
    row.delta = pa.delta;
    row.unit = pa.unit ? std::to_string(*pa.unit) : "-";
    if (pa.profile) {
      row.profile = pa.profile->serialize();
    } else if (pa.over_budget) {
      row.profile = "skipped-budget";
    } else {
      row.profile = "-";
    }
    if (pa.shape) {
      row.matched_row = pa.shape->outcome == ShapeOutcome::kMatched
                            ? pa.shape->matched_row
                            : to_string(pa.shape->outcome);
    } else {
      row.matched_row = "-";
    }
    std::optional<Verdict> worst;
    for (const VerdictRecord& r : report.records) {
      if (r.n != pa.n || r.p != pa.p) continue;
      if (!worst || severity(r.verdict) > severity(*worst)) worst = r.verdict;
    }
    row.verdict = worst.value_or(Verdict::kReportOnly);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace hecke
