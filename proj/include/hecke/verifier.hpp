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

#ifndef HECKE_VERIFIER_HPP_
#define HECKE_VERIFIER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/atable.hpp"
#include "hecke/generation.hpp"
#include "hecke/interpolation.hpp"
#include "hecke/orbits.hpp"
#include "hecke/tables.hpp"

namespace hecke {

enum class Verdict {
  kPass,
  kFail,
  kSkippedBudget,
  kReportOnly,
  kExceptional,
  kInapplicable,
};

std::string to_string(Verdict v);

struct VerdictRecord {
  std::string clause;  // C1.1 .. C4.orbits
  int n = 0;
  std::uint64_t p = 0;  // 0 when the clause has no prime
  Verdict verdict = Verdict::kReportOnly;
  std::string detail;   // observed vs expected, "key=value; ..."

  std::string task_id() const;
};

struct VerifyOptions {
  int nmax = 30;
  std::vector<std::uint64_t> primes{2, 3, 5, 7};
  std::vector<std::uint64_t> clause4_primes = primes_up_to_range(5, 47);
  std::uint64_t budget = kDefaultFieldBudget;
  std::uint64_t seed = 1;
  int jobs = 1;
  int conj1_nmax = 10;

  static std::vector<std::uint64_t> primes_up_to_range(std::uint64_t lo, std::uint64_t hi);
};

// c_m(n) for m = 3 .. mmax together with the classical j coefficients;
// the series-engine side of the McKay-Thompson checks.
struct Conj1Data {
  int nmax = 0;
  int guard = 2;
  std::map<int, std::vector<Rational>> c_values;  // m -> c_m(-1 .. nmax)
  std::vector<Rational> classical_j;              // c(-1 .. nmax)
};

// Builds Conj1Data from a generated table, computing extra natural
// expansions when the table does not reach far enough in m.
Conj1Data conj1_data(const GeneratedTable& table, int conj1_nmax);

// Everything computed for one (n, p) pair.
struct PairAnalysis {
  int n = 0;
  std::uint64_t p = 0;
  std::uint64_t mod_np = 0;
  std::int64_t delta = 0;
  bool degenerate = false;           // K_p model vanishes mod p
  std::optional<int> s_a;
  std::optional<std::uint64_t> unit;  // residue of the K_p factorization unit
  std::optional<std::uint64_t> unit_k;
  std::optional<std::uint64_t> alpha;
  std::optional<std::uint64_t> alpha_star;
  bool over_budget = false;
  std::optional<RootProfile> profile;
  std::optional<ShapeMatch> shape;
  std::string kp_model;               // K_p model over F_p, as text
  std::string error;                  // nonempty when some stage threw
};

PairAnalysis analyze_pair(const InterpolatedA& a, std::uint64_t p, const VerifyOptions& options);

// All (n, p) with -1 <= n <= nmax and p in primes, in (n, p) order.
std::vector<PairAnalysis> analyze_pairs(const std::vector<InterpolatedA>& table,
                                        const VerifyOptions& options);

std::vector<VerdictRecord> verify_conj1(const std::vector<InterpolatedA>& table,
                                        const Conj1Data* data, const PhiSequence* phi);
std::vector<VerdictRecord> verify_conj2_clause1(const std::vector<InterpolatedA>& table);
std::vector<VerdictRecord> verify_conj2_clause2(const std::vector<InterpolatedA>& table, int nmax);
std::vector<VerdictRecord> verify_conj3(const std::vector<PairAnalysis>& pairs,
                                        const std::vector<PairAnalysis>& clause4_pairs);
std::vector<VerdictRecord> verify_conj4(const std::vector<PairAnalysis>& pairs);

// One CSV line per (n, p).
struct PairRow {
  std::uint64_t p = 0;
  int n = 0;
  std::uint64_t mod_np = 0;
  std::string s_a;
  std::int64_t delta = 0;
  std::string unit;
  std::string profile;
  std::string matched_row;
  Verdict verdict = Verdict::kReportOnly;
};

struct VerificationReport {
  VerifyOptions options;
  std::string source;  // "generated" or "ingested:<path>"
  std::vector<PairRow> rows;
  std::vector<VerdictRecord> records;
  std::vector<IngestFinding> findings;

  bool has_fail() const;
  // (clause, verdict) -> count, ordered.
  std::map<std::pair<std::string, std::string>, int> tally() const;
};

struct VerifyInputs {
  std::vector<InterpolatedA> table;  // index n + 1, n = -1 .. nmax
  std::optional<Conj1Data> conj1;
  std::optional<PhiSequence> phi;
  std::string source = "generated";
};

VerificationReport verify(const VerifyInputs& inputs, const VerifyOptions& options);

}  // namespace hecke

#endif  // HECKE_VERIFIER_HPP_
