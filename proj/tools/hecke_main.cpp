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

// Command-line front end: gen, interp, model, factor, verify, report.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hecke/atable.hpp"
#include "hecke/cache.hpp"
#include "hecke/errors.hpp"
#include "hecke/finite_field.hpp"
#include "hecke/fq_poly.hpp"
#include "hecke/models.hpp"
#include "hecke/report.hpp"
#include "hecke/series_engine.hpp"
#include "hecke/verifier.hpp"

namespace {

using namespace hecke;

struct Flags {
  int nmax = 30;
  std::string primes = "2,3,5,7";
  int mmax = 10;
  int order = 6;
  std::uint64_t budget = kDefaultFieldBudget;
  std::uint64_t seed = 1;
  std::string cache;
  std::string source = "generated";
  std::string format = "csv";
  std::string out;
  std::string phi;
  int jobs = 1;
  int conj1_nmax = 10;
};

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::logic_error&) {
      pos = 0;
    }
    if (pos != item.size() || !is_prime(static_cast<std::uint64_t>(v))) {
      throw ArgumentError("--primes: '" + item + "' is not a prime");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ArgumentError("--primes: empty list");
  return out;
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(f.out, text);
  }
}

struct Loaded {
  std::vector<InterpolatedA> table;
  std::optional<Conj1Data> conj1;
  std::string source;
};

Loaded load_source(const Flags& f) {
  Loaded out;
  const std::string prefix = "ingested:";
  if (f.source == "generated") {
    CacheParams params;
    params.nmax = f.nmax;
    params.conj1_nmax = std::min(f.conj1_nmax, std::max(f.nmax, 0));
    params.jobs = f.jobs;
    std::optional<std::filesystem::path> dir;
    if (!f.cache.empty()) dir = f.cache;
    PipelineData data = load_or_compute(dir, params);
    out.table = std::move(data.table);
    out.conj1 = std::move(data.conj1);
    out.source = "generated";
  } else if (f.source.rfind(prefix, 0) == 0) {
    const std::string path = f.source.substr(prefix.size());
    out.table = ingest_table(path);
    out.source = f.source;
  } else {
    throw ArgumentError("--source must be 'generated' or 'ingested:PATH'");
  }
  return out;
}

VerifyOptions verify_options(const Flags& f) {
  VerifyOptions o;
  o.nmax = f.nmax;
  o.primes = parse_primes(f.primes);
  o.budget = f.budget;
  o.seed = f.seed;
  o.jobs = f.jobs;
  o.conj1_nmax = f.conj1_nmax;
  return o;
}

int run_gen(const Flags& f) {
  if (f.mmax < 3) throw ArgumentError("--mmax must be >= 3");
  if (f.order < 1) throw ArgumentError("--order must be >= 1");
  std::ostringstream os;
  const bool json = f.format == "json";
  if (json) {
    os << "[\n";
  } else {
    os << "m,n,a_m(n),c_m(n)\n";
  }
  bool first = true;
  for (int m = 3; m <= f.mmax; ++m) {
    const JExpansion J = calibrated_expansion(m, f.order);
    const LaurentSeries j = j_expansion(J);
    for (int n = -1; n < f.order - 1; ++n) {
      if (json) {
        os << (first ? "" : ",\n") << "  {\"m\": " << m << ", \"n\": " << n << ", \"a\": \""
           << to_string(J.at(n)) << "\", \"c\": \"" << to_string(j.coeff(n)) << "\"}";
      } else {
        os << m << "," << n << "," << to_string(J.at(n)) << "," << to_string(j.coeff(n)) << "\n";
      }
      first = false;
    }
  }
  if (json) os << "\n]\n";
  emit(f, os.str());
  return 0;
}

int run_interp(const Flags& f) {
  Loaded data = load_source(f);
  std::vector<InterpolatedA> table;
  for (auto& a : data.table) {
    if (a.n <= f.nmax) table.push_back(a);
  }
  emit(f, write_atable(table));
  return 0;
}

int run_model(const Flags& f) {
  const Loaded data = load_source(f);
  const auto primes = parse_primes(f.primes);
  std::ostringstream os;
  os << "n,p,mod_np,delta,variant,model,a,a_star,r,r_star\n";
  for (const InterpolatedA& a : data.table) {
    if (a.n > f.nmax) continue;
    for (std::uint64_t p : primes) {
      const FieldPtr field = make_field(p, 1);
      const PolyRing ring(*field);
      std::string a_text = "-", a_star_text = "-", r_text = "-", r_star_text = "-";
      try {
        const ModelMeta meta = model_meta(a, p, *field);
        a_text = meta.a.get_str();
        a_star_text = to_string(meta.a_star);
        r_text = std::to_string(meta.r);
        r_star_text = std::to_string(meta.r_star);
      } catch (const DegenerateModelError&) {
      }
      for (ModelVariant v : {ModelVariant::kK, ModelVariant::kKp}) {
        const ModelPoly mp = model(a, field, v);
        os << a.n << "," << p << "," << mod_p(static_cast<std::int64_t>(a.n), p) << ","
           << delta_of(a.n, p) << "," << to_string(v) << "," << ring.to_string(mp.coeffs) << ","
           << a_text << "," << a_star_text << "," << r_text << "," << r_star_text << "\n";
      }
    }
  }
  emit(f, os.str());
  return 0;
}

int run_factor(const Flags& f) {
  const Loaded data = load_source(f);
  VerifyOptions o = verify_options(f);
  const auto pairs = analyze_pairs(data.table, o);
  std::ostringstream os;
  for (const PairAnalysis& pa : pairs) {
    if (pa.profile) {
      os << pa.profile->serialize() << "\n";
    } else {
      os << pa.n << " " << pa.p << " "
         << (pa.degenerate ? "degenerate" : pa.over_budget ? "skipped-budget" : pa.error) << "\n";
    }
  }
  emit(f, os.str());
  return 0;
}

VerificationReport run_verification(const Flags& f) {
  const Loaded data = load_source(f);
  VerifyInputs inputs;
  inputs.table = data.table;
  inputs.conj1 = data.conj1;
  inputs.source = data.source;
  if (!f.phi.empty()) inputs.phi = read_phi(f.phi);
  return verify(inputs, verify_options(f));
}

int run_verify(const Flags& f) {
  const VerificationReport report = run_verification(f);
  emit(f, render(report, parse_report_format(f.format)));
  return report.has_fail() ? 1 : 0;
}

int run_report(const Flags& f) {
  if (f.out.empty()) throw ArgumentError("report: --out DIR is required");
  const VerificationReport report = run_verification(f);
  std::filesystem::create_directories(f.out);
  for (ReportFormat fmt : {ReportFormat::kCsv, ReportFormat::kMarkdown, ReportFormat::kJson}) {
    write_text_file(std::filesystem::path(f.out) / ("report." + extension(fmt)), render(report, fmt));
  }
  std::cerr << (report.has_fail() ? "FAIL" : "PASS") << ": reports written to " << f.out << "\n";
  return report.has_fail() ? 1 : 0;
}

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--nmax", f.nmax, "largest n")->check(CLI::Range(-1, 400));
  app->add_option("--primes", f.primes, "comma-separated primes");
  app->add_option("--budget", f.budget, "largest field order examined");
  app->add_option("--seed", f.seed, "seed for equal-degree splitting");
  app->add_option("--cache", f.cache, "cache directory");
  app->add_option("--source", f.source, "generated | ingested:PATH");
  app->add_option("--format", f.format, "csv | md | json")->check(CLI::IsMember({"csv", "md", "json"}));
  app->add_option("--out", f.out, "output path (stdout when absent)");
  app->add_option("--jobs", f.jobs, "worker threads")->check(CLI::Range(1, 256));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field models of interpolating polynomials for Hecke-group hauptmoduln"};
  app.require_subcommand(1);
  Flags f;

  auto* gen = app.add_subcommand("gen", "print expansions a_m(n) and c_m(n)");
  gen->add_option("--mmax", f.mmax, "largest Hecke index")->check(CLI::Range(3, 1000));
  gen->add_option("--order", f.order, "coefficients a_m(-1 .. order-2)")->check(CLI::Range(1, 400));
  gen->add_option("--format", f.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  gen->add_option("--out", f.out, "output path");

  auto* interp = app.add_subcommand("interp", "emit the A_n table in ATABLE format");
  auto* model_cmd = app.add_subcommand("model", "K and K_p models over F_p");
  auto* factor_cmd = app.add_subcommand("factor", "root profiles over the splitting fields");
  auto* verify_cmd = app.add_subcommand("verify", "run the conjecture suites");
  auto* report_cmd = app.add_subcommand("report", "write csv, md and json reports to --out DIR");
  for (auto* sub : {interp, model_cmd, factor_cmd, verify_cmd, report_cmd}) add_common(sub, f);
  for (auto* sub : {verify_cmd, report_cmd}) {
    sub->add_option("--phi", f.phi, "PHI file with McKay-Thompson coefficients");
    sub->add_option("--conj1-nmax", f.conj1_nmax, "largest n for the C_n checks")
        ->check(CLI::Range(0, 100));
  }

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return run_gen(f);
    if (*interp) return run_interp(f);
    if (*model_cmd) return run_model(f);
    if (*factor_cmd) return run_factor(f);
    if (*verify_cmd) return run_verify(f);
    if (*report_cmd) return run_report(f);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
