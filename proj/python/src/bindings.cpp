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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hecke/atable.hpp"
#include "hecke/errors.hpp"
#include "hecke/factorization.hpp"
#include "hecke/finite_field.hpp"
#include "hecke/generation.hpp"
#include "hecke/interpolation.hpp"
#include "hecke/models.hpp"
#include "hecke/orbits.hpp"
#include "hecke/report.hpp"
#include "hecke/series_engine.hpp"
#include "hecke/verifier.hpp"

namespace py = pybind11;

namespace {

py::object fraction(const hecke::Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(hecke::to_string(r));
}

py::list fractions(const std::vector<hecke::Rational>& rs) {
  py::list out;
  for (const auto& r : rs) out.append(fraction(r));
  return out;
}

hecke::Rational rational(const py::handle& h) {
  const std::string text = py::str(h);
  const auto r = hecke::parse_rational(text, false);
  if (!r) throw hecke::ArgumentError("not a rational: " + text);
  return *r;
}

std::vector<std::uint64_t> residues(const hecke::Field& f, const hecke::FqPoly& a) {
  std::vector<std::uint64_t> out;
  for (const auto& c : a.coeffs) out.push_back(f.residue(c));
  return out;
}

hecke::ModelVariant variant_of(const std::string& name) {
  if (name == "K") return hecke::ModelVariant::kK;
  if (name == "Kp") return hecke::ModelVariant::kKp;
  throw hecke::ArgumentError("variant must be K or Kp, got " + name);
}

hecke::InterpolatedA from_coeffs(int n, const py::sequence& coeffs) {
  std::vector<hecke::Rational> c;
  for (const auto& h : coeffs) c.push_back(rational(h));
  hecke::InterpolatedA a;
  a.n = n;
  a.poly = hecke::QPoly(c);
  a.pi_set = hecke::pi_set(a.poly);
  a.source = hecke::Source::kIngested;
  return a;
}

py::dict verify_table(const std::vector<hecke::InterpolatedA>& table, int nmax,
                      const std::vector<std::uint64_t>& primes, std::uint64_t seed, int jobs,
                      std::uint64_t budget, const std::string& format) {
  hecke::VerifyOptions options;
  options.nmax = nmax;
  options.primes = primes;
  options.seed = seed;
  options.jobs = jobs;
  options.budget = budget;
  hecke::VerifyInputs inputs;
  inputs.table = table;
  hecke::VerificationReport report;
  {
    py::gil_scoped_release release;
    report = hecke::verify(inputs, options);
  }
  py::dict tally;
  for (const auto& [key, count] : report.tally()) tally[py::make_tuple(key.first, key.second)] = count;
  py::dict out;
  out["report"] = hecke::render(report, hecke::parse_report_format(format));
  out["has_fail"] = report.has_fail();
  out["tally"] = tally;
  return out;
}

}  // namespace

PYBIND11_MODULE(_hecke, m) {
  m.doc() = "Hecke-group interpolating polynomials and their finite-field models";

  auto error = py::register_exception<hecke::Error>(m, "HeckeError");
  py::register_exception<hecke::ParseError>(m, "ParseError", error);
  py::register_exception<hecke::CacheCorruptionError>(m, "CacheCorruptionError", error);
  py::register_exception<hecke::CoercionDomainError>(m, "CoercionDomainError", error);
  py::register_exception<hecke::DegenerateModelError>(m, "DegenerateModelError", error);
  py::register_exception<hecke::BudgetExceeded>(m, "BudgetExceeded", error);
  py::register_exception<hecke::ArgumentError>(m, "ArgumentError", error);

  py::class_<hecke::InterpolatedA>(m, "InterpolatedA")
      .def(py::init(&from_coeffs), py::arg("n"), py::arg("coeffs"))
      .def_readonly("n", &hecke::InterpolatedA::n)
      .def_property_readonly("coeffs", [](const hecke::InterpolatedA& a) { return fractions(a.poly.coeffs()); })
      .def_property_readonly("degree", [](const hecke::InterpolatedA& a) { return a.poly.degree(); })
      .def_readonly("pi_set", &hecke::InterpolatedA::pi_set)
      .def("__call__", [](const hecke::InterpolatedA& a, const py::handle& x) { return fraction(a.poly(rational(x))); })
      .def("__str__", [](const hecke::InterpolatedA& a) { return a.poly.to_string(); })
      .def("__repr__", [](const hecke::InterpolatedA& a) {
        return "InterpolatedA(n=" + std::to_string(a.n) + ", " + a.poly.to_string() + ")";
      });

  m.def("natural_expansion", [](int m_, int order) { return fractions(hecke::natural_expansion(m_, order).coeffs); },
        py::arg("m"), py::arg("order"), "ahat_{-1} .. ahat_{order-1}");
  m.def("calibrated_expansion", [](int m_, int order) { return fractions(hecke::calibrated_expansion(m_, order).coeffs); },
        py::arg("m"), py::arg("order"), "a_m(-1) .. a_m(order-1)");
  m.def("calibrate", [](int m_) {
    const auto c = hecke::calibrate(m_);
    return py::make_tuple(fraction(c.scale), fraction(c.shift));
  }, py::arg("m"));
  m.def("recover_an", py::overload_cast<int, int>(&hecke::recover_an), py::arg("n"), py::arg("guard") = 2,
        py::call_guard<py::gil_scoped_release>());
  m.def("generate_table", [](int nmax, int guard, int jobs) {
    hecke::GenerationOptions o;
    o.nmax = nmax;
    o.guard = guard;
    o.jobs = jobs;
    py::gil_scoped_release release;
    return hecke::generate_table(o).polys;
  }, py::arg("nmax"), py::arg("guard") = 2, py::arg("jobs") = 1);

  m.def("write_atable", &hecke::write_atable, py::arg("table"));
  m.def("parse_atable", [](const std::string& text) { return hecke::parse_atable(text); }, py::arg("text"));

  m.def("model", [](const hecke::InterpolatedA& a, std::uint64_t p, const std::string& variant) {
    const auto f = hecke::make_field(p, 1);
    return residues(*f, hecke::model(a, f, variant_of(variant)).coeffs);
  }, py::arg("a"), py::arg("p"), py::arg("variant") = "Kp", "model coefficients over F_p, ascending");
  m.def("splitting_degree", &hecke::splitting_degree, py::arg("a"), py::arg("p"), py::arg("seed") = 0);
  m.def("factor_mod_p", [](const std::vector<std::int64_t>& coeffs, std::uint64_t p, std::uint64_t seed) {
    const auto f = hecke::make_field(p, 1);
    const hecke::PolyRing ring(*f);
    const auto fac = hecke::factor(ring, ring.from_ints(coeffs), seed);
    py::list factors;
    for (const auto& fp : fac.factors) factors.append(py::make_tuple(residues(*f, fp.factor), fp.multiplicity));
    return py::make_tuple(f->residue(fac.unit), factors);
  }, py::arg("coeffs"), py::arg("p"), py::arg("seed") = 0, "(unit, [(monic factor, multiplicity)])");
  m.def("root_profile", [](const hecke::InterpolatedA& a, std::uint64_t p, std::uint64_t seed, std::uint64_t budget) {
    hecke::VerifyOptions o;
    o.seed = seed;
    o.budget = budget;
    const auto pa = hecke::analyze_pair(a, p, o);
    py::dict out;
    out["n"] = pa.n;
    out["p"] = pa.p;
    out["s_A"] = pa.s_a ? py::cast(*pa.s_a) : py::none();
    out["degenerate"] = pa.degenerate;
    out["profile"] = pa.profile ? py::cast(pa.profile->serialize()) : py::none();
    out["matched_row"] = pa.shape ? py::cast(pa.shape->matched_row) : py::none();
    out["shape"] = pa.shape ? py::cast(hecke::to_string(pa.shape->outcome)) : py::none();
    return out;
  }, py::arg("a"), py::arg("p"), py::arg("seed") = 1, py::arg("budget") = hecke::kDefaultFieldBudget);

  m.def("orbit_size_of_exponent", &hecke::orbit_size_of_exponent, py::arg("k"), py::arg("p"), py::arg("s"));
  m.def("base_p_expansion", &hecke::base_p_expansion, py::arg("k"), py::arg("p"), py::arg("width"));

  m.def("verify", &verify_table, py::arg("table"), py::arg("nmax") = 30,
        py::arg("primes") = std::vector<std::uint64_t>{2, 3, 5, 7}, py::arg("seed") = 1, py::arg("jobs") = 1,
        py::arg("budget") = hecke::kDefaultFieldBudget, py::arg("format") = "csv");
}
