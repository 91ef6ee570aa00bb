#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "scv/analytic.hpp"
#include "scv/catalog.hpp"
#include "scv/curves.hpp"
#include "scv/errors.hpp"
#include "scv/hypergeom.hpp"
#include "scv/report.hpp"
#include "scv/verify.hpp"

namespace py = pybind11;

namespace {

const scv::Catalog& catalog() {
  static const scv::Catalog instance = scv::load_default_catalog();
  return instance;
}

std::vector<scv::Rational> rationals(const std::vector<std::string>& xs) {
  std::vector<scv::Rational> out;
  for (const std::string& x : xs) out.push_back(scv::parse_rational(x));
  return out;
}

py::dict verdict_dict(const scv::Verdict& v) {
  py::dict d;
  d["id"] = v.id;
  d["p"] = v.p;
  d["m"] = v.m;
  d["branch"] = v.branch;
  d["admissible"] = v.admissible;
  d["skip_reason"] = v.skip_reason;
  d["case"] = v.case_label;
  d["lhs"] = v.lhs ? py::object(py::int_(v.lhs->value())) : py::object(py::none());
  d["rhs"] = v.rhs ? py::object(py::int_(v.rhs->value())) : py::object(py::none());
  d["modulus"] = v.modulus;
  d["pass"] = v.pass;
  return d;
}

scv::Report sweep(const std::vector<std::string>& ids, std::uint64_t pmax, const std::vector<int>& powers,
                  unsigned threads, bool expect_fail) {
  scv::SweepConfig config;
  config.ids = ids;
  config.pmax = pmax;
  config.powers = powers;
  config.threads = threads;
  config.expect_fail = expect_fail;
  return scv::run_sweep(catalog(), config);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Supercongruence verification core";
  py::register_exception<scv::Error>(m, "ScvError", PyExc_ValueError);

  m.def("legendre", py::overload_cast<std::int64_t, std::uint64_t>(&scv::legendre), py::arg("a"), py::arg("p"));
  m.def("hensel_sqrt", [](std::int64_t a, std::uint64_t p, int k) { return scv::hensel_sqrt(a, p, k).value(); },
        py::arg("a"), py::arg("p"), py::arg("m"));
  m.def(
      "trunc_F",
      [](const std::string& alpha, const std::vector<std::string>& b, const std::string& lambda, std::uint64_t p, int k,
         int N) {
        const scv::PrimeModulus mod(p, k);
        const scv::Rational a = scv::parse_rational(alpha);
        const scv::HGSpec spec{scv::QuadSurd(a), rationals(b)};
        return scv::trunc_F(spec, scv::reduce(a, mod), scv::reduce(scv::parse_rational(lambda), mod), N).value();
      },
      py::arg("alpha"), py::arg("b"), py::arg("lam"), py::arg("p"), py::arg("m"), py::arg("N"));
  m.def(
      "exact_trunc_F",
      [](const std::string& alpha, const std::vector<std::string>& b, const std::string& lambda, int N) {
        const scv::HGSpec spec{scv::parse_surd(alpha), rationals(b)};
        return scv::exact_trunc_F(spec, scv::parse_surd(lambda), N).to_string();
      },
      py::arg("alpha"), py::arg("b"), py::arg("lam"), py::arg("N"));
  m.def(
      "trace_of_frobenius",
      [](int d, std::uint64_t p, std::int64_t t) {
        const scv::FiniteField field = scv::FiniteField::prime(p);
        return scv::trace_of_frobenius(scv::build_curve(scv::family_from_degree(d), field, field.from_int(t)));
      },
      py::arg("d"), py::arg("p"), py::arg("t"));
  m.def("unit_root", [](std::int64_t a, std::uint64_t q, std::uint64_t p, int k) {
    return scv::unit_root(a, q, scv::PrimeModulus(p, k)).value();
  });

  m.def("example_ids", [] {
    std::vector<std::string> out;
    for (const scv::ExampleRecord& ex : catalog().examples) out.push_back(ex.id);
    return out;
  });
  m.def("admissible_primes", [](const std::string& id, std::uint64_t pmax) {
    return scv::admissible_primes(catalog().example(id), pmax);
  });
  m.def("check_example", [](const std::string& id, std::uint64_t p, int k) {
    py::list out;
    for (const scv::Verdict& v : scv::check_example(catalog().example(id), p, k)) out.append(verdict_dict(v));
    return out;
  });
  m.def(
      "run_sweep",
      [](const std::vector<std::string>& ids, std::uint64_t pmax, const std::vector<int>& powers, unsigned threads,
         bool expect_fail) {
        const scv::Report r = sweep(ids, pmax, powers, threads, expect_fail);
        py::dict d;
        d["ok"] = r.ok();
        d["passed"] = r.passed;
        d["failed"] = r.failed;
        d["skipped"] = r.skipped;
        py::list claims;
        for (const scv::ClaimSummary& c : r.claims) {
          py::dict cd;
          cd["id"] = c.id;
          cd["m"] = c.m;
          cd["expectation"] = scv::to_string(c.expectation);
          cd["checked"] = c.checked;
          cd["failed"] = c.failed;
          cd["satisfied"] = c.satisfied;
          claims.append(cd);
        }
        d["claims"] = claims;
        d["asymmetries"] = r.asymmetries.size();
        d["deuring_mismatches"] = r.deuring_mismatches.size();
        return d;
      },
      py::arg("ids"), py::arg("pmax"), py::arg("powers") = std::vector<int>{2}, py::arg("threads") = 1,
      py::arg("expect_fail") = false);
  m.def(
      "sweep_report",
      [](const std::vector<std::string>& ids, std::uint64_t pmax, const std::vector<int>& powers, unsigned threads,
         const std::string& format) {
        std::ostringstream os;
        scv::write_sweep(os, sweep(ids, pmax, powers, threads, false), scv::parse_format(format));
        return os.str();
      },
      py::arg("ids"), py::arg("pmax"), py::arg("powers") = std::vector<int>{2}, py::arg("threads") = 1,
      py::arg("format") = "json");

  m.def("ap_form", [](int d, const std::string& lambda, std::uint64_t p) {
    return scv::ap_form(scv::family_from_degree(d), scv::parse_rational(lambda), p);
  });
  m.def("ap_form_direct", [](int d, const std::string& lambda, std::uint64_t p) {
    return scv::ap_form_direct(scv::family_from_degree(d), scv::parse_rational(lambda), p);
  });
  m.def("eta_ap_oracle", &scv::eta_ap_oracle, py::arg("p"));
  m.def(
      "analytic_suite",
      [](long bits) {
        py::list out;
        for (const scv::AnalyticCheck& c : scv::run_analytic_suite(catalog(), static_cast<mpfr_prec_t>(bits))) {
          py::dict d;
          d["id"] = c.id;
          d["kind"] = c.kind;
          d["residual"] = c.residual.to_string(6);
          d["pass"] = c.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("bits") = 256);
}
