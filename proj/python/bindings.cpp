#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hookkron/error.hpp"
#include "hookkron/io.hpp"
#include "hookkron/lascoux.hpp"
#include "hookkron/symfunc.hpp"
#include "hookkron/verify.hpp"

namespace py = pybind11;
using namespace hookkron;

namespace {

using Rows = std::vector<std::vector<std::string>>;

Partition part(const std::vector<int>& p) { return Partition(p); }

SkewShape skew(const std::vector<int>& outer, const std::vector<int>& inner) {
  return SkewShape(Partition(outer), Partition(inner));
}

// Skew tableaux keep their inner cells as "." so rows line up with the shape.
Rows rows_of(const ColoredTableau& t) {
  Rows out;
  for (int r = 0; r < t.num_rows(); ++r) {
    std::vector<std::string> row(t.offset(r), ".");
    for (auto& a : t.rows()[r]) row.push_back(a.str());
    out.push_back(row);
  }
  return out;
}

std::vector<std::vector<int>> rows_of(const OrdinaryTableau& t) { return t.rows(); }

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["check"] = r.name;
  d["cases"] = r.cases;
  d["failures"] = r.failures;
  d["oracle"] = r.against_oracle;
  d["counterexamples"] = r.counterexamples;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hookkron, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);

  m.def(
      "kronecker_hook",
      [](const std::vector<int>& lam, int d, const std::vector<int>& nu, const std::vector<int>& nu_inner) {
        return kronecker_hook(part(lam), d, skew(nu, nu_inner));
      },
      py::arg("lam"), py::arg("d"), py::arg("nu"), py::arg("nu_inner") = std::vector<int>{});
  m.def(
      "kronecker_oracle",
      [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
        return kronecker_oracle(part(lam), part(mu), part(nu));
      },
      py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def(
      "enumerate_cyt",
      [](const std::vector<int>& lam, int d, const std::vector<int>& nu, const std::vector<int>& nu_inner) {
        std::vector<std::pair<Rows, bool>> out;
        for (auto& c : enumerate_cyt(part(lam), d, skew(nu, nu_inner)).members)
          out.emplace_back(rows_of(c.tableau), c.raisable);
        return out;
      },
      py::arg("lam"), py::arg("d"), py::arg("nu"), py::arg("nu_inner") = std::vector<int>{});

  m.def(
      "mixed_insert",
      [](const std::string& w, const std::string& order) {
        auto r = mixed_insert(parse_word(w), OrderSpec::parse(order));
        return py::make_tuple(rows_of(r.p), rows_of(r.q));
      },
      py::arg("word"), py::arg("order") = "natural");
  m.def(
      "schensted",
      [](const std::vector<int>& w) {
        auto r = schensted(OrdinaryWord(w.begin(), w.end()));
        return py::make_tuple(rows_of(r.p), rows_of(r.q));
      },
      py::arg("word"));
  m.def(
      "dual_mixed_insert",
      [](const std::string& into, const std::string& w, const std::string& order) {
        return rows_of(dual_mixed_insert(parse_colored_tableau(into), parse_word(w), OrderSpec::parse(order)));
      },
      py::arg("into"), py::arg("word"), py::arg("order") = "natural");
  m.def("blft", [](const std::string& w) { return blft(parse_word(w)); }, py::arg("word"));
  m.def("brgt", [](const std::string& w) { return brgt(parse_word(w)); }, py::arg("word"));
  m.def("neg", [](const std::string& w) { return neg(parse_word(w)); }, py::arg("word"));
  m.def(
      "symmetry", [](const std::string& w, const std::string& op) {
        return format_word(apply_symmetry(parse_word(w), parse_symmetry(op)));
      },
      py::arg("word"), py::arg("op"));
  m.def("pi_minus", [](const std::string& w) { return format_word(pi_minus(parse_word(w))); }, py::arg("word"));
  m.def("pi_plus", [](const std::string& w) { return format_word(pi_plus(parse_word(w))); }, py::arg("word"));
  m.def(
      "convert",
      [](const std::string& t, const std::string& from, const std::string& to) {
        return rows_of(convert(parse_colored_tableau(t), OrderSpec::parse(from), OrderSpec::parse(to)));
      },
      py::arg("tableau"), py::arg("frm") = "smallbar", py::arg("to") = "natural");

  m.def(
      "alpha_table",
      [](int n, int jobs) {
        AlphaTable t;
        {
          py::gil_scoped_release release;
          t = alpha_table(n, jobs);
        }
        py::dict d;
        d["n"] = t.n;
        d["bins"] = std::vector<std::int64_t>(t.bins.begin(), t.bins.end());
        d["counted"] = t.counted;
        d["total_triples"] = t.total_triples;
        d["max_g"] = t.max_g;
        return d;
      },
      py::arg("n"), py::arg("jobs") = 1);
  m.def(
      "verify",
      [](const std::string& suite, int n, int samples, std::uint64_t seed) {
        VerifyOptions o;
        o.n = n;
        o.samples = samples;
        o.seed = seed;
        std::vector<CheckReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(suite, o);
        }
        py::list out;
        for (auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("suite") = "all", py::arg("n") = 4, py::arg("samples") = 1000, py::arg("seed") = 20240601);
}
