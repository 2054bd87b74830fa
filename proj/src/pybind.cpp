/// \file pybind.cpp
/// Python extension module exposing the main operations: the check
/// registry and runner, element normal forms, named central elements, and
/// exact matrix export.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "uqfm/checks.hpp"
#include "uqfm/parse.hpp"
#include "uqfm/serialize.hpp"

namespace py = pybind11;

namespace {

constexpr const char* kVersion = "1.0.0";

uqfm::Rat parse_q_half(const std::string& text) {
  uqfm::Rat p;
  try {
    p = uqfm::Rat(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("q_half expects a rational like '5/7', got '" +
                                text + "'");
  }
  if (p == 0 || p == 1 || p == -1)
    throw std::invalid_argument(
        "q_half must avoid the degenerate points 0 and +-1");
  return p;
}

py::list list_checks_py() {
  py::list out;
  for (const auto& def : uqfm::all_checks()) {
    py::dict d;
    d["check_id"] = def.id;
    d["paper_anchor"] = def.anchor;
    d["suite"] = def.suite;
    d["description"] = def.description;
    out.append(std::move(d));
  }
  return out;
}

py::list run_checks_py(const std::vector<std::string>& suites,
                       const std::vector<int>& spins,
                       const std::string& q_half, bool fail_fast) {
  for (const auto& s : suites) {
    const auto& names = uqfm::suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw std::invalid_argument("unknown suite '" + s + "'");
  }
  for (int two_s : spins)
    if (two_s < 0)
      throw std::invalid_argument("spins must be non-negative 2s values");
  uqfm::CheckOptions opt;
  opt.spins = spins;
  opt.q_half = parse_q_half(q_half);
  const auto records = uqfm::run_checks(suites, opt, fail_fast, {});
  py::list out;
  for (const auto& r : records) {
    py::dict d;
    d["check_id"] = r.check_id;
    d["paper_anchor"] = r.paper_anchor;
    d["status"] = r.status;
    d["residual_summary"] = r.residual_summary;
    d["millis"] = r.millis;
    out.append(std::move(d));
  }
  return out;
}

std::string central_element_py(const std::string& name) {
  using C = uqfm::RatQ;
  if (name == "Omega1c") return uqfm::render(uqfm::omega1_gl2<C>());
  if (name == "Omega2c") return uqfm::render(uqfm::omega2_gl2<C>());
  if (name == "OmegaC") return uqfm::render(uqfm::omega_sl2<C>());
  if (name == "OmegaE") return uqfm::render(uqfm::phi(uqfm::omega_eq<C>()));
  if (name == "Gamma0") return uqfm::render(uqfm::gamma0_a<C>());
  if (name == "Gamma1") return uqfm::render(uqfm::gamma1_a<C>());
  throw uqfm::UnknownName(
      "unknown central element '" + name +
      "'; known: Omega1c Omega2c OmegaC OmegaE Gamma0 Gamma1");
}

std::string export_matrix_json_py(const std::string& name, int two_s) {
  return uqfm::matrix_to_json(name, two_s, uqfm::export_object(name, two_s))
             .dump(2) +
         "\n";
}

}  // namespace

PYBIND11_MODULE(_uqfm, m) {
  m.doc() =
      "Exact verification kernel for braided exchange algebras: check "
      "registry, element normal forms, and exact matrix export.";
  m.attr("__version__") = kVersion;

  py::register_exception<uqfm::IllegalLetter>(m, "IllegalLetter",
                                              PyExc_ValueError);
  py::register_exception<uqfm::UnknownName>(m, "UnknownName", PyExc_KeyError);

  m.def("suite_names",
        [] { return uqfm::suite_names(); },
        "Names of the check suites (including 'all').");

  m.def("list_checks", &list_checks_py,
        "The complete check inventory as dicts with check_id, paper_anchor, "
        "suite and description.");

  m.def("run_checks", &run_checks_py, py::arg("suites") = std::vector<std::string>{"all"},
        py::arg("spins") = std::vector<int>{0, 1, 2},
        py::arg("q_half") = "5/7", py::arg("fail_fast") = false,
        "Run the selected suites; returns one dict per check with check_id, "
        "paper_anchor, status (PASS|FAIL|WARN), residual_summary and "
        "millis.  spins lists the module sizes 2s for module-level checks; "
        "q_half is the exact rational numeric cross-check point p.");

  m.def("nf", &uqfm::nf_text, py::arg("algebra"), py::arg("word"),
        "Normalize a '*'-separated element literal (e.g. 'F^2*K^-1*E') in "
        "the chosen presentation: gl2|sl2|sl2h|word|eq.  The empty word "
        "is 1.");

  m.def("central_element", &central_element_py, py::arg("name"),
        "Rendered normal form of a named central element: Omega1c, "
        "Omega2c, OmegaC, OmegaE, Gamma0 or Gamma1.");

  m.def("export_object_names",
        [] { return uqfm::export_object_names(); },
        "Names accepted by export_matrix_json.");

  m.def("export_matrix_json", &export_matrix_json_py, py::arg("name"),
        py::arg("two_s") = 1,
        "Exact JSON document for a named matrix, evaluated in the module "
        "of size two_s+1 where the object is module-dependent.");
}
