/* Copyright (C) 2026 The stickel Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

// Python bindings. Structured results cross the boundary as JSON text and
// are decoded on the Python side.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stickel/characters.hpp"
#include "stickel/error.hpp"
#include "stickel/gaussjacobi.hpp"
#include "stickel/ledger.hpp"
#include "stickel/localmodel.hpp"
#include "stickel/padic.hpp"
#include "stickel/stickelberger.hpp"
#include "stickel/suite.hpp"

namespace py = pybind11;
using namespace stickel;

namespace {

Rational parse_rational(const std::string &s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

// Pairings of every irreducible against s.
std::vector<std::string> pairings(const std::string &group,
                                  const std::string &s, bool star) {
  const TablePtr T = irr_table(preset_group(group));
  const Elem e = T->group().parse_element(s);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < T->size(); ++i) {
    const VirtualChar chi = VirtualChar::irreducible(T, i);
    out.push_back(to_fraction_string(star ? star_pairing(chi, e)
                                          : pairing(chi, e)));
  }
  return out;
}

std::string chartab_json(const std::string &group) {
  const TablePtr T = irr_table(preset_group(group));
  return nlohmann::json{{"table", T->to_json()},
                        {"certification", verify_character_table(T).to_json()}}
      .dump();
}

std::string factorization_json(const std::string &group, const std::string &s) {
  const TablePtr T = irr_table(preset_group(group));
  const Elem e = T->group().parse_element(s);
  const auto [t, q] = default_cocycle(T->group(), e);
  return verify_factorization(T, e, t, q).to_json().dump();
}

std::string suite_json(const std::string &config_json, const std::string &out) {
  const SuiteConfig cfg = config_json.empty()
                              ? SuiteConfig{}
                              : SuiteConfig::from_json(
                                    nlohmann::json::parse(config_json));
  cfg.validate();
  const SuiteResult r = run_suite(cfg, out);
  return nlohmann::json{{"pass", r.pass},
                        {"first_failure", r.first_failure},
                        {"files", r.files}}
      .dump();
}

} // namespace

PYBIND11_MODULE(_stickel, m) {
  m.doc() = "exact cyclotomic, character and Gauss-sum checks";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<GroupError>(m, "GroupError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const DivisionByZero &e) {
      PyErr_SetString(PyExc_ZeroDivisionError, e.what());
    }
  });

  py::class_<CycNum>(m, "CycNum")
      .def(py::init<long>(), py::arg("value") = 0)
      .def(py::init([](const std::string &q) { return CycNum(parse_rational(q)); }),
           py::arg("fraction"))
      .def_static("zeta", &CycNum::zeta, py::arg("n"), py::arg("power") = 1)
      .def_static("from_json",
                  [](const std::string &s) {
                    return CycNum::from_json(nlohmann::json::parse(s));
                  })
      .def_property_readonly("conductor", &CycNum::conductor)
      .def("is_zero", &CycNum::is_zero)
      .def("galois_apply", &CycNum::galois_apply, py::arg("k"))
      .def("conj", &CycNum::conj)
      .def("inverse", &CycNum::inverse)
      .def("embed", &CycNum::embed, py::arg("m"))
      .def("norm", [](const CycNum &a) { return to_fraction_string(a.norm()); })
      .def("as_rational",
           [](const CycNum &a) -> std::optional<std::string> {
             if (auto r = a.as_rational())
               return to_fraction_string(*r);
             return std::nullopt;
           })
      .def("to_complex", &CycNum::to_complex)
      .def("to_json", [](const CycNum &a) { return a.to_json().dump(); })
      .def("__pow__", &CycNum::pow)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &CycNum::to_string)
      .def("__repr__",
           [](const CycNum &a) { return "CycNum(" + a.to_string() + ")"; });

  m.def("preset_names", &preset_names);
  m.def("group_order",
        [](const std::string &g) { return preset_group(g)->order(); });
  m.def("chartab_json", &chartab_json, py::arg("group"));
  m.def("pairings", &pairings, py::arg("group"), py::arg("s"),
        py::arg("star") = false);
  m.def(
      "lambda_valuation",
      [](const CycNum &a, long p, long precision) {
        return cyclotomic_valuation(a, p, precision).to_json().dump();
      },
      py::arg("a"), py::arg("p"), py::arg("precision") = 0);
  m.def(
      "gauss_sum",
      [](long p, long d, long a) { return gauss_sum(MultChar::make(p, d, a)); },
      py::arg("p"), py::arg("order"), py::arg("a"));
  m.def(
      "jacobi_sum",
      [](long p, long d1, long a1, long d2, long a2) {
        return jacobi_sum(MultChar::make(p, d1, a1), MultChar::make(p, d2, a2));
      },
      py::arg("p"), py::arg("order1"), py::arg("a1"), py::arg("order2"),
      py::arg("a2"));
  m.def(
      "j_star",
      [](long p, long d, long a) { return j_star(MultChar::make(p, d, a)); },
      py::arg("p"), py::arg("order"), py::arg("a"));
  m.def(
      "gauss_report_json",
      [](long p) { return verify_gauss_identities(p).to_json().dump(); },
      py::arg("p"));
  m.def(
      "free_generator_json",
      [](long e, long n, long p) {
        return verify_free_generator(e, n, p > 0 ? p : instance_prime(e))
            .to_json()
            .dump();
      },
      py::arg("e"), py::arg("n"), py::arg("p") = 0);
  m.def("factorization_json", &factorization_json, py::arg("group"),
        py::arg("s"));
  m.def(
      "crux_json",
      [](long p, long e, long precision) {
        return crux_check(p, e, precision).to_json().dump();
      },
      py::arg("p"), py::arg("e"), py::arg("precision") = 0);
  m.def(
      "ledger_demo_json",
      [](const std::string &spec) {
        return ledger_demo(nlohmann::json::parse(spec)).to_json().dump();
      },
      py::arg("spec"));
  m.def("run_suite_json", &suite_json, py::arg("config_json"), py::arg("out"));
}
