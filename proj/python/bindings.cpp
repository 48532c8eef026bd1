#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zroupoid/algebra.hpp"
#include "zroupoid/catalog.hpp"
#include "zroupoid/chain.hpp"
#include "zroupoid/display.hpp"
#include "zroupoid/enumerate.hpp"
#include "zroupoid/error.hpp"
#include "zroupoid/json_io.hpp"
#include "zroupoid/order.hpp"
#include "zroupoid/parser.hpp"

namespace py = pybind11;
using namespace zroupoid;

namespace {

// Structured results cross the boundary as the same documents the CLI emits.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return parse_json(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::object witness_py(const std::optional<Assignment>& w) {
  if (!w) return py::none();
  py::dict d;
  for (const auto& [name, value] : *w) d[py::str(name)] = value;
  return d;
}

std::vector<FiniteZroupoid> universe_from(const py::object& spec, unsigned workers) {
  if (py::isinstance<py::str>(spec)) return build_universe(spec.cast<std::string>(), workers);
  return spec.cast<std::vector<FiniteZroupoid>>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite implication zroupoids: identity checking, chains and enumeration.";

  static py::exception<Error> base(m, "ZroupoidError", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "TermSyntaxError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<SizeLimit>(m, "SizeLimit", base.ptr());
  py::register_exception<NotAChain>(m, "NotAChain", base.ptr());
  py::register_exception<EquivalenceViolation>(m, "EquivalenceViolation", base.ptr());

  py::class_<FiniteZroupoid>(m, "Algebra")
      .def(py::init([](std::vector<std::vector<Element>> table, Element zero, std::vector<std::string> labels) {
             const auto n = table.size();
             return FiniteZroupoid(n, zero, std::move(table), std::move(labels));
           }),
           py::arg("table"), py::arg("zero"), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("size", &FiniteZroupoid::size)
      .def_property_readonly("zero", &FiniteZroupoid::zero)
      .def_property_readonly("table", &FiniteZroupoid::rows)
      .def_property_readonly("labels", &FiniteZroupoid::labels)
      .def("op", &FiniteZroupoid::op, py::arg("x"), py::arg("y"))
      .def("prime", &FiniteZroupoid::prime, py::arg("x"))
      .def("label", &FiniteZroupoid::label, py::arg("x"))
      .def("memberships",
           [](const FiniteZroupoid& a) {
             const auto v = variety_memberships(a);
             py::dict d;
             d["I"] = v.i;
             d["I20"] = v.i20;
             d["DM"] = v.dm;
             d["KL"] = v.kl;
             d["BA"] = v.ba;
             d["SL"] = v.sl;
             d["KL1"] = v.kl1;
             d["KL2"] = v.kl2;
             return d;
           })
      .def("to_dict", [](const FiniteZroupoid& a) { return to_py(to_json(a)); })
      .def_static("from_dict", [](const py::object& o) { return algebra_from_json(from_py(o)); }, py::arg("document"))
      .def("format_table", [](const FiniteZroupoid& a) { return format_table(a); })
      .def(py::self == py::self)
      .def("__hash__",
           [](const FiniteZroupoid& a) {
             std::size_t h = a.size() * 31 + a.zero();
             for (Element e : a.flat()) h = h * 1000003u ^ e;
             return h;
           })
      .def("__repr__", [](const FiniteZroupoid& a) {
        return "<Algebra size=" + std::to_string(a.size()) + " zero=" + std::to_string(a.zero()) + ">";
      });

  m.def("build_chain", py::overload_cast<unsigned, unsigned>(&build_chain), py::arg("neg"), py::arg("pos"),
        "The chain on [-neg, pos]; element v sits at index v + neg.");
  m.def("constant_zero_algebra", &constant_zero_algebra);

  m.def(
      "check",
      [](const FiniteZroupoid& a, const std::string& statement) {
        const auto s = parse_statement(statement);
        const auto r = check_statement(a, s);
        return py::make_tuple(r.holds, witness_py(r.witness));
      },
      py::arg("algebra"), py::arg("statement"),
      "Returns (holds, witness); the witness maps variables to element indices.");
  m.def(
      "normalize", [](const std::string& statement) { return print_statement(parse_statement(statement)); },
      py::arg("statement"), "Parses a statement and prints it back in canonical form.");

  m.def("meet", &meet, py::arg("algebra"), py::arg("x"), py::arg("y"));
  m.def("join", &join, py::arg("algebra"), py::arg("x"), py::arg("y"));
  m.def("leq", &leq, py::arg("algebra"), py::arg("x"), py::arg("y"));
  m.def(
      "order_report", [](const FiniteZroupoid& a) { return to_py(to_json(order_report(a), a)); }, py::arg("algebra"));

  m.def(
      "isomorphism",
      [](const FiniteZroupoid& a, const FiniteZroupoid& b) -> py::object {
        const auto r = are_isomorphic(a, b);
        if (!r.map) return py::none();
        return py::cast(*r.map);
      },
      py::arg("a"), py::arg("b"), "An isomorphism as a list (x maps to result[x]), or None.");
  m.def("canonical_form", &canonical_form, py::arg("algebra"));
  m.def(
      "classify_chain",
      [](const FiniteZroupoid& a) {
        const auto s = classify_chain(a);
        return py::make_tuple(s.neg, s.pos);
      },
      py::arg("algebra"), "Returns (neg, pos) such that the algebra is isomorphic to build_chain(neg, pos).");

  m.def(
      "enumerate",
      [](std::size_t size, const std::string& mode, unsigned workers, std::uint64_t budget) {
        SearchConfig config;
        config.size = size;
        if (mode == "chains") {
          config.mode = SearchMode::chains_only;
        } else if (mode == "all-i20") {
          config.mode = SearchMode::all_i20;
        } else {
          throw ValidationError("mode must be \"chains\" or \"all-i20\"");
        }
        config.worker_count = workers;
        config.node_budget = budget;
        EnumerationResult r;
        {
          py::gil_scoped_release release;
          r = enumerate(config);
        }
        return py::make_tuple(r.algebras, r.complete);
      },
      py::arg("size"), py::arg("mode") = "chains", py::arg("workers") = 1, py::arg("budget") = 0,
      "Returns (canonical forms, complete).");

  m.def("catalog", [] {
    py::list out;
    for (const auto& c : builtin_catalog()) {
      py::dict d;
      d["id"] = c.id;
      d["scope"] = std::string(scope_name(c.scope));
      d["statement"] = c.text;
      d["source"] = c.source;
      out.append(d);
    }
    return out;
  });
  m.def(
      "run_lemmas",
      [](const py::object& universe, std::optional<std::vector<std::string>> only, unsigned workers) {
        const auto algebras = universe_from(universe, workers);
        const auto checks = only ? select_checks(builtin_catalog(), *only) : builtin_catalog();
        SuiteReport report;
        {
          py::gil_scoped_release release;
          report = run_catalog(algebras, checks, workers);
        }
        return to_py(to_json(report, checks));
      },
      py::arg("universe"), py::arg("only") = py::none(), py::arg("workers") = 1,
      "Runs catalogued checks over a universe spec such as \"chains:8\" or a list of algebras.");
}
