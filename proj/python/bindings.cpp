#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "algoglue/cli.hpp"
#include "algoglue/corpus.hpp"
#include "algoglue/io.hpp"
#include "algoglue/recfun.hpp"
#include "algoglue/succinct.hpp"

namespace py = pybind11;
using namespace algoglue;

namespace {

py::dict trace_dict(const ControlGraph& g, const Trace& t) {
  py::dict d;
  d["outcome"] = to_string(t.outcome);
  d["steps"] = t.steps();
  d["final"] = config_str(t.last().configuration);
  d["control"] = g.states[static_cast<std::size_t>(t.last().control)];
  return d;
}

}  // namespace

PYBIND11_MODULE(_algoglue, m) {
  m.doc() = "Programs, algorithms and glueings over models of computation";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::class_<Tape>(m, "Tape")
      .def(py::init(&parse_tape), py::arg("literal"))
      .def_property_readonly("window", &Tape::window)
      .def_property_readonly("origin", &Tape::origin)
      .def("at", &Tape::at)
      .def("shifted_left", &Tape::shifted_left)
      .def("shifted_right", &Tape::shifted_right)
      .def("__eq__", [](const Tape& a, const Tape& b) { return a == b; })
      .def("__str__", &Tape::str)
      .def("__repr__", [](const Tape& t) { return "Tape('" + t.str() + "')"; });

  m.def("tm_instructions", [] { return tm_model().instructions(); });
  m.def("tm_apply", [](const std::string& instruction, const Tape& t) -> std::optional<Tape> {
    auto r = tm_model().apply(instruction, t);
    if (!r) return std::nullopt;
    return std::get<Tape>(*r);
  });

  m.def(
      "run",
      [](const std::string& program, const std::string& input, std::size_t budget) {
        Workspace ws;
        auto p = ws.program(program);
        auto model = ws.model_for(p);
        Config x0 = p.model == "tm" ? Config(parse_tape(input)) : Config(parse_environment(input));
        return trace_dict(p.graph, run(model, p, x0, budget));
      },
      py::arg("program"), py::arg("input"), py::arg("budget") = 100000,
      "Run a program (file or built-in name) on a tape or environment literal.");

  m.def(
      "abstract_run",
      [](const std::string& algorithm, const std::string& input, std::size_t budget) {
        Workspace ws;
        auto a = ws.semantic(ws.algorithm(algorithm));
        return trace_dict(a.syntax.graph, abstract_run(a, parse_environment(input), budget));
      },
      py::arg("algorithm"), py::arg("input"), py::arg("budget") = 100000);

  m.def(
      "glue",
      [](const std::string& algorithm, const std::string& labelling) {
        Workspace ws;
        return write_program(glue(ws.algorithm(algorithm).syntax, ws.program_labelling(labelling)).program);
      },
      py::arg("algorithm"), py::arg("labelling"), "Glued program as JSON text.");

  m.def(
      "check_implements",
      [](const std::string& program_json, const std::string& algorithm, const std::string& labelling) {
        Workspace ws;
        return check_implements(read_program(program_json), ws.algorithm(algorithm).syntax,
                                ws.program_labelling(labelling))
            .implements;
      },
      py::arg("program_json"), py::arg("algorithm"), py::arg("labelling"));

  m.def("program_json", [](const std::string& ref) { return write_program(Workspace().program(ref)); });
  m.def("algorithm_json", [](const std::string& ref) { return write_algorithm(Workspace().algorithm(ref)); });
  m.def("isomorphic", [](const std::string& a_json, const std::string& b_json) {
    return graph_isomorphic(read_program(a_json).graph, read_program(b_json).graph).has_value();
  });
  m.def("size", [](const std::string& program_json) { return size(read_program(program_json)); });

  m.def(
      "eval_recfun",
      [](const std::string& term, std::vector<std::uint64_t> args, std::uint64_t budget) -> py::object {
        auto t = term == "add" ? addition_term() : term == "mult" ? multiplication_term() : parse_recfun(term);
        auto r = eval_recfun(t, args, budget);
        if (r.ok()) return py::int_(r.value);
        return py::none();
      },
      py::arg("term"), py::arg("args"), py::arg("budget") = 1000000,
      "Value of the term, or None when undefined or out of budget.");

  m.def(
      "census",
      [](std::size_t n, const std::string& f, std::vector<std::string> instructions, std::size_t budget) {
        return census(n, SizeFunction::parse(f), "tm", instructions, budget, chain_library("tm", instructions)).csv();
      },
      py::arg("n"), py::arg("f") = "n/2", py::arg("instructions") = std::vector<std::string>{"write_1", "right"},
      py::arg("budget") = 100000);

  m.def(
      "cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one command; returns (exit code, stdout, stderr).");
}
