// pybind11 module _core: the main solver operations behind a JSON-string
// bridge. The fairdiv python package wraps these with dict-level helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fairdiv/commands.hpp"
#include "fairdiv/ef_solver.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/oracle.hpp"

namespace py = pybind11;
using namespace fairdiv;

namespace {

ParsedProfile load(const std::string& profile_json) { return parse_profile(profile_json); }

py::dict outcome_to_py(const commands::Outcome& outcome) {
    py::dict d;
    d["status"] = outcome.status;
    d["body"] = outcome.body.dump();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fair assignment of indivisible objects under ordinal preferences";

    py::register_exception<Error>(m, "FairdivError");

    m.def("check", [](const std::string& profile, const std::string& assignment,
                      const std::string& notion, const std::string& param) {
        return outcome_to_py(commands::check(load(profile), assignment, notion, param));
    },
          py::arg("profile"), py::arg("assignment"), py::arg("notion"), py::arg("param") = "");

    m.def("solve", [](const std::string& profile, const std::string& notion,
                      const std::string& param, long budget) {
        return outcome_to_py(commands::solve(load(profile), notion, param, budget));
    },
          py::arg("profile"), py::arg("notion"), py::arg("param") = "",
          py::arg("budget") = kDefaultSearchBudget);

    m.def("optimal_proportional", [](const std::string& profile) {
        return outcome_to_py(commands::optimal_prop(load(profile)));
    },
          py::arg("profile"));

    m.def("optimal_weak_proportional", [](const std::string& profile) {
        return outcome_to_py(commands::optimal_weak_prop(load(profile)));
    },
          py::arg("profile"));

    m.def("pareto_check", [](const std::string& profile, const std::string& assignment) {
        return outcome_to_py(commands::pareto_check(load(profile), assignment));
    },
          py::arg("profile"), py::arg("assignment"));

    m.def("pareto_improve", [](const std::string& profile, const std::string& assignment) {
        return outcome_to_py(commands::pareto_improve_cmd(load(profile), assignment));
    },
          py::arg("profile"), py::arg("assignment"));

    m.def("maximal", [](const std::string& profile, const std::string& notion,
                        const std::string& param, long budget) {
        return outcome_to_py(commands::maximal(load(profile), notion, param, budget));
    },
          py::arg("profile"), py::arg("notion"), py::arg("param") = "",
          py::arg("budget") = kDefaultSearchBudget);

    m.def("maximum", [](const std::string& profile, const std::string& notion,
                        const std::string& param, long budget) {
        return outcome_to_py(commands::maximum(load(profile), notion, param, budget));
    },
          py::arg("profile"), py::arg("notion"), py::arg("param") = "",
          py::arg("budget") = kDefaultSearchBudget);

    m.def("maximin", [](const std::string& profile) {
        return outcome_to_py(commands::maximin(load(profile)));
    },
          py::arg("profile"));

    m.def("oracle", [](const std::string& profile, const std::string& notion,
                       const std::string& param, const std::string& optimal, long budget) {
        return outcome_to_py(commands::oracle(load(profile), notion, param, optimal, budget));
    },
          py::arg("profile"), py::arg("notion") = "", py::arg("param") = "",
          py::arg("optimal") = "", py::arg("budget") = kDefaultOracleBudget);

    m.def("gen_profile", [](std::uint64_t seed, int agents, int objects, bool strict,
                            const std::string& tie_prob, bool entitled) {
        return outcome_to_py(commands::gen(seed, agents, objects, strict, tie_prob, entitled));
    },
          py::arg("seed"), py::arg("agents"), py::arg("objects"), py::arg("strict") = false,
          py::arg("tie_prob") = "1/2", py::arg("entitled") = false);

    m.attr("__version__") = "0.1.0";
}
