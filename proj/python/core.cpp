#include "bpoly/bcore.hpp"
#include "bpoly/error.hpp"
#include "bpoly/format.hpp"
#include "bpoly/identities.hpp"
#include "bpoly/qsym.hpp"
#include "bpoly/survey.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bpoly;

namespace {

Digraph digraph_from(const std::string& text) {
    Input in = parse_input(text);
    if (auto* d = std::get_if<Digraph>(&in)) return *d;
    if (auto* m = std::get_if<MixedGraph>(&in)) return m->digraph();
    return std::get<Graph>(in).oriented();
}

Graph graph_from(const std::string& text) {
    Input in = parse_input(text);
    if (auto* g = std::get_if<Graph>(&in)) return *g;
    return digraph_from(text).underlying();
}

CheckInput check_input(const std::string& text, const std::string& rotation) {
    Input in = parse_input(text);
    if (!rotation.empty()) {
        Digraph d = digraph_from(text);
        RotationSystem r = rotation_from_json(nlohmann::json::parse(rotation));
        r.validate(d);
        return EmbeddedDigraph{d, r};
    }
    return std::visit([](const auto& x) -> CheckInput { return x; }, in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ArithmeticError>(m, "ArithmeticError", PyExc_ArithmeticError);

    m.def("b_poly", [](const std::string& t) { return to_json(b_poly(digraph_from(t))).dump(); });
    m.def("b_eval_direct", [](const std::string& t, long q) { return to_json(b_eval_direct(digraph_from(t), q)).dump(); });
    m.def("qsym_b", [](const std::string& t) { return to_json(qsym_b(digraph_from(t))).dump(); });
    m.def("potts", [](const std::string& t) { return to_json(potts(graph_from(t))).dump(); });
    m.def("tutte", [](const std::string& t) { return to_json(tutte(graph_from(t))).dump(); });
    m.def("t_mixed", [](const std::string& t, int which) {
        return to_json(t_mixed(parse_mixed(t), which)).dump();
    });
    m.def("b_w", [](const std::string& t, const std::string& w) {
        return to_json(b_w(digraph_from(t), SignWord::parse(w))).dump();
    });
    m.def("pretty", [](const std::string& poly_json) { return to_pretty(poly_from_json(nlohmann::json::parse(poly_json))); });
    m.def("structure", [](const std::string& t) {
        StructureReport s = structure(digraph_from(t));
        nlohmann::json out{{"components", s.components},
                           {"scc_count", s.scc_count},
                           {"is_acyclic", s.is_acyclic},
                           {"is_totally_cyclic", s.is_totally_cyclic}};
        out["longest_path_arcs"] = s.longest_path_arcs ? nlohmann::json(*s.longest_path_arcs) : nlohmann::json("infinite");
        return out.dump();
    });
    m.def("check_ids", [] {
        std::vector<std::string> out;
        for (const auto& c : check_registry()) out.push_back(c.id);
        return out;
    });
    m.def(
        "check",
        [](const std::string& id, const std::string& t, const std::string& rotation) {
            CheckInput in = check_input(t, rotation);
            nlohmann::json out = nlohmann::json::array();
            auto params = applicable_params(id, in);
            if (params.empty()) out.push_back(to_json(run_check(id, in)));
            for (const auto& p : params) out.push_back(to_json(run_check(id, in, p)));
            return out.dump();
        },
        py::arg("id"), py::arg("text"), py::arg("rotation") = "");
    m.def(
        "survey",
        [](int n, int arcs, std::vector<std::string> checks, int jobs) {
            SurveyOptions o;
            o.max_vertices = n;
            o.max_arcs = arcs;
            o.max_graph_edges = std::min(o.max_graph_edges, arcs);
            o.max_tree_vertices = n;
            o.checks = std::move(checks);
            o.jobs = jobs;
            py::gil_scoped_release release;
            return to_json(run_survey(o)).dump();
        },
        py::arg("n"), py::arg("m"), py::arg("checks") = std::vector<std::string>{}, py::arg("jobs") = 1);
}
