#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "projcad/cad.hpp"
#include "projcad/examples.hpp"
#include "projcad/parse.hpp"
#include "projcad/render.hpp"
#include "projcad/subresultants.hpp"

namespace py = pybind11;
using namespace projcad;

namespace {

CAD compute_cad(const std::string& text, const std::string& method, bool final_oi, bool strict) {
    Problem p = parse_input(text);
    return cad_full(p.polys, p.order, {method_from_string(method), final_oi, strict});
}

int level_in(const VarOrder& order, const std::string& var) {
    auto level = order.level_of(var);
    if (!level) {
        throw DomainError("unknown variable '" + var + "'");
    }
    return *level;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cylindrical algebraic decomposition with McCallum and Collins projection.";

    // Translators run most recent first, so the base class goes in first.
    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NotWellOriented>(m, "NotWellOriented", base.ptr());

    m.def(
        "compute",
        [](const std::string& text, const std::string& method, bool final_oi, bool strict, const std::string& output) {
            CAD cad = compute_cad(text, method, final_oi, strict);
            return render(cad, format_from_string(output));
        },
        py::arg("text"), py::arg("method") = "mccallum", py::arg("final_oi") = false, py::arg("strict") = false,
        py::arg("output") = "json", "Decomposes the problem given in input-file syntax and renders it.");

    m.def(
        "cell_count",
        [](const std::string& text, const std::string& method, bool final_oi) {
            return compute_cad(text, method, final_oi, false).cells.size();
        },
        py::arg("text"), py::arg("method") = "mccallum", py::arg("final_oi") = false);

    m.def(
        "warnings",
        [](const std::string& text, const std::string& method, bool final_oi) {
            CAD cad = compute_cad(text, method, final_oi, false);
            std::vector<std::pair<std::vector<int>, std::string>> out;
            for (const auto& w : cad.warnings) {
                out.emplace_back(w.cell, w.poly.to_string(cad.order));
            }
            return out;
        },
        py::arg("text"), py::arg("method") = "mccallum", py::arg("final_oi") = true,
        "Nullification warnings as (cell index, polynomial) pairs.");

    m.def(
        "resultant",
        [](const std::string& f, const std::string& g, const std::string& var, const std::vector<std::string>& vars) {
            VarOrder order(vars);
            return resultant(parse_poly(f, order), parse_poly(g, order), level_in(order, var)).to_string(order);
        },
        py::arg("f"), py::arg("g"), py::arg("var"), py::arg("variables"));

    m.def(
        "discriminant",
        [](const std::string& f, const std::string& var, const std::vector<std::string>& vars) {
            VarOrder order(vars);
            return discriminant(parse_poly(f, order), level_in(order, var)).to_string(order);
        },
        py::arg("f"), py::arg("var"), py::arg("variables"));

    m.def("run_examples", [] {
        py::list out;
        for (const auto& ex : builtin_examples()) {
            ExampleResult r = run_example(ex);
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.pass;
            d["cells"] = r.cells;
            d["seconds"] = r.seconds;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    });
}
