#include "projcad/examples.hpp"

#include <algorithm>
#include <chrono>

#include "projcad/parse.hpp"

namespace projcad {

const std::vector<Example>& builtin_examples() {
    static const std::vector<Example> examples = [] {
        std::vector<Example> v;
        v.push_back({"circle", "vars: x, y\nx^2 + y^2 - 1\n", {}, 13, std::nullopt});
        v.push_back({"zy-x2", "vars: x, y, z\nz*y - x^2\n", {}, 21, std::nullopt});
        v.push_back({"zy-x2-oi", "vars: x, y, z\nz*y - x^2\n", {Method::McCallum, true, false}, 23, std::nullopt});
        v.push_back({"w-example", "vars: x, y, z, w\nz*y - x^2 + w^2\n", {}, 73, std::nullopt});
        // y*w + x is nullified over the line x = y = 0. It only reaches the
        // final lift, so the check needs order-invariance there.
        v.push_back({"warn-4var", "vars: x, y, z, w\ny*w + x\n", {Method::McCallum, true, false}, std::nullopt,
                     std::vector<int>{2, 2, 1}});
        return v;
    }();
    return examples;
}

const Example& find_example(const std::string& name) {
    for (const auto& e : builtin_examples()) {
        if (e.name == name) {
            return e;
        }
    }
    throw DomainError("unknown example '" + name + "'");
}

ExampleResult run_example(const Example& example) {
    ExampleResult r;
    r.name = example.name;
    const auto start = std::chrono::steady_clock::now();
    Problem problem = parse_input(example.source);
    CAD cad = cad_full(problem.polys, problem.order, example.options);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.cells = cad.cells.size();
    r.pass = true;
    if (example.expected_cells) {
        r.detail = "expected " + std::to_string(*example.expected_cells) + " cells";
        r.pass = cad.cells.size() == *example.expected_cells;
        if (!example.expected_warning && !cad.warnings.empty()) {
            r.pass = false;
            r.detail += ", unexpected warning";
        }
    }
    if (example.expected_warning) {
        const bool found = std::any_of(cad.warnings.begin(), cad.warnings.end(),
                                       [&](const auto& w) { return w.cell == *example.expected_warning; });
        r.detail = "expected warning at cell " + index_string(*example.expected_warning);
        r.pass = r.pass && found;
    }
    return r;
}

}  // namespace projcad
