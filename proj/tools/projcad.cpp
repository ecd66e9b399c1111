// projcad command-line driver.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "projcad/cad.hpp"
#include "projcad/examples.hpp"
#include "projcad/parse.hpp"
#include "projcad/render.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNotWellOriented = 2;

int compute(const std::string& path, const std::string& method, bool final_oi, bool strict,
            const std::string& output, int info) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "projcad: cannot read " << path << "\n";
        return kInputError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        projcad::Problem problem = projcad::parse_input(buf.str());
        projcad::CadOptions options;
        options.method = projcad::method_from_string(method);
        options.final_oi = final_oi;
        options.strict = strict;
        const projcad::OutputFormat format = projcad::format_from_string(output);
        projcad::Diagnostics diag{&std::cerr, info};
        projcad::CAD cad = projcad::cad_full(problem.polys, problem.order, options, diag);
        for (const auto& w : cad.warnings) {
            std::cerr << "warning: " << w.poly.to_string(cad.order) << " vanishes identically over cell "
                      << projcad::index_string(w.cell) << "; the decomposition may not be order-invariant\n";
        }
        std::cout << projcad::render(cad, format);
        return kOk;
    } catch (const projcad::ParseError& e) {
        std::cerr << path << ":" << e.what() << "\n";
        return kInputError;
    } catch (const projcad::NotWellOriented& e) {
        std::cerr << "projcad: " << e.what() << "\n";
        return kNotWellOriented;
    } catch (const projcad::Error& e) {
        std::cerr << "projcad: " << e.what() << "\n";
        return kInputError;
    }
}

int examples(const std::string& name) {
    std::vector<const projcad::Example*> selected;
    if (name == "all") {
        for (const auto& e : projcad::builtin_examples()) {
            selected.push_back(&e);
        }
    } else {
        try {
            selected.push_back(&projcad::find_example(name));
        } catch (const projcad::Error& e) {
            std::cerr << "projcad: " << e.what() << "\n";
            return kInputError;
        }
    }
    bool all_pass = true;
    for (const auto* e : selected) {
        const projcad::ExampleResult r = projcad::run_example(*e);
        all_pass = all_pass && r.pass;
        std::cout << std::left << std::setw(12) << r.name << std::right << std::setw(6) << r.cells << " cells  "
                  << std::fixed << std::setprecision(3) << r.seconds << "s  " << (r.pass ? "pass" : "FAIL") << "  ("
                  << r.detail << ")\n";
    }
    return all_pass ? kOk : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cylindrical algebraic decomposition by projection and lifting"};
    app.require_subcommand(1);

    std::string input;
    std::string method = "mccallum";
    bool final_oi = false;
    bool strict = false;
    std::string output = "json";
    int info = 0;
    auto* cmd_compute = app.add_subcommand("compute", "Compute a CAD for the polynomials in a problem file");
    cmd_compute->add_option("--input", input, "Problem file")->required();
    cmd_compute->add_option("--method", method, "Projection operator")
        ->check(CLI::IsMember({"mccallum", "collins"}));
    cmd_compute->add_flag("--final-oi", final_oi, "Order-invariance in the final lift as well");
    cmd_compute->add_flag("--strict", strict, "Abort when the input is not well-oriented");
    cmd_compute->add_option("--output", output, "Output format")
        ->check(CLI::IsMember({"json", "text", "piecewise", "count"}));
    cmd_compute->add_option("--info", info, "Diagnostics on stderr (0-3)")->check(CLI::Range(0, 3));

    std::string example = "all";
    auto* cmd_examples = app.add_subcommand("examples", "Run the built-in examples");
    cmd_examples->add_option("name", example, "circle, zy-x2, zy-x2-oi, w-example, warn-4var or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    if (*cmd_compute) {
        return compute(input, method, final_oi, strict, output, info);
    }
    return examples(example);
}
