#pragma once

// Built-in example problems with known cell counts.

#include <optional>
#include <string>
#include <vector>

#include "projcad/cad.hpp"

namespace projcad {

struct Example {
    std::string name;
    std::string source;  // problem file text
    CadOptions options;
    std::optional<std::size_t> expected_cells;
    /// Index of a cell that must carry a nullification warning.
    std::optional<std::vector<int>> expected_warning;
};

const std::vector<Example>& builtin_examples();
/// Throws DomainError for an unknown name.
const Example& find_example(const std::string& name);

struct ExampleResult {
    std::string name;
    bool pass = false;
    std::size_t cells = 0;
    double seconds = 0;
    std::string detail;
};

ExampleResult run_example(const Example& example);

}  // namespace projcad
