#pragma once

// Output formats for a computed CAD.

#include <string>

#include "projcad/cell.hpp"

namespace projcad {

enum class OutputFormat { Json, Text, Piecewise, Count };

OutputFormat format_from_string(const std::string& s);

std::string render(const CAD& cad, OutputFormat format);

/// {variables, method, finalOI, cellCount, warnings, cells}, two-space indent.
std::string render_json(const CAD& cad);
/// One line per cell: "index | dim | sample".
std::string render_text(const CAD& cad);
/// Nested case tree: one branch per cell of the lowest level, children
/// indented by two spaces.
std::string render_piecewise(const CAD& cad);

/// "p/q" for every rational, integers included.
std::string rational_string(const Rational& r);
/// Condition on x_level for a description entry, e.g. "-1 < x < 1".
std::string bound_string(const CAD& cad, const Cell& cell, std::size_t level);

}  // namespace projcad
