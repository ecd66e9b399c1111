#pragma once

// Cells and decompositions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "projcad/algnum.hpp"
#include "projcad/polyring.hpp"
#include "projcad/projection.hpp"

namespace projcad {

/// The ordinal-th real root (1-based, increasing) of `poly` over the base cell.
struct RootRef {
    Poly poly;
    int ordinal = 0;
};

/// Constraint on one coordinate relative to the sections over the base.
struct Bound {
    enum class Kind { Free, Below, Equal, Between, Above };
    Kind kind = Kind::Free;
    RootRef lower;  // Equal, Between, Above
    RootRef upper;  // Below, Between
};

struct Cell {
    std::vector<int> index;
    SamplePoint sample;
    std::vector<Bound> description;

    /// Number of odd index entries.
    int dimension() const;
};

/// A projection polynomial that vanished identically over a cell of
/// positive dimension.
struct NullificationWarning {
    std::vector<int> cell;
    Poly poly;
};

/// A nullified polynomial over a zero-dimensional cell and what replaced it.
struct Delineation {
    std::vector<int> cell;
    Poly nullified;
    std::optional<Poly> delineating;
};

struct CAD {
    VarOrder order;
    Method method = Method::McCallum;
    bool final_oi = false;
    std::vector<Cell> cells;  // sorted by index
    std::vector<NullificationWarning> warnings;
    std::vector<Delineation> delineations;
    /// Lifting set used over each base cell, keyed by the base index (the
    /// empty index for the real line).
    std::map<std::vector<int>, std::vector<Poly>> stack_polys;
};

/// "(2,2,1)"; "()" for the empty index.
std::string index_string(const std::vector<int>& index);

}  // namespace projcad
