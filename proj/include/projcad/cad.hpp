#pragma once

// Full CAD construction and the checks used to validate a decomposition.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "projcad/cell.hpp"
#include "projcad/diagnostics.hpp"
#include "projcad/lifting.hpp"
#include "projcad/projection.hpp"

namespace projcad {

struct CadOptions {
    Method method = Method::McCallum;
    bool final_oi = false;
    bool strict = false;
};

/// Projection followed by lifting.
CAD cad_full(std::span<const Poly> polys, const VarOrder& order, const CadOptions& options = {},
             const Diagnostics& diag = {});

/// The cell containing a rational point. Throws IntegrityError when the
/// point falls outside every cell (which means the CAD is broken).
const Cell& locate_point(std::span<const Rational> point, const CAD& cad);

struct SignReport {
    bool ok = true;
    std::string message;
    std::optional<std::vector<int>> witness;  // first failing cell
    std::size_t points_checked = 0;
};

/// Compares the sign vector of `polys` at each full-dimensional cell's sample
/// with the sign vectors at random interior rational points.
SignReport verify_sign_invariance(const CAD& cad, std::span<const Poly> polys, int samples_per_cell = 16,
                                  std::uint64_t seed = 1);

struct CylindricityReport {
    bool ok = true;
    std::string message;
    std::size_t level1_prefixes = 0;
};

/// Index-prefix partition check: cells strictly sorted, indices of full
/// length, and over every prefix the next entries run 1..2k+1.
CylindricityReport check_cylindricity(const CAD& cad);

/// Random rational point inside a full-dimensional cell.
std::vector<Rational> random_interior_point(const CAD& cad, const Cell& cell, std::uint64_t& state);

}  // namespace projcad
