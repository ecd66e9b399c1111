#pragma once

// Stack construction and the lifting phase.

#include <optional>
#include <span>
#include <vector>

#include "projcad/cell.hpp"
#include "projcad/diagnostics.hpp"

namespace projcad {

/// Polynomials with the same zeros over the fiber of s as P, pairwise coprime
/// and squarefree there. Elements that already qualify are returned
/// unchanged; the rest are replaced by fiber-local factors (with the rational
/// coordinates of s substituted). Throws DomainError when an element vanishes
/// identically over s.
std::vector<Poly> make_separable_over_cell(std::span<const Poly> P, SamplePoint& s);

/// The cells over `base` for the lifting set Q (polynomials in x_1..x_i with
/// i = base dimension + 1, none vanishing identically over the base sample).
std::vector<Cell> generate_stack(const Cell& base, std::span<const Poly> Q);

/// Every coefficient of p in its main variable vanishes at the sample.
bool is_nullified(const Poly& p, const SamplePoint& s);

/// For p nullified at the point s: the squarefree part of the gcd of the
/// lowest-order partial derivatives of p that do not vanish identically at
/// s, or nullopt when that gcd is constant. Throws DomainError if p is not
/// nullified.
std::optional<Poly> minimal_delineating_polynomial(const Poly& p, const SamplePoint& s);

struct LiftOptions {
    bool final_oi = false;
    bool strict = false;
};

/// Lifting phase over a projection set. Throws NotWellOriented in strict mode
/// when a McCallum projection polynomial is nullified over a cell of
/// positive dimension.
CAD cad_lifting(const ProjectionLevels& levels, const VarOrder& order, const LiftOptions& options,
                const Diagnostics& diag = {});

}  // namespace projcad
