#pragma once

// Collins' and McCallum's projection operators and the projection phase.

#include <span>
#include <string>
#include <vector>

#include "projcad/diagnostics.hpp"
#include "projcad/polyring.hpp"

namespace projcad {

enum class Method { McCallum, Collins };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Projection factors grouped by main variable. Each level holds a finest
/// squarefree basis of primitive polynomials whose main variable is that level.
struct ProjectionLevels {
    int n = 0;
    Method method = Method::McCallum;
    std::vector<std::vector<Poly>> levels;  // levels[l-1] holds level l

    const std::vector<Poly>& at(int level) const { return levels.at(static_cast<std::size_t>(level - 1)); }
    std::size_t total() const;
};

/// McCallum's P: coefficients (from the leading one down, stopping after a
/// nonzero constant), discriminants and pairwise resultants w.r.t. x_level.
/// Zero and constant results are dropped; duplicates removed.
std::vector<Poly> proj_mccallum(std::span<const Poly> basis, int level);

/// Collins' PROJ: coefficients, psd of reducta and psc of reducta of
/// distinct basis elements, with the same constant truncation.
std::vector<Poly> proj_collins(std::span<const Poly> basis, int level);

/// Reducta red^k(f), k = 0, 1, ..., that still have positive degree in
/// x_level, stopping after the first one whose leading coefficient is a
/// nonzero constant.
std::vector<Poly> truncated_reducta(const Poly& f, int level);

/// Projection phase. Inputs are split into content and primitive part, every
/// produced polynomial is filed under its own main variable, and each level is
/// basis-reduced before it is projected.
ProjectionLevels cad_projection(std::span<const Poly> polys, const VarOrder& order, Method method,
                                const Diagnostics& diag = {});

}  // namespace projcad
