#pragma once

// Resultants, discriminants and principal subresultant coefficients of
// polynomials regarded as univariate in a designated variable.

#include <vector>

#include "projcad/polyring.hpp"

namespace projcad {

/// Principal subresultant coefficients psc_0 ... psc_m, m = min(deg f, deg g),
/// of a pair regarded as univariate in x_var. psc[0] is the resultant.
struct PscChain {
    Poly f;
    Poly g;
    int var = 0;
    std::vector<Poly> psc;
};

/// Determinant of the Sylvester matrix of f and g in x_var. Kept as the
/// reference route; production code uses the subresultant PRS.
Poly sylvester_resultant(const Poly& f, const Poly& g, int var);

/// psc_j via the determinant of the j-th Sylvester submatrix (reference route).
Poly psc_by_minor(const Poly& f, const Poly& g, int var, unsigned j);

/// psc chain computed with the subresultant polynomial remainder sequence.
PscChain psc_chain(const Poly& f, const Poly& g, int var);

/// Resultant via the subresultant PRS.
Poly resultant(const Poly& f, const Poly& g, int var);

/// (-1)^(d(d-1)/2) res(f, f') / lc(f). Requires deg_var(f) >= 2.
Poly discriminant(const Poly& f, int var);

/// Nonzero psc_j(f, df/dvar) for 0 <= j <= deg(f) - 1. Empty when f has
/// degree 0 in x_var.
std::vector<Poly> psd(const Poly& f, int var);

}  // namespace projcad
