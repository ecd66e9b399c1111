#pragma once

#include <random>

#include "projcad/parse.hpp"
#include "projcad/polyring.hpp"

namespace testing {

using projcad::Poly;
using projcad::VarOrder;

inline const VarOrder& xyzw() {
    static const VarOrder order({"x", "y", "z", "w"});
    return order;
}

/// Parses an expression over (x, y, z, w).
inline Poly P(const char* expr) { return projcad::parse_poly(expr, xyzw()); }

/// Random polynomial in x_1..x_vars with total degree <= max_degree.
inline Poly random_poly(std::mt19937_64& rng, int vars, unsigned max_degree, int terms = 5, int coeff = 5) {
    std::uniform_int_distribution<int> c(-coeff, coeff);
    std::uniform_int_distribution<unsigned> e(0, max_degree);
    std::uniform_int_distribution<int> v(1, vars);
    Poly out;
    for (int t = 0; t < terms; ++t) {
        Poly m(c(rng));
        unsigned budget = e(rng);
        while (budget > 0) {
            m *= Poly::var(v(rng));
            --budget;
        }
        out += m;
    }
    return out;
}

/// Random polynomial with positive degree in x_vars.
inline Poly random_poly_in(std::mt19937_64& rng, int vars, unsigned max_degree, int terms = 5, int coeff = 5) {
    while (true) {
        Poly p = random_poly(rng, vars, max_degree, terms, coeff);
        if (p.level() == vars) {
            return p;
        }
    }
}

}  // namespace testing
