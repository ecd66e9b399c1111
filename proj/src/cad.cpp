#include "projcad/cad.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace projcad {

CAD cad_full(std::span<const Poly> polys, const VarOrder& order, const CadOptions& options,
             const Diagnostics& diag) {
    ProjectionLevels levels = cad_projection(polys, order, options.method, diag);
    return cad_lifting(levels, order, LiftOptions{options.final_oi, options.strict}, diag);
}

namespace {

// Real roots, in x_i, of the lifting set over `base` at the rational prefix.
// Returned as isolating data of one squarefree univariate polynomial.
struct FiberLine {
    Poly f;  // squarefree, univariate in x_i (or constant 1)
    std::vector<IsolatingInterval> roots;
};

FiberLine fiber_line(const CAD& cad, const std::vector<int>& base, std::span<const Rational> prefix) {
    auto it = cad.stack_polys.find(base);
    if (it == cad.stack_polys.end()) {
        throw IntegrityError("no stack over cell " + index_string(base));
    }
    Poly product(1);
    for (const auto& q : it->second) {
        Poly u = q;
        for (std::size_t j = prefix.size(); j-- > 0;) {
            if (u.involves(static_cast<int>(j) + 1)) {
                u = substitute(u, static_cast<int>(j) + 1, prefix[j]);
            }
        }
        if (u.is_zero() || u.is_constant()) {
            continue;
        }
        product *= u;
    }
    FiberLine line;
    line.f = product.is_constant() ? Poly(1) : squarefree_part(product);
    if (!line.f.is_constant()) {
        line.roots = isolate_real_roots(line.f);
    }
    return line;
}

// 1-based position of x in the stack given by the roots of the line.
int position(const FiberLine& line, const Rational& x) {
    if (line.roots.empty()) {
        return 1;
    }
    const std::vector<Integer> dense = to_dense(line.f);
    const bool is_root = sign_at_rational(dense, x) == 0;
    int below = 0;
    for (const auto& iv : line.roots) {
        if (iv.exact()) {
            below += iv.lo < x ? 1 : 0;
        } else if (iv.hi <= x) {
            ++below;
        } else if (iv.lo < x && !is_root) {
            // x inside the interval and not the root: compare signs.
            below += sign_at_rational(dense, iv.lo) != sign_at_rational(dense, x) ? 1 : 0;
        }
    }
    return is_root ? 2 * below + 2 : 2 * below + 1;
}

// Largest next-level entry over each prefix.
std::map<std::vector<int>, int> stack_sizes(const CAD& cad) {
    std::map<std::vector<int>, int> sizes;
    for (const auto& c : cad.cells) {
        for (std::size_t i = 0; i < c.index.size(); ++i) {
            std::vector<int> prefix(c.index.begin(), c.index.begin() + static_cast<std::ptrdiff_t>(i));
            int& m = sizes[prefix];
            m = std::max(m, c.index[i]);
        }
    }
    return sizes;
}

const Cell* find_cell(const CAD& cad, const std::vector<int>& index) {
    auto it = std::lower_bound(cad.cells.begin(), cad.cells.end(), index,
                               [](const Cell& c, const std::vector<int>& key) { return c.index < key; });
    if (it == cad.cells.end() || it->index != index) {
        return nullptr;
    }
    return &*it;
}

}  // namespace

const Cell& locate_point(std::span<const Rational> point, const CAD& cad) {
    const std::size_t n = cad.order.size();
    if (point.size() != n) {
        throw DomainError("point has the wrong number of coordinates");
    }
    const auto sizes = stack_sizes(cad);
    std::vector<int> index;
    for (std::size_t i = 0; i < n; ++i) {
        const FiberLine line = fiber_line(cad, index, point.subspan(0, i));
        const int pos = position(line, point[i]);
        auto it = sizes.find(index);
        const int expected = static_cast<int>(2 * line.roots.size() + 1);
        if (it == sizes.end() || it->second != expected) {
            throw IntegrityError("root count over cell " + index_string(index) + " differs from its stack");
        }
        index.push_back(pos);
    }
    const Cell* c = find_cell(cad, index);
    if (c == nullptr) {
        throw IntegrityError("point lies in no cell");
    }
    return *c;
}

std::vector<Rational> random_interior_point(const CAD& cad, const Cell& cell, std::uint64_t& state) {
    std::mt19937_64 rng(state);
    state = rng();
    std::uniform_int_distribution<int> step(1, 1023);
    std::vector<Rational> point;
    std::vector<int> base;
    for (std::size_t i = 0; i < cell.index.size(); ++i) {
        const int entry = cell.index[i];
        if (entry % 2 == 0) {
            throw DomainError("cell is not full-dimensional");
        }
        FiberLine line = fiber_line(cad, base, point);
        const std::size_t t = static_cast<std::size_t>(entry - 1) / 2;
        const std::size_t k = line.roots.size();
        if (t > k) {
            throw IntegrityError("cell index beyond its stack");
        }
        // Narrow the neighbouring roots so the gap is sampled broadly.
        auto narrowed = [&](std::size_t r) {
            AlgebraicCoordinate c = line.roots[r].exact()
                                        ? AlgebraicCoordinate(line.roots[r].lo)
                                        : AlgebraicCoordinate(RootOf{line.f, line.roots[r].lo, line.roots[r].hi,
                                                                     sign_at_rational(to_dense(line.f),
                                                                                      line.roots[r].lo)});
            return refine(c, line.f.level(), Rational(1, 1024)).bounds();
        };
        Rational lo;
        Rational hi;
        if (k == 0) {
            lo = -4;
            hi = 4;
        } else if (t == 0) {
            hi = narrowed(0).lo;
            lo = hi - 4;
        } else if (t == k) {
            lo = narrowed(k - 1).hi;
            hi = lo + 4;
        } else {
            lo = narrowed(t - 1).hi;
            hi = narrowed(t).lo;
        }
        Rational x = lo + (hi - lo) * Rational(step(rng), 1024);
        x.canonicalize();
        point.push_back(x);
        base.push_back(entry);
    }
    return point;
}

SignReport verify_sign_invariance(const CAD& cad, std::span<const Poly> polys, int samples_per_cell,
                                  std::uint64_t seed) {
    SignReport report;
    const int n = static_cast<int>(cad.order.size());
    std::uint64_t state = seed;
    for (const auto& cell : cad.cells) {
        std::vector<int> expected;
        SamplePoint s = cell.sample;
        for (const auto& f : polys) {
            expected.push_back(sign_at(f, s));
        }
        if (cell.dimension() != n) {
            continue;
        }
        for (int k = 0; k < samples_per_cell; ++k) {
            const std::vector<Rational> pt = random_interior_point(cad, cell, state);
            ++report.points_checked;
            for (std::size_t j = 0; j < polys.size(); ++j) {
                if (sign(evaluate(polys[j], pt)) != expected[j]) {
                    report.ok = false;
                    report.witness = cell.index;
                    std::string coords;
                    for (const auto& x : pt) {
                        coords += (coords.empty() ? "" : ", ") + x.get_str();
                    }
                    report.message = "sign of " + polys[j].to_string(cad.order) + " changes inside cell " +
                                     index_string(cell.index) + " at (" + coords + ")";
                    return report;
                }
            }
        }
    }
    report.message = "sign-invariant";
    return report;
}

CylindricityReport check_cylindricity(const CAD& cad) {
    CylindricityReport report;
    const std::size_t n = cad.order.size();
    if (cad.cells.empty()) {
        report.ok = false;
        report.message = "no cells";
        return report;
    }
    std::map<std::vector<int>, std::set<int>> next;
    for (std::size_t c = 0; c < cad.cells.size(); ++c) {
        const auto& idx = cad.cells[c].index;
        if (idx.size() != n) {
            report.ok = false;
            report.message = "cell " + index_string(idx) + " has the wrong length";
            return report;
        }
        if (c > 0 && !(cad.cells[c - 1].index < idx)) {
            report.ok = false;
            report.message = "cells not strictly sorted at " + index_string(idx);
            return report;
        }
        for (std::size_t i = 0; i < n; ++i) {
            next[std::vector<int>(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(i))].insert(idx[i]);
        }
    }
    for (const auto& [prefix, entries] : next) {
        const int m = static_cast<int>(entries.size());
        if (m % 2 == 0 || *entries.begin() != 1 || *entries.rbegin() != m) {
            report.ok = false;
            report.message = "stack over " + index_string(prefix) + " is not 1..2k+1";
            return report;
        }
        if (prefix.size() == 1) {
            ++report.level1_prefixes;
        }
    }
    report.message = "cylindrical";
    return report;
}

}  // namespace projcad
