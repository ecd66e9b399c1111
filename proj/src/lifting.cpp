#include "projcad/lifting.hpp"

#include <algorithm>

namespace projcad {

int Cell::dimension() const {
    return static_cast<int>(std::count_if(index.begin(), index.end(), [](int k) { return k % 2 == 1; }));
}

std::string index_string(const std::vector<int>& index) {
    std::string out = "(";
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(index[i]);
    }
    return out + ")";
}

std::vector<Poly> make_separable_over_cell(std::span<const Poly> P, SamplePoint& s) {
    const int var = static_cast<int>(s.size()) + 1;
    Fiber fiber(s, var);
    std::vector<Poly> work;
    for (const auto& p : P) {
        if (p.level() > var) {
            throw DomainError("polynomial involves a variable above the fiber");
        }
        Poly q = fiber.strip(p);
        if (q.is_zero()) {
            throw DomainError("polynomial vanishes identically over the cell");
        }
        if (q.level() < var) {
            continue;  // nonzero constant on the fiber
        }
        if (fiber.degree(fiber.gcd(q, derivative(q, var))) > 0) {
            work.push_back(fiber.squarefree(q));
        } else {
            work.push_back(p);
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                Poly g = fiber.gcd(work[i], work[j]);
                if (fiber.degree(g) <= 0) {
                    continue;
                }
                Poly a = fiber.quotient(work[i], g);
                Poly b = fiber.quotient(work[j], g);
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                for (Poly* p : {&a, &b, &g}) {
                    if (fiber.degree(*p) > 0) {
                        work.push_back(normalize(*p));
                    }
                }
                changed = true;
            }
        }
    }
    return work;
}

std::vector<Cell> generate_stack(const Cell& base, std::span<const Poly> Q) {
    SamplePoint s = base.sample;
    const std::vector<Poly> separable = make_separable_over_cell(Q, s);
    FiberRoots roots = roots_over_cell(separable, s);

    const std::size_t k = roots.sections.size();
    std::vector<RootRef> refs;
    std::vector<int> seen(separable.size(), 0);
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t owner = roots.owner[t];
        refs.push_back(RootRef{separable[owner], ++seen[owner]});
    }

    std::vector<Cell> out;
    out.reserve(2 * k + 1);
    for (std::size_t j = 0; j < 2 * k + 1; ++j) {
        Cell c;
        c.index = base.index;
        c.index.push_back(static_cast<int>(j) + 1);
        c.description = base.description;
        Bound b;
        if (j % 2 == 0) {
            const std::size_t t = j / 2;
            c.sample = s.extended(AlgebraicCoordinate(roots.sector_samples[t]));
            if (k == 0) {
                b.kind = Bound::Kind::Free;
            } else if (t == 0) {
                b.kind = Bound::Kind::Below;
                b.upper = refs[0];
            } else if (t == k) {
                b.kind = Bound::Kind::Above;
                b.lower = refs[k - 1];
            } else {
                b.kind = Bound::Kind::Between;
                b.lower = refs[t - 1];
                b.upper = refs[t];
            }
        } else {
            const std::size_t t = j / 2;
            c.sample = s.extended(roots.sections[t]);
            b.kind = Bound::Kind::Equal;
            b.lower = refs[t];
        }
        c.description.push_back(std::move(b));
        out.push_back(std::move(c));
    }
    return out;
}

bool is_nullified(const Poly& p, const SamplePoint& s) {
    if (p.is_constant()) {
        return p.is_zero();
    }
    SamplePoint copy = s.prefix(std::min(s.size(), static_cast<std::size_t>(p.level() - 1)));
    Fiber fiber(copy, p.level());
    return fiber.is_zero(p);
}

std::optional<Poly> minimal_delineating_polynomial(const Poly& p, const SamplePoint& s) {
    if (!is_nullified(p, s)) {
        throw DomainError("polynomial is not nullified at the point");
    }
    const int var = p.level();
    SamplePoint base = s.prefix(static_cast<std::size_t>(var - 1));
    Fiber fiber(base, var);
    std::vector<Poly> current{p};
    for (unsigned order = 1; order <= p.total_degree(); ++order) {
        std::vector<Poly> next;
        for (const auto& d : current) {
            for (int v = 1; v <= var; ++v) {
                Poly dv = derivative(d, v);
                if (!dv.is_zero()) {
                    next.push_back(std::move(dv));
                }
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::optional<Poly> g;
        for (const auto& d : next) {
            if (fiber.is_zero(d)) {
                continue;
            }
            g = g ? fiber.gcd(*g, d) : fiber.strip(d);
        }
        if (g) {
            if (fiber.degree(*g) <= 0) {
                return std::nullopt;
            }
            return normalize(fiber.squarefree(*g));
        }
        current = std::move(next);
    }
    return std::nullopt;
}

CAD cad_lifting(const ProjectionLevels& levels, const VarOrder& order, const LiftOptions& options,
                const Diagnostics& diag) {
    CAD cad;
    cad.order = order;
    cad.method = levels.method;
    cad.final_oi = options.final_oi;
    const int n = levels.n;

    std::vector<Cell> current{Cell{}};
    for (int i = 1; i <= n; ++i) {
        const bool check = levels.method == Method::McCallum && (i < n || options.final_oi);
        std::vector<Cell> next;
        for (const auto& base : current) {
            std::vector<Poly> Q;
            for (const auto& p : levels.at(i)) {
                if (i == 1 || !is_nullified(p, base.sample)) {
                    Q.push_back(p);
                    continue;
                }
                const std::string where = index_string(base.index);
                const std::string poly = p.to_string(order);
                if (!check) {
                    diag.log(2, "cell " + where + ": " + poly + " vanishes identically, skipped");
                    continue;
                }
                if (base.dimension() == 0) {
                    std::optional<Poly> mdp = minimal_delineating_polynomial(p, base.sample);
                    diag.log(2, "cell " + where + ": " + poly + " nullified, delineating polynomial " +
                                    (mdp ? mdp->to_string(order) : std::string("none needed")));
                    cad.delineations.push_back(Delineation{base.index, p, mdp});
                    if (mdp) {
                        Q.push_back(*mdp);
                    }
                    continue;
                }
                if (options.strict) {
                    throw NotWellOriented("input not well-oriented: " + poly + " vanishes on cell " + where);
                }
                diag.log(2, "cell " + where + ": " + poly + " nullified on a cell of dimension " +
                                std::to_string(base.dimension()));
                cad.warnings.push_back(NullificationWarning{base.index, p});
            }
            std::vector<Cell> stack = generate_stack(base, Q);
            diag.log(2, "cell " + index_string(base.index) + ": stack of " + std::to_string(stack.size()) +
                            " cells");
            cad.stack_polys[base.index] = std::move(Q);
            for (auto& c : stack) {
                next.push_back(std::move(c));
            }
        }
        current = std::move(next);
        diag.log(1, "lifted to " + order.name(i) + ": " + std::to_string(current.size()) + " cells");
    }
    std::sort(current.begin(), current.end(), [](const Cell& a, const Cell& b) { return a.index < b.index; });
    cad.cells = std::move(current);
    return cad;
}

}  // namespace projcad
