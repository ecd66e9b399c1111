#include "projcad/projection.hpp"

#include <algorithm>
#include <sstream>

#include "projcad/subresultants.hpp"

namespace projcad {

std::string to_string(Method m) { return m == Method::McCallum ? "mccallum" : "collins"; }

Method method_from_string(const std::string& s) {
    if (s == "mccallum" || s == "McCallum") {
        return Method::McCallum;
    }
    if (s == "collins" || s == "Collins") {
        return Method::Collins;
    }
    throw DomainError("unknown projection method '" + s + "'");
}

std::size_t ProjectionLevels::total() const {
    std::size_t t = 0;
    for (const auto& l : levels) {
        t += l.size();
    }
    return t;
}

namespace {

void check_basis(std::span<const Poly> basis, int level) {
    if (level < 2) {
        throw DomainError("nothing to project at level 1");
    }
    for (const auto& f : basis) {
        if (f.level() != level) {
            throw DomainError("projection input does not have the projected main variable");
        }
    }
}

void push_if_relevant(std::vector<Poly>& out, Poly p) {
    if (!p.is_constant()) {
        out.push_back(std::move(p));
    }
}

void add_truncated_coeffs(std::vector<Poly>& out, const Poly& f) {
    for (const auto& t : f.terms()) {
        if (t.coeff.is_constant()) {
            break;
        }
        out.push_back(t.coeff);
    }
}

std::vector<Poly> dedup(std::vector<Poly> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::vector<Poly> proj_mccallum(std::span<const Poly> basis, int level) {
    check_basis(basis, level);
    std::vector<Poly> out;
    for (const auto& f : basis) {
        add_truncated_coeffs(out, f);
        if (f.degree() >= 2) {
            push_if_relevant(out, discriminant(f, level));
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            push_if_relevant(out, resultant(basis[i], basis[j], level));
        }
    }
    return dedup(std::move(out));
}

std::vector<Poly> truncated_reducta(const Poly& f, int level) {
    std::vector<Poly> out;
    Poly r = f;
    while (r.level() == level) {
        out.push_back(r);
        if (r.leading_coeff().is_constant()) {
            break;
        }
        r = r.reductum(1);
    }
    return out;
}

std::vector<Poly> proj_collins(std::span<const Poly> basis, int level) {
    check_basis(basis, level);
    std::vector<Poly> out;
    std::vector<std::vector<Poly>> reducta;
    for (const auto& f : basis) {
        add_truncated_coeffs(out, f);
        reducta.push_back(truncated_reducta(f, level));
        for (const auto& r : reducta.back()) {
            for (auto& p : psd(r, level)) {
                push_if_relevant(out, std::move(p));
            }
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            for (const auto& ri : reducta[i]) {
                for (const auto& rj : reducta[j]) {
                    for (auto& p : psc_chain(ri, rj, level).psc) {
                        push_if_relevant(out, std::move(p));
                    }
                }
            }
        }
    }
    return dedup(std::move(out));
}

ProjectionLevels cad_projection(std::span<const Poly> polys, const VarOrder& order, Method method,
                                const Diagnostics& diag) {
    const int n = static_cast<int>(order.size());
    if (polys.empty()) {
        throw DomainError("empty input set");
    }
    for (const auto& f : polys) {
        if (f.is_constant()) {
            throw DomainError("input polynomials must be nonconstant");
        }
        if (f.level() > n) {
            throw DomainError("input polynomial uses an undeclared variable");
        }
    }

    std::vector<PolySet> pending(static_cast<std::size_t>(n));
    // Files the primitive part under its main variable and recurses on the content.
    auto file = [&](const Poly& f) {
        Poly cur = f;
        while (!cur.is_constant()) {
            auto [c, p] = content_primitive(cur);
            pending[static_cast<std::size_t>(p.level() - 1)].insert(p);
            cur = c;
        }
    };
    for (const auto& f : polys) {
        file(f);
    }

    ProjectionLevels out;
    out.n = n;
    out.method = method;
    out.levels.resize(static_cast<std::size_t>(n));
    for (int level = n; level >= 1; --level) {
        auto& bucket = pending[static_cast<std::size_t>(level - 1)];
        std::vector<Poly> basis = finest_squarefree_basis(bucket.elements());
        if (level >= 2 && !basis.empty()) {
            std::vector<Poly> projected =
                method == Method::McCallum ? proj_mccallum(basis, level) : proj_collins(basis, level);
            for (const auto& p : projected) {
                file(p);
            }
        }
        if (diag.enabled(1)) {
            std::ostringstream os;
            os << "projection: level " << level << " (" << order.name(level) << "): " << basis.size()
               << " polynomial(s)";
            diag.log(1, os.str());
        }
        if (diag.enabled(3)) {
            for (const auto& p : basis) {
                diag.log(3, "  " + p.to_string(order));
            }
        }
        out.levels[static_cast<std::size_t>(level - 1)] = std::move(basis);
    }
    return out;
}

}  // namespace projcad
