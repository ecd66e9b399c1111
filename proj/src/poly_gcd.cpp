#include <algorithm>

#include "projcad/polyring.hpp"

namespace projcad {

Poly normalize(const Poly& f) {
    if (f.is_zero()) {
        return f;
    }
    return sgn(f.base_leading_coeff()) < 0 ? -f : f;
}

Integer integer_content(const Poly& f) {
    if (f.level() == 0) {
        return abs(f.constant_value());
    }
    Integer g = 0;
    for (const auto& t : f.terms()) {
        Integer c = integer_content(t.coeff);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

Poly remove_integer_content(const Poly& f) {
    if (f.is_zero()) {
        return f;
    }
    Integer c = integer_content(f);
    return c == 1 ? f : exact_divide(f, Poly(c));
}

namespace {

// gcd of the main-variable coefficients of f (f non-constant), sign-normalized.
Poly mvar_content(const Poly& f) {
    Poly g;
    for (const auto& t : f.terms()) {
        g = gcd(g, t.coeff);
        if (g.is_constant() && g.constant_value() == 1) {
            break;
        }
    }
    return g;
}

// gcd of two primitive polynomials of the same level via the primitive PRS.
Poly primitive_gcd(Poly a, Poly b) {
    const int level = a.level();
    if (a.degree() < b.degree()) {
        std::swap(a, b);
    }
    while (true) {
        Poly r = pseudo_remainder(a, b, level);
        if (r.is_zero()) {
            return b;
        }
        if (r.level() < level) {
            return Poly(1);
        }
        a = std::move(b);
        b = primitive_part(r);
    }
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) {
        throw DomainError("gcd(0, 0) is undefined");
    }
    if (f.is_zero()) {
        return normalize(g);
    }
    if (g.is_zero()) {
        return normalize(f);
    }
    if (f.is_constant() && g.is_constant()) {
        Integer r;
        mpz_gcd(r.get_mpz_t(), f.constant_value().get_mpz_t(), g.constant_value().get_mpz_t());
        return Poly(r);
    }
    if (f.level() < g.level()) {
        return gcd(f, mvar_content(g));
    }
    if (g.level() < f.level()) {
        return gcd(mvar_content(f), g);
    }
    auto [cf, pf] = content_primitive(f);
    auto [cg, pg] = content_primitive(g);
    Poly c = gcd(cf, cg);
    return normalize(c * primitive_gcd(pf, pg));
}

ContentSplit content_primitive(const Poly& f) {
    if (f.is_zero()) {
        throw DomainError("content of the zero polynomial");
    }
    if (f.is_constant()) {
        return {f, Poly(1)};
    }
    Poly c = mvar_content(f);
    if (sgn(f.base_leading_coeff()) < 0) {
        c = -c;
    }
    return {c, exact_divide(f, c)};
}

Poly primitive_part(const Poly& f) { return content_primitive(f).primitive; }

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) {
        throw DomainError("squarefree part of the zero polynomial");
    }
    if (f.is_constant()) {
        return Poly(1);
    }
    Poly g = gcd(f, derivative(f, f.level()));
    return normalize(exact_divide(f, g));
}

bool is_squarefree(const Poly& f) {
    if (f.is_constant()) {
        return true;
    }
    return gcd(f, derivative(f, f.level())).level() < f.level();
}

std::vector<Poly> finest_squarefree_basis(std::span<const Poly> polys) {
    std::vector<Poly> work;
    for (const auto& p : polys) {
        if (p.is_zero()) {
            throw DomainError("zero polynomial in squarefree basis input");
        }
        if (!p.is_constant()) {
            work.push_back(normalize(remove_integer_content(p)));
        }
    }
    auto nonconstant = [](const Poly& p) { return !p.is_constant(); };
    bool changed = true;
    while (changed) {
        changed = false;
        // Split every element that is not squarefree in its main variable.
        for (std::size_t i = 0; i < work.size(); ++i) {
            Poly g = gcd(work[i], derivative(work[i], work[i].level()));
            if (g.level() == work[i].level()) {
                Poly q = exact_divide(work[i], g);
                work[i] = normalize(q);
                work.push_back(g);
                changed = true;
            }
        }
        std::sort(work.begin(), work.end());
        work.erase(std::unique(work.begin(), work.end()), work.end());
        // Pairwise gcd splitting.
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                Poly g = gcd(work[i], work[j]);
                if (g.is_constant()) {
                    continue;
                }
                Poly a = normalize(exact_divide(work[i], g));
                Poly b = normalize(exact_divide(work[j], g));
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                for (Poly* p : {&a, &b, &g}) {
                    if (nonconstant(*p)) {
                        work.push_back(std::move(*p));
                    }
                }
                changed = true;
            }
        }
    }
    for (auto& p : work) {
        p = normalize(remove_integer_content(p));
    }
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());
    return work;
}

}  // namespace projcad
