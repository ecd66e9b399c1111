#include "projcad/subresultants.hpp"

#include <cstdint>
#include <unordered_map>

namespace projcad {

namespace {

using Dense = std::vector<Poly>;  // coefficients in x_var, index = degree

unsigned deg(const Dense& a) { return static_cast<unsigned>(a.size() - 1); }

Dense trimmed(Dense a) {
    while (a.size() > 1 && a.back().is_zero()) {
        a.pop_back();
    }
    return a;
}

bool is_zero(const Dense& a) { return a.size() == 1 && a[0].is_zero(); }

// Classical pseudo-remainder of dense polynomials over the coefficient ring.
Dense prem(Dense a, const Dense& b) {
    const unsigned db = deg(b);
    if (deg(a) < db) {
        return a;
    }
    unsigned e = deg(a) - db + 1;
    const Poly& lb = b.back();
    while (!is_zero(a) && deg(a) >= db) {
        const unsigned shift = deg(a) - db;
        const Poly la = a.back();
        for (auto& c : a) {
            c *= lb;
        }
        for (std::size_t k = 0; k <= db; ++k) {
            a[k + shift] -= la * b[k];
        }
        a = trimmed(std::move(a));
        --e;
    }
    if (e > 0) {
        Poly s = lb.pow(e);
        for (auto& c : a) {
            c *= s;
        }
    }
    return a;
}

Dense exquo(Dense a, const Poly& d) {
    for (auto& c : a) {
        c = exact_divide(c, d);
    }
    return a;
}

Dense coeffs(const Poly& f, int var) { return f.coeffs_in(var); }

// Determinant of a square matrix of polynomials by cofactor expansion along
// rows, memoized on the set of used columns.
Poly determinant(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return Poly(1);
    }
    if (n > 30) {
        throw DomainError("matrix too large for the reference determinant");
    }
    std::unordered_map<std::uint32_t, Poly> memo;
    // minor(row, used) = det of rows row..n-1 over the columns not in `used`.
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t used) -> Poly {
        if (row == n) {
            return Poly(1);
        }
        if (auto it = memo.find(used); it != memo.end()) {
            return it->second;
        }
        Poly acc;
        int parity = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (used & (1U << col)) {
                continue;
            }
            if (!m[row][col].is_zero()) {
                Poly term = m[row][col] * self(self, row + 1, used | (1U << col));
                acc = (parity % 2 == 0) ? acc + term : acc - term;
            }
            ++parity;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return rec(rec, 0, 0);
}

}  // namespace

Poly psc_by_minor(const Poly& f, const Poly& g, int var, unsigned j) {
    const Dense a = coeffs(f, var);
    const Dense b = coeffs(g, var);
    const unsigned m = deg(a);
    const unsigned n = deg(b);
    if (f.is_zero() || g.is_zero()) {
        throw DomainError("psc of a zero polynomial");
    }
    if (j > std::min(m, n)) {
        throw DomainError("psc index exceeds min(deg f, deg g)");
    }
    const unsigned width = m + n - j;  // columns x^(width-1) .. x^j
    const unsigned cols = m + n - 2 * j;
    std::vector<std::vector<Poly>> rows;
    for (unsigned i = 0; i < n - j; ++i) {
        std::vector<Poly> row(width);
        for (unsigned k = 0; k <= m; ++k) {
            row[i + k] = a[m - k];
        }
        row.resize(cols);
        rows.push_back(std::move(row));
    }
    for (unsigned i = 0; i < m - j; ++i) {
        std::vector<Poly> row(width);
        for (unsigned k = 0; k <= n; ++k) {
            row[i + k] = b[n - k];
        }
        row.resize(cols);
        rows.push_back(std::move(row));
    }
    return determinant(rows);
}

Poly sylvester_resultant(const Poly& f, const Poly& g, int var) {
    if (f.is_zero() || g.is_zero()) {
        throw DomainError("resultant of a zero polynomial");
    }
    if (f.degree_in(var) == 0 && g.degree_in(var) == 0) {
        throw DomainError("resultant of two polynomials of degree 0");
    }
    return psc_by_minor(f, g, var, 0);
}

PscChain psc_chain(const Poly& f, const Poly& g, int var) {
    if (f.is_zero() || g.is_zero()) {
        throw DomainError("psc chain of a zero polynomial");
    }
    const unsigned df = f.degree_in(var);
    const unsigned dg = g.degree_in(var);
    if (df == 0 && dg == 0) {
        throw DomainError("psc chain of two polynomials of degree 0");
    }
    PscChain chain{f, g, var, std::vector<Poly>(std::min(df, dg) + 1)};

    // Work with deg(A) >= deg(B); swapping the row blocks of the j-th
    // Sylvester submatrix multiplies psc_j by (-1)^((df-j)(dg-j)).
    const bool swapped = df < dg;
    Dense A = coeffs(swapped ? g : f, var);
    Dense B = coeffs(swapped ? f : g, var);
    const unsigned n = deg(A);
    unsigned m = deg(B);
    auto store = [&](unsigned j, const Poly& value) {
        if (j < chain.psc.size()) {
            chain.psc[j] = value;
        }
    };

    // Subresultant PRS; psc of degree d_k is recorded as each new remainder
    // of degree d_k appears.
    store(n, Poly(1));
    unsigned d = n - m;
    Poly lc = B.back();
    Poly c = lc.pow(d);
    store(m, c);
    c = -c;
    Dense h = prem(A, B);
    if ((d + 1) % 2 == 1) {
        for (auto& x : h) {
            x = -x;
        }
    }
    while (!is_zero(h)) {
        const unsigned k = deg(h);
        A = std::move(B);
        B = std::move(h);
        d = m - k;
        m = k;
        Poly beta = -lc * c.pow(d);
        h = exquo(prem(A, B), beta);
        lc = B.back();
        if (d > 1) {
            Poly q = c.pow(d - 1);
            Poly num = (-lc).pow(d);
            c = exact_divide(num, q);
        } else {
            c = -lc;
        }
        store(k, -c);
        if (k == 0) {
            break;
        }
    }
    if (swapped) {
        for (unsigned j = 0; j < chain.psc.size(); ++j) {
            if (((df - j) * (dg - j)) % 2 == 1) {
                chain.psc[j] = -chain.psc[j];
            }
        }
    }
    return chain;
}

Poly resultant(const Poly& f, const Poly& g, int var) { return psc_chain(f, g, var).psc[0]; }

Poly discriminant(const Poly& f, int var) {
    const unsigned d = f.degree_in(var);
    if (d <= 1) {
        throw DomainError("discriminant undefined for degree <= 1");
    }
    Poly res = resultant(f, derivative(f, var), var);
    Poly lc = f.coeffs_in(var).back();
    Poly q = exact_divide(res, lc);
    return ((d * (d - 1) / 2) % 2 == 1) ? -q : q;
}

std::vector<Poly> psd(const Poly& f, int var) {
    const unsigned d = f.degree_in(var);
    if (f.is_zero() || d == 0) {
        return {};
    }
    PscChain chain = psc_chain(f, derivative(f, var), var);
    std::vector<Poly> out;
    for (unsigned j = 0; j < d && j < chain.psc.size(); ++j) {
        if (!chain.psc[j].is_zero()) {
            out.push_back(chain.psc[j]);
        }
    }
    return out;
}

}  // namespace projcad
