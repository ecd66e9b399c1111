// Real root isolation for univariate integer polynomials: Descartes' rule of
// signs with bisection (Vincent-Collins-Akritas).

#include <algorithm>

#include "projcad/algnum.hpp"

namespace projcad {

namespace {

using Dense = std::vector<Integer>;

void trim(Dense& a) {
    while (a.size() > 1 && a.back() == 0) {
        a.pop_back();
    }
}

// In-place Taylor shift p(t) -> p(t + 1).
void taylor_shift_one(Dense& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) {
            a[j] += a[j + 1];
        }
    }
}

int sign_variations(const Dense& a) {
    int count = 0;
    int last = 0;
    for (const auto& c : a) {
        const int s = sgn(c);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

// Number of sign variations of (1+t)^d p(1/(1+t)); bounds the roots in (0, 1).
int descartes_unit(const Dense& p) {
    Dense r(p.rbegin(), p.rend());
    taylor_shift_one(r);
    return sign_variations(r);
}

// Exact division of p by (2t - 1) assuming p(1/2) == 0.
Dense divide_by_half_root(const Dense& p) {
    // p(t) = (2t - 1) r(t); solve from the top coefficient down.
    const std::size_t d = p.size() - 1;
    Dense r(d);
    for (std::size_t k = d; k-- > 0;) {
        // p_{k+1} = 2 r_k - r_{k+1}
        const Integer next = (k + 1 < d) ? r[k + 1] : Integer(0);
        Integer num = p[k + 1] + next;
        r[k] = num / 2;
    }
    return r;
}

// Roots in (0, +inf) of a with a[0] != 0.
std::vector<IsolatingInterval> isolate_positive(const Dense& a) {
    std::vector<IsolatingInterval> out;
    const std::size_t d = a.size() - 1;
    if (d == 0) {
        return out;
    }
    // Cauchy bound rounded up to a power of two.
    Integer maxc = 0;
    for (std::size_t i = 0; i < d; ++i) {
        maxc = std::max(maxc, Integer(abs(a[i])));
    }
    Integer lead = abs(a[d]);
    Integer bound = (maxc + lead - 1) / lead + 1;
    unsigned k = 0;
    while (Integer(1) << k < bound) {
        ++k;
    }
    const Integer B = Integer(1) << k;

    Dense q(a.size());
    for (std::size_t i = 0; i <= d; ++i) {
        q[i] = a[i] << static_cast<mp_bitcnt_t>(k * i);
    }

    struct Task {
        Dense poly;
        Integer c;
        unsigned depth;
    };
    std::vector<Task> stack;
    stack.push_back(Task{q, 0, 0});
    while (!stack.empty()) {
        Task t = std::move(stack.back());
        stack.pop_back();
        trim(t.poly);
        if (t.poly.size() <= 1) {
            continue;
        }
        const int v = descartes_unit(t.poly);
        const Rational scale = Rational(B) / Rational(Integer(1) << t.depth);
        if (v == 0) {
            continue;
        }
        if (v == 1) {
            out.push_back(IsolatingInterval{Rational(t.c) * scale, Rational(t.c + 1) * scale});
            continue;
        }
        const std::size_t n = t.poly.size() - 1;
        // Left half: 2^n p(t/2).
        Dense left(t.poly.size());
        for (std::size_t i = 0; i <= n; ++i) {
            left[i] = t.poly[i] << static_cast<mp_bitcnt_t>(n - i);
        }
        Integer at_mid = 0;
        for (const auto& c : left) {
            at_mid += c;
        }
        Dense poly = t.poly;
        if (at_mid == 0) {
            const Rational mid = (Rational(t.c) + Rational(1, 2)) * scale;
            out.push_back(IsolatingInterval{mid, mid});
            poly = divide_by_half_root(poly);
            const std::size_t m = poly.size() - 1;
            left.assign(poly.size(), 0);
            for (std::size_t i = 0; i <= m; ++i) {
                left[i] = poly[i] << static_cast<mp_bitcnt_t>(m - i);
            }
        }
        Dense right = left;
        taylor_shift_one(right);
        stack.push_back(Task{std::move(right), 2 * t.c + 1, t.depth + 1});
        stack.push_back(Task{std::move(left), 2 * t.c, t.depth + 1});
    }
    return out;
}

void refine_dense(const Dense& a, IsolatingInterval& iv, const Rational& width) {
    if (iv.exact()) {
        return;
    }
    const int lower = sign_at_rational(a, iv.lo);
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        const int s = sign_at_rational(a, mid);
        if (s == 0) {
            iv.lo = iv.hi = mid;
            return;
        }
        if (s == lower) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
}

Dense derivative_dense(const Dense& a) {
    Dense d(a.size() > 1 ? a.size() - 1 : 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i) {
        d[i - 1] = a[i] * static_cast<unsigned long>(i);
    }
    return d;
}

// Moves interval ends off roots of the squarefree a. The open interval holds
// exactly one root, so the sign just inside each end is known.
void detach_endpoints(const Dense& a, IsolatingInterval& iv) {
    if (iv.exact()) {
        return;
    }
    int lo_sign = sign_at_rational(a, iv.lo);
    int hi_sign = sign_at_rational(a, iv.hi);
    if (lo_sign != 0 && hi_sign != 0) {
        return;
    }
    const Dense da = derivative_dense(a);
    const int left = lo_sign != 0 ? lo_sign : sign_at_rational(da, iv.lo);
    while (lo_sign == 0 || hi_sign == 0) {
        const Rational mid = (iv.lo + iv.hi) / 2;
        const int s = sign_at_rational(a, mid);
        if (s == 0) {
            iv.lo = iv.hi = mid;
            return;
        }
        if (s == left) {
            iv.lo = mid;
            lo_sign = s;
        } else {
            iv.hi = mid;
            hi_sign = s;
        }
    }
}

}  // namespace

int sign_at_rational(std::span<const Integer> dense, const Rational& r) {
    // Homogeneous Horner: sum a_i p^i q^(d-i) has the sign of f(p/q).
    const Integer& p = r.get_num();
    const Integer& q = r.get_den();
    const std::size_t d = dense.size() - 1;
    Integer acc = dense[d];
    Integer qpow = 1;
    for (std::size_t i = d; i-- > 0;) {
        qpow *= q;
        acc = acc * p + dense[i] * qpow;
    }
    return sgn(acc);
}

std::vector<IsolatingInterval> isolate_real_roots(const Poly& f) {
    if (f.is_zero()) {
        throw DomainError("root isolation of the zero polynomial");
    }
    if (f.is_constant()) {
        return {};
    }
    if (f.variables().size() != 1) {
        throw DomainError("root isolation requires a univariate polynomial");
    }
    Dense a = to_dense(squarefree_part(f));
    std::vector<IsolatingInterval> roots;
    if (a[0] == 0) {
        roots.push_back(IsolatingInterval{0, 0});
        a.erase(a.begin());
    }
    for (auto& iv : isolate_positive(a)) {
        roots.push_back(iv);
    }
    Dense neg = a;
    for (std::size_t i = 1; i < neg.size(); i += 2) {
        neg[i] = -neg[i];
    }
    for (auto& iv : isolate_positive(neg)) {
        roots.push_back(IsolatingInterval{-iv.hi, -iv.lo});
    }
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    Dense full = to_dense(squarefree_part(f));
    for (auto& iv : roots) {
        detach_endpoints(full, iv);
        refine_dense(full, iv, Rational(1));
    }
    return roots;
}

AlgebraicCoordinate refine(const AlgebraicCoordinate& coord, int var, const Rational& width) {
    if (coord.is_rational()) {
        return coord;
    }
    const RootOf& r = coord.root();
    if (r.defining.variables() != std::vector<int>{var}) {
        throw DomainError("coordinate refinement without a sample point needs a univariate defining polynomial");
    }
    Dense a = to_dense(r.defining);
    IsolatingInterval iv{r.lo, r.hi};
    refine_dense(a, iv, width);
    if (iv.exact()) {
        return AlgebraicCoordinate(iv.lo);
    }
    RootOf out = r;
    out.lo = iv.lo;
    out.hi = iv.hi;
    out.lower_sign = sign_at_rational(a, iv.lo);
    return AlgebraicCoordinate(std::move(out));
}

Rational simplest_rational(const Rational& lo, bool lo_open, const Rational& hi, bool hi_open) {
    auto contains = [&](const Rational& x) {
        const bool above = lo_open ? x > lo : x >= lo;
        const bool below = hi_open ? x < hi : x <= hi;
        return above && below;
    };
    if (lo > hi || (lo == hi && (lo_open || hi_open))) {
        throw DomainError("empty interval");
    }
    if (contains(Rational(0))) {
        return Rational(0);
    }
    if (sgn(hi) <= 0) {
        return -simplest_rational(-hi, hi_open, -lo, lo_open);
    }
    // Now everything is positive: lo >= 0.
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    Rational cand = (lo == Rational(fl) && !lo_open) ? Rational(fl) : Rational(fl + 1);
    if (contains(cand)) {
        return cand;
    }
    // No integer inside: the interval lies within [fl, fl + 1].
    const Rational a = lo - Rational(fl);
    const Rational b = hi - Rational(fl);
    Rational y;
    if (sgn(a) == 0) {
        // x in (fl, fl + b): 1/(x - fl) ranges over (1/b, inf) or [1/b, inf).
        const Rational lower = 1 / b;
        Integer f2;
        mpz_fdiv_q(f2.get_mpz_t(), lower.get_num_mpz_t(), lower.get_den_mpz_t());
        y = (lower == Rational(f2) && !hi_open) ? Rational(f2) : Rational(f2 + 1);
    } else {
        y = simplest_rational(1 / b, hi_open, 1 / a, lo_open);
    }
    Rational result = Rational(fl) + 1 / y;
    result.canonicalize();
    return result;
}

}  // namespace projcad
