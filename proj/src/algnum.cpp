// Exact arithmetic at triangular sample points.

#include <algorithm>

#include "projcad/algnum.hpp"

namespace projcad {

namespace {

// Guard against runaway refinement; nonzero values separate from zero long
// before this.
constexpr int kMaxRefineRounds = 4000;

Interval add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval mul(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

// Substitutes the rational coordinates among the first k of s.
Poly substitute_rationals_upto(const Poly& q, const SamplePoint& s, std::size_t k) {
    Poly r = q;
    for (std::size_t i = std::min(k, s.size()); i-- > 0;) {
        if (s[i].is_rational() && r.involves(static_cast<int>(i) + 1)) {
            r = substitute(r, static_cast<int>(i) + 1, s[i].rational());
        }
    }
    return remove_integer_content(r);
}

bool univariate_in(const Poly& p, int var) {
    const auto vars = p.variables();
    return vars.empty() || (vars.size() == 1 && vars[0] == var);
}

}  // namespace

// coordinates -----------------------------------------------------------------

Interval AlgebraicCoordinate::bounds() const {
    if (is_rational()) {
        return {rational(), rational()};
    }
    return {root().lo, root().hi};
}

double AlgebraicCoordinate::approx() const {
    const Interval b = bounds();
    return Rational((b.lo + b.hi) / 2).get_d();
}

SamplePoint SamplePoint::extended(AlgebraicCoordinate c) const {
    SamplePoint out = *this;
    out.coords_.push_back(std::move(c));
    return out;
}

SamplePoint SamplePoint::prefix(std::size_t k) const {
    return SamplePoint(std::vector<AlgebraicCoordinate>(coords_.begin(),
                                                        coords_.begin() + static_cast<std::ptrdiff_t>(k)));
}

bool SamplePoint::all_rational() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_rational(); });
}

void SamplePoint::bisect(std::size_t i) {
    if (coords_.at(i).is_rational()) {
        return;
    }
    Fiber fiber(*this, static_cast<int>(i) + 1);
    fiber.bisect(coords_[i]);
}

void SamplePoint::refine(std::size_t i, const Rational& width) {
    while (!coords_.at(i).is_rational()) {
        const RootOf& r = coords_[i].root();
        if (r.hi - r.lo <= width) {
            return;
        }
        bisect(i);
    }
}

// evaluation ------------------------------------------------------------------

Poly substitute_rationals(const Poly& q, const SamplePoint& s) { return substitute_rationals_upto(q, s, s.size()); }

Interval eval_interval(const Poly& q, const SamplePoint& s) {
    if (q.is_constant()) {
        return {Rational(q.constant_value()), Rational(q.constant_value())};
    }
    if (static_cast<std::size_t>(q.level()) > s.size()) {
        throw DomainError("polynomial involves a variable not fixed by the sample point");
    }
    const Interval x = s[static_cast<std::size_t>(q.level() - 1)].bounds();
    Interval acc{0, 0};
    unsigned prev = q.degree();
    bool first = true;
    for (const auto& t : q.terms()) {
        if (!first) {
            for (unsigned k = t.deg; k < prev; ++k) {
                acc = mul(acc, x);
            }
        }
        acc = add(acc, eval_interval(t.coeff, s));
        first = false;
        prev = t.deg;
    }
    for (unsigned k = 0; k < prev; ++k) {
        acc = mul(acc, x);
    }
    return acc;
}

namespace {

// q(s) == 0 for q with only algebraic coordinates left; q nonconstant.
bool vanishes_at(const Poly& q, SamplePoint& s) {
    const int var = q.level();
    const AlgebraicCoordinate& c = s[static_cast<std::size_t>(var - 1)];
    if (c.is_rational()) {
        throw IntegrityError("rational coordinate left after substitution");
    }
    Fiber fiber(s, var);
    if (fiber.is_zero(q)) {
        return true;
    }
    const RootOf& root = c.root();
    Poly g = fiber.gcd(root.defining, q);
    if (fiber.degree(g) <= 0) {
        return false;
    }
    const Rational lo = root.lo;
    const Rational hi = root.hi;
    const int slo = fiber.sign_at(g, lo);
    const int shi = fiber.sign_at(g, hi);
    if (slo == 0 || shi == 0) {
        throw IntegrityError("isolating interval endpoint is a root");
    }
    return slo != shi;
}

}  // namespace

int sign_at(const Poly& q, SamplePoint& s) {
    if (static_cast<std::size_t>(q.level()) > s.size()) {
        throw DomainError("polynomial involves a variable not fixed by the sample point");
    }
    Poly r = substitute_rationals(q, s);
    if (r.is_constant()) {
        return sgn(r.constant_value());
    }
    Interval v = eval_interval(r, s);
    if (!v.contains_zero()) {
        return sgn(v.lo);
    }
    if (vanishes_at(r, s)) {
        return 0;
    }
    const std::size_t top = static_cast<std::size_t>(r.level());
    for (int round = 0; round < kMaxRefineRounds; ++round) {
        for (std::size_t i = 0; i < top; ++i) {
            s.bisect(i);
        }
        r = substitute_rationals(r, s);  // bisection may have hit exact roots
        if (r.is_constant()) {
            return sgn(r.constant_value());
        }
        v = eval_interval(r, s);
        if (!v.contains_zero()) {
            return sgn(v.lo);
        }
    }
    throw IntegrityError("sign determination did not converge");
}

int sign_at(const Poly& q, const SamplePoint& s) {
    SamplePoint copy = s;
    return sign_at(q, copy);
}

// fibers ----------------------------------------------------------------------

Fiber::Fiber(SamplePoint& base, int var) : base_(base), var_(var) {
    if (var < 1 || base.size() + 1 < static_cast<std::size_t>(var)) {
        throw DomainError("fiber variable is not the next unfixed variable");
    }
}

Poly Fiber::strip(const Poly& p) {
    Poly q = substitute_rationals_upto(p, base_, static_cast<std::size_t>(var_ - 1));
    if (q.level() < var_) {
        return ::projcad::sign_at(q, base_) == 0 ? Poly() : q;
    }
    const auto& terms = q.terms();
    std::size_t k = 0;
    while (k < terms.size() && ::projcad::sign_at(terms[k].coeff, base_) == 0) {
        ++k;
    }
    if (k == 0) {
        return q;
    }
    return Poly::from_terms(q.level(), std::vector<Term>(terms.begin() + static_cast<std::ptrdiff_t>(k), terms.end()));
}

bool Fiber::is_zero(const Poly& p) { return strip(p).is_zero(); }

int Fiber::degree(const Poly& p) {
    Poly q = strip(p);
    if (q.is_zero()) {
        return -1;
    }
    return q.level() == var_ ? static_cast<int>(q.degree()) : 0;
}

int Fiber::sign_at(const Poly& p, const Rational& x) {
    Poly q = p.level() >= var_ ? substitute(p, var_, x) : p;
    return ::projcad::sign_at(q, base_);
}

Poly Fiber::reduce(const Poly& p, bool keep_sign) {
    // p is stripped; its content in x_var is nonzero at the base.
    if (p.is_zero()) {
        return p;
    }
    if (p.level() < var_) {
        return Poly(::projcad::sign_at(p, base_) > 0 || !keep_sign ? 1 : -1);
    }
    auto [content, prim] = content_primitive(p);
    if (keep_sign && ::projcad::sign_at(content, base_) < 0) {
        return -prim;
    }
    return prim;
}

Poly Fiber::gcd(const Poly& a, const Poly& b) {
    Poly x = strip(a);
    Poly y = strip(b);
    if (x.is_zero() && y.is_zero()) {
        throw DomainError("gcd of two polynomials vanishing on the fiber");
    }
    if (univariate_in(x, var_) && univariate_in(y, var_)) {
        return ::projcad::gcd(x, y);
    }
    if (y.is_zero()) {
        return reduce(x, false);
    }
    if (x.is_zero()) {
        return reduce(y, false);
    }
    x = reduce(x, false);
    y = reduce(y, false);
    if (degree(x) < degree(y)) {
        std::swap(x, y);
    }
    while (true) {
        if (degree(y) == 0) {
            return Poly(1);
        }
        Poly r = strip(pseudo_remainder(x, y, var_));
        if (r.is_zero()) {
            return y;
        }
        x = std::move(y);
        y = reduce(r, false);
    }
}

Poly Fiber::quotient(const Poly& a, const Poly& b) {
    Poly x = strip(a);
    Poly y = strip(b);
    if (y.is_zero()) {
        throw DomainError("division by a polynomial vanishing on the fiber");
    }
    if (y.level() < var_) {
        return reduce(x, false);
    }
    if (x.level() < var_ || x.degree() < y.degree()) {
        if (!x.is_zero()) {
            throw InexactDivision();
        }
        return x;
    }
    auto [q, r] = pseudo_divide(x, y, var_);
    if (!is_zero(r)) {
        throw InexactDivision();
    }
    return reduce(strip(q), false);
}

Poly Fiber::squarefree(const Poly& p) {
    Poly x = strip(p);
    if (x.is_zero()) {
        throw DomainError("squarefree part of a polynomial vanishing on the fiber");
    }
    if (x.level() < var_) {
        return Poly(1);
    }
    Poly g = gcd(x, derivative(x, var_));
    if (degree(g) <= 0) {
        return reduce(x, false);
    }
    return quotient(x, g);
}

std::vector<Poly> Fiber::sturm(const Poly& p) {
    std::vector<Poly> seq;
    Poly a = reduce(strip(p), true);
    seq.push_back(a);
    if (a.level() < var_) {
        return seq;
    }
    Poly b = reduce(strip(derivative(a, var_)), true);
    while (!b.is_zero()) {
        seq.push_back(b);
        if (b.level() < var_) {
            break;
        }
        const unsigned delta = a.degree() - b.degree();
        Poly r = pseudo_remainder(a, b, var_);
        // prem = lc(b)^(delta+1) * rem; the next element is -rem.
        const bool flip = (delta % 2 == 0) && ::projcad::sign_at(b.leading_coeff(), base_) < 0;
        Poly next = flip ? r : -r;
        a = std::move(b);
        b = reduce(strip(next), true);
    }
    return seq;
}

int Fiber::variations(const std::vector<Poly>& seq, const Rational& x) {
    int count = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = sign_at(p, x);
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

int Fiber::variations_at_infinity(const std::vector<Poly>& seq, bool positive) {
    int count = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s;
        if (p.level() < var_) {
            s = ::projcad::sign_at(p, base_);
        } else {
            s = ::projcad::sign_at(p.leading_coeff(), base_);
            if (!positive && p.degree() % 2 == 1) {
                s = -s;
            }
        }
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

std::vector<AlgebraicCoordinate> Fiber::real_roots(const Poly& p) {
    Poly q = strip(p);
    if (q.is_zero() || q.level() < var_) {
        throw DomainError("root isolation needs positive degree over the fiber");
    }
    std::vector<AlgebraicCoordinate> out;
    if (univariate_in(q, var_)) {
        for (const auto& iv : isolate_real_roots(q)) {
            if (iv.exact()) {
                out.emplace_back(iv.lo);
            } else {
                Poly d = squarefree_part(q);
                out.emplace_back(RootOf{d, iv.lo, iv.hi, sign_at_rational(to_dense(d), iv.lo)});
            }
        }
        return out;
    }

    q = reduce(q, true);
    const std::vector<Poly> seq = sturm(q);
    // Cauchy bound from interval enclosures of the coefficients.
    Interval lc = eval_interval(q.leading_coeff(), base_);
    for (int round = 0; lc.contains_zero(); ++round) {
        if (round > kMaxRefineRounds) {
            throw IntegrityError("leading coefficient does not separate from zero");
        }
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(var_); ++i) {
            base_.bisect(i);
        }
        lc = eval_interval(q.leading_coeff(), base_);
    }
    const Rational lc_min = sgn(lc.lo) > 0 ? lc.lo : Rational(-lc.hi);
    Rational max_ratio = 0;
    for (std::size_t k = 1; k < q.terms().size(); ++k) {
        const Interval c = eval_interval(q.terms()[k].coeff, base_);
        const Rational mag = std::max(Rational(abs(c.lo)), Rational(abs(c.hi)));
        max_ratio = std::max(max_ratio, Rational(mag / lc_min));
    }
    Integer bound = 1;
    while (Rational(bound) <= max_ratio + 1) {
        bound *= 2;
    }

    struct Pending {
        Rational lo;
        Rational hi;
        int vlo;
        int vhi;
    };
    const Rational B(bound);
    std::vector<Pending> work{{-B, B, variations(seq, -B), variations(seq, B)}};
    std::vector<IsolatingInterval> isolated;
    while (!work.empty()) {
        Pending w = work.back();
        work.pop_back();
        const int count = w.vlo - w.vhi;
        if (count == 0) {
            continue;
        }
        if (count == 1) {
            isolated.push_back({w.lo, w.hi});
            continue;
        }
        // Split at a point that is not a root.
        Rational m = (w.lo + w.hi) / 2;
        for (int denom = 4; sign_at(q, m) == 0; denom *= 2) {
            m = w.lo + (w.hi - w.lo) / denom;
        }
        const int vm = variations(seq, m);
        work.push_back({m, w.hi, vm, w.vhi});
        work.push_back({w.lo, m, w.vlo, vm});
    }
    std::sort(isolated.begin(), isolated.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    for (const auto& iv : isolated) {
        out.emplace_back(RootOf{q, iv.lo, iv.hi, sign_at(q, iv.lo)});
    }
    return out;
}

void Fiber::bisect(AlgebraicCoordinate& c) {
    if (c.is_rational()) {
        return;
    }
    RootOf& r = c.root();
    const Rational m = (r.lo + r.hi) / 2;
    const int s = sign_at(r.defining, m);
    if (s == 0) {
        c = AlgebraicCoordinate(m);
    } else if (s == r.lower_sign) {
        r.lo = m;
    } else {
        r.hi = m;
    }
}

// comparisons -----------------------------------------------------------------

namespace {

// Compares a rational with a root over the fiber.
int compare_rational_root(const Rational& x, const AlgebraicCoordinate& b, Fiber& fiber) {
    const RootOf& r = b.root();
    if (x <= r.lo) {
        return -1;
    }
    if (x >= r.hi) {
        return 1;
    }
    const int s = fiber.sign_at(r.defining, x);
    if (s == 0) {
        return 0;
    }
    return s == r.lower_sign ? -1 : 1;
}

}  // namespace

int compare_roots(AlgebraicCoordinate& a, AlgebraicCoordinate& b, SamplePoint& fiber_point, int var) {
    Fiber fiber(fiber_point, var);
    bool equality_checked = false;
    for (int round = 0; round < kMaxRefineRounds; ++round) {
        if (a.is_rational() && b.is_rational()) {
            return cmp(a.rational(), b.rational()) < 0 ? -1 : (a.rational() == b.rational() ? 0 : 1);
        }
        if (a.is_rational()) {
            return compare_rational_root(a.rational(), b, fiber);
        }
        if (b.is_rational()) {
            return -compare_rational_root(b.rational(), a, fiber);
        }
        const RootOf& ra = a.root();
        const RootOf& rb = b.root();
        if (ra.hi <= rb.lo) {
            return -1;
        }
        if (rb.hi <= ra.lo) {
            return 1;
        }
        if (!equality_checked) {
            equality_checked = true;
            Poly g = fiber.gcd(ra.defining, rb.defining);
            if (fiber.degree(g) > 0) {
                const Rational lo = std::max(ra.lo, rb.lo);
                const Rational hi = std::min(ra.hi, rb.hi);
                const int slo = fiber.sign_at(g, lo);
                const int shi = fiber.sign_at(g, hi);
                if (slo != 0 && shi != 0 && slo != shi) {
                    return 0;
                }
            }
        }
        fiber.bisect(a);
        fiber.bisect(b);
    }
    throw IntegrityError("root comparison did not converge");
}

// stacks ----------------------------------------------------------------------

FiberRoots roots_over_cell(std::span<const Poly> polys, SamplePoint& s) {
    const int var = static_cast<int>(s.size()) + 1;
    Fiber fiber(s, var);
    std::vector<Poly> stripped;
    for (const auto& p : polys) {
        if (p.level() > var) {
            throw DomainError("polynomial involves a variable above the fiber");
        }
        Poly q = fiber.strip(p);
        if (q.is_zero()) {
            throw DomainError("separability violated");
        }
        stripped.push_back(std::move(q));
    }
    for (std::size_t i = 0; i < stripped.size(); ++i) {
        Poly& p = stripped[i];
        if (p.level() < var) {
            continue;
        }
        // Repeated roots of a single polynomial are harmless: only its zero set matters.
        p = fiber.squarefree(p);
        for (std::size_t j = i + 1; j < stripped.size(); ++j) {
            if (stripped[j].level() == var && fiber.degree(fiber.gcd(p, stripped[j])) > 0) {
                throw DomainError("separability violated");
            }
        }
    }

    FiberRoots out;
    for (std::size_t i = 0; i < stripped.size(); ++i) {
        if (stripped[i].level() < var) {
            continue;
        }
        for (auto& root : fiber.real_roots(stripped[i])) {
            // Insertion by exact comparison keeps the sections ordered.
            std::size_t pos = out.sections.size();
            for (std::size_t k = 0; k < out.sections.size(); ++k) {
                const int c = compare_roots(root, out.sections[k], s, var);
                if (c == 0) {
                    throw DomainError("separability violated");
                }
                if (c < 0) {
                    pos = k;
                    break;
                }
            }
            out.sections.insert(out.sections.begin() + static_cast<std::ptrdiff_t>(pos), std::move(root));
            out.owner.insert(out.owner.begin() + static_cast<std::ptrdiff_t>(pos), i);
        }
    }

    auto& secs = out.sections;
    if (secs.empty()) {
        out.sector_samples.push_back(Rational(0));
        return out;
    }
    // Make neighbouring enclosures strictly disjoint so the open gap between
    // them is nonempty.
    for (std::size_t k = 0; k + 1 < secs.size(); ++k) {
        for (int round = 0; secs[k].upper() >= secs[k + 1].lower(); ++round) {
            if (round > kMaxRefineRounds) {
                throw IntegrityError("sections do not separate");
            }
            fiber.bisect(secs[k]);
            fiber.bisect(secs[k + 1]);
        }
    }
    Integer below;
    const Rational first = secs.front().lower();
    mpz_fdiv_q(below.get_mpz_t(), first.get_num_mpz_t(), first.get_den_mpz_t());
    out.sector_samples.push_back(Rational(below - 1));
    for (std::size_t k = 0; k + 1 < secs.size(); ++k) {
        out.sector_samples.push_back(simplest_rational(secs[k].upper(), true, secs[k + 1].lower(), true));
    }
    Integer above;
    const Rational last = secs.back().upper();
    mpz_cdiv_q(above.get_mpz_t(), last.get_num_mpz_t(), last.get_den_mpz_t());
    out.sector_samples.push_back(Rational(above + 1));
    return out;
}

}  // namespace projcad
