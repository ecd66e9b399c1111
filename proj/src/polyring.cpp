#include "projcad/polyring.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace projcad {

VarOrder::VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) {
        throw DomainError("variable order must not be empty");
    }
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second) {
            throw DomainError("duplicate variable '" + n + "' in variable order");
        }
    }
}

std::optional<int> VarOrder::level_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<int>(it - names_.begin()) + 1;
}

int sign(const Integer& v) { return sgn(v); }
int sign(const Rational& v) { return sgn(v); }

// construction ----------------------------------------------------------------

Poly Poly::var(int level, unsigned degree) {
    if (level < 1) {
        throw DomainError("variable level must be positive");
    }
    if (degree == 0) {
        return Poly(1);
    }
    Poly p;
    p.level_ = level;
    p.terms_.push_back(Term{degree, Poly(1)});
    return p;
}

Poly Poly::from_terms(int level, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.deg > b.deg; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        assert(t.coeff.level() < level);
        if (!merged.empty() && merged.back().deg == t.deg) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    if (merged.empty()) {
        return Poly();
    }
    if (merged.front().deg == 0) {
        return merged.front().coeff;
    }
    Poly p;
    p.level_ = level;
    p.terms_ = std::move(merged);
    return p;
}

Poly Poly::from_coeffs(int level, std::span<const Poly> coeffs) {
    std::vector<Term> terms;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (!coeffs[k].is_zero()) {
            terms.push_back(Term{static_cast<unsigned>(k), coeffs[k]});
        }
    }
    return from_terms(level, std::move(terms));
}

// accessors -------------------------------------------------------------------

unsigned Poly::degree() const { return terms_.empty() ? 0 : terms_.front().deg; }

unsigned Poly::degree_in(int level) const {
    if (level_ == 0 || level > level_) {
        return 0;
    }
    if (level == level_) {
        return degree();
    }
    unsigned d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.coeff.degree_in(level));
    }
    return d;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.deg + t.coeff.total_degree());
    }
    return d;
}

const Integer& Poly::constant_value() const {
    if (level_ != 0) {
        throw DomainError("polynomial is not a constant");
    }
    return constant_;
}

Poly Poly::coeff(unsigned k) const {
    if (level_ == 0) {
        return k == 0 ? *this : Poly();
    }
    for (const auto& t : terms_) {
        if (t.deg == k) {
            return t.coeff;
        }
        if (t.deg < k) {
            break;
        }
    }
    return Poly();
}

Poly Poly::leading_coeff() const { return level_ == 0 ? *this : terms_.front().coeff; }

Integer Poly::base_leading_coeff() const {
    const Poly* p = this;
    while (p->level_ != 0) {
        p = &p->terms_.front().coeff;
    }
    return p->constant_;
}

Poly Poly::reductum(unsigned k) const {
    if (k == 0) {
        return *this;
    }
    if (level_ == 0) {
        if (k == 1) {
            return Poly();
        }
        throw DomainError("reductum index out of range");
    }
    if (k > degree()) {
        throw DomainError("reductum index out of range");
    }
    // red^k removes the terms of the k highest degrees deg(f), ..., deg(f)-k+1.
    const unsigned cutoff = degree() - k;
    std::vector<Term> rest;
    for (const auto& t : terms_) {
        if (t.deg <= cutoff) {
            rest.push_back(t);
        }
    }
    return from_terms(level_, std::move(rest));
}

std::vector<Poly> Poly::nonzero_coeffs() const {
    if (level_ == 0) {
        return is_zero() ? std::vector<Poly>{} : std::vector<Poly>{*this};
    }
    std::vector<Poly> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        out.push_back(t.coeff);
    }
    return out;
}

std::vector<Poly> Poly::coeffs_in(int level) const {
    if (level_ < level || !involves(level)) {
        return {*this};
    }
    if (level_ == level) {
        std::vector<Poly> out(degree() + 1);
        for (const auto& t : terms_) {
            out[t.deg] = t.coeff;
        }
        return out;
    }
    std::vector<Poly> out(degree_in(level) + 1);
    for (const auto& t : terms_) {
        auto inner = t.coeff.coeffs_in(level);
        for (std::size_t k = 0; k < inner.size(); ++k) {
            if (!inner[k].is_zero()) {
                out[k] += inner[k].shift(level_, t.deg);
            }
        }
    }
    return out;
}

bool Poly::involves(int level) const {
    if (level_ == 0 || level > level_) {
        return false;
    }
    if (level == level_) {
        return true;
    }
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.coeff.involves(level); });
}

std::vector<int> Poly::variables() const {
    std::vector<int> out;
    for (int l = 1; l <= level_; ++l) {
        if (involves(l)) {
            out.push_back(l);
        }
    }
    return out;
}

// arithmetic ------------------------------------------------------------------

Poly Poly::operator-() const {
    Poly r = *this;
    if (r.level_ == 0) {
        r.constant_ = -r.constant_;
    } else {
        for (auto& t : r.terms_) {
            t.coeff = -t.coeff;
        }
    }
    return r;
}

namespace {

// a has strictly higher level than b: add b into the constant term of a.
Poly add_lower(const Poly& a, const Poly& b) {
    std::vector<Term> terms = a.terms();
    if (!terms.empty() && terms.back().deg == 0) {
        terms.back().coeff += b;
    } else {
        terms.push_back(Term{0, b});
    }
    return Poly::from_terms(a.level(), std::move(terms));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.level_ == 0 && b.level_ == 0) {
        return Poly(Integer(a.constant_ + b.constant_));
    }
    if (a.level_ > b.level_) {
        return add_lower(a, b);
    }
    if (b.level_ > a.level_) {
        return add_lower(b, a);
    }
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->deg > ib->deg)) {
            out.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->deg > ia->deg) {
            out.push_back(*ib++);
        } else {
            Poly c = ia->coeff + ib->coeff;
            if (!c.is_zero()) {
                out.push_back(Term{ia->deg, std::move(c)});
            }
            ++ia;
            ++ib;
        }
    }
    return Poly::from_terms(a.level_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    if (a.level_ == 0 && b.level_ == 0) {
        return Poly(Integer(a.constant_ * b.constant_));
    }
    if (a.level_ < b.level_) {
        return b * a;
    }
    if (a.level_ > b.level_) {
        std::vector<Term> out;
        out.reserve(a.terms_.size());
        for (const auto& t : a.terms_) {
            out.push_back(Term{t.deg, t.coeff * b});
        }
        return Poly::from_terms(a.level_, std::move(out));
    }
    std::vector<Poly> acc(a.degree() + b.degree() + 1);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            acc[ta.deg + tb.deg] += ta.coeff * tb.coeff;
        }
    }
    return Poly::from_coeffs(a.level_, acc);
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Poly Poly::shift(int level, unsigned k) const {
    if (k == 0 || is_zero()) {
        return *this;
    }
    if (level_ == level) {
        Poly r = *this;
        for (auto& t : r.terms_) {
            t.deg += k;
        }
        return r;
    }
    return *this * Poly::var(level, k);
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.level_ != b.level_) {
        return a.level_ < b.level_ ? -1 : 1;
    }
    if (a.level_ == 0) {
        return cmp(a.constant_, b.constant_) < 0 ? -1 : (cmp(a.constant_, b.constant_) > 0 ? 1 : 0);
    }
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Term& ta = a.terms_[i];
        const Term& tb = b.terms_[i];
        if (ta.deg != tb.deg) {
            return ta.deg < tb.deg ? -1 : 1;
        }
        if (int c = compare(ta.coeff, tb.coeff); c != 0) {
            return c;
        }
    }
    if (a.terms_.size() != b.terms_.size()) {
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    }
    return 0;
}

// division --------------------------------------------------------------------

std::optional<Poly> try_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) {
        throw DomainError("division by zero polynomial");
    }
    if (f.is_zero()) {
        return Poly();
    }
    if (g.level() == 0) {
        if (f.level() == 0) {
            if (!mpz_divisible_p(f.constant_value().get_mpz_t(), g.constant_value().get_mpz_t())) {
                return std::nullopt;
            }
            return Poly(Integer(f.constant_value() / g.constant_value()));
        }
        std::vector<Term> out;
        out.reserve(f.terms().size());
        for (const auto& t : f.terms()) {
            auto q = try_divide(t.coeff, g);
            if (!q) {
                return std::nullopt;
            }
            out.push_back(Term{t.deg, std::move(*q)});
        }
        return Poly::from_terms(f.level(), std::move(out));
    }
    if (f.level() < g.level()) {
        return std::nullopt;
    }
    if (f.level() > g.level()) {
        std::vector<Term> out;
        out.reserve(f.terms().size());
        for (const auto& t : f.terms()) {
            auto q = try_divide(t.coeff, g);
            if (!q) {
                return std::nullopt;
            }
            out.push_back(Term{t.deg, std::move(*q)});
        }
        return Poly::from_terms(f.level(), std::move(out));
    }
    const int level = g.level();
    const unsigned dg = g.degree();
    const Poly& lg = g.leading_coeff();
    Poly r = f;
    std::vector<Term> quotient;
    while (!r.is_zero() && r.level() == level && r.degree() >= dg) {
        auto t = try_divide(r.leading_coeff(), lg);
        if (!t) {
            return std::nullopt;
        }
        const unsigned shift = r.degree() - dg;
        Poly mono = t->shift(level, shift);
        quotient.push_back(Term{shift, std::move(*t)});
        r -= mono * g;
    }
    if (!r.is_zero()) {
        return std::nullopt;
    }
    return Poly::from_terms(level, std::move(quotient));
}

Poly exact_divide(const Poly& f, const Poly& g) {
    auto q = try_divide(f, g);
    if (!q) {
        throw InexactDivision();
    }
    return std::move(*q);
}

std::pair<Poly, Poly> pseudo_divide(const Poly& f, const Poly& g, int level) {
    const unsigned dg = g.degree_in(level);
    if (dg == 0) {
        throw DomainError("pseudo-division by a polynomial of degree 0 in the division variable");
    }
    auto gc = g.coeffs_in(level);
    const Poly lg = gc.back();
    const unsigned df = f.degree_in(level);
    if (df < dg) {
        return {Poly(), f};
    }
    unsigned remaining = df - dg + 1;
    Poly r = f;
    Poly q;
    while (!r.is_zero() && r.degree_in(level) >= dg) {
        const unsigned dr = r.degree_in(level);
        Poly lr = r.coeffs_in(level).back();
        Poly mono = lr.shift(level, dr - dg);
        q = q * lg + mono;
        r = r * lg - mono * g;
        --remaining;
    }
    if (remaining > 0) {
        Poly scale = lg.pow(remaining);
        q *= scale;
        r *= scale;
    }
    return {q, r};
}

Poly pseudo_remainder(const Poly& f, const Poly& g, int level) { return pseudo_divide(f, g, level).second; }

Poly derivative(const Poly& f, int level) {
    if (f.level() < level) {
        return Poly();
    }
    std::vector<Term> out;
    if (f.level() == level) {
        for (const auto& t : f.terms()) {
            if (t.deg > 0) {
                out.push_back(Term{t.deg - 1, t.coeff * Poly(static_cast<long>(t.deg))});
            }
        }
    } else {
        for (const auto& t : f.terms()) {
            out.push_back(Term{t.deg, derivative(t.coeff, level)});
        }
    }
    return Poly::from_terms(f.level(), std::move(out));
}

// evaluation ------------------------------------------------------------------

namespace {

Integer pow_ui(const Integer& b, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Returns q^D * f(x_level = p/q) for a fixed D >= deg_{x_level}(f).
Poly substitute_scaled(const Poly& f, int level, const Integer& p, const Integer& q, unsigned D) {
    if (f.level() < level || !f.involves(level)) {
        return f * Poly(Integer(pow_ui(q, D)));
    }
    if (f.level() > level) {
        std::vector<Term> out;
        out.reserve(f.terms().size());
        for (const auto& t : f.terms()) {
            out.push_back(Term{t.deg, substitute_scaled(t.coeff, level, p, q, D)});
        }
        return Poly::from_terms(f.level(), std::move(out));
    }
    // Horner in homogeneous form: sum c_k p^k q^(D-k).
    const unsigned df = f.degree();
    Poly acc;
    unsigned prev = df;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (first) {
            acc = t.coeff;
            first = false;
        } else {
            const unsigned gap = prev - t.deg;
            acc = acc * Poly(Integer(pow_ui(p, gap))) + t.coeff * Poly(Integer(pow_ui(q, df - t.deg)));
        }
        prev = t.deg;
    }
    acc *= Poly(Integer(pow_ui(p, prev)));
    return acc * Poly(Integer(pow_ui(q, D - df)));
}

}  // namespace

Poly substitute(const Poly& f, int level, const Rational& value) {
    const unsigned D = f.degree_in(level);
    if (D == 0) {
        return f;
    }
    return substitute_scaled(f, level, value.get_num(), value.get_den(), D);
}

Rational evaluate(const Poly& f, std::span<const Rational> point) {
    if (f.level() == 0) {
        return Rational(f.constant_value());
    }
    if (static_cast<std::size_t>(f.level()) > point.size()) {
        throw DomainError("evaluation point does not fix every variable");
    }
    const Rational& x = point[static_cast<std::size_t>(f.level() - 1)];
    Rational acc = 0;
    unsigned prev = f.degree();
    for (const auto& t : f.terms()) {
        for (unsigned k = t.deg; k < prev; ++k) {
            acc *= x;
        }
        acc += evaluate(t.coeff, point);
        prev = t.deg;
    }
    for (unsigned k = 0; k < prev; ++k) {
        acc *= x;
    }
    return acc;
}

std::vector<Integer> to_dense(const Poly& f) {
    if (f.level() == 0) {
        return {f.constant_value()};
    }
    std::vector<Integer> out(f.degree() + 1);
    for (const auto& t : f.terms()) {
        if (t.coeff.level() != 0) {
            throw DomainError("polynomial is not univariate");
        }
        out[t.deg] = t.coeff.constant_value();
    }
    return out;
}

// printing --------------------------------------------------------------------

namespace {

struct Monomial {
    std::vector<unsigned> exps;  // indexed by level-1
    Integer coeff;
};

void collect_monomials(const Poly& f, std::vector<unsigned>& exps, std::vector<Monomial>& out) {
    if (f.level() == 0) {
        if (!f.is_zero()) {
            out.push_back(Monomial{exps, f.constant_value()});
        }
        return;
    }
    for (const auto& t : f.terms()) {
        exps[static_cast<std::size_t>(f.level() - 1)] = t.deg;
        collect_monomials(t.coeff, exps, out);
        exps[static_cast<std::size_t>(f.level() - 1)] = 0;
    }
}

}  // namespace

std::string Poly::to_string(const VarOrder& order) const {
    if (is_zero()) {
        return "0";
    }
    std::vector<unsigned> exps(static_cast<std::size_t>(std::max(level_, 1)), 0);
    std::vector<Monomial> monos;
    collect_monomials(*this, exps, monos);
    std::ostringstream os;
    bool first = true;
    for (const auto& m : monos) {
        Integer c = m.coeff;
        const bool negative = sgn(c) < 0;
        if (negative) {
            c = -c;
        }
        if (first) {
            if (negative) {
                os << "-";
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t l = exps.size(); l-- > 0;) {
            if (m.exps[l] == 0) {
                continue;
            }
            std::string v = order.name(static_cast<int>(l) + 1);
            if (m.exps[l] > 1) {
                v += "^" + std::to_string(m.exps[l]);
            }
            factors.push_back(v);
        }
        if (factors.empty()) {
            os << c.get_str();
            continue;
        }
        if (c != 1) {
            os << c.get_str() << "*";
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) {
                os << "*";
            }
            os << factors[i];
        }
    }
    return os.str();
}

// PolySet ---------------------------------------------------------------------

Poly PolySet::key(const Poly& f) { return normalize(remove_integer_content(f)); }

bool PolySet::insert(const Poly& f) {
    if (f.is_constant()) {
        return false;
    }
    Poly k = key(f);
    auto it = std::lower_bound(elems_.begin(), elems_.end(), k);
    if (it != elems_.end() && *it == k) {
        return false;
    }
    elems_.insert(it, std::move(k));
    return true;
}

bool PolySet::contains(const Poly& f) const {
    if (f.is_constant()) {
        return false;
    }
    return std::binary_search(elems_.begin(), elems_.end(), key(f));
}

}  // namespace projcad
