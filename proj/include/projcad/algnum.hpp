#pragma once

// Real root isolation and exact arithmetic at triangular sample points.
//
// A sample point fixes x_1, ..., x_k. Each coordinate is either a rational
// or the unique root of a defining polynomial inside an open isolating
// interval, where the defining polynomial involves only x_1, ..., x_i and is
// squarefree with nonvanishing leading coefficient once the earlier
// coordinates are substituted. Signs of polynomials at such points are
// decided exactly: interval evaluation settles nonzero values and a gcd over
// the fiber settles zeros.

#include <span>
#include <variant>
#include <vector>

#include "projcad/polyring.hpp"

namespace projcad {

/// Open interval (lo, hi) holding exactly one root, or the exact root when
/// lo == hi.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
};

/// Closed interval of rationals used for interval evaluation.
struct Interval {
    Rational lo;
    Rational hi;

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

/// Real roots of a nonzero polynomial in a single variable, increasing.
/// Intervals have width at most 1 and endpoints that are not roots.
/// The squarefree part is taken internally. Throws DomainError on zero or on
/// a polynomial in more than one variable.
std::vector<IsolatingInterval> isolate_real_roots(const Poly& f);

/// Sign of a univariate integer polynomial (dense, index = degree) at r.
int sign_at_rational(std::span<const Integer> dense, const Rational& r);

/// Root of `defining` in x_var lying in (lo, hi); `lower_sign` is the sign of
/// the defining polynomial at lo over the earlier coordinates.
struct RootOf {
    Poly defining;
    Rational lo;
    Rational hi;
    int lower_sign = 0;
};

class AlgebraicCoordinate {
public:
    AlgebraicCoordinate() : value_(Rational(0)) {}
    AlgebraicCoordinate(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    AlgebraicCoordinate(RootOf r) : value_(std::move(r)) {}    // NOLINT(google-explicit-constructor)

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    const Rational& rational() const { return std::get<Rational>(value_); }
    const RootOf& root() const { return std::get<RootOf>(value_); }
    RootOf& root() { return std::get<RootOf>(value_); }

    /// Enclosing interval; a point interval for rationals.
    Interval bounds() const;
    Rational lower() const { return bounds().lo; }
    Rational upper() const { return bounds().hi; }
    /// Midpoint of the enclosing interval as a double, for display.
    double approx() const;

private:
    std::variant<Rational, RootOf> value_;
};

class SamplePoint {
public:
    SamplePoint() = default;
    explicit SamplePoint(std::vector<AlgebraicCoordinate> coords) : coords_(std::move(coords)) {}

    std::size_t size() const { return coords_.size(); }
    const AlgebraicCoordinate& operator[](std::size_t i) const { return coords_[i]; }
    AlgebraicCoordinate& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<AlgebraicCoordinate>& coords() const { return coords_; }

    SamplePoint extended(AlgebraicCoordinate c) const;
    SamplePoint prefix(std::size_t k) const;
    bool all_rational() const;

    /// Bisects coordinate i until its interval width is at most `width`.
    void refine(std::size_t i, const Rational& width);
    /// One bisection step of coordinate i (no-op for rationals).
    void bisect(std::size_t i);

private:
    std::vector<AlgebraicCoordinate> coords_;
};

/// Refines a coordinate whose defining polynomial involves only its own
/// variable; rationals are returned unchanged.
AlgebraicCoordinate refine(const AlgebraicCoordinate& coord, int var, const Rational& width);

/// Exact sign of q at s. q may only involve variables fixed by s. Intervals
/// of s are refined in place (the represented point does not change).
int sign_at(const Poly& q, SamplePoint& s);
int sign_at(const Poly& q, const SamplePoint& s);

/// q with every rational coordinate of s substituted, scaled by a positive
/// factor and stripped of integer content. Variables not fixed by s stay.
Poly substitute_rationals(const Poly& q, const SamplePoint& s);

/// Interval enclosure of q over the box spanned by the coordinates of s.
Interval eval_interval(const Poly& q, const SamplePoint& s);

/// Compares two roots over the same fiber (coordinates for x_var, fiber s).
/// Refines as needed. Returns -1, 0, 1.
int compare_roots(AlgebraicCoordinate& a, AlgebraicCoordinate& b, SamplePoint& fiber, int var);

/// Arithmetic in x_var over the point fixed by the first var-1 coordinates of
/// a sample point. Polynomials stand for their specialization at that point;
/// every zero test is exact.
class Fiber {
public:
    Fiber(SamplePoint& base, int var);

    int var() const { return var_; }
    SamplePoint& base() { return base_; }

    /// p(base, x_var) is the zero polynomial.
    bool is_zero(const Poly& p);
    /// Drops leading coefficients (in x_var) that vanish at the base.
    Poly strip(const Poly& p);
    /// Degree in x_var of the specialization (-1 for zero).
    int degree(const Poly& p);
    /// Sign of p(base, x) for a rational x.
    int sign_at(const Poly& p, const Rational& x);

    Poly gcd(const Poly& a, const Poly& b);
    /// a / b at the base; b must divide a there.
    Poly quotient(const Poly& a, const Poly& b);
    Poly squarefree(const Poly& p);
    /// Sturm sequence of a squarefree specialization.
    std::vector<Poly> sturm(const Poly& p);
    /// Real roots of a squarefree specialization of positive degree, increasing.
    std::vector<AlgebraicCoordinate> real_roots(const Poly& p);
    /// One bisection step of a root over this fiber.
    void bisect(AlgebraicCoordinate& c);

private:
    Poly reduce(const Poly& p, bool keep_sign);
    int variations(const std::vector<Poly>& seq, const Rational& x);
    int variations_at_infinity(const std::vector<Poly>& seq, bool positive);

    SamplePoint& base_;
    int var_;
};

/// Real roots of a set of polynomials in x_i over the point s fixing
/// x_1, ..., x_{i-1}, with one rational sector sample per gap.
struct FiberRoots {
    std::vector<AlgebraicCoordinate> sections;  // strictly increasing
    std::vector<std::size_t> owner;             // index into the input of a polynomial vanishing there
    std::vector<Rational> sector_samples;       // sections.size() + 1 entries
};

/// `polys` must be pairwise coprime after specialization and none may vanish
/// identically there; repeated roots of a single polynomial are collapsed.
/// Throws DomainError("separability violated") otherwise.
FiberRoots roots_over_cell(std::span<const Poly> polys, SamplePoint& s);

/// Rational with the smallest denominator (then smallest magnitude) in the
/// interval between lo and hi; each end is open or closed as flagged.
Rational simplest_rational(const Rational& lo, bool lo_open, const Rational& hi, bool hi_open);

}  // namespace projcad
