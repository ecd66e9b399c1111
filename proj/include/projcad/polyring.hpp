#pragma once

// Exact sparse multivariate polynomials over the integers.
//
// A polynomial is stored recursively: a polynomial of level L is a sum of
// terms c_k * x_L^k whose coefficients are polynomials of level < L. Level 0
// polynomials are integer constants. Variables are identified by their
// 1-based position in a VarOrder; a polynomial's level is the index of its
// main variable. Values are immutable once built and all operations return
// canonical results (no zero terms, the top term has positive degree).

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "projcad/errors.hpp"

namespace projcad {

using Integer = mpz_class;
using Rational = mpq_class;

/// Ordered list of variable names in ascending significance. The last
/// variable is eliminated first during projection.
class VarOrder {
public:
    VarOrder() = default;
    explicit VarOrder(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(int level) const { return names_.at(static_cast<std::size_t>(level - 1)); }
    const std::vector<std::string>& names() const { return names_; }
    /// Level (1-based) of a variable, or nullopt when undeclared.
    std::optional<int> level_of(const std::string& name) const;

    bool operator==(const VarOrder&) const = default;

private:
    std::vector<std::string> names_;
};

struct Term;

class Poly {
public:
    Poly() = default;
    Poly(long c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
    Poly(const Integer& c) : constant_(c) {}  // NOLINT(google-explicit-constructor)

    /// x_level^degree.
    static Poly var(int level, unsigned degree = 1);
    /// Builds c_k * x_level^k sums, canonicalizing. Coefficients must have
    /// level < `level`; terms may be unsorted and repeated.
    static Poly from_terms(int level, std::vector<Term> terms);
    /// Dense constructor: coeffs[k] multiplies x_level^k.
    static Poly from_coeffs(int level, std::span<const Poly> coeffs);

    bool is_zero() const { return level_ == 0 && sgn(constant_) == 0; }
    bool is_constant() const { return level_ == 0; }
    int level() const { return level_; }
    /// Degree in the main variable (0 for constants).
    unsigned degree() const;
    unsigned degree_in(int level) const;
    /// Total degree over all variables.
    unsigned total_degree() const;

    const Integer& constant_value() const;
    /// Terms in descending degree order; empty for constants.
    const std::vector<Term>& terms() const { return terms_; }

    /// Coefficient of x_mvar^k (zero when absent).
    Poly coeff(unsigned k) const;
    Poly leading_coeff() const;
    /// Leading coefficient of the leading coefficient ..., down to an integer.
    Integer base_leading_coeff() const;
    /// red^k: drops every term of degree above deg(f) - k in the main
    /// variable. 0 <= k <= deg(f).
    Poly reductum(unsigned k = 1) const;
    /// All nonzero coefficients in the main variable, leading first.
    std::vector<Poly> nonzero_coeffs() const;
    /// Dense coefficient vector w.r.t. an arbitrary variable (index = degree).
    std::vector<Poly> coeffs_in(int level) const;
    /// True when the variable x_level occurs.
    bool involves(int level) const;
    /// Levels of all variables that occur, ascending.
    std::vector<int> variables() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly pow(unsigned e) const;
    /// Multiplies by x_level^k.
    Poly shift(int level, unsigned k) const;

    friend bool operator==(const Poly& a, const Poly& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
        return compare(a, b) <=> 0;
    }
    /// Deterministic total order: by level, then degree, then terms.
    static int compare(const Poly& a, const Poly& b);

    std::string to_string(const VarOrder& order) const;

private:
    friend struct Term;
    int level_ = 0;
    Integer constant_ = 0;
    std::vector<Term> terms_;
};

struct Term {
    unsigned deg;
    Poly coeff;
};

// ring arithmetic -----------------------------------------------------------

/// Quotient q with q*g == f, or nullopt when g does not divide f.
std::optional<Poly> try_divide(const Poly& f, const Poly& g);
/// Throws InexactDivision when g does not divide f.
Poly exact_divide(const Poly& f, const Poly& g);
/// Classical pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g, taken
/// w.r.t. x_level; g must have positive degree in x_level.
Poly pseudo_remainder(const Poly& f, const Poly& g, int level);
/// Pseudo-division returning (quotient, remainder) with
/// lc(g)^(deg f - deg g + 1) * f == q * g + r.
std::pair<Poly, Poly> pseudo_divide(const Poly& f, const Poly& g, int level);

/// Formal partial derivative with respect to x_level.
Poly derivative(const Poly& f, int level);

// gcd and friends -----------------------------------------------------------

/// Associate with positive base leading coefficient.
Poly normalize(const Poly& f);
/// Greatest common divisor, sign-normalized. Throws DomainError on gcd(0,0).
Poly gcd(const Poly& f, const Poly& g);

struct ContentSplit {
    Poly content;
    Poly primitive;
};
/// Content w.r.t. the main variable and the primitive part. The content
/// carries the sign, so the primitive part is always sign-normalized.
/// Constants split as (c, 1). Throws DomainError on zero.
ContentSplit content_primitive(const Poly& f);
Poly primitive_part(const Poly& f);
/// Positive gcd of all integer coefficients (0 for the zero polynomial).
Integer integer_content(const Poly& f);
/// f divided by its integer content.
Poly remove_integer_content(const Poly& f);

/// f / gcd(f, df/dmvar), sign-normalized.
Poly squarefree_part(const Poly& f);
bool is_squarefree(const Poly& f);

/// Pairwise-coprime, squarefree, primitive, sign-normalized refinement of A
/// (sorted, no duplicates). Every input is a constant times a product of
/// powers of the output elements.
std::vector<Poly> finest_squarefree_basis(std::span<const Poly> polys);

// evaluation ----------------------------------------------------------------

/// Substitutes x_level = value and clears denominators with a positive
/// factor: returns q^D * f(..., p/q, ...), D = deg_{x_level}(f). Signs at any
/// point are therefore preserved.
Poly substitute(const Poly& f, int level, const Rational& value);
/// Exact value at a fully rational point (point[i] is x_{i+1}).
Rational evaluate(const Poly& f, std::span<const Rational> point);

/// Dense integer coefficients of a polynomial in one variable (index = degree).
/// Throws DomainError when a second variable is present.
std::vector<Integer> to_dense(const Poly& f);

int sign(const Integer& v);
int sign(const Rational& v);

/// Ordered set of polynomials with set semantics up to sign and integer content.
class PolySet {
public:
    PolySet() = default;
    /// Inserts the normalized primitive-integer-content associate. Constants
    /// and zero are ignored. Returns true when the element is new.
    bool insert(const Poly& f);
    bool contains(const Poly& f) const;
    const std::vector<Poly>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    /// Associate used as the set key: integer content removed, sign normalized.
    static Poly key(const Poly& f);

private:
    std::vector<Poly> elems_;
};

}  // namespace projcad
