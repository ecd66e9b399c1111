#include <doctest.h>

#include "projcad/algnum.hpp"
#include "support.hpp"

using namespace projcad;
using testing::P;

namespace {

AlgebraicCoordinate root_of(const Poly& p, const Rational& lo, const Rational& hi) {
    Poly q = p;
    return AlgebraicCoordinate(RootOf{q, lo, hi, sign_at_rational(to_dense(q), lo)});
}

// Signs at the interval ends differ and no root sits at an end.
void check_isolation(const Poly& f, const std::vector<IsolatingInterval>& roots) {
    const auto dense = to_dense(squarefree_part(f));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto& iv = roots[i];
        if (iv.exact()) {
            REQUIRE(sign_at_rational(dense, iv.lo) == 0);
        } else {
            REQUIRE(iv.lo < iv.hi);
            const int a = sign_at_rational(dense, iv.lo);
            const int b = sign_at_rational(dense, iv.hi);
            REQUIRE(a != 0);
            REQUIRE(b != 0);
            REQUIRE(a != b);
        }
        if (i > 0) {
            REQUIRE(roots[i - 1].hi <= iv.lo);
            if (roots[i - 1].hi == iv.lo) {
                REQUIRE(!iv.exact());
                REQUIRE(!roots[i - 1].exact());
            }
        }
    }
}

}  // namespace

TEST_CASE("isolation examples") {
    auto r = isolate_real_roots(P("x^2-2"));
    REQUIRE(r.size() == 2);
    CHECK(r[0].lo >= -2);
    CHECK(r[0].hi <= -1);
    CHECK(r[1].lo >= 1);
    CHECK(r[1].hi <= 2);
    CHECK(isolate_real_roots(P("x^2+1")).empty());
    auto c = isolate_real_roots(P("x^3-x"));
    REQUIRE(c.size() == 3);
    CHECK(c[1].exact());
    CHECK(c[1].lo == 0);
    check_isolation(P("x^3-x"), c);
    CHECK_THROWS_AS(isolate_real_roots(Poly()), DomainError);
    // Exact rational roots are reported as points.
    auto h = isolate_real_roots(P("(2*x-1)*(x+3)*(x^2-3)"));
    REQUIRE(h.size() == 4);
    check_isolation(P("(2*x-1)*(x+3)*(x^2-3)"), h);
}

TEST_CASE("isolation against sign changes on random polynomials") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        Poly f = testing::random_poly_in(rng, 1, 6, 5, 20);
        auto roots = isolate_real_roots(f);
        check_isolation(f, roots);
        // Between consecutive isolating intervals the sign never changes.
        const auto dense = to_dense(squarefree_part(f));
        std::uniform_int_distribution<int> k(1, 63);
        for (std::size_t j = 0; j <= roots.size(); ++j) {
            const Rational lo = j == 0 ? (roots.empty() ? Rational(-64) : Rational(roots[0].lo - 64)) : roots[j - 1].hi;
            const Rational hi = j == roots.size() ? Rational(lo + 128) : roots[j].lo;
            if (lo == hi) {
                continue;
            }
            const int ref = sign_at_rational(dense, (lo + hi) / 2);
            for (int t = 0; t < 64; ++t) {
                const Rational x = lo + (hi - lo) * Rational(k(rng), 64);
                REQUIRE(sign_at_rational(dense, x) == ref);
            }
        }
    }
}

TEST_CASE("refine") {
    AlgebraicCoordinate s2 = root_of(P("x^2-2"), 1, 2);
    AlgebraicCoordinate fine = refine(s2, 1, Rational(1, 1024));
    CHECK(fine.upper() - fine.lower() <= Rational(1, 1024));
    CHECK(fine.lower() < Rational(141422, 100000));
    CHECK(fine.upper() > Rational(141421, 100000));
    AlgebraicCoordinate half = refine(AlgebraicCoordinate(Rational(1, 2)), 1, Rational(1, 8));
    CHECK(half.rational() == Rational(1, 2));
    AlgebraicCoordinate twice = refine(refine(s2, 1, Rational(1, 16)), 1, Rational(1, 1024));
    CHECK(twice.lower() == fine.lower());
    CHECK(twice.upper() == fine.upper());
}

TEST_CASE("sign at sample points") {
    SamplePoint s({root_of(P("x^2-2"), 1, 2)});
    CHECK(sign_at(P("x^2-2"), s) == 0);
    CHECK(sign_at(P("x"), s) == 1);
    CHECK(sign_at(P("x-2"), s) == -1);
    CHECK(sign_at(P("x^4 - 4"), s) == 0);
    CHECK(sign_at(P("x^3 - 2*x"), s) == 0);
    CHECK(sign_at(P("5*x - 7"), s) == 1);  // sqrt(2) > 1.4
    CHECK_THROWS_AS(sign_at(P("y"), s), DomainError);

    // Tower: y = sqrt(x) over x = sqrt(2).
    SamplePoint t = s.extended(root_of(P("y^2-2"), 1, 2));
    t[1] = AlgebraicCoordinate(RootOf{P("y^2 - x"), 1, 2, -1});
    CHECK(sign_at(P("y^4 - 2"), t) == 0);
    CHECK(sign_at(P("y^2 - x"), t) == 0);
    CHECK(sign_at(P("y - x"), t) == -1);
    CHECK(sign_at(P("y^2*x - 2"), t) == 0);
}

TEST_CASE("sign is stable under refinement") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        Poly d = P("x^3 - 3*x + 1");
        auto roots = isolate_real_roots(d);
        for (const auto& iv : roots) {
            SamplePoint s({root_of(d, iv.lo, iv.hi)});
            Poly q = testing::random_poly(rng, 1, 4, 4);
            const int before = sign_at(q, s);
            s.refine(0, Rational(1, 1 << 20));
            REQUIRE(sign_at(q, s) == before);
        }
    }
}

TEST_CASE("roots over a cell") {
    const Poly circle = P("y^2+x^2-1");
    std::vector<Poly> polys{circle};
    SamplePoint origin({AlgebraicCoordinate(Rational(0))});
    FiberRoots r = roots_over_cell(polys, origin);
    REQUIRE(r.sections.size() == 2);
    CHECK(r.sections[0].rational() == -1);
    CHECK(r.sections[1].rational() == 1);
    CHECK(r.sector_samples == std::vector<Rational>{-2, 0, 2});

    SamplePoint left({AlgebraicCoordinate(Rational(-1))});
    FiberRoots l = roots_over_cell(polys, left);
    REQUIRE(l.sections.size() == 1);
    CHECK(l.sections[0].rational() == 0);
    CHECK(l.sector_samples == std::vector<Rational>{-1, 1});

    std::vector<Poly> none;
    FiberRoots e = roots_over_cell(none, origin);
    CHECK(e.sections.empty());
    CHECK(e.sector_samples == std::vector<Rational>{0});

    // Two polynomials sharing the root y = 0 over x = 0.
    std::vector<Poly> shared{P("y^2 - x"), P("y - x")};
    CHECK_THROWS_WITH_AS(roots_over_cell(shared, origin), "separability violated", DomainError);
}

TEST_CASE("roots over an algebraic fiber") {
    // x = 1/sqrt(2): the circle meets the fiber at y = +-1/sqrt(2).
    SamplePoint s({root_of(P("2*x^2-1"), 0, 1)});
    std::vector<Poly> polys{P("y^2+x^2-1"), P("y - 2*x")};
    FiberRoots r = roots_over_cell(polys, s);
    REQUIRE(r.sections.size() == 3);
    CHECK(r.owner == std::vector<std::size_t>{0, 0, 1});
    for (std::size_t k = 0; k < 3; ++k) {
        SamplePoint t = s.extended(r.sections[k]);
        CHECK(sign_at(polys[r.owner[k]], t) == 0);
        CHECK(sign_at(polys[1 - r.owner[k]], t) != 0);
    }
    SamplePoint lower = s.extended(r.sections[0]);
    CHECK(sign_at(P("2*y^2 - 1"), lower) == 0);
    CHECK(sign_at(P("y"), lower) == -1);
    // Sector samples sit strictly between the sections.
    for (std::size_t k = 0; k < r.sector_samples.size(); ++k) {
        SamplePoint t = s.extended(AlgebraicCoordinate(r.sector_samples[k]));
        CHECK(sign_at(polys[0], t) != 0);
        CHECK(sign_at(polys[1], t) != 0);
    }
}

TEST_CASE("root comparison decides equality exactly") {
    SamplePoint s({root_of(P("x^2-2"), 1, 2)});
    // y = x and the positive root of y^2 - 2 are the same number.
    AlgebraicCoordinate a = RootOf{P("y - x"), 1, 2, -1};
    AlgebraicCoordinate b = RootOf{P("y^2 - 2"), 1, 2, -1};
    CHECK(compare_roots(a, b, s, 2) == 0);
    AlgebraicCoordinate c = RootOf{P("y^2 - 3"), 1, 2, -1};
    CHECK(compare_roots(a, c, s, 2) == -1);
    AlgebraicCoordinate r(Rational(3, 2));
    CHECK(compare_roots(r, b, s, 2) == 1);
}

TEST_CASE("simplest rational") {
    CHECK(simplest_rational(-1, true, 1, true) == 0);
    CHECK(simplest_rational(Rational(1, 3), true, Rational(1, 2), true) == Rational(2, 5));
    CHECK(simplest_rational(1, true, 2, true) == Rational(3, 2));
    CHECK(simplest_rational(1, false, 2, true) == 1);
    CHECK(simplest_rational(-3, true, Rational(-5, 2), true) == Rational(-8, 3));
    CHECK_THROWS_AS(simplest_rational(1, true, 1, true), DomainError);
}
