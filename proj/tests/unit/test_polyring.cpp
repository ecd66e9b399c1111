#include <doctest.h>

#include "projcad/polyring.hpp"
#include "support.hpp"

using namespace projcad;
using testing::P;

TEST_CASE("ring arithmetic") {
    CHECK(P("(x+1)*(x-1)") == P("x^2-1"));
    CHECK(P("x^2+y") + Poly() == P("x^2+y"));
    CHECK(exact_divide(P("x^2-1"), P("x-1")) == P("x+1"));
    CHECK_THROWS_AS(exact_divide(P("x^2+1"), P("x-1")), InexactDivision);
    CHECK_THROWS_WITH(exact_divide(P("x^2+1"), P("x-1")), "inexact division");
    CHECK(P("x - x").is_zero());
    CHECK(P("3").is_constant());
    CHECK(!P("3").is_zero());
}

TEST_CASE("canonical form and main variable") {
    Poly f = P("z*y - x^2");
    CHECK(f.level() == 3);
    CHECK(f.degree() == 1);
    CHECK(P("y^2 - y^2 + x").level() == 1);
    CHECK(Poly::from_terms(2, {{0, P("x")}, {0, P("-x")}}).is_zero());
    // Rebuilding from the stored terms is a no-op.
    CHECK(Poly::from_terms(f.level(), f.terms()) == f);
    CHECK(f.to_string(testing::xyzw()) == "z*y - x^2");
}

TEST_CASE("gcd") {
    CHECK(gcd(P("x^2-1"), P("x-1")) == P("x-1"));
    CHECK(gcd(P("2*x"), P("4*x^2")) == P("2*x"));
    CHECK(gcd(P("x^2+y^2-1"), P("x")) == Poly(1));
    CHECK(gcd(P("-x-1"), Poly()) == P("x+1"));
    CHECK_THROWS_AS(gcd(Poly(), Poly()), DomainError);
    CHECK(gcd(P("(x+y)*(x-y)*z"), P("(x+y)*z^2")) == P("(x+y)*z"));
}

TEST_CASE("gcd divides both arguments on random bivariate inputs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        Poly common = testing::random_poly(rng, 2, 2, 3);
        Poly f = testing::random_poly(rng, 2, 2, 3) * common;
        Poly g = testing::random_poly(rng, 2, 2, 3) * common;
        if (f.is_zero() && g.is_zero()) {
            continue;
        }
        Poly d = gcd(f, g);
        REQUIRE(try_divide(f, d).has_value());
        REQUIRE(try_divide(g, d).has_value());
        if (!common.is_zero()) {
            // Any common divisor divides the gcd.
            REQUIRE(try_divide(d, common).has_value());
        }
    }
}

TEST_CASE("content and primitive part") {
    auto [c1, p1] = content_primitive(P("y*z^2 + y^2*z"));
    CHECK(c1 == P("y"));
    CHECK(p1 == P("z^2 + y*z"));
    auto [c2, p2] = content_primitive(P("x^2+y^2-1"));
    CHECK(c2 == Poly(1));
    CHECK(p2 == P("x^2+y^2-1"));
    auto [c3, p3] = content_primitive(P("6*x^2+4*x"));
    CHECK(c3 == Poly(2));
    CHECK(p3 == P("3*x^2+2*x"));
    CHECK_THROWS_AS(content_primitive(Poly()), DomainError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Poly f = testing::random_poly(rng, 3, 4) * testing::random_poly(rng, 2, 2, 2);
        if (f.is_zero()) {
            continue;
        }
        auto [c, p] = content_primitive(f);
        REQUIRE(c * p == f);
        if (!p.is_constant()) {
            REQUIRE(content_primitive(p).content == Poly(1));
        }
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(P("(x-1)^2*(x+2)")) == P("(x-1)*(x+2)"));
    CHECK(squarefree_part(P("x^2+1")) == P("x^2+1"));
    CHECK(squarefree_part(P("y^2")) == P("y"));
    CHECK(is_squarefree(P("x^2+y^2-1")));
    CHECK(!is_squarefree(P("(x+y)^2*(x-y)")));
}

namespace {

// Divides out every power of basis elements; what remains must be constant.
bool reconstructs(Poly f, const std::vector<Poly>& basis) {
    for (const auto& b : basis) {
        while (true) {
            auto q = try_divide(f, b);
            if (!q) {
                break;
            }
            f = *q;
        }
    }
    return f.is_constant();
}

void check_basis(const std::vector<Poly>& input, const std::vector<Poly>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        REQUIRE(!basis[i].is_constant());
        REQUIRE(squarefree_part(basis[i]) == basis[i]);
        REQUIRE(primitive_part(basis[i]) == basis[i]);
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            REQUIRE(gcd(basis[i], basis[j]).is_constant());
        }
    }
    for (const auto& f : input) {
        REQUIRE(reconstructs(f, basis));
    }
}

}  // namespace

TEST_CASE("finest squarefree basis") {
    std::vector<Poly> a{P("x^2-1"), P("x-1")};
    CHECK(finest_squarefree_basis(a) == std::vector<Poly>{P("x-1"), P("x+1")});
    std::vector<Poly> b{P("x^2+1")};
    CHECK(finest_squarefree_basis(b) == std::vector<Poly>{P("x^2+1")});
    std::vector<Poly> c{P("(x-1)^2"), P("x+2")};
    CHECK(finest_squarefree_basis(c) == std::vector<Poly>{P("x-1"), P("x+2")});

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        std::vector<Poly> factors;
        for (int k = 0; k < 3; ++k) {
            factors.push_back(testing::random_poly_in(rng, 2, 2, 3));
        }
        std::vector<Poly> input{factors[0] * factors[1], factors[1].pow(2) * factors[2], factors[2] * factors[0]};
        for (auto& f : input) {
            f = primitive_part(f);
        }
        check_basis(input, finest_squarefree_basis(input));
    }
}

TEST_CASE("structural accessors") {
    CHECK(P("3*x^2+2*x+1").reductum(1) == P("2*x+1"));
    CHECK(P("3*x^2+2*x+1").reductum(0) == P("3*x^2+2*x+1"));
    CHECK(P("3*x^2+2*x+1").reductum(2) == Poly(1));
    CHECK(P("3*x^2+1").reductum(1) == Poly(1));
    CHECK_THROWS_AS(P("3*x^2+2*x+1").reductum(4), DomainError);
    CHECK(P("x^2+y^2-1").nonzero_coeffs() == std::vector<Poly>{Poly(1), P("x^2-1")});
    CHECK(derivative(P("y^2+x"), 2) == P("2*y"));
    CHECK(derivative(P("y^2+x"), 3).is_zero());
    CHECK(P("z*y - x^2").leading_coeff() == P("y"));
}

TEST_CASE("reducta lower the degree") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Poly f = testing::random_poly_in(rng, 3, 4);
        for (unsigned k = 1; k <= f.degree(); ++k) {
            Poly r = f.reductum(k);
            REQUIRE((r.level() < f.level() || r.degree() + k <= f.degree()));
        }
        Poly last = f.reductum(f.degree());
        REQUIRE((last.is_zero() || last == f.coeff(0)));
    }
}

TEST_CASE("substitution and evaluation") {
    Poly f = P("x^2 + y^2 - 1");
    // q^D scaling keeps the sign: 4 * ((1/2)^2 + y^2 - 1) = 4y^2 - 3.
    CHECK(substitute(f, 1, Rational(1, 2)) == P("4*y^2 - 3"));
    std::vector<Rational> pt{Rational(1, 2), Rational(1, 3)};
    CHECK(evaluate(f, pt) == Rational(1, 4) + Rational(1, 9) - 1);
    CHECK(to_dense(P("x^3 - 2")) == std::vector<Integer>{-2, 0, 0, 1});
    CHECK_THROWS_AS(to_dense(P("x*y")), DomainError);
    CHECK(substitute(P("x^3 - 3*x + 1"), 1, Rational(1, 4)) == Poly(17));
}

TEST_CASE("substitution agrees with evaluation") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int i = 0; i < 300; ++i) {
        Poly f = testing::random_poly(rng, 3, 5, 6);
        std::vector<Rational> pt{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        for (auto& x : pt) {
            x.canonicalize();
        }
        const int level = 1 + i % 3;
        const unsigned D = f.degree_in(level);
        Poly g = substitute(f, level, pt[static_cast<std::size_t>(level - 1)]);
        REQUIRE(!g.involves(level));
        Rational scale = 1;
        for (unsigned k = 0; k < D; ++k) {
            scale *= pt[static_cast<std::size_t>(level - 1)].get_den();
        }
        REQUIRE(evaluate(g, pt) == scale * evaluate(f, pt));
    }
}

TEST_CASE("set semantics up to sign and integer content") {
    PolySet s;
    CHECK(s.insert(P("2*x-2")));
    CHECK(!s.insert(P("1-x")));
    CHECK(!s.insert(Poly(5)));
    CHECK(s.insert(P("x+1")));
    CHECK(s.size() == 2);
    CHECK(s.contains(P("-3*x-3")));
}

TEST_CASE("variable order") {
    CHECK_THROWS_AS(VarOrder(std::vector<std::string>{}), DomainError);
    CHECK_THROWS_AS(VarOrder({"x", "x"}), DomainError);
    VarOrder o({"x", "y"});
    CHECK(o.level_of("y") == 2);
    CHECK(!o.level_of("z").has_value());
}
