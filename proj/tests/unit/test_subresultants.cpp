#include <doctest.h>

#include "projcad/subresultants.hpp"
#include "support.hpp"

using namespace projcad;
using testing::P;

TEST_CASE("sylvester resultant") {
    CHECK(sylvester_resultant(P("x-1"), P("x+1"), 1) == Poly(2));
    CHECK(sylvester_resultant(P("x^2-1"), P("x-1"), 1).is_zero());
    CHECK(sylvester_resultant(P("y^2+x^2-1"), P("y"), 2) == P("x^2-1"));
    // Degree 0 in the variable: res = g^deg f.
    CHECK(sylvester_resultant(P("y^2+1"), P("x"), 2) == P("x^2"));
    CHECK_THROWS_AS(sylvester_resultant(P("x"), P("x+1"), 2), DomainError);
}

TEST_CASE("psc chain examples") {
    const Poly f = P("y^2 + x^2 - 1");
    const Poly g = P("2*y");
    PscChain chain = psc_chain(f, g, 2);
    REQUIRE(chain.psc.size() == 2);
    CHECK(chain.psc[0] == P("4*x^2 - 4"));
    CHECK(chain.psc[1] == Poly(2));
    CHECK(psc_by_minor(f, g, 2, 0) == P("4*x^2 - 4"));
    CHECK(psc_by_minor(f, g, 2, 1) == Poly(2));
}

TEST_CASE("discriminant") {
    CHECK(discriminant(P("y^2 + x^2 - 1"), 2) == P("4 - 4*x^2"));
    CHECK(discriminant(P("x^2 - 2"), 1) == Poly(8));
    CHECK_THROWS_WITH_AS(discriminant(P("z*y - x^2"), 2), doctest::Contains("discriminant undefined"),
                         DomainError);
}

TEST_CASE("psd") {
    CHECK(psd(P("y^2 + x^2 - 1"), 2) == std::vector<Poly>{P("4*x^2 - 4"), Poly(2)});
    CHECK(psd(P("y + x"), 2) == std::vector<Poly>{Poly(1)});
    CHECK(psd(P("x^2 + 1"), 2).empty());
}

namespace {

Poly random_in(std::mt19937_64& rng, int vars, unsigned max_degree) {
    return testing::random_poly_in(rng, vars, max_degree, 4);
}

}  // namespace

TEST_CASE("PRS chain equals the determinant minors") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const int vars = 1 + i % 3;
        Poly f = random_in(rng, vars, 4);
        Poly g = random_in(rng, vars, 4);
        PscChain chain = psc_chain(f, g, vars);
        const unsigned m = std::min(f.degree(), g.degree());
        REQUIRE(chain.psc.size() == m + 1);
        for (unsigned j = 0; j <= m; ++j) {
            REQUIRE(chain.psc[j] == psc_by_minor(f, g, vars, j));
        }
        REQUIRE(chain.psc[0] == sylvester_resultant(f, g, vars));
    }
}

TEST_CASE("resultant identities") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        const int vars = 1 + i % 3;
        Poly f = random_in(rng, vars, 3);
        Poly g = random_in(rng, vars, 3);
        Poly h = random_in(rng, vars, 3);
        REQUIRE(resultant(f, g * h, vars) == resultant(f, g, vars) * resultant(f, h, vars));
        const bool odd = (f.degree() * g.degree()) % 2 == 1;
        REQUIRE(resultant(g, f, vars) == (odd ? -resultant(f, g, vars) : resultant(f, g, vars)));
    }
}

TEST_CASE("lc times discriminant is psc_0 of f and f' up to sign") {
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 500) {
        const int vars = 1 + checked % 3;
        Poly f = random_in(rng, vars, 4);
        if (f.degree() < 2) {
            continue;
        }
        ++checked;
        Poly lhs = f.leading_coeff() * discriminant(f, vars);
        Poly rhs = psc_chain(f, derivative(f, vars), vars).psc[0];
        REQUIRE((lhs == rhs || lhs == -rhs));
    }
}
