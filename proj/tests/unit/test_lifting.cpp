#include <doctest.h>

#include "projcad/lifting.hpp"
#include "support.hpp"

using namespace projcad;
using testing::P;

namespace {

SamplePoint rational_point(std::initializer_list<Rational> coords) {
    std::vector<AlgebraicCoordinate> c;
    for (const auto& r : coords) {
        c.emplace_back(r);
    }
    return SamplePoint(std::move(c));
}

Cell base_cell(std::vector<int> index, std::initializer_list<Rational> coords) {
    Cell c;
    c.index = std::move(index);
    c.sample = rational_point(coords);
    c.description.resize(c.index.size());
    return c;
}

}  // namespace

TEST_CASE("make separable over a cell") {
    SamplePoint origin = rational_point({0});
    std::vector<Poly> square{P("y^2")};
    CHECK(make_separable_over_cell(square, origin) == std::vector<Poly>{P("y")});

    std::vector<Poly> shared{P("y^2 - x"), P("y - x")};
    auto sep = make_separable_over_cell(shared, origin);
    REQUIRE(sep.size() == 1);
    CHECK(sep[0] == P("y"));

    std::vector<Poly> fine{P("y - 1"), P("y + 1")};
    CHECK(make_separable_over_cell(fine, origin) == fine);

    std::vector<Poly> nullified{P("x*y + x")};
    CHECK_THROWS_AS(make_separable_over_cell(nullified, origin), DomainError);
}

TEST_CASE("generate stack") {
    std::vector<Poly> circle{P("y^2+x^2-1")};
    std::vector<Cell> inner = generate_stack(base_cell({3}, {0}), circle);
    CHECK(inner.size() == 5);
    std::vector<Cell> edge = generate_stack(base_cell({2}, {-1}), circle);
    REQUIRE(edge.size() == 3);
    CHECK(edge[1].index == std::vector<int>{2, 2});
    CHECK(edge[1].sample[1].rational() == 0);
    std::vector<Poly> none;
    std::vector<Cell> whole = generate_stack(base_cell({1}, {-2}), none);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].description.back().kind == Bound::Kind::Free);

    // Stack parity: sectors odd, sections even and pinned.
    for (std::size_t k = 0; k < inner.size(); ++k) {
        CHECK(inner[k].index.back() == static_cast<int>(k) + 1);
        const bool section = inner[k].index.back() % 2 == 0;
        CHECK((inner[k].description.back().kind == Bound::Kind::Equal) == section);
        CHECK((sign_at(circle[0], inner[k].sample) == 0) == section);
    }
}

TEST_CASE("nullification") {
    CHECK(is_nullified(P("z*y - x^2"), rational_point({0, 0})));
    CHECK(is_nullified(P("z*y - x"), rational_point({0, 0})));
    CHECK(!is_nullified(P("z*y - x^2"), rational_point({0, 1})));
    CHECK(!is_nullified(P("z*y - x^2"), rational_point({1, 0})));
}

TEST_CASE("minimal delineating polynomial") {
    auto a = minimal_delineating_polynomial(P("z*y - x^2"), rational_point({0, 0}));
    REQUIRE(a.has_value());
    CHECK(*a == P("z"));
    CHECK(!minimal_delineating_polynomial(P("z*y - x"), rational_point({0, 0})).has_value());
    auto c = minimal_delineating_polynomial(P("z^2*y - x^2"), rational_point({0, 0}));
    REQUIRE(c.has_value());
    CHECK(*c == P("z"));
    CHECK_THROWS_AS(minimal_delineating_polynomial(P("z*y - x^2"), rational_point({0, 1})), DomainError);
    // Second order needed: every first partial of z*y^2 - x^3 vanishes at the origin.
    auto d = minimal_delineating_polynomial(P("z*y^2 - x^3"), rational_point({0, 0}));
    REQUIRE(d.has_value());
    CHECK(*d == P("z"));
}

TEST_CASE("lifting counts") {
    VarOrder xy({"x", "y"});
    VarOrder xyz({"x", "y", "z"});
    std::vector<Poly> circle{P("x^2+y^2-1")};
    CHECK(cad_lifting(cad_projection(circle, xy, Method::McCallum), xy, {}).cells.size() == 13);

    std::vector<Poly> f{P("z*y - x^2")};
    ProjectionLevels levels = cad_projection(f, xyz, Method::McCallum);
    CAD sign_inv = cad_lifting(levels, xyz, {false, false});
    CHECK(sign_inv.cells.size() == 21);
    CHECK(sign_inv.delineations.empty());
    CAD order_inv = cad_lifting(levels, xyz, {true, false});
    CHECK(order_inv.cells.size() == 23);
    REQUIRE(order_inv.delineations.size() == 1);
    CHECK(order_inv.delineations[0].cell == std::vector<int>{2, 2});
    CHECK(*order_inv.delineations[0].delineating == P("z"));

    // Collins never looks at nullification.
    ProjectionLevels collins = cad_projection(f, xyz, Method::Collins);
    CAD c = cad_lifting(collins, xyz, {true, false});
    CHECK(c.delineations.empty());
    CHECK(c.warnings.empty());
}

TEST_CASE("warnings and strict mode") {
    std::vector<Poly> f{P("y*w + x")};
    ProjectionLevels levels = cad_projection(f, testing::xyzw(), Method::McCallum);
    CAD relaxed = cad_lifting(levels, testing::xyzw(), {true, false});
    REQUIRE(relaxed.warnings.size() == 1);
    CHECK(relaxed.warnings[0].cell == std::vector<int>{2, 2, 1});
    CHECK_THROWS_WITH_AS(cad_lifting(levels, testing::xyzw(), {true, true}),
                         doctest::Contains("input not well-oriented"), NotWellOriented);
    // The final lift ignores nullification unless order-invariance is requested.
    CHECK(cad_lifting(levels, testing::xyzw(), {false, true}).warnings.empty());
}
