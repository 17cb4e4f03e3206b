#include "symdec/ideal.hpp"
#include "symdec/parser.hpp"

#include <gtest/gtest.h>

using namespace symdec;

namespace {

const Field Q = Field::rationals();
const std::vector<std::string> XY{"x", "y"};

AlgebraPtr quotient(std::vector<std::string> rels) {
    return artinian_quotient(parse_polys(rels, XY), 2, Q, {});
}

Ideal ideal(const AlgebraPtr& a, std::vector<std::string> gens) {
    const auto ps = parse_polys(gens, XY);
    return ideal_from_generators(a, ps);
}

} // namespace

TEST(Ideal, MaximalIdealPowersOfCompleteIntersection) {
    const auto a = quotient({"x^2", "y^2"});
    const Ideal m = maximal_ideal(a);
    EXPECT_EQ(m.dim(), 3u);
    EXPECT_EQ(power(m, 2).dim(), 1u);
    EXPECT_TRUE(power(m, 3).is_zero());
    EXPECT_EQ(power(m, 0), unit_ideal(a));
    EXPECT_EQ(end_degree(m), 2u);
    EXPECT_EQ(power_chain(m).size(), 4u);
}

TEST(Ideal, GeneratedIdealIsClosed) {
    const auto a = quotient({"x^3 - y^4", "x*y^2"});
    const Ideal i = ideal(a, {"x + y^2"});
    EXPECT_TRUE(is_multiplicatively_closed(*a, i.space()));
    EXPECT_TRUE(i.contains(a->normal_form(parse_poly("x^2 + x*y^2", XY))));
    EXPECT_TRUE(i.is_proper());
    EXPECT_TRUE(ideal(a, {"1 + x"}).is_unit());
}

TEST(Ideal, FromSubspaceValidatesClosure) {
    const auto a = quotient({"x^2", "y^2"});
    const Subspace just_x = Subspace::span(a->field(), a->dim(), std::vector<Vector>{a->normal_form(parse_poly("x", XY))});
    EXPECT_THROW(ideal_from_subspace(a, just_x), InvalidInput);
    EXPECT_NO_THROW(ideal_from_subspace(a, maximal_ideal(a).space()));
}

TEST(Ideal, ProductSumIntersect) {
    const auto a = quotient({"x^3", "y^3"});
    const Ideal i = ideal(a, {"x"});
    const Ideal k = ideal(a, {"y"});
    EXPECT_EQ(product(i, k), ideal(a, {"x*y"}));
    EXPECT_EQ(sum(i, k), maximal_ideal(a));
    EXPECT_EQ(intersect(i, k), ideal(a, {"x*y"}));
    EXPECT_EQ(product(i, i), power(i, 2));
}

TEST(Ideal, ColonConventions) {
    const auto a = quotient({"x^2", "y^2"});
    EXPECT_EQ(colon_zero(zero_ideal(a)), unit_ideal(a));
    EXPECT_EQ(colon_zero(unit_ideal(a)), zero_ideal(a));
    // (0 : m) is the socle.
    EXPECT_EQ(colon_zero(maximal_ideal(a)).space(), a->socle());
    EXPECT_EQ(colon_zero(ideal(a, {"x"})), ideal(a, {"x"}));
}

TEST(Ideal, LengthQuotient) {
    const auto a = quotient({"x^2", "y^2"});
    EXPECT_EQ(length_quotient(power(maximal_ideal(a), 2), maximal_ideal(a)), 2u);
    EXPECT_THROW(length_quotient(unit_ideal(a), maximal_ideal(a)), InvalidInput);
}

TEST(Ideal, UnitIdealRejectedWhereUndefined) {
    const auto a = quotient({"x^2", "y^2"});
    EXPECT_THROW(end_degree(unit_ideal(a)), InvalidInput);
    EXPECT_THROW(power_chain(unit_ideal(a)), InvalidInput);
}

TEST(Ideal, DifferentAlgebrasRejected) {
    const auto a = quotient({"x^2", "y^2"});
    const auto b = quotient({"x^2", "y^2"});
    EXPECT_THROW(sum(maximal_ideal(a), maximal_ideal(b)), InvalidInput);
}

TEST(SocleFunctional, PairingIsNondegenerate) {
    const auto a = quotient({"x^2*y^2 - x^3", "y^3"});
    const auto phi = make_socle_functional(a);
    EXPECT_EQ(rank(phi.gram()), a->dim());
    EXPECT_FALSE(phi.evaluate(phi.socle_generator()).is_zero());
    EXPECT_THROW(make_socle_functional(quotient({"x^2", "x*y", "y^2"})), NotGorenstein);
}

TEST(SocleFunctional, PerpDualities) {
    const auto a = quotient({"x^2*y^2 - x^3", "y^3"});
    const auto phi = make_socle_functional(a);
    for (const auto& gens : std::vector<std::vector<std::string>>{{"x"}, {"x^2", "y^2"}, {"x*y + y^2"}, {"y"}}) {
        const Ideal i = ideal(a, gens);
        const Subspace p = perp(phi, i.space());
        EXPECT_EQ(p, colon_zero(i).space());
        EXPECT_EQ(p.dim(), a->dim() - i.dim());
        EXPECT_EQ(perp(phi, p), i.space());
    }
    // Also for subspaces that are not ideals.
    const Subspace s = Subspace::span(a->field(), a->dim(),
                                      std::vector<Vector>{a->normal_form(parse_poly("x + 2*y", XY))});
    EXPECT_EQ(perp(phi, s).dim(), a->dim() - 1);
    EXPECT_EQ(perp(phi, perp(phi, s)), s);
}
