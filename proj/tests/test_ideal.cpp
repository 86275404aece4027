#include <catch2/catch_amalgamated.hpp>

#include "monores/ideal.hpp"
#include "test_util.hpp"

using namespace monores;
using testutil::ideal;
using testutil::mono;
using testutil::var;

TEST_CASE("minimalize keeps the divisibility antichain") {
    CHECK(ideal("x^2, x^3, y") == ideal("x^2, y"));
    CHECK(ideal("x^2*y, x^2*y") == ideal("x^2*y"));
    CHECK(ideal("x*y, y*z, x*z, x*y*z") == ideal("x*y, y*z, x*z"));
}

TEST_CASE("minimalize is idempotent and order-independent") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto I = testutil::random_ideal(rng, 5, 6, 3);
        auto gens = I.gens();
        // re-minimalize a rotated copy plus junk multiples
        std::rotate(gens.begin(), gens.begin() + rng.below(gens.size()), gens.end());
        auto padded = gens;
        for (const auto& g : gens) padded.push_back(g * mono("t0"));
        const auto J = MonomialIdeal::make(I.vars(), padded);
        CHECK(I == J);
    }
}

TEST_CASE("unit and zero ideals are rejected") {
    CHECK_THROWS_AS(MonomialIdeal::make({var("x")}, {}), DomainError);
    CHECK_THROWS_AS(MonomialIdeal::make({var("x")}, {Monomial{}}), DomainError);
}

TEST_CASE("generators must use declared variables") {
    CHECK_THROWS_AS(MonomialIdeal::make({var("x")}, {mono("x*y")}), InputError);
    CHECK_THROWS_AS(MonomialIdeal::make({var("x"), var("x")}, {mono("x")}), InputError);
}

TEST_CASE("canonical order is descending graded-lex") {
    const auto I = ideal("y^2, x^2, x*y");
    CHECK(I.gens() == std::vector<Monomial>{mono("x^2"), mono("x*y"), mono("y^2")});
    const auto J = ideal("y, x^2");
    CHECK(J.gens() == std::vector<Monomial>{mono("x^2"), mono("y")});
}

TEST_CASE("membership via minimal generators") {
    const auto I = ideal("x^2, x*y");
    CHECK(I.contains(mono("x^2*z")));
    CHECK(I.contains(mono("x*y")));
    CHECK_FALSE(I.contains(mono("x")));
    CHECK_FALSE(I.contains(Monomial{}));
}

TEST_CASE("ideal powers") {
    CHECK(ideal_power(ideal("x, y"), 2) == ideal("x^2, x*y, y^2"));
    const auto I = ideal("x^2, y^3");
    CHECK(ideal_power(I, 1) == I);
    CHECK(ideal_power(I, 2) == ideal("x^4, x^2*y^3, y^6"));
    CHECK_THROWS_AS(ideal_power(I, 0), InputError);
}

TEST_CASE("power satisfies I^(s+t) = I^s * I^t") {
    testutil::Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto I = testutil::random_ideal(rng, 3, 4, 2);
        const auto I1 = ideal_power(I, 1);
        const auto I2 = ideal_power(I, 2);
        const auto I3 = ideal_power(I, 3);
        std::vector<Monomial> products;
        for (const auto& a : I1.gens())
            for (const auto& b : I2.gens()) products.push_back(a * b);
        CHECK(MonomialIdeal::make(I.vars(), products) == I3);
    }
}
