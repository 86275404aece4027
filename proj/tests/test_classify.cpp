#include <catch2/catch_amalgamated.hpp>

#include "monores/classify.hpp"
#include "test_util.hpp"

using namespace monores;
using testutil::ideal;
using testutil::mono;

TEST_CASE("regular sequences have pairwise disjoint supports") {
    const std::vector<Monomial> a = {mono("x^2"), mono("y^3")};
    CHECK(is_regular_sequence(a));
    const std::vector<Monomial> b = {mono("x*y"), mono("y*z")};
    CHECK_FALSE(is_regular_sequence(b));
    const std::vector<Monomial> c = {mono("x1*y1"), mono("x2*y2"), mono("x3*y3")};
    CHECK(is_regular_sequence(c));
    CHECK_THROWS_AS(is_regular_sequence({}), InputError);
    const std::vector<Monomial> d = {Monomial{}};
    CHECK_THROWS_AS(is_regular_sequence(d), InputError);
}

TEST_CASE("complete intersection agrees with height = number of generators") {
    CHECK(is_complete_intersection(ideal("x^2, y^3")));
    CHECK_FALSE(is_complete_intersection(ideal("x^2, x*y")));
    CHECK(is_complete_intersection(ideal("x1^4, x2^4, x3^4")));
    testutil::Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const auto I = testutil::random_ideal(rng, 5, 5, 2);
        CHECK(is_complete_intersection(I) ==
              (height(I) == static_cast<int>(I.num_gens())));
    }
}

TEST_CASE("almost complete intersection means height = q - 1") {
    CHECK(is_almost_complete_intersection(ideal("x^2, y^2, x*y")));
    CHECK(is_almost_complete_intersection(ideal("x^4, y^3*z^2, x^2*y^4*z")));
    CHECK_FALSE(is_almost_complete_intersection(ideal("x^2, y^3")));
}

TEST_CASE("aci decomposition removes one generator leaving a CI") {
    const auto split = aci_decompose(ideal("x^2, y^2, x*y"));
    REQUIRE(split.has_value());
    CHECK(split->v == mono("x*y"));
    CHECK(split->ci_part == std::vector<Monomial>{mono("x^2"), mono("y^2")});

    CHECK_FALSE(aci_decompose(ideal("x*y, x*z, y*z")).has_value());

    const auto star = aci_decompose(ideal("x1*y1, x2*y2, y1*y2"));
    REQUIRE(star.has_value());
    CHECK(star->v == mono("y1*y2"));

    CHECK_THROWS_AS(aci_decompose(ideal("x, y")), DomainError);
}

TEST_CASE("decomposition picks the canonically last candidate") {
    // removing either generator of a 2-generator ACI leaves a CI
    const auto I = ideal("x*y, y*z");
    REQUIRE(is_almost_complete_intersection(I));
    const auto split = aci_decompose(I);
    REQUIRE(split.has_value());
    CHECK(split->v_index == I.num_gens() - 1);
    CHECK(split->v == I.gens().back());
}

TEST_CASE("dominant generators own a strictly maximal exponent") {
    const auto I = ideal("x^2, y^3, x*y^2*z");
    CHECK(is_dominant_generator(mono("x*y^2*z"), I));  // via z
    CHECK(is_dominant_generator(mono("x^2"), I));
    CHECK(is_dominant_generator(mono("y^3"), I));

    const auto J = ideal("x^2, y^2, x*y");
    CHECK_FALSE(is_dominant_generator(mono("x*y"), J));
    CHECK_THROWS_AS(is_dominant_generator(mono("z"), J), InputError);

    const auto single = ideal("x^3*y");
    CHECK(is_dominant_generator(mono("x^3*y"), single));
}

TEST_CASE("dominant and semidominant ideals") {
    CHECK(is_dominant(ideal("x^2, y^3, x*y^2*z")));
    CHECK_FALSE(is_dominant(ideal("x^2, y^2, x*y")));
    CHECK(is_semidominant(ideal("x^2, y^2, x*y")));
    CHECK_FALSE(is_semidominant(ideal("x*y, x*z, y*z")));
    // every complete intersection is dominant
    CHECK(is_dominant(ideal("x^2, y^5, z")));
    CHECK(is_dominant(ideal("x1*y1, x2*y2")));
}
