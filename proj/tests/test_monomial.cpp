#include <catch2/catch_amalgamated.hpp>

#include "monores/monomial.hpp"
#include "test_util.hpp"

using namespace monores;
using testutil::mono;
using testutil::var;

TEST_CASE("lcm is the componentwise maximum") {
    const std::vector<Monomial> ms = {mono("x^2*y"), mono("x*z")};
    CHECK(lcm_of(ms) == mono("x^2*y*z"));

    const std::vector<Monomial> single = {mono("x^3*y^2")};
    CHECK(lcm_of(single) == mono("x^3*y^2"));

    const std::vector<Monomial> three = {mono("x^2*y"), mono("x*y^4*z"), mono("y^3")};
    CHECK(lcm_of(three) == mono("x^2*y^4*z"));

    CHECK_THROWS_AS(lcm_of({}), InputError);
}

TEST_CASE("divisibility compares exponents componentwise") {
    CHECK(mono("x").divides(mono("x^2*y")));
    CHECK_FALSE(mono("x^3").divides(mono("x^2*y")));
    CHECK(Monomial{}.divides(mono("x^2*y")));
    CHECK(Monomial{}.divides(Monomial{}));
}

TEST_CASE("support lists the variables with positive exponent") {
    CHECK(mono("x^2*y").support() == std::vector<VarId>{var("x"), var("y")});
    CHECK(Monomial{}.support().empty());
    const auto s = mono("x1*x4^5").support();
    CHECK(s.size() == 2);
    CHECK(std::find(s.begin(), s.end(), var("x1")) != s.end());
    CHECK(std::find(s.begin(), s.end(), var("x4")) != s.end());
}

TEST_CASE("products, quotients, gcd") {
    CHECK(mono("x*y") * mono("x*z") == mono("x^2*y*z"));
    CHECK(mono("x^2*y*z").divide_exact(mono("x*z")) == mono("x*y"));
    CHECK_THROWS_AS(mono("x").divide_exact(mono("y")), DomainError);
    CHECK(Monomial::gcd(mono("x^2*y"), mono("x*y^3")) == mono("x*y"));
    CHECK(Monomial::gcd(mono("x"), mono("y")).is_unit());
    CHECK(mono("x^2*y").colon(mono("x*y")) == mono("x"));
}

TEST_CASE("make combines repeated variables and rejects negatives") {
    const VarId x = var("x");
    CHECK(Monomial::make({{x, 1}, {x, 2}}) == mono("x^3"));
    CHECK(Monomial::make({{x, 0}}).is_unit());
    CHECK_THROWS_AS(Monomial::make({{x, -1}}), InputError);
}

TEST_CASE("formatting round-trips through the parser") {
    CHECK(mono("x^2*y").str() == "x^2*y");
    CHECK(Monomial{}.str() == "1");
    testutil::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto I = testutil::random_ideal(rng, 4, 5, 3);
        for (const auto& g : I.gens()) CHECK(mono(g.str()) == g);
    }
}
