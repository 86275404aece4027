#include <catch2/catch_amalgamated.hpp>

#include "monores/parse.hpp"
#include "test_util.hpp"

using namespace monores;
using testutil::mono;
using testutil::var;

TEST_CASE("basic generator list") {
    const auto I = parse_ideal("x^2, x*y, y^2");
    CHECK(I.num_gens() == 3);
    CHECK(I.vars() == std::vector<VarId>{var("x"), var("y")});
}

TEST_CASE("the paper-scale nine-variable ideal parses") {
    const auto I = parse_ideal("x1^2*x2*x3^3, x5*x2*x4^5, x3^3*x4^5, x6*x7^3, x8*x9^2");
    CHECK(I.num_gens() == 5);
    CHECK(I.num_vars() == 9);
    // first-appearance variable order
    CHECK(I.vars().front() == var("x1"));
    CHECK(I.vars()[3] == var("x5"));
}

TEST_CASE("minimalization happens on ingest") {
    CHECK(parse_ideal("x, x^2") == parse_ideal("x"));
}

TEST_CASE("vars header fixes the ring and the order") {
    const auto I = parse_ideal("vars: z, y, x; x*y, y*z");
    CHECK(I.vars() == std::vector<VarId>{var("z"), var("y"), var("x")});
    CHECK_THROWS_AS(parse_ideal("vars: x; x*y"), ParseError);
    const auto J = parse_ideal("vars: a, b\n a*b, a^2");
    CHECK(J.num_vars() == 2);
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_ideal(" x ^ 2 ,\n x * y ") == parse_ideal("x^2, x*y"));
}

TEST_CASE("syntax errors carry position and reject zero exponents") {
    CHECK_THROWS_AS(parse_ideal(""), ParseError);
    CHECK_THROWS_AS(parse_ideal("x^0"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x^"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x,,y"), ParseError);
    CHECK_THROWS_AS(parse_ideal("2*x"), ParseError);
    CHECK_THROWS_AS(parse_ideal("x y"), ParseError);
    try {
        parse_ideal("x*y,\n  y^^2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
    }
}

TEST_CASE("repeated variables in a term multiply") {
    CHECK(mono("x*x^2") == mono("x^3"));
}

TEST_CASE("format round-trips to the same canonical ideal") {
    testutil::Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto I = testutil::random_ideal(rng, 5, 6, 4);
        CHECK(parse_ideal(format_ideal(I)) == I);
        // without the header the first-appearance order may differ, but
        // the generator set must survive
        const auto J = parse_ideal(format_ideal(I, false));
        std::set<Monomial> a(I.gens().begin(), I.gens().end());
        std::set<Monomial> b(J.gens().begin(), J.gens().end());
        CHECK(a == b);
    }
}
