#include <catch2/catch_amalgamated.hpp>

#include "monores/polarize.hpp"
#include "test_util.hpp"

using namespace monores;
using testutil::ideal;
using testutil::mono;

TEST_CASE("polarization splits powers into slot variables") {
    const auto [J, pm] = polarize(ideal("x^2"));
    REQUIRE(J.num_gens() == 1);
    CHECK(J.is_squarefree());
    CHECK(J.num_vars() == 2);
    CHECK(J.gens()[0].degree() == 2);
    CHECK(depolarize(J.gens()[0], pm) == mono("x^2"));
}

TEST_CASE("slot variables are shared across generators") {
    const auto I = ideal("x^2, x*y");
    const auto [J, pm] = polarize(I);
    REQUIRE(J.num_gens() == 2);
    CHECK(J.is_squarefree());
    CHECK(J.num_vars() == 3);  // x_1, x_2, y_1
    for (std::size_t k = 0; k < J.num_gens(); ++k)
        CHECK(I.is_generator(depolarize(J.gens()[k], pm)));
}

TEST_CASE("polarization preserves the generator count") {
    testutil::Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto I = testutil::random_ideal(rng, 4, 5, 3);
        const auto [J, pm] = polarize(I);
        CHECK(J.num_gens() == I.num_gens());
        CHECK(J.is_squarefree());
        std::vector<Monomial> back;
        for (const auto& g : J.gens()) back.push_back(depolarize(g, pm));
        CHECK(MonomialIdeal::make(I.vars(), back) == I);
    }
}

TEST_CASE("polarizing a squarefree ideal relabels variables only") {
    const auto I = ideal("x*y, y*z");
    const auto [J, pm] = polarize(I);
    CHECK(J.num_vars() == I.num_vars());
    CHECK(J.num_gens() == I.num_gens());
}

TEST_CASE("slot names avoid collisions with declared variables") {
    const auto I = parse_ideal("vars: u, u_1; u^2*u_1");
    const auto [J, pm] = polarize(I);
    CHECK(J.is_squarefree());
    std::set<VarId> unique(J.vars().begin(), J.vars().end());
    CHECK(unique.size() == J.num_vars());
    CHECK(depolarize(J.gens()[0], pm) == I.gens()[0]);
}
