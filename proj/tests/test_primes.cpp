#include <catch2/catch_amalgamated.hpp>

#include "monores/duality.hpp"
#include "monores/primes.hpp"
#include "test_util.hpp"

using namespace monores;
using testutil::ideal;
using testutil::var;

namespace {

std::vector<MonomialPrime> primes_of(std::vector<std::vector<std::string>> names) {
    std::vector<MonomialPrime> out;
    for (auto& p : names) {
        std::vector<VarId> vars;
        for (auto& n : p) vars.push_back(var(n));
        std::sort(vars.begin(), vars.end());
        out.push_back(MonomialPrime{vars});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("minimal primes are the minimal support transversals") {
    CHECK(minimal_primes(ideal("x*y, y*z")) == primes_of({{"y"}, {"x", "z"}}));
    CHECK(minimal_primes(ideal("x*y, x*z, y*z")) ==
          primes_of({{"x", "y"}, {"x", "z"}, {"y", "z"}}));
    // frozen from the exhaustive subset scan below
    CHECK(minimal_primes(ideal("x^4, y^3*z^2, x^2*y^4*z")) ==
          primes_of({{"x", "y"}, {"x", "z"}}));
}

TEST_CASE("branching enumeration matches the exhaustive subset scan") {
    testutil::Rng rng(101);
    for (int trial = 0; trial < 80; ++trial) {
        const auto I = testutil::random_ideal(rng, 6, 6, 2);
        CHECK(minimal_primes(I) == minimal_primes_exhaustive(I));
    }
}

TEST_CASE("height is the minimum transversal size") {
    CHECK(height(ideal("x*y, y*z")) == 1);
    CHECK(height(ideal("x, y, z")) == 3);
    CHECK(height(ideal("x^4, y^3*z^2, x^2*y^4*z")) == 2);
}

TEST_CASE("associated primes of a squarefree ideal are its minimal primes") {
    const auto I = ideal("x*y, y*z, x*z");
    CHECK(associated_primes(I) == minimal_primes(I));
}

TEST_CASE("embedded primes show up through polarization") {
    const auto I = ideal("x^4, y^3*z^2, x^2*y^4*z");
    const auto min_p = minimal_primes(I);
    const auto ass_p = associated_primes(I);
    CHECK(min_p.size() == 2);
    CHECK(ass_p.size() > min_p.size());
    for (const auto& p : min_p)
        CHECK(std::find(ass_p.begin(), ass_p.end(), p) != ass_p.end());
    // every associated prime contains a minimal one
    for (const auto& p : ass_p) {
        bool contains_min = false;
        for (const auto& m : min_p)
            if (p.contains(m)) contains_min = true;
        CHECK(contains_min);
    }
}

TEST_CASE("complete intersections are unmixed") {
    CHECK(associated_primes(ideal("x^2, y^2")) == primes_of({{"x", "y"}}));
    CHECK(is_unmixed(ideal("x^2, y^2")));
}

TEST_CASE("unmixedness compares associated prime heights") {
    CHECK_FALSE(is_unmixed(ideal("x*y, y*z")));
    CHECK(is_unmixed(ideal("x*y, x*z, y*z")));
    CHECK_FALSE(is_unmixed(ideal("x^4, y^3*z^2, x^2*y^4*z")));
}

TEST_CASE("min is contained in ass on random ideals") {
    testutil::Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        const auto I = testutil::random_ideal(rng, 4, 5, 3);
        const auto min_p = minimal_primes(I);
        const auto ass_p = associated_primes(I);
        for (const auto& p : min_p)
            CHECK(std::find(ass_p.begin(), ass_p.end(), p) != ass_p.end());
        for (const auto& p : ass_p) {
            bool contains_min = false;
            for (const auto& m : min_p)
                if (p.contains(m)) contains_min = true;
            CHECK(contains_min);
        }
    }
}

TEST_CASE("alexander dual examples") {
    CHECK(alexander_dual(ideal("x*y, y*z")) == ideal("y, x*z"));
    CHECK(alexander_dual(ideal("x*y, x*z, y*z")) == ideal("x*y, x*z, y*z"));
    CHECK_THROWS_AS(alexander_dual(ideal("x^2, y")), DomainError);
}

TEST_CASE("alexander dual is an involution on squarefree ideals") {
    testutil::Rng rng(77);
    int tested = 0;
    for (int trial = 0; trial < 120 && tested < 40; ++trial) {
        const auto I = testutil::random_ideal(rng, 6, 5, 1);
        if (!I.is_squarefree()) continue;
        ++tested;
        const auto dual = alexander_dual(I);
        CHECK(static_cast<std::size_t>(dual.num_gens()) == minimal_primes(I).size());
        CHECK(alexander_dual(dual) == I);
    }
    REQUIRE(tested == 40);
}
