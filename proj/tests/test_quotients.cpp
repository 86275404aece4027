#include <catch2/catch_amalgamated.hpp>

#include "monores/classify.hpp"
#include "monores/duality.hpp"
#include "monores/quotients.hpp"
#include "test_util.hpp"

using namespace monores;
using testutil::ideal;
using testutil::mono;
using testutil::var;

TEST_CASE("colon ideal generators") {
    const std::vector<Monomial> prefix = {mono("x*y")};
    CHECK(colon_ideal_gens(prefix, mono("x*z")) == std::vector<Monomial>{mono("y")});
    const std::vector<Monomial> two = {mono("x*y"), mono("x*z")};
    const auto c = colon_ideal_gens(two, mono("y*z"));
    CHECK(c == std::vector<Monomial>{mono("x")});
}

TEST_CASE("linear quotients orders") {
    CHECK(has_linear_quotients(ideal("x, y")).has_value());
    CHECK(has_linear_quotients(ideal("x*y, x*z, y*z")).has_value());
    // x^2, y^2 as a prefix forces a non-variable colon against x*y^3
    CHECK_FALSE(has_linear_quotients(ideal("x^3, y^3, x*y^2*z^5")).has_value());
    CHECK_THROWS_AS(has_linear_quotients(ideal("x, y"), 1), ResourceError);
}

TEST_CASE("linear quotients orders validate stepwise") {
    const auto I = ideal("x*y, x*z, y*z");
    const auto order = has_linear_quotients(I);
    REQUIRE(order.has_value());
    for (std::size_t i = 1; i < order->size(); ++i) {
        std::vector<Monomial> prefix;
        for (std::size_t j = 0; j < i; ++j) prefix.push_back(I.gens()[(*order)[j]]);
        for (const auto& g : colon_ideal_gens(prefix, I.gens()[(*order)[i]]))
            CHECK(g.degree() == 1);
    }
}

TEST_CASE("weak polymatroidality under an explicit order") {
    const std::vector<VarId> xy = {var("x"), var("y")};
    CHECK(is_weakly_polymatroidal(ideal("x, y"), xy));
    CHECK(is_weakly_polymatroidal(ideal("y^2, x*y"), xy));
    CHECK_THROWS_AS(is_weakly_polymatroidal(ideal("x*y, y*z"), xy), InputError);
}

TEST_CASE("order search finds witnesses for duals of star ACIs") {
    // dual of (x1 y1, x2 y2, y1 y2)
    const auto I = ideal("x1*y1, x2*y2, y1*y2");
    const auto dual = alexander_dual(I);
    CHECK(has_linear_quotients(dual).has_value());
    const auto order = find_weakly_polymatroidal_order(dual);
    CHECK(order.has_value());
    CHECK_THROWS_AS(find_weakly_polymatroidal_order(ideal("a*b*c*d*e*f*g*h*i"), 8),
                    ResourceError);
}
