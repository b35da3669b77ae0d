#include <doctest.h>

#include "sandrank/genfun.hpp"
#include "sandrank/series.hpp"

using namespace sandrank;

TEST_CASE("series arithmetic") {
    const TruncatedSeries one = TruncatedSeries::constant(2, {{{0, 1}, 4}}, 1);
    const TruncatedSeries x = one.monomial_like({1, 0, 0});
    const TruncatedSeries geom = (one - x).inverse();
    for (int i = 0; i <= 4; ++i) CHECK(geom.coefficient({i, 0, 0}) == 1);
    CHECK(geom.coefficient({5, 0, 0}) == 0);
    CHECK((geom * (one - x)) == one);
    CHECK((one + x).to_string({"x", "y"}) == "1 + x");
    CHECK_FALSE(one.admits({3, 2, 0}));
    CHECK_THROWS((one.scaled(2) + x).inverse());
    const TruncatedSeries other = TruncatedSeries::constant(2, {{{0, 1}, 3}}, 1);
    CHECK_THROWS_AS(one + other, std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(2, {{{0}, 3}}), std::invalid_argument);
    const TruncatedSeries sub = (one + x).map_exponents([](const TruncatedSeries::Exponents& e) {
        return TruncatedSeries::Exponents{e[0] * 2, e[1], 0};
    });
    CHECK(sub.coefficient({2, 0, 0}) == 1);
}

TEST_CASE("L_n") {
    CHECK(Ln_direct(1, 6) == h_series(6));
    for (int n = 2; n <= 6; ++n) {
        const TruncatedSeries l = Ln_direct(n, 8);
        CHECK(l == Ln_via_toxy(n, 8));
        const TruncatedSeries swapped = l.map_exponents([](const TruncatedSeries::Exponents& e) {
            return TruncatedSeries::Exponents{e[1], e[0], e[2]};
        });
        CHECK(swapped == l);
    }
    CHECK(toxy_word_sum(2, 6) == TruncatedSeries::constant(2, xy_series(6).bounds(), 1));
    CHECK(word_weight(BinaryWord::parse("bab")) == std::pair<Int, Int>{0, 0});
    CHECK(word_weight(BinaryWord::parse("abb")) == std::pair<Int, Int>{1, 0});
    CHECK_THROWS_AS(Ln_via_toxy(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(Ln_direct(40, 4), std::invalid_argument);
}

TEST_CASE("Carlitz series") {
    const TruncatedSeries c = carlitz_by_recurrence(8, 5);
    CHECK(c == carlitz_by_enumeration(8, 5));
    CHECK(c.coefficient({0, 0, 0}) == 1);
    CHECK(c.coefficient({0, 1, 0}) == 1);
    CHECK(c.coefficient({0, 2, 0}) == 1);
    CHECK(c.coefficient({1, 2, 0}) == 1);
    CHECK(c.coefficient({0, 3, 0}) == 1);
    CHECK(c.coefficient({1, 3, 0}) == 2);
    CHECK(c.coefficient({2, 3, 0}) == 1);
    CHECK(c.coefficient({3, 3, 0}) == 1);
}

TEST_CASE("generating function identity") {
    CHECK(LnC_identity_check(2, 6));
    CHECK(LnC_identity_check(5, 8));
    CHECK(LnC_left(4, 6) == LnC_right(4, 6));
}
