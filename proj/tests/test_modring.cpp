#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lab5/modring.hpp"

using namespace lab5;

TEST_CASE("canonical representatives") {
    ModRing r5(5);
    CHECK(r5.canonical(7) == 2);
    CHECK(r5.canonical(-1) == 4);
    CHECK(r5.canonical(-10) == 0);
    CHECK(ModRing(1).canonical(123) == 0);
    CHECK_THROWS_AS(ModRing(0), precondition_error);
}

TEST_CASE("units ascending with inverses") {
    CHECK(units(ModRing(5)) == std::vector<Unit>{{1}, {2}, {3}, {4}});
    CHECK(units(ModRing(1)).empty());
    CHECK(units(ModRing(15)) ==
          std::vector<Unit>{{1}, {2}, {4}, {7}, {8}, {11}, {13}, {14}});

    for (std::int64_t r : {2, 5, 12, 15, 35}) {
        ModRing ring(r);
        for (const Unit& u : units(ring)) {
            CHECK(gcd64(u.value, r) == 1);
            CHECK(ring.mul(u.value, ring.inverse(u.value)) == ring.canonical(1));
        }
    }
}

TEST_CASE("unit power searches") {
    CHECK(find_units_with_power(ModRing(5), 2, -1) == std::vector<Unit>{{2}, {3}});
    CHECK(find_units_with_power(ModRing(7), 3, 1) == std::vector<Unit>{{1}, {2}, {4}});
    CHECK(find_units_with_power(ModRing(5), 3, 1) == std::vector<Unit>{{1}});
    CHECK_THROWS_AS(find_units_with_power(ModRing(5), 0, 1), precondition_error);

    // matches the filter of units() by the predicate
    for (std::int64_t r : {5, 7, 9, 15}) {
        ModRing ring(r);
        for (std::int64_t e : {1, 2, 3, 4}) {
            for (std::int64_t t = 0; t < r; ++t) {
                std::vector<Unit> expect;
                for (const Unit& u : units(ring))
                    if (ring.pow(u.value, e) == t) expect.push_back(u);
                CHECK(find_units_with_power(ring, e, t) == expect);
            }
        }
    }
}

TEST_CASE("bezout pairs are canonical and exact") {
    CHECK(bezout_pair(1, 1) == BezoutPair{0, 1});
    CHECK(bezout_pair(1, 5) == BezoutPair{0, 1});
    CHECK(bezout_pair(2, 3) == BezoutPair{1, -1});
    CHECK(bezout_pair(0, 1) == BezoutPair{1, 0});
    CHECK(bezout_pair(0, -1) == BezoutPair{-1, 0});
    CHECK_THROWS_AS(bezout_pair(2, 4), precondition_error);
    CHECK_THROWS_AS(bezout_pair(0, 5), precondition_error);

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-2000, 2000);
    int tried = 0;
    while (tried < 500) {
        const std::int64_t a0 = dist(rng), b0 = dist(rng);
        if (gcd64(a0, b0) != 1) continue;
        ++tried;
        const BezoutPair p = bezout_pair(a0, b0);
        CHECK(p.m * b0 + p.n * a0 == 1);
        if (a0 != 0) {
            CHECK(p.m >= 0);
            CHECK(p.m < (a0 < 0 ? -a0 : a0));
        }
    }
}
