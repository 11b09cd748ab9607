#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lab5/rho.hpp"
#include "oracles.hpp"

using namespace lab5;

namespace {

bool coprime_to_six(std::int64_t r) { return gcd64(r, 6) == 1; }

} // namespace

TEST_CASE("value at the reference bundle") {
    // the two independent oracles agree with each other first
    const long double radical = oracles::rho_55_radical();
    const long double direct = oracles::rho_longdouble(5, 5, 5, 1);
    CHECK(std::fabs(radical - direct) < 1e-15L);
    CHECK(std::fabs(radical - (-1.9919186279062242L)) < 1e-12L);

    const BundleSpec L = make_bundle(5, 5);
    CHECK(rho(L, 1).imaginary == doctest::Approx(-1.9919186279062242).epsilon(1e-9));
    CHECK(rho(L, 4).imaginary == -rho(L, 1).imaginary); // exact, by construction
    CHECK(rho(L, 4).imaginary == doctest::Approx(1.9919186279062242).epsilon(1e-9));

    const BundleSpec L50 = make_bundle(5, 0);
    for (std::int64_t g = 1; g < 5; ++g) CHECK(rho(L50, g).imaginary == 0.0);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(rho(make_bundle(5, 5), 0), precondition_error);
    CHECK_THROWS_AS(rho(make_bundle(5, 5), 10), precondition_error);
    CHECK_THROWS_AS(rho(make_bundle(6, 10), 1), precondition_error); // even r
    CHECK_THROWS_AS(rho(make_bundle(1, 1), 1), precondition_error);  // trivial group
    CHECK_THROWS_AS(rho_match(make_bundle(5, 5), make_bundle(7, 7), Unit{1}), precondition_error);
    CHECK_THROWS_AS(rho_match(make_bundle(5, 5), make_bundle(5, 5), Unit{5}), precondition_error);
}

TEST_CASE("antisymmetry is exact for all odd moduli up to 101") {
    for (std::int64_t r = 3; r <= 101; r += 2) {
        const BundleSpec L = make_bundle(r, 3 * r);
        for (std::int64_t g = 1; g < r; ++g)
            CHECK(rho(L, g).imaginary + rho(L, r - g).imaginary == 0.0);
    }
}

TEST_CASE("agreement with the long double oracle") {
    for (std::int64_t r : {5, 7, 11, 49, 101}) {
        for (std::int64_t a0 : {1, -2, 3}) {
            for (std::int64_t b0 : {1, 5, -4}) {
                if (gcd64(a0, b0) != 1) continue;
                const BundleSpec L = make_bundle(r * a0, r * b0);
                const double scale = std::max(1.0, std::fabs(double(L.a) * double(L.b)));
                for (std::int64_t g = 1; g < r; ++g) {
                    const long double want = oracles::rho_longdouble(L.a, L.b, r, g);
                    CHECK(std::fabs(rho(L, g).imaginary - double(want)) < 1e-9 * scale);
                }
            }
        }
    }
}

TEST_CASE("injectivity margin across the sweep range") {
    for (std::int64_t r = 5; r <= 101; ++r) {
        if (!coprime_to_six(r)) continue;
        const BundleSpec L = make_bundle(r, r);
        const double scale = std::fabs(double(L.a) * double(L.b));
        std::vector<double> vals;
        for (std::int64_t g = 1; g < r; ++g) vals.push_back(rho(L, g).imaginary);
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t j = i + 1; j < vals.size(); ++j)
                CHECK(std::fabs(vals[i] - vals[j]) > 1e-9 * scale);
    }
}

TEST_CASE("scaling in ab at fixed modulus") {
    const BundleSpec L1 = make_bundle(5, 5), L2 = make_bundle(5, 15), L3 = make_bundle(-5, 10);
    for (std::int64_t g = 1; g < 5; ++g) {
        CHECK(rho(L2, g).imaginary / rho(L1, g).imaginary == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(rho(L3, g).imaginary / rho(L1, g).imaginary == doctest::Approx(-2.0).epsilon(1e-12));
    }
}

TEST_CASE("match predicate: examples and closed form agreement") {
    const BundleSpec L55 = make_bundle(5, 5);
    CHECK(rho_match(L55, L55, Unit{1}));
    CHECK_FALSE(rho_match(L55, make_bundle(5, 10), Unit{1}));
    CHECK(rho_match(L55, make_bundle(5, -5), Unit{4}));

    for (std::int64_t r : {5, 7, 11}) {
        std::vector<BundleSpec> sample;
        for (std::int64_t a0 = -6; a0 <= 6; ++a0)
            for (std::int64_t b0 = -6; b0 <= 6; ++b0) {
                if (a0 == 0 && b0 == 0) continue;
                if (gcd64(a0, b0) != 1) continue;
                sample.push_back(make_bundle(r * a0, r * b0));
            }
        const ModRing ring(r);
        for (std::size_t i = 0; i < sample.size(); ++i) {
            for (std::size_t j = i; j < sample.size(); ++j) {
                for (const Unit& u : units(ring)) {
                    REQUIRE(rho_match(sample[i], sample[j], u) ==
                            rho_match_closed_form(sample[i], sample[j], u));
                }
            }
        }
    }
}
