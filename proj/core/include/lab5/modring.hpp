#pragma once

#include <cstdint>
#include <vector>

#include "lab5/errors.hpp"

namespace lab5 {

/// The ring Z/r with canonical representatives {0,...,r-1}.
///
/// r = 1 is allowed (the trivial ring, needed by the form algebra);
/// classification entry points impose their own r > 1, gcd(r,6) = 1
/// restriction on top of this.
class ModRing {
public:
    explicit ModRing(std::int64_t r);

    std::int64_t modulus() const { return r_; }

    // Reduce any integer to its canonical representative.
    std::int64_t canonical(std::int64_t x) const;

    std::int64_t add(std::int64_t x, std::int64_t y) const;
    std::int64_t sub(std::int64_t x, std::int64_t y) const;
    std::int64_t mul(std::int64_t x, std::int64_t y) const;
    std::int64_t neg(std::int64_t x) const;
    std::int64_t pow(std::int64_t base, std::int64_t exponent) const; // exponent >= 0

    bool is_unit(std::int64_t x) const;
    std::int64_t inverse(std::int64_t x) const; // throws if x is not a unit

private:
    std::int64_t r_;
};

/// A unit of Z/r, held as its canonical representative in {1,...,r-1}.
struct Unit {
    std::int64_t value = 1;

    friend bool operator==(const Unit&, const Unit&) = default;
    friend auto operator<=>(const Unit&, const Unit&) = default;
};

/// All units of Z/r in ascending canonical order. Empty for r = 1.
std::vector<Unit> units(const ModRing& ring);

/// All units u with u^exponent = target in Z/r, ascending. exponent >= 1.
std::vector<Unit> find_units_with_power(const ModRing& ring,
                                        std::int64_t exponent,
                                        std::int64_t target);

/// A pair (m, n) with m*b0 + n*a0 = 1.
struct BezoutPair {
    std::int64_t m = 0;
    std::int64_t n = 0;

    friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

/// Canonical Bezout pair for coprime a0, b0: the extended-Euclid solution
/// shifted by (m,n) <- (m + t*a0, n - t*b0) so that 0 <= m < |a0| when
/// a0 != 0; for a0 = 0 (so b0 = +-1) the pair is (b0, 0).
/// Throws precondition_error when gcd(a0, b0) != 1.
BezoutPair bezout_pair(std::int64_t a0, std::int64_t b0);

std::int64_t gcd64(std::int64_t x, std::int64_t y);

} // namespace lab5
