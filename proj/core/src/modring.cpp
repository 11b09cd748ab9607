#include "lab5/modring.hpp"

#include <numeric>
#include <string>

namespace lab5 {

std::int64_t gcd64(std::int64_t x, std::int64_t y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
        std::int64_t t = x % y;
        x = y;
        y = t;
    }
    return x;
}

ModRing::ModRing(std::int64_t r) : r_(r) {
    if (r < 1) throw precondition_error("modulus must be >= 1, got " + std::to_string(r));
}

std::int64_t ModRing::canonical(std::int64_t x) const {
    std::int64_t v = x % r_;
    return v < 0 ? v + r_ : v;
}

std::int64_t ModRing::add(std::int64_t x, std::int64_t y) const {
    return canonical(canonical(x) + canonical(y));
}

std::int64_t ModRing::sub(std::int64_t x, std::int64_t y) const {
    return canonical(canonical(x) - canonical(y));
}

std::int64_t ModRing::mul(std::int64_t x, std::int64_t y) const {
    // canonical reps are < r <= 2^31 in all classification uses, but stay
    // safe for any r up to 2^31 via 128-bit intermediates
    __int128 p = static_cast<__int128>(canonical(x)) * canonical(y);
    return static_cast<std::int64_t>(p % r_ < 0 ? p % r_ + r_ : p % r_);
}

std::int64_t ModRing::neg(std::int64_t x) const {
    return canonical(-canonical(x));
}

std::int64_t ModRing::pow(std::int64_t base, std::int64_t exponent) const {
    if (exponent < 0) throw precondition_error("pow: exponent must be >= 0");
    std::int64_t acc = canonical(1);
    std::int64_t b = canonical(base);
    while (exponent > 0) {
        if (exponent & 1) acc = mul(acc, b);
        b = mul(b, b);
        exponent >>= 1;
    }
    return acc;
}

bool ModRing::is_unit(std::int64_t x) const {
    std::int64_t v = canonical(x);
    return v >= 1 && gcd64(v, r_) == 1;
}

std::int64_t ModRing::inverse(std::int64_t x) const {
    std::int64_t v = canonical(x);
    if (!is_unit(v))
        throw precondition_error(std::to_string(v) + " is not a unit mod " + std::to_string(r_));
    // extended Euclid on (v, r)
    std::int64_t old_r = v, r = r_;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tr = old_r - q * r;
        old_r = r;
        r = tr;
        std::int64_t ts = old_s - q * s;
        old_s = s;
        s = ts;
    }
    return canonical(old_s);
}

std::vector<Unit> units(const ModRing& ring) {
    std::vector<Unit> out;
    for (std::int64_t v = 1; v < ring.modulus(); ++v)
        if (gcd64(v, ring.modulus()) == 1) out.push_back(Unit{v});
    return out;
}

std::vector<Unit> find_units_with_power(const ModRing& ring,
                                        std::int64_t exponent,
                                        std::int64_t target) {
    if (exponent < 1) throw precondition_error("find_units_with_power: exponent must be >= 1");
    const std::int64_t t = ring.canonical(target);
    std::vector<Unit> out;
    for (const Unit& u : units(ring))
        if (ring.pow(u.value, exponent) == t) out.push_back(u);
    return out;
}

BezoutPair bezout_pair(std::int64_t a0, std::int64_t b0) {
    if (gcd64(a0, b0) != 1)
        throw precondition_error("bezout_pair: gcd(" + std::to_string(a0) + ", " +
                                 std::to_string(b0) + ") != 1");
    if (a0 == 0) return BezoutPair{b0, 0}; // b0 = +-1 here

    // extended Euclid for u*b0 + v*a0 = +-1
    std::int64_t old_r = b0, r = a0;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r; r = tmp;
        tmp = old_s - q * s;
        old_s = s; s = tmp;
        tmp = old_t - q * t;
        old_t = t; t = tmp;
    }
    std::int64_t m = old_s, n = old_t;
    if (old_r < 0) { m = -m; n = -n; }

    // shift into the canonical window 0 <= m < |a0|
    const std::int64_t aa = a0 < 0 ? -a0 : a0;
    std::int64_t mm = m % aa;
    if (mm < 0) mm += aa;
    const std::int64_t shift = (mm - m) / a0;
    return BezoutPair{mm, n - shift * b0};
}

} // namespace lab5
