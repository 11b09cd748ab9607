#include "lab5/rho.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace lab5 {

namespace {

void require_rho_domain(const BundleSpec& L) {
    if (L.r <= 1) throw precondition_error("rho: fundamental group must be nontrivial (r > 1)");
    if (L.r % 2 == 0) throw precondition_error("rho: modulus must be odd, got r = " + std::to_string(L.r));
}

} // namespace

RhoValue rho(const BundleSpec& L, std::int64_t g) {
    require_rho_domain(L);
    const std::int64_t r = L.r;
    std::int64_t j = g % r;
    if (j < 0) j += r;
    if (j == 0) throw precondition_error("rho: g must be nonzero mod r");

    const std::int64_t half = (r - 1) / 2;
    if (j > half) {
        RhoValue v = rho(L, r - j);
        return RhoValue{j, -v.imaginary};
    }
    const double theta_half = std::numbers::pi * static_cast<double>(j) / static_cast<double>(r);
    const double s = std::sin(theta_half);
    const double coeff = std::cos(theta_half) / (2.0 * static_cast<double>(r) * static_cast<double>(r) * s * s * s);
    const double ab = static_cast<double>(L.a) * static_cast<double>(L.b);
    return RhoValue{j, -coeff * ab};
}

bool rho_match(const BundleSpec& L, const BundleSpec& L2, Unit u) {
    require_rho_domain(L);
    if (L.r != L2.r)
        throw precondition_error("rho_match: moduli differ (" + std::to_string(L.r) + " vs " +
                                 std::to_string(L2.r) + ")");
    const ModRing ring(L.r);
    if (!ring.is_unit(u.value))
        throw precondition_error("rho_match: " + std::to_string(u.value) + " is not a unit mod " +
                                 std::to_string(L.r));

    const double scale = std::max({1.0,
                                   std::fabs(static_cast<double>(L.a) * static_cast<double>(L.b)),
                                   std::fabs(static_cast<double>(L2.a) * static_cast<double>(L2.b))});
    for (std::int64_t beta = 1; beta < L.r; ++beta) {
        const double lhs = rho(L, ring.mul(u.value, beta)).imaginary;
        const double rhs = rho(L2, beta).imaginary;
        if (std::fabs(lhs - rhs) > rho_tolerance * scale) return false;
    }
    return true;
}

bool rho_match_closed_form(const BundleSpec& L, const BundleSpec& L2, Unit u) {
    require_rho_domain(L);
    if (L.r != L2.r) throw precondition_error("rho_match_closed_form: moduli differ");
    const ModRing ring(L.r);
    if (!ring.is_unit(u.value)) throw precondition_error("rho_match_closed_form: u must be a unit");

    const std::int64_t ab = L.ab();
    const std::int64_t ab2 = L2.ab();
    if (ab == 0 && ab2 == 0) return true;
    const std::int64_t uc = ring.canonical(u.value);
    if (uc == 1 && ab == ab2) return true;
    if (uc == L.r - 1 && ab == -ab2) return true;
    return false;
}

} // namespace lab5
