#pragma once

#include <cstdint>

#include "lab5/bundle.hpp"

namespace lab5 {

/// The rho invariant at a nonzero group element. The value is purely
/// imaginary; only its imaginary part is stored.
struct RhoValue {
    std::int64_t g = 1;      // canonical representative in {1,...,r-1}
    double imaginary = 0.0;
};

/// Absolute comparison tolerance, scaled by max(1, |ab|) at the call sites.
inline constexpr double rho_tolerance = 1e-9;

/// rho(g, L) for g != 0 mod r. Requires r > 1 and r odd.
///
/// For representatives j <= (r-1)/2 the value is
///   -cos(theta/2) / (2 r^2 sin^3(theta/2)) * a * b,  theta = 2*pi*j/r,
/// and the other half is fixed by antisymmetry rho(r-g) = -rho(g), so the
/// antisymmetry identity holds exactly in floating point.
RhoValue rho(const BundleSpec& L, std::int64_t g);

/// True iff rho(L, u*beta) = rho(L2, beta) for every beta != 0, checked
/// numerically with tolerance rho_tolerance * max(1, |ab|, |a'b'|).
/// Requires r(L) = r(L2) > 1, both odd, and u a unit mod r.
bool rho_match(const BundleSpec& L, const BundleSpec& L2, Unit u);

/// Closed form of the same predicate:
///   (ab = 0 = a'b')  or  (u = 1 and ab = a'b')  or  (u = -1 and ab = -a'b').
/// Must agree with the numeric check; exposed so tests can compare the routes.
bool rho_match_closed_form(const BundleSpec& L, const BundleSpec& L2, Unit u);

} // namespace lab5
