#pragma once

#include <cstdint>

#include "lab5/modring.hpp"

namespace lab5 {

/// The total space of the principal circle bundle over S^2 x S^2 with Euler
/// class a*x + b*y, together with the derived data every decision procedure
/// consumes: r = gcd(|a|,|b|), the coprime pair (a0, b0) = (a/r, b/r) and a
/// canonical Bezout pair with m*b0 + n*a0 = 1.
struct BundleSpec {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t r = 1;
    std::int64_t a0 = 0;
    std::int64_t b0 = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    int orientation = +1; // base and fibre oriented the standard way

    /// Same bundle with (m, n) replaced by (m + t*a0, n - t*b0).
    /// Classification verdicts must not depend on this choice.
    BundleSpec with_bezout_shift(std::int64_t t) const;

    std::int64_t ab() const { return a * b; } // |a|,|b| <= 2^31 keeps this exact

    friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

/// Builds the bundle for (a, b) != (0, 0); throws precondition_error otherwise.
BundleSpec make_bundle(std::int64_t a, std::int64_t b);

/// A degree-two cohomology class of the total space, held as integer
/// coordinates (p, qhat) in the pulled-back basis. Two coordinate pairs name
/// the same class iff they differ by an integer multiple of (a, b);
/// classes_equal is the only equality notion.
struct CohomClass {
    std::int64_t p = 0;
    std::int64_t qhat = 0;

    CohomClass negated() const { return {-p, -qhat}; }

    friend bool operator==(const CohomClass&, const CohomClass&) = default;
    friend auto operator<=>(const CohomClass&, const CohomClass&) = default;
};

/// Parameters (s, epsilon, k) of a normal 2-smoothing of the bundle.
/// s must be a unit of Z/r; epsilon is +-1; k is a residue mod r.
struct SmoothingParams {
    std::int64_t s = 1;
    int epsilon = +1;
    std::int64_t k = 0;
};

/// True iff the class generates a free direct summand of H^2:
/// |p*b0 - qhat*a0| = 1.
bool is_primitive(const BundleSpec& L, const CohomClass& c);

/// The class a smoothing with parameters (epsilon, k) pulls the distinguished
/// generator back to: (p, qhat) = (eps*m + k*a0, -eps*n + k*b0), where k is
/// lifted to its symmetric integer representative. Always primitive.
CohomClass induced_class(const BundleSpec& L, const SmoothingParams& params);

/// Quotient equality in Z^2 / <(a, b)>.
bool classes_equal(const BundleSpec& L, const CohomClass& c1, const CohomClass& c2);

/// Deterministic representative of the class mod (a, b); classes are equal
/// iff their canonical representatives coincide.
CohomClass canonical_class(const BundleSpec& L, const CohomClass& c);

/// Lift of a residue into {-floor(r/2), ..., ceil(r/2) - 1}.
std::int64_t symmetric_lift(std::int64_t k, std::int64_t r);

} // namespace lab5
