#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lab5/bundle.hpp"

namespace lab5 {

/// Relative orientation of the second bundle against the first. Flipping
/// both orientations is a no-op, so only the relative sign enters the
/// congruence systems: flip = -1 negates every right-hand side.
enum class RelOrientation : int {
    same = +1,
    opposite = -1,
};

/// The published third congruence prints epsilon where symmetry of the
/// statement demands epsilon'. `symmetric` is the corrected reading and the
/// default; `literal` keeps the printed one so the two can be compared.
enum class ThirdCongruenceReading {
    symmetric,
    literal,
};

struct DecideOptions {
    ThirdCongruenceReading reading = ThirdCongruenceReading::symmetric;
    std::uint64_t scan_cap = 1'000'000; // tuples scanned before giving up
};

/// Witness for oriented homotopy equivalence: units s, s2, signs epsilon,
/// epsilon2 and residues k, k2 satisfying the three congruences
///   (C1) s^3 a0 b0           = flip * s2^3 a0' b0'            (mod r)
///   (C2) s X Y               = flip * s2 X' Y'                (mod r)
///   (C3) s^2 (b0 X - a0 Y)   = flip * s2^2 (b0' X' - a0' Y')  (mod r)
/// where X = eps*m + k*a0 and Y = eps*n - k*b0.
struct HomotopyCert {
    std::int64_t s = 1;
    std::int64_t s2 = 1;
    int epsilon = +1;
    int epsilon2 = +1;
    std::int64_t k = 0;
    std::int64_t k2 = 0;

    friend bool operator==(const HomotopyCert&, const HomotopyCert&) = default;
};

/// Witness for oriented diffeomorphism: exact integer equality
/// ab = flip * delta * a'b' plus the two congruences
///   X Y             = flip * delta * X' Y'              (mod r)
///   b0 X - a0 Y     = flip * (b0' X' - a0' Y')          (mod r).
struct DiffeoCert {
    int epsilon = +1;
    int epsilon2 = +1;
    int delta = +1;
    std::int64_t k = 0;
    std::int64_t k2 = 0;

    friend bool operator==(const DiffeoCert&, const DiffeoCert&) = default;
};

/// Exhaustive search in lexicographic order (s, s2, epsilon, epsilon2, k, k2),
/// with +1 before -1 for the signs (their canonical residues order that way);
/// returns the first certificate found, or nullopt after a full scan.
/// Requires r(L) = r(L2), r > 1, gcd(r, 6) = 1.
std::optional<HomotopyCert> decide_homotopy(const BundleSpec& L, const BundleSpec& L2,
                                            RelOrientation orient,
                                            const DecideOptions& opts = {});

/// All homotopy certificates, in scan order. Subject to the scan cap.
std::vector<HomotopyCert> homotopy_certificates(const BundleSpec& L, const BundleSpec& L2,
                                                RelOrientation orient,
                                                const DecideOptions& opts = {});

std::optional<DiffeoCert> decide_diffeo(const BundleSpec& L, const BundleSpec& L2,
                                        RelOrientation orient,
                                        const DecideOptions& opts = {});

std::vector<DiffeoCert> diffeo_certificates(const BundleSpec& L, const BundleSpec& L2,
                                            RelOrientation orient,
                                            const DecideOptions& opts = {});

/// Precomputed residue signatures of one bundle: each smoothing parameter
/// choice contributes one value tuple per congruence, and a certificate for a
/// pair exists iff the two bundles' signature sets meet after the orientation
/// flip is folded into one side. Exactly equivalent to the exhaustive scans
/// under the symmetric reading; the batch driver builds these once per member.
class BundleSignatures {
public:
    explicit BundleSignatures(const BundleSpec& L);

    const BundleSpec& bundle() const { return L_; }

    friend bool homotopy_equivalent(const BundleSignatures& A, const BundleSignatures& B,
                                    RelOrientation orient);
    friend bool diffeomorphic(const BundleSignatures& A, const BundleSignatures& B,
                              RelOrientation orient);

private:
    BundleSpec L_;
    std::vector<std::array<std::int64_t, 3>> hom_, hom_neg_;
    // diffeo pairs (XY, Z) under the four sign transforms (+-XY, +-Z)
    std::vector<std::array<std::int64_t, 2>> dif_pp_, dif_np_, dif_pn_, dif_nn_;
};

bool homotopy_equivalent(const BundleSignatures& A, const BundleSignatures& B,
                         RelOrientation orient);
bool diffeomorphic(const BundleSignatures& A, const BundleSignatures& B, RelOrientation orient);

/// Verdict-only fast paths on plain bundles (one-shot signature builds).
bool homotopy_equivalent(const BundleSpec& L, const BundleSpec& L2, RelOrientation orient);
bool diffeomorphic(const BundleSpec& L, const BundleSpec& L2, RelOrientation orient);

/// True when the exact integer condition ab = +-a'b' already fails, which
/// settles decide_diffeo negatively regardless of the congruences.
bool diffeo_integer_condition_impossible(const BundleSpec& L, const BundleSpec& L2);

/// The proof of the diffeomorphism criterion needs ab != 0; callers are
/// warned when a verdict leans on the uncovered case.
bool diffeo_proof_coverage_warning(const BundleSpec& L, const BundleSpec& L2);

/// One (input class, output class) relation realized by a self-equivalence
/// certificate, with both classes in canonical form.
struct ClassRelation {
    CohomClass from;
    CohomClass to;

    friend bool operator==(const ClassRelation&, const ClassRelation&) = default;
    friend auto operator<=>(const ClassRelation&, const ClassRelation&) = default;
};

/// Enumerates every diffeomorphism certificate of (L, L) over both relative
/// orientations; each certificate (eps,k | eps2,k2) contributes the relation
/// induced_class(eps,k) -> induced_class(eps2,k2). Sorted, deduplicated.
std::vector<ClassRelation> self_diffeo_actions(const BundleSpec& L, const DecideOptions& opts = {});

/// Same relation set for homotopy self-equivalence certificates.
std::vector<ClassRelation> self_homotopy_actions(const BundleSpec& L, const DecideOptions& opts = {});

/// Outcome of the non-diffeomorphic-pair witness procedure on L^{r, q*r}.
///
/// The procedure picks a unit s with s^2 = -1 (or, failing that, a unit
/// s != +-1 with s^2 = 1), fixes the parameter tuple
///   (s, s2=1, eps=1, eps2=-1, k=-1, k2=s)       [s^2 = -1 case]
///   (s, s2=1, eps=1, eps2=+1, k=+1, k2=s)       [s^2 = +1 case]
/// verifies the two reduced congruences
///   s*k*eps   = s2*k2*eps2   (mod r)
///   s^2*eps   = s2^2*eps2    (mod r)
/// and then checks by exhaustive enumeration that no self-diffeomorphism
/// action maps the primitive class y = induced(eps, k) to +-induced(eps2, k2).
struct PairWitnessReport {
    std::int64_t r = 0;
    std::int64_t q = 0;
    bool preconditions_hold = false;
    std::string failure_reason;          // set when a precondition failed
    std::string unit_case;               // "s^2=-1" or "s^2=1"
    HomotopyCert params;                 // tuple above, canonical residues
    bool k_congruence = false;           // s*k*eps   = s2*k2*eps2
    bool square_congruence = false;      // s^2*eps   = s2^2*eps2
    CohomClass y;                        // primitive reference class
    CohomClass h_image;                  // its image under the equivalence
    bool self_diffeo_realizes_image = true;
    bool witness = false;                // overall verdict
};

PairWitnessReport pair_witness(std::int64_t r, std::int64_t q, const DecideOptions& opts = {});

/// Hypothesis under which a pair is determined by its soul: the only cube
/// root of unity mod r is 1, and q is zero or not divisible by r.
/// Requires r > 1 and gcd(r, 6) = 1.
bool soul_determines_pair(std::int64_t r, std::int64_t q);

/// Shared precondition of the deciders; throws precondition_error.
void require_classifiable(const BundleSpec& L, const BundleSpec& L2);

} // namespace lab5
