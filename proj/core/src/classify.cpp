#include "lab5/classify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace lab5 {

namespace {

constexpr int kSigns[2] = {+1, -1}; // canonical residues 1 < r-1, so +1 scans first

struct CongruenceData {
    ModRing ring;
    std::int64_t a0, b0, m, n; // canonical residues mod r

    explicit CongruenceData(const BundleSpec& L)
        : ring(L.r),
          a0(ring.canonical(L.a0)),
          b0(ring.canonical(L.b0)),
          m(ring.canonical(L.m)),
          n(ring.canonical(L.n)) {}

    // X = eps*m + k*a0, Y = eps*n - k*b0 as canonical residues
    std::int64_t X(int eps, std::int64_t k) const {
        return ring.canonical(eps * m + ring.mul(k, a0));
    }
    std::int64_t Y(int eps, std::int64_t k) const {
        return ring.canonical(eps * n - ring.mul(k, b0));
    }
    std::int64_t XY(int eps, std::int64_t k) const { return ring.mul(X(eps, k), Y(eps, k)); }
    std::int64_t Z(int eps, std::int64_t k) const {
        return ring.sub(ring.mul(b0, X(eps, k)), ring.mul(a0, Y(eps, k)));
    }
    // third-congruence right-hand side under the literal published reading,
    // which reuses the left side's epsilon in the Y' factor
    std::int64_t Z_literal(int eps_left, int eps2, std::int64_t k2) const {
        const std::int64_t y2 = ring.canonical(eps_left * n - ring.mul(k2, b0));
        return ring.sub(ring.mul(b0, X(eps2, k2)), ring.mul(a0, y2));
    }
};

struct ScanBudget {
    std::uint64_t cap;
    std::uint64_t used = 0;

    void charge(std::uint64_t amount) {
        used += amount;
        if (used > cap)
            throw cap_exceeded_error("certificate scan exceeded cap of " + std::to_string(cap) +
                                     " tuples; raise the scan cap to continue");
    }
};

template <typename OnCert>
void scan_homotopy(const BundleSpec& L, const BundleSpec& L2, int flip,
                   const DecideOptions& opts, OnCert&& on_cert) {
    const CongruenceData left(L), right(L2);
    const ModRing& ring = left.ring;
    const std::int64_t r = ring.modulus();
    const auto us = units(ring);
    ScanBudget budget{opts.scan_cap};

    for (const Unit& s : us) {
        const std::int64_t s2cube_l = ring.mul(ring.pow(s.value, 3), ring.mul(left.a0, left.b0));
        for (const Unit& s2 : us) {
            const std::int64_t c1_rhs =
                ring.canonical(flip * ring.mul(ring.pow(s2.value, 3), ring.mul(right.a0, right.b0)));
            if (s2cube_l != c1_rhs) {
                budget.charge(static_cast<std::uint64_t>(4) * r * r);
                continue;
            }
            for (int eps : kSigns) {
                for (int eps2 : kSigns) {
                    for (std::int64_t k = 0; k < r; ++k) {
                        const std::int64_t xy = ring.mul(s.value, left.XY(eps, k));
                        const std::int64_t z = ring.mul(ring.pow(s.value, 2), left.Z(eps, k));
                        for (std::int64_t k2 = 0; k2 < r; ++k2) {
                            budget.charge(1);
                            const std::int64_t rhs_xy =
                                ring.canonical(flip * ring.mul(s2.value, right.XY(eps2, k2)));
                            if (xy != rhs_xy) continue;
                            const std::int64_t z2 = opts.reading == ThirdCongruenceReading::symmetric
                                                        ? right.Z(eps2, k2)
                                                        : right.Z_literal(eps, eps2, k2);
                            const std::int64_t rhs_z =
                                ring.canonical(flip * ring.mul(ring.pow(s2.value, 2), z2));
                            if (z != rhs_z) continue;
                            if (!on_cert(HomotopyCert{s.value, s2.value, eps, eps2, k, k2})) return;
                        }
                    }
                }
            }
        }
    }
}

template <typename OnCert>
void scan_diffeo(const BundleSpec& L, const BundleSpec& L2, int flip,
                 const DecideOptions& opts, OnCert&& on_cert) {
    const CongruenceData left(L), right(L2);
    const ModRing& ring = left.ring;
    const std::int64_t r = ring.modulus();
    ScanBudget budget{opts.scan_cap};

    const __int128 ab = static_cast<__int128>(L.a) * L.b;
    const __int128 ab2 = static_cast<__int128>(L2.a) * L2.b;

    for (int eps : kSigns) {
        for (int eps2 : kSigns) {
            for (int delta : kSigns) {
                if (ab != static_cast<__int128>(flip) * delta * ab2) {
                    budget.charge(static_cast<std::uint64_t>(r) * r);
                    continue;
                }
                for (std::int64_t k = 0; k < r; ++k) {
                    const std::int64_t xy = left.XY(eps, k);
                    const std::int64_t z = left.Z(eps, k);
                    for (std::int64_t k2 = 0; k2 < r; ++k2) {
                        budget.charge(1);
                        const std::int64_t rhs_xy =
                            ring.canonical(flip * delta * right.XY(eps2, k2));
                        if (xy != rhs_xy) continue;
                        const std::int64_t z2 = opts.reading == ThirdCongruenceReading::symmetric
                                                    ? right.Z(eps2, k2)
                                                    : right.Z_literal(eps, eps2, k2);
                        if (z != ring.canonical(flip * z2)) continue;
                        if (!on_cert(DiffeoCert{eps, eps2, delta, k, k2})) return;
                    }
                }
            }
        }
    }
}

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename T>
bool sorted_intersect(const std::vector<T>& a, const std::vector<T>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return true;
    }
    return false;
}

} // namespace

void require_classifiable(const BundleSpec& L, const BundleSpec& L2) {
    if (L.r != L2.r)
        throw precondition_error("classify: fundamental groups differ (r = " + std::to_string(L.r) +
                                 " vs " + std::to_string(L2.r) + ")");
    if (L.r <= 1) throw precondition_error("classify: requires r > 1");
    if (gcd64(L.r, 6) != 1)
        throw precondition_error("classify: requires gcd(r, 6) = 1, got r = " + std::to_string(L.r));
}

std::optional<HomotopyCert> decide_homotopy(const BundleSpec& L, const BundleSpec& L2,
                                            RelOrientation orient, const DecideOptions& opts) {
    require_classifiable(L, L2);
    std::optional<HomotopyCert> found;
    scan_homotopy(L, L2, static_cast<int>(orient), opts, [&](const HomotopyCert& c) {
        found = c;
        return false; // stop at the lexicographically least certificate
    });
    return found;
}

std::vector<HomotopyCert> homotopy_certificates(const BundleSpec& L, const BundleSpec& L2,
                                                RelOrientation orient, const DecideOptions& opts) {
    require_classifiable(L, L2);
    std::vector<HomotopyCert> all;
    scan_homotopy(L, L2, static_cast<int>(orient), opts, [&](const HomotopyCert& c) {
        all.push_back(c);
        return true;
    });
    return all;
}

std::optional<DiffeoCert> decide_diffeo(const BundleSpec& L, const BundleSpec& L2,
                                        RelOrientation orient, const DecideOptions& opts) {
    require_classifiable(L, L2);
    std::optional<DiffeoCert> found;
    scan_diffeo(L, L2, static_cast<int>(orient), opts, [&](const DiffeoCert& c) {
        found = c;
        return false;
    });
    return found;
}

std::vector<DiffeoCert> diffeo_certificates(const BundleSpec& L, const BundleSpec& L2,
                                            RelOrientation orient, const DecideOptions& opts) {
    require_classifiable(L, L2);
    std::vector<DiffeoCert> all;
    scan_diffeo(L, L2, static_cast<int>(orient), opts, [&](const DiffeoCert& c) {
        all.push_back(c);
        return true;
    });
    return all;
}

BundleSignatures::BundleSignatures(const BundleSpec& L) : L_(L) {
    const CongruenceData d(L);
    const ModRing& ring = d.ring;
    for (const Unit& s : units(ring)) {
        const std::int64_t c1 = ring.mul(ring.pow(s.value, 3), ring.mul(d.a0, d.b0));
        for (int eps : kSigns) {
            for (std::int64_t k = 0; k < ring.modulus(); ++k) {
                const std::int64_t c2 = ring.mul(s.value, d.XY(eps, k));
                const std::int64_t c3 = ring.mul(ring.pow(s.value, 2), d.Z(eps, k));
                hom_.push_back({c1, c2, c3});
                hom_neg_.push_back({ring.neg(c1), ring.neg(c2), ring.neg(c3)});
            }
        }
    }
    sort_unique(hom_);
    sort_unique(hom_neg_);
    for (int eps : kSigns) {
        for (std::int64_t k = 0; k < ring.modulus(); ++k) {
            const std::int64_t xy = d.XY(eps, k);
            const std::int64_t z = d.Z(eps, k);
            dif_pp_.push_back({xy, z});
            dif_np_.push_back({ring.neg(xy), z});
            dif_pn_.push_back({xy, ring.neg(z)});
            dif_nn_.push_back({ring.neg(xy), ring.neg(z)});
        }
    }
    sort_unique(dif_pp_);
    sort_unique(dif_np_);
    sort_unique(dif_pn_);
    sort_unique(dif_nn_);
}

bool homotopy_equivalent(const BundleSignatures& A, const BundleSignatures& B,
                         RelOrientation orient) {
    require_classifiable(A.L_, B.L_);
    return sorted_intersect(A.hom_, orient == RelOrientation::same ? B.hom_ : B.hom_neg_);
}

bool diffeomorphic(const BundleSignatures& A, const BundleSignatures& B, RelOrientation orient) {
    require_classifiable(A.L_, B.L_);
    const int flip = static_cast<int>(orient);
    const __int128 ab = static_cast<__int128>(A.L_.a) * A.L_.b;
    const __int128 ab2 = static_cast<__int128>(B.L_.a) * B.L_.b;
    for (int delta : kSigns) {
        if (ab != static_cast<__int128>(flip) * delta * ab2) continue;
        // right side transformed by (flip*delta on XY, flip on Z)
        const bool neg_xy = flip * delta < 0, neg_z = flip < 0;
        const auto& rhs = neg_xy ? (neg_z ? B.dif_nn_ : B.dif_np_)
                                 : (neg_z ? B.dif_pn_ : B.dif_pp_);
        if (sorted_intersect(A.dif_pp_, rhs)) return true;
    }
    return false;
}

bool homotopy_equivalent(const BundleSpec& L, const BundleSpec& L2, RelOrientation orient) {
    return homotopy_equivalent(BundleSignatures(L), BundleSignatures(L2), orient);
}

bool diffeomorphic(const BundleSpec& L, const BundleSpec& L2, RelOrientation orient) {
    return diffeomorphic(BundleSignatures(L), BundleSignatures(L2), orient);
}

bool diffeo_integer_condition_impossible(const BundleSpec& L, const BundleSpec& L2) {
    const __int128 ab = static_cast<__int128>(L.a) * L.b;
    const __int128 ab2 = static_cast<__int128>(L2.a) * L2.b;
    return ab != ab2 && ab != -ab2;
}

bool diffeo_proof_coverage_warning(const BundleSpec& L, const BundleSpec& L2) {
    return L.ab() == 0 || L2.ab() == 0;
}

namespace {

std::vector<ClassRelation> collect_actions(const BundleSpec& L, const DecideOptions& opts,
                                           bool homotopy) {
    std::set<ClassRelation> rel;
    auto add = [&](int eps, std::int64_t k, int eps2, std::int64_t k2) {
        const CohomClass from = canonical_class(L, induced_class(L, {1, eps, k}));
        const CohomClass to = canonical_class(L, induced_class(L, {1, eps2, k2}));
        rel.insert(ClassRelation{from, to});
        return true;
    };
    for (RelOrientation orient : {RelOrientation::same, RelOrientation::opposite}) {
        const int flip = static_cast<int>(orient);
        if (homotopy) {
            scan_homotopy(L, L, flip, opts, [&](const HomotopyCert& c) {
                return add(c.epsilon, c.k, c.epsilon2, c.k2);
            });
        } else {
            scan_diffeo(L, L, flip, opts, [&](const DiffeoCert& c) {
                return add(c.epsilon, c.k, c.epsilon2, c.k2);
            });
        }
    }
    return {rel.begin(), rel.end()};
}

} // namespace

std::vector<ClassRelation> self_diffeo_actions(const BundleSpec& L, const DecideOptions& opts) {
    require_classifiable(L, L);
    return collect_actions(L, opts, false);
}

std::vector<ClassRelation> self_homotopy_actions(const BundleSpec& L, const DecideOptions& opts) {
    require_classifiable(L, L);
    return collect_actions(L, opts, true);
}

PairWitnessReport pair_witness(std::int64_t r, std::int64_t q, const DecideOptions& opts) {
    PairWitnessReport rep;
    rep.r = r;
    rep.q = q;

    if (r <= 1 || gcd64(r, 6) != 1) {
        rep.failure_reason = "r must be > 1 and coprime to 6";
        return rep;
    }
    if (q == 0 || q % r != 0) {
        rep.failure_reason = "q must be nonzero and divisible by r";
        return rep;
    }

    const ModRing ring(r);
    const auto roots_minus_one = find_units_with_power(ring, 2, -1);
    std::int64_t s = 0;
    if (!roots_minus_one.empty()) {
        s = roots_minus_one.front().value;
        rep.unit_case = "s^2=-1";
        rep.params = HomotopyCert{s, 1, +1, -1, ring.canonical(-1), s};
    } else {
        // a "nontrivial" square root of one must differ from both 1 and -1;
        // s = -1 satisfies the congruences but a diffeomorphism realizes it
        std::int64_t s1 = 0;
        for (const Unit& u : find_units_with_power(ring, 2, 1))
            if (u.value != 1 && u.value != r - 1) { s1 = u.value; break; }
        if (s1 == 0) {
            rep.failure_reason =
                "no unit with s^2 = -1 and no unit s distinct from +-1 with s^2 = 1 mod " +
                std::to_string(r);
            return rep;
        }
        s = s1;
        rep.unit_case = "s^2=1";
        rep.params = HomotopyCert{s, 1, +1, +1, 1, s};
    }
    rep.preconditions_hold = true;

    const HomotopyCert& p = rep.params;
    rep.k_congruence = ring.canonical(ring.mul(p.s, p.k) * p.epsilon) ==
                       ring.canonical(ring.mul(p.s2, p.k2) * p.epsilon2);
    rep.square_congruence = ring.canonical(ring.pow(p.s, 2) * p.epsilon) ==
                            ring.canonical(ring.pow(p.s2, 2) * p.epsilon2);

    const BundleSpec L = make_bundle(r, q * r);
    rep.y = induced_class(L, {p.s, p.epsilon, p.k});
    rep.h_image = induced_class(L, {p.s2, p.epsilon2, p.k2});

    rep.self_diffeo_realizes_image = false;
    for (const ClassRelation& rel : self_diffeo_actions(L, opts)) {
        if (!classes_equal(L, rel.from, rep.y)) continue;
        if (classes_equal(L, rel.to, rep.h_image) ||
            classes_equal(L, rel.to, rep.h_image.negated())) {
            rep.self_diffeo_realizes_image = true;
            break;
        }
    }

    rep.witness = rep.k_congruence && rep.square_congruence && !rep.self_diffeo_realizes_image;
    return rep;
}

bool soul_determines_pair(std::int64_t r, std::int64_t q) {
    if (r <= 1 || gcd64(r, 6) != 1)
        throw precondition_error("soul_determines_pair: requires r > 1 coprime to 6");
    const auto cube_roots = find_units_with_power(ModRing(r), 3, 1);
    const bool only_trivial = cube_roots.size() == 1 && cube_roots.front().value == 1;
    return only_trivial && (q == 0 || q % r != 0);
}

} // namespace lab5
