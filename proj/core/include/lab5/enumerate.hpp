#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lab5/classify.hpp"

namespace lab5 {

struct EnumerateOptions {
    std::int64_t r = 5;
    std::int64_t bound = 5;        // 0 < |a|, |b| <= bound
    bool identify_swap = false;    // treat (a, b) and (b, a) as one member
    int jobs = 1;                  // worker threads for the pairwise decisions
    std::uint64_t pair_cap = 100'000'000; // pairwise decisions before giving up
};

/// Bounded family search: all bundles with gcd(|a|,|b|) = r inside the box,
/// partitioned by unoriented homotopy equivalence and by unoriented
/// diffeomorphism, plus the families that witness distinct manifolds in one
/// homotopy type (pairwise distinct |ab| forces the exact integer condition
/// of the diffeomorphism criterion to fail).
struct FamilyReport {
    std::int64_t r = 0;
    std::int64_t bound = 0;
    bool identify_swap = false;
    std::vector<BundleSpec> members;                    // sorted by (a, b)
    std::vector<std::vector<int>> homotopy_classes;     // partitions by member index
    std::vector<std::vector<int>> diffeo_classes;
    std::vector<std::vector<int>> theorem1_families;    // one representative per |ab|
    std::vector<std::string> warnings;
};

/// Deterministic for fixed options; the worker count never changes the result.
/// Throws precondition_error for invalid (r, bound) and cap_exceeded_error
/// when the pair budget is exhausted.
FamilyReport enumerate_families(const EnumerateOptions& opts);

} // namespace lab5
