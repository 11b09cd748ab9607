#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lab5/classify.hpp"
#include "lab5/enumerate.hpp"
#include "lab5/forms.hpp"

namespace lab5 {

/// Combined verdict of both deciders for one ordered bundle pair.
struct ClassifyReport {
    BundleSpec left;
    BundleSpec right;
    RelOrientation orientation = RelOrientation::same;
    std::optional<HomotopyCert> homotopy;
    std::string homotopy_reason; // set when homotopy is absent
    std::optional<DiffeoCert> diffeo;
    std::string diffeo_reason;   // set when diffeo is absent
    std::vector<std::string> warnings;
};

ClassifyReport build_classify_report(const BundleSpec& L, const BundleSpec& L2,
                                     RelOrientation orient, const DecideOptions& opts = {});

// All renderers produce byte-stable JSON: fixed key order, canonical integer
// representatives, two-space indentation, trailing newline.
std::string render_classify_json(const ClassifyReport& rep);
std::string render_family_json(const FamilyReport& rep);
std::string render_family_csv(const FamilyReport& rep);
std::string render_rho_json(const BundleSpec& L);
std::string render_witness_json(const PairWitnessReport& rep);
std::string render_soul_pair_json(std::int64_t r, std::int64_t q, bool holds);
std::string render_multisig_json(const Multisignature& ms);
std::string render_arf_json(int value);
std::string render_error_json(const std::string& kind, const std::string& message);

/// Parses the matrix file format
///   {"r": int, "d": int, "entries": [[[c_0, ..., c_{r-1}], ...], ...]}
/// (row-major over entries, one coefficient vector per group-ring element).
LambdaMatrix parse_lambda_matrix_json(const std::string& text);

/// Same format plus a "mu" array of d refinement bits.
struct ArfInput {
    LambdaMatrix matrix;
    std::vector<int> mu;
};
ArfInput parse_arf_input_json(const std::string& text);

} // namespace lab5
