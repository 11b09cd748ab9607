#include "lab5/reports.hpp"

#include <json.hpp>

#include "lab5/rho.hpp"

namespace lab5 {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json bundle_json(const BundleSpec& L) {
    return ordered_json{{"a", L.a}, {"b", L.b}};
}

ordered_json class_json(const CohomClass& c) {
    return ordered_json{{"p", c.p}, {"qhat", c.qhat}};
}

ordered_json homotopy_cert_json(const HomotopyCert& c) {
    return ordered_json{{"s", c.s},       {"s2", c.s2}, {"epsilon", c.epsilon},
                        {"epsilon2", c.epsilon2}, {"k", c.k},   {"k2", c.k2}};
}

ordered_json diffeo_cert_json(const DiffeoCert& c) {
    return ordered_json{{"epsilon", c.epsilon},
                        {"epsilon2", c.epsilon2},
                        {"delta", c.delta},
                        {"k", c.k},
                        {"k2", c.k2}};
}

std::string finish(ordered_json j) { return j.dump(2) + "\n"; }

} // namespace

ClassifyReport build_classify_report(const BundleSpec& L, const BundleSpec& L2,
                                     RelOrientation orient, const DecideOptions& opts) {
    require_classifiable(L, L2);
    ClassifyReport rep;
    rep.left = L;
    rep.right = L2;
    rep.orientation = orient;
    rep.homotopy = decide_homotopy(L, L2, orient, opts);
    if (!rep.homotopy) rep.homotopy_reason = "no certificate in search space";
    if (diffeo_integer_condition_impossible(L, L2)) {
        rep.diffeo = std::nullopt;
        rep.diffeo_reason = "ab != +-a'b'";
    } else {
        rep.diffeo = decide_diffeo(L, L2, orient, opts);
        if (!rep.diffeo) rep.diffeo_reason = "no certificate in search space";
    }
    if (diffeo_proof_coverage_warning(L, L2))
        rep.warnings.push_back(
            "proof coverage: ab * a'b' = 0; the diffeomorphism criterion is applied verbatim "
            "outside the regime its proof covers");
    return rep;
}

std::string render_classify_json(const ClassifyReport& rep) {
    ordered_json j;
    j["left"] = bundle_json(rep.left);
    j["right"] = bundle_json(rep.right);
    j["flip"] = static_cast<int>(rep.orientation);
    j["homotopy"] = rep.homotopy ? homotopy_cert_json(*rep.homotopy) : ordered_json(nullptr);
    if (!rep.homotopy) j["homotopy_reason"] = rep.homotopy_reason;
    j["diffeo"] = rep.diffeo ? diffeo_cert_json(*rep.diffeo) : ordered_json(nullptr);
    if (!rep.diffeo) j["diffeo_reason"] = rep.diffeo_reason;
    j["warnings"] = rep.warnings;
    return finish(j);
}

std::string render_family_json(const FamilyReport& rep) {
    ordered_json j;
    j["r"] = rep.r;
    j["bound"] = rep.bound;
    j["identify_swap"] = rep.identify_swap;
    j["members"] = ordered_json::array();
    for (const BundleSpec& L : rep.members) j["members"].push_back(bundle_json(L));
    j["homotopy_classes"] = rep.homotopy_classes;
    j["diffeo_classes"] = rep.diffeo_classes;
    j["theorem1_families"] = rep.theorem1_families;
    j["warnings"] = rep.warnings;
    return finish(j);
}

std::string render_family_csv(const FamilyReport& rep) {
    std::vector<int> hom_of(rep.members.size(), -1), dif_of(rep.members.size(), -1);
    for (std::size_t c = 0; c < rep.homotopy_classes.size(); ++c)
        for (int idx : rep.homotopy_classes[c]) hom_of[static_cast<std::size_t>(idx)] = static_cast<int>(c);
    for (std::size_t c = 0; c < rep.diffeo_classes.size(); ++c)
        for (int idx : rep.diffeo_classes[c]) dif_of[static_cast<std::size_t>(idx)] = static_cast<int>(c);
    std::string out = "index,a,b,homotopy_class,diffeo_class\n";
    for (std::size_t i = 0; i < rep.members.size(); ++i) {
        out += std::to_string(i) + "," + std::to_string(rep.members[i].a) + "," +
               std::to_string(rep.members[i].b) + "," + std::to_string(hom_of[i]) + "," +
               std::to_string(dif_of[i]) + "\n";
    }
    return out;
}

std::string render_rho_json(const BundleSpec& L) {
    ordered_json j;
    for (std::int64_t g = 1; g < L.r; ++g) j[std::to_string(g)] = rho(L, g).imaginary;
    return finish(j);
}

std::string render_witness_json(const PairWitnessReport& rep) {
    ordered_json j;
    j["r"] = rep.r;
    j["q"] = rep.q;
    if (!rep.preconditions_hold) {
        j["verdict"] = "precondition_failed";
        j["reason"] = rep.failure_reason;
        return finish(j);
    }
    j["unit_case"] = rep.unit_case;
    j["params"] = homotopy_cert_json(rep.params);
    j["k_congruence"] = rep.k_congruence;
    j["square_congruence"] = rep.square_congruence;
    j["y"] = class_json(rep.y);
    j["h_image"] = class_json(rep.h_image);
    j["self_diffeo_realizes_image"] = rep.self_diffeo_realizes_image;
    j["verdict"] = rep.witness ? "witness" : "not_established";
    return finish(j);
}

std::string render_soul_pair_json(std::int64_t r, std::int64_t q, bool holds) {
    ordered_json j;
    j["r"] = r;
    j["q"] = q;
    j["hypothesis_holds"] = holds;
    return finish(j);
}

std::string render_multisig_json(const Multisignature& ms) {
    ordered_json j;
    j["sigma"] = ms.sigma;
    j["ms_values"] = ordered_json::array();
    for (const std::complex<double>& v : ms.values())
        j["ms_values"].push_back(ordered_json::array({v.real(), v.imag()}));
    return finish(j);
}

std::string render_arf_json(int value) { return finish(ordered_json{{"arf", value}}); }

std::string render_error_json(const std::string& kind, const std::string& message) {
    return finish(ordered_json{{"error", ordered_json{{"kind", kind}, {"message", message}}}});
}

namespace {

LambdaMatrix matrix_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("d") || !j.contains("entries"))
        throw precondition_error("matrix json needs fields r, d, entries");
    const std::int64_t r = j.at("r").get<std::int64_t>();
    const int d = j.at("d").get<int>();
    if (r < 1 || d < 1) throw precondition_error("matrix json: r and d must be >= 1");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(d))
        throw precondition_error("matrix json: entries must be a d x d array");
    LambdaMatrix M(r, d);
    for (int i = 0; i < d; ++i) {
        const auto& row = entries.at(static_cast<std::size_t>(i));
        if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
            throw precondition_error("matrix json: entries must be a d x d array");
        for (int k = 0; k < d; ++k) {
            const auto& cell = row.at(static_cast<std::size_t>(k));
            if (!cell.is_array() || cell.size() != static_cast<std::size_t>(r))
                throw precondition_error("matrix json: each entry needs r coefficients");
            std::vector<std::int64_t> coeffs;
            coeffs.reserve(static_cast<std::size_t>(r));
            for (const auto& c : cell) coeffs.push_back(c.get<std::int64_t>());
            M.at(i, k) = GroupRingElement(r, std::move(coeffs));
        }
    }
    return M;
}

} // namespace

LambdaMatrix parse_lambda_matrix_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw precondition_error(std::string("matrix json parse error: ") + e.what());
    }
    return matrix_from_json(j);
}

ArfInput parse_arf_input_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw precondition_error(std::string("arf json parse error: ") + e.what());
    }
    ArfInput input{matrix_from_json(j), {}};
    if (!j.contains("mu") || !j.at("mu").is_array())
        throw precondition_error("arf json needs a mu array of refinement bits");
    for (const auto& v : j.at("mu")) input.mu.push_back(v.get<int>());
    return input;
}

} // namespace lab5
