// Command-line front end: decision procedures and reports for circle-bundle
// 5-manifolds over S^2 x S^2.
//
// Exit codes: 0 = decided/ran, 2 = invalid input, 3 = scan cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lab5/reports.hpp"
#include "lab5/rho.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitCapExceeded = 3;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw lab5::precondition_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonFlags {
    bool flip = false;
    std::uint64_t scan_cap = 1'000'000;
    std::string third_reading = "symmetric";

    lab5::DecideOptions decide_options() const {
        lab5::DecideOptions opts;
        opts.scan_cap = scan_cap;
        opts.reading = third_reading == "literal" ? lab5::ThirdCongruenceReading::literal
                                                  : lab5::ThirdCongruenceReading::symmetric;
        return opts;
    }
    lab5::RelOrientation orientation() const {
        return flip ? lab5::RelOrientation::opposite : lab5::RelOrientation::same;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision procedures for circle-bundle 5-manifolds over S2 x S2"};
    app.require_subcommand(1);

    CommonFlags flags;

    // classify
    std::int64_t ca = 0, cb = 0, ca2 = 0, cb2 = 0;
    auto* classify = app.add_subcommand(
        "classify", "decide homotopy equivalence and diffeomorphism of two bundles");
    classify->add_option("a", ca, "first Euler coordinate of the left bundle")->required();
    classify->add_option("b", cb, "second Euler coordinate of the left bundle")->required();
    classify->add_option("a2", ca2, "first Euler coordinate of the right bundle")->required();
    classify->add_option("b2", cb2, "second Euler coordinate of the right bundle")->required();
    classify->add_flag("--flip", flags.flip, "compare with the right bundle's orientation reversed");
    classify->add_option("--scan-cap", flags.scan_cap, "certificate scan budget");
    classify->add_option("--third-congruence", flags.third_reading,
                         "reading of the third congruence: symmetric (default) or literal")
        ->check(CLI::IsMember({"symmetric", "literal"}));

    // enumerate
    lab5::EnumerateOptions eopts;
    bool csv = false;
    bool json = true;
    auto* enumerate = app.add_subcommand("enumerate", "bounded family search and partitions");
    enumerate->add_option("r", eopts.r, "fundamental group order (coprime to 6)")->required();
    enumerate->add_option("--bound", eopts.bound, "box bound: 0 < |a|, |b| <= bound")->required();
    enumerate->add_option("--jobs", eopts.jobs, "worker threads for pairwise decisions");
    enumerate->add_flag("--identify-swap", eopts.identify_swap,
                        "treat (a, b) and (b, a) as the same member");
    enumerate->add_option("--scan-cap", eopts.pair_cap, "pairwise decision budget");
    enumerate->add_flag("--csv", csv, "emit the partition table as CSV");
    enumerate->add_flag("--json,!--no-json", json, "emit JSON (default)");

    // rho
    std::int64_t ra = 0, rb = 0;
    auto* rho_cmd = app.add_subcommand("rho", "rho invariant table for all nonzero group elements");
    rho_cmd->add_option("a", ra, "first Euler coordinate")->required();
    rho_cmd->add_option("b", rb, "second Euler coordinate")->required();

    // multisig
    std::string multisig_file;
    auto* multisig = app.add_subcommand("multisig", "multisignature of a skew-hermitian matrix");
    multisig->add_option("file", multisig_file, "matrix JSON file (default: standard input)");

    // theorem5
    std::int64_t t5r = 0, t5q = 0;
    auto* theorem5 = app.add_subcommand(
        "theorem5", "witness search: homotopy self-equivalence no self-diffeomorphism realizes");
    theorem5->add_option("r", t5r, "fundamental group order")->required();
    theorem5->add_option("q", t5q, "bundle parameter; the bundle is (r, q*r)")->required();
    theorem5->add_option("--scan-cap", flags.scan_cap, "certificate scan budget");

    // theorem5-ii
    std::int64_t t5ir = 0, t5iq = 0;
    auto* theorem5ii =
        app.add_subcommand("theorem5-ii", "hypothesis check: pairs determined by their souls");
    theorem5ii->add_option("r", t5ir, "fundamental group order")->required();
    theorem5ii->add_option("q", t5iq, "bundle parameter")->required();

    // arf
    std::string arf_file;
    auto* arf_cmd = app.add_subcommand("arf", "Arf invariant of an augmented skew form");
    arf_cmd->add_option("file", arf_file, "matrix-plus-mu JSON file (default: standard input)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) {
            const lab5::BundleSpec L = lab5::make_bundle(ca, cb);
            const lab5::BundleSpec L2 = lab5::make_bundle(ca2, cb2);
            const auto rep =
                lab5::build_classify_report(L, L2, flags.orientation(), flags.decide_options());
            std::cout << lab5::render_classify_json(rep);
        } else if (enumerate->parsed()) {
            const auto rep = lab5::enumerate_families(eopts);
            std::cout << (csv ? lab5::render_family_csv(rep) : lab5::render_family_json(rep));
        } else if (rho_cmd->parsed()) {
            const lab5::BundleSpec L = lab5::make_bundle(ra, rb);
            if (L.r <= 1)
                throw lab5::precondition_error("rho: fundamental group must be nontrivial");
            std::cout << lab5::render_rho_json(L);
        } else if (multisig->parsed()) {
            const lab5::LambdaMatrix M = lab5::parse_lambda_matrix_json(read_input(multisig_file));
            if (!lab5::is_skew_hermitian(M))
                throw lab5::precondition_error("multisig: matrix is not skew-hermitian");
            std::cout << lab5::render_multisig_json(lab5::multisignature(M));
        } else if (theorem5->parsed()) {
            const auto rep = lab5::pair_witness(t5r, t5q, flags.decide_options());
            std::cout << lab5::render_witness_json(rep);
        } else if (theorem5ii->parsed()) {
            std::cout << lab5::render_soul_pair_json(t5ir, t5iq,
                                                     lab5::soul_determines_pair(t5ir, t5iq));
        } else if (arf_cmd->parsed()) {
            const lab5::ArfInput input = lab5::parse_arf_input_json(read_input(arf_file));
            std::cout << lab5::render_arf_json(lab5::arf(lab5::augment_form(input.matrix, input.mu)));
        }
    } catch (const lab5::cap_exceeded_error& e) {
        std::cout << lab5::render_error_json("cap_exceeded", e.what());
        return kExitCapExceeded;
    } catch (const lab5::degenerate_form_error& e) {
        std::cout << lab5::render_error_json("degenerate_form", e.what());
        return kExitInvalid;
    } catch (const lab5::error& e) {
        std::cout << lab5::render_error_json("invalid_input", e.what());
        return kExitInvalid;
    }
    return kExitOk;
}
