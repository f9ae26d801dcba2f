#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "richardson/kazhdan_lusztig.hpp"
#include "richardson/serialize.hpp"

using namespace richardson;

namespace {

struct BadFlag : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Permutation parse_permutation(const std::string& flag, const std::string& text, std::size_t n = 0) {
    Permutation p;
    try {
        p = Permutation::parse(text);
    } catch (const std::exception& e) {
        throw BadFlag("--" + flag + ": " + e.what());
    }
    if (n && p.size() != n) throw BadFlag("--" + flag + ": expected a permutation of size " + std::to_string(n));
    return p;
}

void append_oracle(VerificationReport& report) {
    OracleTally tally = oracle_tally();
    report.findings.push_back("oracle concordance: " + std::to_string(tally.checked) + " tangent cones checked, " +
                              std::to_string(tally.mismatches) + " mismatches; multiplicity plateau checked " +
                              std::to_string(tally.plateau_checked) + ", insufficient degree " +
                              std::to_string(tally.plateau_insufficient_degree));
    for (const auto& d : tally.mismatch_details) report.failures.push_back({"oracle", d});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local invariants of Richardson varieties in type A flag varieties"};
    app.require_subcommand(1);

    std::string format = "json";
    unsigned degree = 6;
    bool oracle = false;

    auto* inv_cmd = app.add_subcommand("invariants", "local invariants of X_w^v at a fixed point");
    std::string v_text, w_text, sigma_text, parabolic;
    inv_cmd->add_option("--v", v_text, "lower permutation")->required();
    inv_cmd->add_option("--w", w_text, "upper permutation")->required();
    inv_cmd->add_option("--sigma", sigma_text, "fixed point")->required();
    inv_cmd->add_option("--parabolic", parabolic, "simple reflections J, e.g. 1,3");
    inv_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text", "csv"}));
    inv_cmd->add_flag("--oracle", oracle, "cross-check against the truncated local Hilbert function");
    inv_cmd->add_option("--degree", degree, "oracle degree bound")->check(CLI::Range(1u, 20u));

    auto* sweep_cmd = app.add_subcommand("sweep", "sweeping maps on the generic matrix of a chart");
    std::string u_text;
    sweep_cmd->add_option("--u", u_text, "chart permutation")->required();
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "latex"}));

    auto* kl_cmd = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial");
    kl_cmd->add_option("--v", v_text)->required();
    kl_cmd->add_option("--w", w_text)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite over S_n");
    std::string suite_text;
    std::size_t n = 0;
    VerifyOptions options;
    std::optional<std::size_t> samples;
    long timeout = 300;
    bool exhaustive = false;
    verify_cmd->add_option("suite", suite_text, "product-iso|mult|hpoly|singlocus|points|kl-vs-h|smooth-table|dimension")
        ->required()
        ->check(CLI::IsMember({"product-iso", "mult", "hpoly", "singlocus", "points", "kl-vs-h", "smooth-table",
                               "dimension"}));
    verify_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 6));
    verify_cmd->add_option("--seed", options.seed);
    auto* exhaustive_flag = verify_cmd->add_flag("--exhaustive", exhaustive, "every case (default)");
    verify_cmd->add_option("--samples", samples, "number of seeded draws")->excludes(exhaustive_flag);
    verify_cmd->add_option("--points", options.point_samples, "sampled points per pair");
    verify_cmd->add_option("--jobs", options.jobs)->check(CLI::Range(1, 256));
    verify_cmd->add_option("--timeout", timeout, "seconds per case")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--degree", degree, "oracle degree bound")->check(CLI::Range(1u, 20u));
    verify_cmd->add_flag("--oracle", oracle, "cross-check every tangent cone against the truncated local Hilbert function");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*inv_cmd) {
            Permutation v = parse_permutation("v", v_text);
            Permutation w = parse_permutation("w", w_text, v.size());
            Permutation sigma = parse_permutation("sigma", sigma_text, v.size());
            set_oracle_checking(oracle, degree);
            LocalInvariants inv = parabolic.empty()
                                      ? richardson_invariants(v, w, sigma)
                                      : parabolic_invariants(v, w, sigma, parse_reflection_set(parabolic));
            if (format == "text")
                std::cout << invariants_text(inv);
            else if (format == "csv")
                std::cout << invariants_csv_header() << "\n"
                          << invariants_csv_row(v.to_string() + "," + w.to_string() + "," + sigma.to_string(), inv)
                          << "\n";
            else
                std::cout << invariants_json(inv) << "\n";
            if (oracle && oracle_tally().mismatches) {
                for (const auto& d : oracle_tally().mismatch_details) std::cerr << "oracle mismatch: " << d << "\n";
                return 1;
            }
            return 0;
        }
        if (*sweep_cmd) {
            Chart chart(parse_permutation("u", u_text));
            SweepImage image = sweep(chart);
            std::cout << (format == "latex" ? sweep_latex(chart, image) : sweep_json(chart, image) + "\n");
            return 0;
        }
        if (*kl_cmd) {
            Permutation v = parse_permutation("v", v_text);
            Permutation w = parse_permutation("w", w_text, v.size());
            IntPoly p = kl_polynomial(v, w).coefficients;
            nlohmann::ordered_json out = {{"v", v.to_string()}, {"w", w.to_string()}, {"coefficients", nlohmann::ordered_json::array()},
                                          {"text", p.to_string()}};
            for (const auto& c : p.coefficients()) out["coefficients"].push_back(c.get_si());
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*verify_cmd) {
            options.timeout = std::chrono::seconds(timeout);
            set_oracle_checking(oracle, degree);
            Suite suite = *parse_suite(suite_text);
            VerificationReport report = run_suite(suite, n, samples, options);
            if (oracle) append_oracle(report);
            std::cout << (format == "text" ? report_text(report) : report_json(report) + "\n");
            return report.passed() ? 0 : 1;
        }
    } catch (const BadFlag& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
