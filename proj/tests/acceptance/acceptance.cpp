#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "richardson/serialize.hpp"
#include "richardson/sweep.hpp"
#include "richardson/verify.hpp"

using namespace richardson;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

struct Outcome {
    bool ok = true;
    std::string note;
};

Outcome from_report(const VerificationReport& r) {
    Outcome o;
    o.ok = r.passed();
    o.note = std::to_string(r.cases) + " cases, " + std::to_string(r.failures.size()) + " failures";
    for (std::size_t k = 0; k < r.failures.size() && k < 5; ++k)
        o.note += "\n    " + r.failures[k].case_key + ": " + r.failures[k].detail;
    return o;
}

Outcome both(Outcome a, const Outcome& b) {
    a.ok = a.ok && b.ok;
    a.note += "; " + b.note;
    return a;
}

// Entries of the worked example for u = 31542, transcribed row by row.
const char* const kX[5][5] = {
    {"z11", "1", "0", "0", "0"},
    {"z21", "z22", "z23", "z24", "1"},
    {"1", "0", "0", "0", "0"},
    {"z41", "z42", "z43", "1", "0"},
    {"z51", "z52", "1", "0", "0"},
};
const char* const kEta1[5][5] = {
    {"0", "1", "0", "0", "0"},
    {"0", "z22-z24*(z42-z52*z43)-z23*z52", "0", "0", "1"},
    {"1", "0", "0", "0", "0"},
    {"z41-z51*z43", "z42-z52*z43", "0", "1", "0"},
    {"z51", "z52", "1", "0", "0"},
};
const char* const kEta2[5][5] = {
    {"z11", "1", "0", "0", "0"},
    {"z21-z11*z22", "0", "z23", "z24", "1"},
    {"1", "0", "0", "0", "0"},
    {"0", "0", "z43", "1", "0"},
    {"0", "0", "1", "0", "0"},
};

Outcome example_reproduction() {
    Chart c(P("31542"));
    SweepImage img = sweep(c);
    ChartMatrix x = generic_matrix(c);
    Outcome o;
    std::size_t matched = 0;
    auto compare = [&](const char* name, const ChartMatrix& m, const char* const expected[5][5]) {
        for (std::size_t i = 1; i <= 5; ++i)
            for (std::size_t j = 1; j <= 5; ++j) {
                std::string want = parse_polynomial(expected[i - 1][j - 1], c.context()).to_string();
                std::string got = m(i, j).to_string();
                if (want == got) {
                    ++matched;
                } else {
                    o.ok = false;
                    o.note += std::string("\n    ") + name + "(" + std::to_string(i) + "," + std::to_string(j) +
                              "): " + got + " != " + want;
                }
            }
    };
    compare("x", x, kX);
    compare("eta1", img.eta1, kEta1);
    compare("eta2", img.eta2, kEta2);
    o.note = std::to_string(matched) + "/75 entries" + o.note;
    return o;
}

std::vector<Permutation> seeded(std::size_t n, std::size_t count, std::uint64_t seed) {
    auto all = all_permutations(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, all.size() - 1);
    std::vector<Permutation> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(all[dist(rng)]);
    return out;
}

Outcome round_trip() {
    std::vector<Permutation> us = all_permutations(4);
    for (const auto& u : seeded(5, 20, 1)) us.push_back(u);
    Outcome o;
    for (const auto& u : us)
        if (!recovery_round_trip(Chart(u))) {
            o.ok = false;
            o.note += " " + u.to_string();
        }
    o.note = std::to_string(us.size()) + " charts" + (o.ok ? "" : ", failed:" + o.note);
    return o;
}

Outcome claim_structure() {
    Outcome o;
    std::size_t count = 0;
    for (const auto& u : all_permutations(5)) {
        ++count;
        if (!claim_structure_check(u)) {
            o.ok = false;
            o.note += " " + u.to_string();
        }
    }
    o.note = std::to_string(count) + " charts" + (o.ok ? "" : ", failed:" + o.note);
    return o;
}

Outcome product_iso() {
    return both(from_report(run_suite(Suite::ProductIso, 3, std::nullopt, {})),
                from_report(run_suite(Suite::ProductIso, 4, std::nullopt, {})));
}

Outcome mult_factorization() {
    VerifyOptions opts;
    opts.seed = 11;
    return both(from_report(run_suite(Suite::Mult, 4, std::nullopt, {})),
                from_report(run_suite(Suite::Mult, 5, 20, opts)));
}

Outcome hpoly_factorization() {
    VerificationReport r = run_suite(Suite::HPoly, 4, std::nullopt, {});
    Outcome o = from_report(r);
    std::size_t negative = 0;
    for (const auto& f : r.findings)
        if (f.rfind("negative H-coefficient", 0) == 0) ++negative;
    o.ok = o.ok && negative == 0;
    o.note += ", " + std::to_string(negative) + " negative coefficients";
    return o;
}

Outcome singular_locus() {
    VerifyOptions opts;
    opts.point_samples = 2;
    opts.seed = 5;
    return from_report(run_suite(Suite::SingularLocus, 4, std::nullopt, opts));
}

Outcome dimension_law() { return from_report(run_suite(Suite::Dimension, 4, std::nullopt, {})); }

Outcome smoothness_table() { return from_report(run_suite(Suite::SmoothTable, 5, std::nullopt, {})); }

Outcome oracle_concordance() {
    OracleTally t = oracle_tally();
    Outcome o;
    o.ok = t.checked > 0 && t.mismatches == 0 && t.plateau_mismatches == 0;
    o.note = std::to_string(t.checked) + " tangent cones, " + std::to_string(t.mismatches) + " mismatches, " +
             std::to_string(t.plateau_checked) + " plateau checks, " + std::to_string(t.plateau_mismatches) +
             " plateau mismatches";
    for (std::size_t k = 0; k < t.mismatch_details.size() && k < 5; ++k) o.note += "\n    " + t.mismatch_details[k];
    return o;
}

Outcome kl_vs_h() { return from_report(run_suite(Suite::KLvsH, 4, std::nullopt, {})); }

Outcome determinism() {
    std::vector<std::string> runs;
    for (std::size_t jobs : {1, 3}) {
        VerifyOptions opts;
        opts.jobs = jobs;
        opts.seed = 42;
        opts.point_samples = 2;
        clear_invariant_cache();
        std::string bytes;
        for (Suite s : {Suite::HPoly, Suite::Points, Suite::ProductIso})
            bytes += report_json(run_suite(s, 4, 40, opts));
        Chart c(P("31542"));
        bytes += sweep_json(c, sweep(c));
        runs.push_back(bytes);
    }
    Outcome o;
    o.ok = runs[0] == runs[1];
    o.note = std::to_string(runs[0].size()) + " bytes per run";
    return o;
}

}  // namespace

int main() {
    set_oracle_checking(true, 6);
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"example reproduction", example_reproduction},
        {"recovery round trip", round_trip},
        {"claim structure over S5", claim_structure},
        {"product isomorphism", product_iso},
        {"multiplicity factorization", mult_factorization},
        {"H-polynomial factorization", hpoly_factorization},
        {"singular locus", singular_locus},
        {"dimension law", dimension_law},
        {"smoothness oracle over S5", smoothness_table},
        {"tangent cone oracle concordance", oracle_concordance},
        {"KL polynomial bound", kl_vs_h},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failed;
        std::printf("[%s] %zu %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].name, secs,
                    o.note.c_str());
        std::fflush(stdout);
        if (k + 1 == 9) set_oracle_checking(false);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
