#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "richardson/invariants.hpp"

namespace richardson {

struct Failure {
    /// Case key, e.g. `v=1324 w=3412 sigma=1342`.
    std::string case_key;
    std::string detail;
};

struct VerificationReport {
    std::string check;
    std::string range;
    std::size_t cases = 0;
    std::vector<Failure> failures;
    std::vector<std::string> findings;
    /// Not part of the serialized JSON, which must be reproducible.
    double wall_time_seconds = 0;

    bool passed() const { return failures.empty(); }
    void merge(const VerificationReport& other);
};

struct VerifyOptions {
    std::size_t jobs = 1;
    std::chrono::seconds timeout{300};
    std::uint64_t seed = 0;
    /// Sampled points per (v, w) pair for the point-based checks.
    std::size_t point_samples = 0;
};

/// One unit of work for the batch runner. `run` returns failure details;
/// findings are appended to `findings`.
struct VerifyCase {
    std::string key;
    std::function<std::vector<std::string>(std::vector<std::string>& findings)> run;
};

/// Runs cases on a bounded worker pool with a per-case deadline. Output order
/// follows the input order; timeouts become findings.
VerificationReport run_cases(std::string check, std::string range, std::vector<VerifyCase> cases,
                             const VerifyOptions& options);

/// Pullback of the Schubert conditions of w along eta1 and of the opposite
/// conditions of v along eta2, compared with the Richardson chart ideal.
bool verify_product_iso(const Permutation& u, const Permutation& v, const Permutation& w);

/// Failure details of the single-point checks; empty when they hold.
std::vector<std::string> check_mult_at(const Permutation& v, const Permutation& w, const Permutation& sigma);
std::vector<std::string> check_hpoly_at(const Permutation& v, const Permutation& w, const Permutation& sigma,
                                        std::vector<std::string>& findings);
std::vector<std::string> check_singular_at(const Permutation& v, const Permutation& w, const Permutation& sigma);

/// Point-based check of both equalities of the product theorem at a sampled
/// point of X°_sigma ∩ X°^tau for tau < sigma in [v, w].
std::vector<std::string> check_theorem_at_sample(const Permutation& v, const Permutation& w, const Permutation& tau,
                                                 const Permutation& sigma, std::uint64_t seed,
                                                 std::vector<std::string>& findings);

VerificationReport verify_mult_factorization(const Permutation& v, const Permutation& w,
                                             const VerifyOptions& options = {});
VerificationReport verify_hpoly_factorization(const Permutation& v, const Permutation& w,
                                              const VerifyOptions& options = {});
VerificationReport verify_singular_locus(const Permutation& v, const Permutation& w,
                                         const VerifyOptions& options = {});
VerificationReport verify_theorem_at_points(const Permutation& v, const Permutation& w, std::size_t trials,
                                            std::uint64_t seed, const VerifyOptions& options = {});
/// Requires covexillary w.
VerificationReport verify_kl_vs_h(const Permutation& w, const VerifyOptions& options = {});
VerificationReport schubert_smoothness_table(std::size_t n, const VerifyOptions& options = {});

/// Suites over S_n: every comparable pair when `samples` is empty, otherwise
/// that many seeded draws.
enum class Suite { ProductIso, Mult, HPoly, SingularLocus, Points, KLvsH, SmoothTable, Dimension };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite suite);

VerificationReport run_suite(Suite suite, std::size_t n, std::optional<std::size_t> samples,
                             const VerifyOptions& options);

/// All pairs v <= w in S_n, ordered by (v, w).
std::vector<std::pair<Permutation, Permutation>> comparable_pairs(std::size_t n);

}  // namespace richardson
