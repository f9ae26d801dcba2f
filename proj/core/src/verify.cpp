#include "richardson/verify.hpp"

#include <random>

#include "richardson/kazhdan_lusztig.hpp"
#include "richardson/sweep.hpp"

namespace richardson {

namespace {

std::string pair_key(const Permutation& v, const Permutation& w) {
    return "v=" + v.to_string() + " w=" + w.to_string();
}

std::string triple_key(const Permutation& v, const Permutation& w, const Permutation& sigma) {
    return pair_key(v, w) + " sigma=" + sigma.to_string();
}

std::string describe(const LocalInvariants& inv) {
    return "{dim " + std::to_string(inv.dimension) + ", tangent " + std::to_string(inv.tangent_dim) + ", " +
           (inv.is_smooth ? "smooth" : "singular") + ", mult " + inv.multiplicity.get_str() + ", H " +
           inv.h_polynomial.to_string() + "}";
}

std::vector<std::string> consistency_failures(const char* label, const LocalInvariants& inv) {
    if (inv.consistent()) return {};
    return {std::string(label) + " invariants inconsistent: " + describe(inv)};
}

struct FixedPointData {
    LocalInvariants richardson, schubert, opposite;
};

FixedPointData fixed_point_data(const Permutation& v, const Permutation& w, const Permutation& sigma) {
    return {richardson_invariants(v, w, sigma), schubert_invariants(w, sigma), opposite_invariants(v, sigma)};
}

std::string ideal_text(const IdealGens& ideal) {
    std::string out = "<";
    for (std::size_t k = 0; k < ideal.generators().size(); ++k)
        out += (k ? ", " : "") + ideal.generators()[k].to_string();
    return out + ">";
}

IdealGens product_pullback(const Permutation& u, const Permutation& v, const Permutation& w) {
    SweepImage image = sweep(Chart(u));
    IdealGens pullback = schubert_ideal_on(image.eta1, w);
    pullback.append(opposite_ideal_on(image.eta2, v));
    return pullback;
}

// Points of X_w^v inside chart u, from sampled cells of the interval.
std::vector<std::vector<Rational>> chart_points(const Permutation& u, const Permutation& v, const Permutation& w,
                                                std::uint64_t seed) {
    std::vector<std::vector<Rational>> out;
    Chart chart(u);
    auto interval = bruhat_interval(v, w);
    for (const auto& s : interval)
        for (const auto& t : interval) {
            if (!bruhat_leq(t, s)) continue;
            auto x = sample_richardson_point(t, s, seed++);
            if (!x) continue;
            auto normal = to_chart_form(*x, u);
            if (normal) out.push_back(chart_coordinates(chart, *normal));
        }
    return out;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    return rng();
}

template <class T>
const T& pick(const std::vector<T>& items, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
    return items[dist(rng)];
}

std::vector<std::pair<Permutation, Permutation>> strict_pairs_in(const Permutation& v, const Permutation& w) {
    std::vector<std::pair<Permutation, Permutation>> out;
    auto interval = bruhat_interval(v, w);
    for (const auto& t : interval)
        for (const auto& s : interval)
            if (t != s && bruhat_leq(t, s)) out.emplace_back(t, s);
    return out;
}

void summarize_positivity(VerificationReport& report) {
    std::size_t negative = 0;
    for (const auto& f : report.findings)
        if (f.rfind("negative H-coefficient", 0) == 0) ++negative;
    report.findings.push_back("H-polynomial positivity: " + std::to_string(negative) + " negative-coefficient observations");
}

VerifyCase mult_case(const Permutation& v, const Permutation& w, const Permutation& sigma) {
    return {triple_key(v, w, sigma), [=](std::vector<std::string>&) { return check_mult_at(v, w, sigma); }};
}

VerifyCase hpoly_case(const Permutation& v, const Permutation& w, const Permutation& sigma) {
    return {triple_key(v, w, sigma),
            [=](std::vector<std::string>& findings) { return check_hpoly_at(v, w, sigma, findings); }};
}

VerifyCase singular_case(const Permutation& v, const Permutation& w, const Permutation& sigma) {
    return {triple_key(v, w, sigma), [=](std::vector<std::string>&) { return check_singular_at(v, w, sigma); }};
}

VerifyCase point_case(const Permutation& v, const Permutation& w, const Permutation& tau, const Permutation& sigma,
                      std::uint64_t seed) {
    return {pair_key(v, w) + " tau=" + tau.to_string() + " sigma=" + sigma.to_string() + " seed=" + std::to_string(seed),
            [=](std::vector<std::string>& findings) {
                return check_theorem_at_sample(v, w, tau, sigma, seed, findings);
            }};
}

// Sampled point cases for a pair; shortfalls are reported by the caller.
std::vector<VerifyCase> point_cases(const Permutation& v, const Permutation& w, std::size_t trials,
                                    std::uint64_t seed) {
    std::vector<VerifyCase> out;
    auto pairs = strict_pairs_in(v, w);
    if (pairs.empty()) return out;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto& [tau, sigma] = pick(pairs, rng);
        out.push_back(point_case(v, w, tau, sigma, rng()));
    }
    return out;
}

}  // namespace

void VerificationReport::merge(const VerificationReport& other) {
    cases += other.cases;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
    wall_time_seconds += other.wall_time_seconds;
}

VerificationReport run_cases(std::string check, std::string range, std::vector<VerifyCase> cases,
                             const VerifyOptions& options) {
    struct Outcome {
        std::vector<std::string> failures;
        std::vector<std::string> findings;
    };
    auto start = std::chrono::steady_clock::now();
    auto outcomes = parallel_map<Outcome>(cases.size(), options.jobs, [&](std::size_t i) {
        Outcome out;
        try {
            ScopedDeadline deadline(options.timeout);
            out.failures = cases[i].run(out.findings);
        } catch (const Timeout&) {
            out.findings.push_back("timeout: " + cases[i].key);
        } catch (const std::exception& e) {
            out.failures.push_back(std::string("exception: ") + e.what());
        }
        return out;
    });
    VerificationReport report;
    report.check = std::move(check);
    report.range = std::move(range);
    report.cases = cases.size();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        for (auto& f : outcomes[i].failures) report.failures.push_back({cases[i].key, std::move(f)});
        for (auto& f : outcomes[i].findings) report.findings.push_back(std::move(f));
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool verify_product_iso(const Permutation& u, const Permutation& v, const Permutation& w) {
    return ideal_equal(product_pullback(u, v, w), richardson_ideal_in_chart(v, w, u));
}

std::vector<std::string> check_mult_at(const Permutation& v, const Permutation& w, const Permutation& sigma) {
    FixedPointData d = fixed_point_data(v, w, sigma);
    if (d.richardson.multiplicity == d.schubert.multiplicity * d.opposite.multiplicity) return {};
    return {"mult " + d.richardson.multiplicity.get_str() + " != " + d.schubert.multiplicity.get_str() + " * " +
            d.opposite.multiplicity.get_str()};
}

std::vector<std::string> check_hpoly_at(const Permutation& v, const Permutation& w, const Permutation& sigma,
                                        std::vector<std::string>& findings) {
    FixedPointData d = fixed_point_data(v, w, sigma);
    const std::string key = triple_key(v, w, sigma);
    for (const auto* inv : {&d.richardson, &d.schubert, &d.opposite})
        if (!inv->h_polynomial.nonnegative())
            findings.push_back("negative H-coefficient at " + key + ": " + inv->h_polynomial.to_string());
    IntPoly product = d.schubert.h_polynomial * d.opposite.h_polynomial;
    if (d.richardson.h_polynomial == product) return {};
    return {"H " + d.richardson.h_polynomial.to_string() + " != (" + d.schubert.h_polynomial.to_string() + ") * (" +
            d.opposite.h_polynomial.to_string() + ")"};
}

std::vector<std::string> check_singular_at(const Permutation& v, const Permutation& w, const Permutation& sigma) {
    FixedPointData d = fixed_point_data(v, w, sigma);
    std::vector<std::string> out = consistency_failures("richardson", d.richardson);
    for (auto& f : consistency_failures("schubert", d.schubert)) out.push_back(std::move(f));
    for (auto& f : consistency_failures("opposite", d.opposite)) out.push_back(std::move(f));
    if (d.richardson.is_smooth != (d.schubert.is_smooth && d.opposite.is_smooth))
        out.push_back("richardson " + describe(d.richardson) + " vs schubert " + describe(d.schubert) +
                      " and opposite " + describe(d.opposite));
    return out;
}

std::vector<std::string> check_theorem_at_sample(const Permutation& v, const Permutation& w, const Permutation& tau,
                                                 const Permutation& sigma, std::uint64_t seed,
                                                 std::vector<std::string>& findings) {
    const std::string where = "tau=" + tau.to_string() + " sigma=" + sigma.to_string();
    auto x = sample_richardson_point(tau, sigma, seed);
    if (!x) {
        findings.push_back("sampling shortfall: " + pair_key(v, w) + " " + where);
        return {};
    }
    std::vector<std::string> out;
    PointInvariants at = richardson_invariants_at_point(v, w, sigma, *x);
    if (at.cells.sigma != sigma || at.cells.tau != tau)
        out.push_back("sampled point lies in cells (" + at.cells.sigma.to_string() + ", " + at.cells.tau.to_string() +
                      ")");

    std::vector<Rational> p = chart_coordinates(Chart(sigma), *x);
    const LocalInvariants& r = at.invariants;
    const LocalInvariants s_fixed = schubert_invariants(w, sigma);
    const LocalInvariants o_fixed = opposite_invariants(v, tau);
    const LocalInvariants s_point = local_invariants_at(schubert_ideal_in_chart(w, sigma), p);
    const LocalInvariants o_point = local_invariants_at(opposite_ideal_in_chart(v, sigma), p);

    auto compare = [&](const char* label, const LocalInvariants& s, const LocalInvariants& o) {
        if (r.multiplicity != s.multiplicity * o.multiplicity)
            out.push_back(std::string(label) + ": mult " + r.multiplicity.get_str() + " != " +
                          s.multiplicity.get_str() + " * " + o.multiplicity.get_str());
        if (r.h_polynomial != s.h_polynomial * o.h_polynomial)
            out.push_back(std::string(label) + ": H " + r.h_polynomial.to_string() + " != (" +
                          s.h_polynomial.to_string() + ") * (" + o.h_polynomial.to_string() + ")");
        if (r.is_smooth != (s.is_smooth && o.is_smooth))
            out.push_back(std::string(label) + ": smoothness " + describe(r) + " vs " + describe(s) + " and " +
                          describe(o));
    };
    compare("fixed points", s_fixed, o_fixed);
    compare("at point", s_point, o_point);
    for (auto* inv : {&r, &s_point, &o_point})
        for (auto& f : consistency_failures("point", *inv)) out.push_back(std::move(f));
    if (s_point.multiplicity != s_fixed.multiplicity || s_point.h_polynomial != s_fixed.h_polynomial ||
        o_point.multiplicity != o_fixed.multiplicity || o_point.h_polynomial != o_fixed.h_polynomial)
        out.push_back("point values differ from fixed-point values: schubert " + describe(s_point) + " vs " +
                      describe(s_fixed) + ", opposite " + describe(o_point) + " vs " + describe(o_fixed));
    if (!out.empty()) out.push_back("point " + where + " coordinates in chart " + sigma.to_string());
    return out;
}

VerificationReport verify_mult_factorization(const Permutation& v, const Permutation& w,
                                             const VerifyOptions& options) {
    std::vector<VerifyCase> cases;
    for (const auto& s : bruhat_interval(v, w)) cases.push_back(mult_case(v, w, s));
    for (auto& c : point_cases(v, w, options.point_samples, options.seed)) cases.push_back(std::move(c));
    return run_cases("mult", pair_key(v, w), std::move(cases), options);
}

VerificationReport verify_hpoly_factorization(const Permutation& v, const Permutation& w,
                                              const VerifyOptions& options) {
    std::vector<VerifyCase> cases;
    for (const auto& s : bruhat_interval(v, w)) cases.push_back(hpoly_case(v, w, s));
    VerificationReport report = run_cases("hpoly", pair_key(v, w), std::move(cases), options);
    summarize_positivity(report);
    return report;
}

VerificationReport verify_singular_locus(const Permutation& v, const Permutation& w, const VerifyOptions& options) {
    std::vector<VerifyCase> cases;
    for (const auto& s : bruhat_interval(v, w)) cases.push_back(singular_case(v, w, s));
    for (auto& c : point_cases(v, w, options.point_samples, options.seed)) cases.push_back(std::move(c));
    return run_cases("singlocus", pair_key(v, w), std::move(cases), options);
}

VerificationReport verify_theorem_at_points(const Permutation& v, const Permutation& w, std::size_t trials,
                                            std::uint64_t seed, const VerifyOptions& options) {
    std::vector<VerifyCase> cases = point_cases(v, w, trials, seed);
    VerificationReport report = run_cases("points", pair_key(v, w), std::move(cases), options);
    if (report.cases == 0 && trials > 0) report.findings.push_back("sampling shortfall: interval has no strict pairs");
    return report;
}

VerificationReport verify_kl_vs_h(const Permutation& w, const VerifyOptions& options) {
    if (!is_covexillary(w)) throw std::invalid_argument("verify_kl_vs_h: " + w.to_string() + " contains 3412");
    std::vector<VerifyCase> cases;
    for (const auto& v : bruhat_interval(Permutation::identity(w.size()), w))
        cases.push_back({pair_key(v, w), [=](std::vector<std::string>&) -> std::vector<std::string> {
                             IntPoly p = kl_polynomial(v, w).coefficients;
                             IntPoly h = schubert_invariants(w, v).h_polynomial;
                             if (p.coefficientwise_leq(h)) return {};
                             return {"P = " + p.to_string() + " exceeds H = " + h.to_string()};
                         }});
    return run_cases("kl-vs-h", "w=" + w.to_string(), std::move(cases), options);
}

VerificationReport schubert_smoothness_table(std::size_t n, const VerifyOptions& options) {
    if (n > 5) throw std::invalid_argument("schubert_smoothness_table: n must be at most 5");
    const Permutation p4231 = Permutation::parse("4231"), p3412 = Permutation::parse("3412");
    std::vector<VerifyCase> cases;
    for (const auto& w : all_permutations(n))
        cases.push_back({"w=" + w.to_string(), [=](std::vector<std::string>&) -> std::vector<std::string> {
                             std::vector<std::string> out;
                             bool smooth = true;
                             for (const auto& s : bruhat_interval(Permutation::identity(n), w)) {
                                 LocalInvariants inv = schubert_invariants(w, s);
                                 for (auto& f : consistency_failures("schubert", inv))
                                     out.push_back("sigma=" + s.to_string() + " " + f);
                                 smooth = smooth && inv.is_smooth;
                             }
                             bool avoids = n < 4 || (!contains_pattern(w, p4231) && !contains_pattern(w, p3412));
                             if (smooth != avoids)
                                 out.push_back(std::string("computed ") + (smooth ? "smooth" : "singular") +
                                               " but pattern criterion says " + (avoids ? "smooth" : "singular"));
                             return out;
                         }});
    return run_cases("smooth-table", "S" + std::to_string(n), std::move(cases), options);
}

std::vector<std::pair<Permutation, Permutation>> comparable_pairs(std::size_t n) {
    std::vector<std::pair<Permutation, Permutation>> out;
    auto all = all_permutations(n);
    for (const auto& v : all)
        for (const auto& w : all)
            if (bruhat_leq(v, w)) out.emplace_back(v, w);
    return out;
}

std::optional<Suite> parse_suite(const std::string& name) {
    for (Suite s : {Suite::ProductIso, Suite::Mult, Suite::HPoly, Suite::SingularLocus, Suite::Points, Suite::KLvsH,
                    Suite::SmoothTable, Suite::Dimension})
        if (suite_name(s) == name) return s;
    return std::nullopt;
}

std::string suite_name(Suite suite) {
    switch (suite) {
        case Suite::ProductIso: return "product-iso";
        case Suite::Mult: return "mult";
        case Suite::HPoly: return "hpoly";
        case Suite::SingularLocus: return "singlocus";
        case Suite::Points: return "points";
        case Suite::KLvsH: return "kl-vs-h";
        case Suite::SmoothTable: return "smooth-table";
        case Suite::Dimension: return "dimension";
    }
    return "";
}

VerificationReport run_suite(Suite suite, std::size_t n, std::optional<std::size_t> samples,
                             const VerifyOptions& options) {
    std::mt19937_64 rng(options.seed);
    const std::string range =
        "S" + std::to_string(n) + (samples ? ", " + std::to_string(*samples) + " samples" : ", exhaustive") +
        ", seed " + std::to_string(options.seed);
    auto pairs = comparable_pairs(n);
    auto perms = all_permutations(n);
    std::vector<VerifyCase> cases;

    auto for_triples = [&](auto make) {
        if (!samples) {
            for (const auto& [v, w] : pairs)
                for (const auto& s : bruhat_interval(v, w)) cases.push_back(make(v, w, s));
            return;
        }
        for (std::size_t k = 0; k < *samples; ++k) {
            const auto& [v, w] = pick(pairs, rng);
            cases.push_back(make(v, w, pick(bruhat_interval(v, w), rng)));
        }
    };
    auto add_points = [&](std::size_t trials) {
        if (trials == 0) return;
        if (!samples) {
            for (std::size_t k = 0; k < pairs.size(); ++k)
                for (auto& c : point_cases(pairs[k].first, pairs[k].second, trials, mix(options.seed, k)))
                    cases.push_back(std::move(c));
            return;
        }
        for (std::size_t k = 0; k < *samples; ++k) {
            const auto& [v, w] = pick(pairs, rng);
            for (auto& c : point_cases(v, w, trials, rng())) cases.push_back(std::move(c));
        }
    };

    switch (suite) {
        case Suite::ProductIso:
        case Suite::Dimension: {
            auto make = [suite](const Permutation& u, const Permutation& v, const Permutation& w) -> VerifyCase {
                std::string key = "u=" + u.to_string() + " " + pair_key(v, w);
                if (suite == Suite::ProductIso)
                    return {key, [=](std::vector<std::string>& findings) -> std::vector<std::string> {
                                if (verify_product_iso(u, v, w)) return {};
                                IdealGens pullback = product_pullback(u, v, w);
                                IdealGens chart = richardson_ideal_in_chart(v, w, u);
                                bool varieties_agree = true;
                                for (const auto& p : chart_points(u, v, w, 0))
                                    for (const auto& g : pullback.generators())
                                        if (evaluate(g, p) != 0) varieties_agree = false;
                                findings.push_back(std::string(varieties_agree ? "ideal mismatch" : "variety mismatch") +
                                                   " at u=" + u.to_string() + " " + pair_key(v, w));
                                return {"pullback " + ideal_text(pullback) + " != chart ideal " + ideal_text(chart)};
                            }};
                return {key, [=](std::vector<std::string>&) -> std::vector<std::string> {
                            IdealGens ideal = richardson_ideal_in_chart(v, w, u);
                            if (contains_one(ideal)) return {};
                            std::size_t expected = length(w) - length(v);
                            std::size_t dim = krull_dimension(ideal);
                            if (dim == expected) return {};
                            return {"dimension " + std::to_string(dim) + " != " + std::to_string(expected)};
                        }};
            };
            if (!samples) {
                for (const auto& u : perms)
                    for (const auto& [v, w] : pairs) cases.push_back(make(u, v, w));
            } else {
                for (std::size_t k = 0; k < *samples; ++k) {
                    const auto& u = pick(perms, rng);
                    const auto& [v, w] = pick(pairs, rng);
                    cases.push_back(make(u, v, w));
                }
            }
            break;
        }
        case Suite::Mult:
            for_triples(mult_case);
            add_points(options.point_samples);
            break;
        case Suite::HPoly:
            for_triples(hpoly_case);
            break;
        case Suite::SingularLocus:
            for_triples(singular_case);
            add_points(options.point_samples);
            break;
        case Suite::Points:
            add_points(std::max<std::size_t>(1, options.point_samples));
            break;
        case Suite::KLvsH: {
            std::vector<std::pair<Permutation, Permutation>> kl_pairs;
            for (const auto& [v, w] : pairs)
                if (is_covexillary(w)) kl_pairs.emplace_back(v, w);
            auto make = [](const Permutation& v, const Permutation& w) -> VerifyCase {
                return {pair_key(v, w), [=](std::vector<std::string>&) -> std::vector<std::string> {
                            IntPoly p = kl_polynomial(v, w).coefficients;
                            IntPoly h = schubert_invariants(w, v).h_polynomial;
                            if (p.coefficientwise_leq(h)) return {};
                            return {"P = " + p.to_string() + " exceeds H = " + h.to_string()};
                        }};
            };
            if (!samples) {
                for (const auto& [v, w] : kl_pairs) cases.push_back(make(v, w));
            } else {
                for (std::size_t k = 0; k < *samples; ++k) {
                    const auto& [v, w] = pick(kl_pairs, rng);
                    cases.push_back(make(v, w));
                }
            }
            break;
        }
        case Suite::SmoothTable: {
            VerificationReport report = schubert_smoothness_table(n, options);
            report.range = range;
            return report;
        }
    }

    VerificationReport report = run_cases(suite_name(suite), range, std::move(cases), options);
    if (suite == Suite::HPoly) summarize_positivity(report);
    if (suite == Suite::Points || suite == Suite::Mult || suite == Suite::SingularLocus) {
        std::size_t shortfalls = 0;
        for (const auto& f : report.findings)
            if (f.rfind("sampling shortfall", 0) == 0) ++shortfalls;
        if (shortfalls) report.findings.push_back("sampling shortfalls: " + std::to_string(shortfalls));
    }
    return report;
}

}  // namespace richardson
