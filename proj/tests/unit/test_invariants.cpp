#include "doctest.h"
#include "richardson/invariants.hpp"
#include "richardson/tangent_cone.hpp"

using namespace richardson;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

IdealGens ideal(const ContextPtr& ctx, std::initializer_list<const char*> gens) {
    IdealGens out(ctx);
    for (const char* g : gens) out.add(parse_polynomial(g, ctx));
    return out;
}

std::vector<Rational> origin(const Permutation& u) { return std::vector<Rational>(Chart(u).free_positions().size()); }

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("plane curves") {
    auto ctx = make_context({"x", "y"});
    LocalInvariants cusp = local_invariants_at(ideal(ctx, {"y^2 - x^3"}), {0, 0});
    CHECK(cusp.dimension == 1);
    CHECK(cusp.tangent_dim == 2);
    CHECK_FALSE(cusp.is_smooth);
    CHECK(cusp.multiplicity == 2);
    CHECK(cusp.h_polynomial == IntPoly{1, 1});
    CHECK(cusp.consistent());

    LocalInvariants smooth = local_invariants_at(ideal(ctx, {"y^2 - x^3"}), {1, 1});
    CHECK(smooth.is_smooth);
    CHECK(smooth.multiplicity == 1);

    LocalInvariants triple = local_invariants_at(ideal(ctx, {"x^3 - y^3 + x^4"}), {0, 0});
    CHECK(triple.multiplicity == 3);
    CHECK(triple.h_polynomial == IntPoly{1, 1, 1});
    CHECK_THROWS_AS(local_invariants_at(ideal(ctx, {"y^2 - x^3"}), {1, 2}), PointOffVariety);
}

TEST_CASE("localize and tangent dimension") {
    auto ctx = make_context({"z"});
    IdealGens shifted = localize(ideal(ctx, {"z - 1"}), {1});
    CHECK(shifted.generators() == std::vector<Polynomial>{Polynomial::variable(ctx, 0)});
    IdealGens at_zero = ideal(ctx, {"z^2 - z"});
    CHECK(localize(at_zero, {0}).key() == at_zero.key());
    CHECK_THROWS_AS(localize(ideal(ctx, {"z - 1"}), {0}), PointOffVariety);

    Chart c(Permutation::identity(4));
    CHECK(tangent_dim_at(IdealGens(c.context()), origin(c.u())) == 6);
    IdealGens hyperplane(c.context(), {Polynomial::variable(c.context(), 0)});
    CHECK(tangent_dim_at(hyperplane, origin(c.u())) == 5);
}

TEST_CASE("linear elimination keeps the local ring") {
    auto ctx = make_context({"x", "y", "z", "w"});
    IdealGens I = ideal(ctx, {"x - y*z", "w - y^2 + z^3", "x*w - y^3"});
    IdealGens reduced = eliminate_linear_variables(I);
    CHECK(reduced.num_vars() == 2);
    LocalInvariants a = local_invariants_at(I, {0, 0, 0, 0});
    auto full = first_differences(local_hilbert_oracle(I, 6));
    auto small = first_differences(local_hilbert_oracle(reduced, 6));
    CHECK(full == small);
    CHECK(oracle_discrepancy(I, a, 6).empty());
}

TEST_CASE("Schubert varieties in S4 against the oracle") {
    for (const auto& w : all_permutations(4))
        for (const auto& s : bruhat_interval(Permutation::identity(4), w)) {
            CAPTURE(w.to_string());
            CAPTURE(s.to_string());
            LocalInvariants inv = schubert_invariants(w, s);
            CHECK(inv.consistent());
            CHECK(inv.dimension == length(w));
            CHECK(oracle_discrepancy(schubert_ideal_in_chart(w, s), inv, 6).empty());
        }
}

TEST_CASE("golden values") {
    LocalInvariants x3412 = schubert_invariants(P("3412"), P("1234"));
    CHECK(x3412.multiplicity == 2);
    CHECK(x3412.h_polynomial == IntPoly{1, 1});
    CHECK(x3412.tangent_dim == 5);
    LocalInvariants x4231 = schubert_invariants(P("4231"), P("1234"));
    CHECK(x4231.multiplicity == 2);
    CHECK(x4231.h_polynomial == IntPoly{1, 1});
    CHECK(schubert_invariants(P("4231"), P("2143")).multiplicity == 2);
    CHECK(schubert_invariants(P("4231"), P("2413")).is_smooth);
    auto cumulative = local_hilbert_oracle(schubert_ideal_in_chart(P("3412"), P("1234")), 6);
    CHECK(first_differences(cumulative) == std::vector<Integer>{1, 5, 14, 30, 55, 91, 140});
}

TEST_CASE("trivial cases") {
    CHECK(schubert_invariants(P("2413"), P("2413")).is_smooth);
    CHECK(schubert_invariants(Permutation::longest(4), P("1234")).dimension == 6);
    LocalInvariants point = richardson_invariants(P("2143"), P("2143"), P("2143"));
    CHECK(point.dimension == 0);
    CHECK(point.multiplicity == 1);
    CHECK(point.h_polynomial == IntPoly{1});
    CHECK_THROWS_AS(schubert_invariants(P("1234"), P("2134")), PointOffVariety);
    CHECK_THROWS_AS(opposite_invariants(P("2134"), P("1234")), PointOffVariety);
    CHECK_THROWS_AS(richardson_invariants(P("1234"), P("2134"), P("1243")), PointOffVariety);
}

TEST_CASE("w0 symmetry") {
    Permutation w0 = Permutation::longest(4);
    for (const auto& v : all_permutations(4))
        for (const auto& t : bruhat_interval(v, w0))
            CHECK(opposite_invariants(v, t) == schubert_invariants(w0 * v, w0 * t));
}

TEST_CASE("points off the fixed locus") {
    Permutation v = P("1324"), w = P("4231"), s = P("3241");
    PointInvariants at_origin = richardson_invariants_at_point(v, w, s, RationalMatrix::permutation(s));
    CHECK(at_origin.invariants == richardson_invariants(v, w, s));
    CHECK(at_origin.cells.sigma == s);

    auto x = sample_richardson_point(P("1342"), s, 9);
    REQUIRE(x.has_value());
    PointInvariants sampled = richardson_invariants_at_point(v, w, s, *x);
    CHECK(sampled.cells.tau == P("1342"));
    CHECK(sampled.invariants.multiplicity ==
          schubert_invariants(w, s).multiplicity * opposite_invariants(v, P("1342")).multiplicity);

    Permutation id = Permutation::identity(4);
    auto y = sample_richardson_point(P("1243"), P("2143"), 4);
    REQUIRE(y.has_value());
    CHECK(richardson_invariants_at_point(id, w, P("2143"), *y).invariants == schubert_invariants(w, P("2143")));
}

TEST_CASE("parabolic reduction") {
    Permutation v = P("1324"), w = P("3412"), s = P("1342");
    CHECK(parabolic_invariants(v, w, s, {}) == richardson_invariants(v, w, s));
    Permutation id = Permutation::identity(4);
    LocalInvariants whole = parabolic_invariants(id, id, id, {1, 2, 3});
    CHECK(whole.dimension == 0);
    CHECK(whole.multiplicity == 1);
    // The Schubert divisor of Gr(2,4) is a cone over a smooth quadric.
    LocalInvariants divisor = parabolic_invariants(id, P("2413"), id, {1, 3});
    CHECK(divisor.dimension == 3);
    CHECK(divisor.multiplicity == 2);
    CHECK(divisor.h_polynomial == IntPoly{1, 1});
    CHECK(parabolic_invariants(id, P("2413"), P("1324"), {1, 3}).is_smooth);
    CHECK_THROWS_AS(parabolic_invariants(id, P("2413"), P("3412"), {1, 3}), PointOffVariety);
    CHECK(parabolic_invariants(id, P("2413"), P("2413"), {1, 3}).is_smooth);
}

TEST_CASE("oracle tally") {
    reset_oracle_tally();
    set_oracle_checking(true, 6);
    clear_invariant_cache();
    schubert_invariants(P("3412"), P("1324"));
    set_oracle_checking(false);
    OracleTally tally = oracle_tally();
    CHECK(tally.checked == 1);
    CHECK(tally.mismatches == 0);
    CHECK(tally.plateau_checked == 1);
}

}  // TEST_SUITE
