#include <map>

#include "doctest.h"
#include "richardson/hilbert.hpp"
#include "richardson/tangent_cone.hpp"

using namespace richardson;

namespace {

// Textbook Buchberger on exponent-vector maps under lex: every pair, no
// criteria, followed by minimization and interreduction.
using Exps = std::vector<int>;
struct LexGreater {
    bool operator()(const Exps& a, const Exps& b) const { return a > b; }
};
using Naive = std::map<Exps, Rational, LexGreater>;

Naive naive_from(const Polynomial& p, std::size_t nv) {
    Naive out;
    for (const auto& t : p.terms()) {
        Exps e(nv);
        for (std::size_t k = 0; k < nv; ++k) e[k] = static_cast<int>(t.monomial.exponent(k));
        out[e] = t.coefficient;
    }
    return out;
}

bool divides(const Exps& a, const Exps& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

Naive shift(const Naive& f, const Exps& m, const Rational& c) {
    Naive out;
    for (const auto& [e, v] : f) {
        Exps s = e;
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += m[k];
        out[s] = v * c;
    }
    return out;
}

void add_into(Naive& f, const Naive& g) {
    for (const auto& [e, v] : g) {
        f[e] += v;
        if (f[e] == 0) f.erase(e);
    }
}

Naive naive_reduce(Naive f, const std::vector<Naive>& basis) {
    Naive rem;
    while (!f.empty()) {
        auto [lead, coef] = *f.begin();
        bool reduced = false;
        for (const auto& g : basis) {
            const auto& [gl, gc] = *g.begin();
            if (!divides(gl, lead)) continue;
            Exps m(lead.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = lead[k] - gl[k];
            add_into(f, shift(g, m, -coef / gc));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem[lead] = coef;
            f.erase(f.begin());
        }
    }
    return rem;
}

Naive monic(Naive f) {
    Rational c = f.begin()->second;
    for (auto& [e, v] : f) v /= c;
    return f;
}

std::vector<Naive> naive_groebner(std::vector<Naive> g) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < g.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < g.size() && !changed; ++j) {
                const auto& [a, ac] = *g[i].begin();
                const auto& [b, bc] = *g[j].begin();
                Exps l(a.size()), ma(a.size()), mb(a.size());
                for (std::size_t k = 0; k < l.size(); ++k) {
                    l[k] = std::max(a[k], b[k]);
                    ma[k] = l[k] - a[k];
                    mb[k] = l[k] - b[k];
                }
                Naive s = shift(g[i], ma, 1 / ac);
                add_into(s, shift(g[j], mb, -1 / bc));
                Naive r = naive_reduce(s, g);
                if (!r.empty()) {
                    g.push_back(r);
                    changed = true;
                }
            }
    }
    std::vector<Naive> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            const Exps& a = g[i].begin()->first;
            const Exps& b = g[j].begin()->first;
            redundant = divides(b, a) && (a != b || j < i);
        }
        if (!redundant) minimal.push_back(monic(g[i]));
    }
    std::vector<Naive> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Naive> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Naive lead{*minimal[i].begin()};
        Naive tail = minimal[i];
        tail.erase(tail.begin());
        add_into(lead, naive_reduce(tail, others));
        out.push_back(lead);
    }
    std::sort(out.begin(), out.end(), [](const Naive& a, const Naive& b) { return a.begin()->first < b.begin()->first; });
    return out;
}

std::vector<Naive> library_lex(const IdealGens& ideal) {
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::lex(ideal.num_vars()));
    std::vector<Naive> out;
    for (const auto& p : gb.basis) out.push_back(naive_from(p, ideal.num_vars()));
    std::sort(out.begin(), out.end(), [](const Naive& a, const Naive& b) { return a.begin()->first < b.begin()->first; });
    return out;
}

std::vector<Naive> oracle_lex(const IdealGens& ideal) {
    std::vector<Naive> g;
    for (const auto& p : ideal.generators()) g.push_back(naive_from(p, ideal.num_vars()));
    return naive_groebner(g);
}

IdealGens ideal(const ContextPtr& ctx, std::initializer_list<const char*> gens) {
    IdealGens out(ctx);
    for (const char* g : gens) out.add(parse_polynomial(g, ctx));
    return out;
}

// Counts monomials of degree d outside the monomial ideal.
Integer count_standard(const std::vector<Monomial>& lead, std::size_t nv, unsigned d) {
    Integer count = 0;
    for (const auto& m : monomials_of_degree(nv, d)) {
        bool standard = true;
        for (const auto& l : lead)
            if (l.divides(m)) standard = false;
        if (standard) ++count;
    }
    return count;
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("reduced lex basis of x^2 - y, y^2 - x") {
    auto ctx = make_context({"x", "y"});
    IdealGens I = ideal(ctx, {"x^2 - y", "y^2 - x"});
    GroebnerBasis gb = buchberger(I, MonomialOrder::lex(2));
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0].to_string() == "-y + y^4");
    CHECK(gb.basis[1].to_string() == "x - y^2");
    CHECK(library_lex(I) == oracle_lex(I));
}

TEST_CASE("agreement with the textbook algorithm") {
    auto ctx = make_context({"x", "y", "z"});
    for (auto I : {ideal(ctx, {"x*y - z", "y*z - x", "x*z - y"}), ideal(ctx, {"x^2 + y^2 + z^2 - 1", "x - y*z", "y^3 - x"}),
                   ideal(ctx, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}), ideal(ctx, {"x*y", "y*z", "x*z - z^2 + 1"})}) {
        CAPTURE(I.key());
        CHECK(library_lex(I) == oracle_lex(I));
    }
}

TEST_CASE("basis is independent of order of generators") {
    auto ctx = make_context({"a", "b", "c"});
    IdealGens I = ideal(ctx, {"a*b - c^2", "b^2 - a*c", "a^2 - b*c"});
    IdealGens J = ideal(ctx, {"a^2 - b*c", "a*b - c^2", "b^2 - a*c"});
    auto order = MonomialOrder::degrevlex(3);
    CHECK(buchberger(I, order).basis == buchberger(J, order).basis);
    CHECK(cached_buchberger(I, order).basis == buchberger(I, order).basis);
}

TEST_CASE("membership, equality, unit ideal") {
    auto ctx = make_context({"x", "y"});
    IdealGens I = ideal(ctx, {"x^2 - y", "y^2 - x"});
    GroebnerBasis gb = buchberger(I, MonomialOrder::degrevlex(2));
    CHECK(ideal_contains(gb, parse_polynomial("x^4 - x", ctx)));
    CHECK_FALSE(ideal_contains(gb, parse_polynomial("x - 1", ctx)));
    CHECK(ideal_equal(I, ideal(ctx, {"x - y^2", "y^4 - y"})));
    CHECK_FALSE(ideal_equal(I, ideal(ctx, {"x - y^2"})));
    CHECK(contains_one(ideal(ctx, {"x*y - 1", "x"})));
    CHECK_FALSE(contains_one(I));
    CHECK(normal_form(parse_polynomial("x^2", ctx), gb) == parse_polynomial("y", ctx));
}

TEST_CASE("krull dimension") {
    auto ctx = make_context({"x", "y", "z", "w"});
    CHECK(krull_dimension(IdealGens(ctx)) == 4);
    CHECK(krull_dimension(ideal(ctx, {"x*y"})) == 3);
    CHECK(krull_dimension(ideal(ctx, {"x*w - y*z", "x*z - y^2", "y*w - z^2"})) == 2);  // twisted cubic cone
    CHECK(krull_dimension(ideal(ctx, {"x", "y", "z", "w - 1"})) == 0);
    CHECK_THROWS(krull_dimension(ideal(ctx, {"1"})));
}

TEST_CASE("hilbert numerator against standard monomial counts") {
    auto ctx = make_context({"x", "y", "z", "w"});
    for (auto I : {ideal(ctx, {"x*w - y*z", "x*z - y^2", "y*w - z^2"}), ideal(ctx, {"x^2", "x*y", "y^3"}),
                   ideal(ctx, {"x*y*z*w"}), ideal(ctx, {"x^2 - y*z", "z^3"})}) {
        CAPTURE(I.key());
        HilbertData data = hilbert_numerator(I);
        GroebnerBasis gb = buchberger(I, MonomialOrder::degrevlex(4));
        auto values = hilbert_function(data, 8);
        for (unsigned d = 0; d <= 8; ++d) CHECK(values[d] == count_standard(gb.leading, 4, d));
        CHECK(data.dimension == krull_dimension(I));
    }
}

TEST_CASE("hilbert data of known rings") {
    auto ctx = make_context({"x", "y", "z", "w"});
    HilbertData cubic = hilbert_numerator(ideal(ctx, {"x*w - y*z", "x*z - y^2", "y*w - z^2"}));
    CHECK(cubic.reduced_numerator == IntPoly{1, 2});
    CHECK(cubic.dimension == 2);
    HilbertData quadric = hilbert_numerator(ideal(ctx, {"x*w - y*z"}));
    CHECK(quadric.reduced_numerator == IntPoly{1, 1});
    CHECK(quadric.dimension == 3);
    CHECK(monomial_hilbert_numerator({}, 2) == IntPoly{1});
    CHECK(monomial_hilbert_numerator({Monomial::variable(0, 2)}, 1) == IntPoly{1, 0, -1});
    CHECK_THROWS(hilbert_numerator(ideal(ctx, {"x + 1"})));
}

TEST_CASE("IntPoly") {
    IntPoly a{1, 2, 1};
    CHECK(a.to_string() == "1 + 2*q + q^2");
    CHECK(a.at_one() == 4);
    CHECK(a * IntPoly{1, -1} == IntPoly{1, 1, -1, -1});
    CHECK((IntPoly{1, 0, -1}).divide_one_minus_q() == IntPoly{1, 1});
    CHECK_THROWS(IntPoly({1, 1}).divide_one_minus_q());
    CHECK(IntPoly{1}.coefficientwise_leq(IntPoly{1, 1}));
    CHECK_FALSE(IntPoly{1, 2}.coefficientwise_leq(IntPoly{1, 1}));
    CHECK_FALSE(IntPoly{1, -1}.nonnegative());
}

TEST_CASE("tangent cones") {
    auto ctx = make_context({"x", "y"});
    IdealGens cusp = ideal(ctx, {"y^2 - x^3"});
    CHECK(tangent_cone(cusp).generators() == std::vector<Polynomial>{parse_polynomial("y^2", ctx)});
    IdealGens node = ideal(ctx, {"y^2 - x^2 - x^3"});
    CHECK(hilbert_numerator(tangent_cone(node)).reduced_numerator == IntPoly{1, 1});
    // Lowest-degree forms of the generators alone miss y^4.
    IdealGens pair = ideal(ctx, {"x^2 + y^3", "x*y"});
    GroebnerBasis cone = buchberger(tangent_cone(pair), MonomialOrder::degrevlex(2));
    CHECK(ideal_contains(cone, parse_polynomial("y^4", ctx)));
    CHECK(hilbert_from_numerator(hilbert_numerator(tangent_cone(pair)).numerator, 2).reduced_numerator.at_one() == 5);
    CHECK_THROWS(tangent_cone(ideal(ctx, {"x - 1"})));
}

TEST_CASE("local hilbert oracle") {
    auto ctx = make_context({"x", "y"});
    auto cusp = first_differences(local_hilbert_oracle(ideal(ctx, {"y^2 - x^3"}), 6));
    CHECK(cusp == std::vector<Integer>{1, 2, 2, 2, 2, 2, 2});
    auto pair = local_hilbert_oracle(ideal(ctx, {"x^2 + y^3", "x*y"}), 6);
    CHECK(pair.back() == 5);
    auto smooth = first_differences(local_hilbert_oracle(ideal(ctx, {"y - x^2"}), 4));
    CHECK(smooth == std::vector<Integer>{1, 1, 1, 1, 1});
}

}  // TEST_SUITE
