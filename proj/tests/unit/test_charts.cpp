#include <random>

#include "doctest.h"
#include "richardson/charts.hpp"

using namespace richardson;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<Rational> zeros(const Chart& c) { return std::vector<Rational>(c.free_positions().size()); }

bool vanishes_at_origin(const IdealGens& I) {
    for (const auto& g : I.generators())
        if (g.constant_term() != 0) return false;
    return true;
}

}  // namespace

TEST_SUITE("charts") {

TEST_CASE("generic matrix of 31542") {
    Chart c(P("31542"));
    ChartMatrix x = generic_matrix(c);
    std::vector<std::string> row2, row3;
    for (std::size_t j = 1; j <= 5; ++j) {
        row2.push_back(x(2, j).to_string());
        row3.push_back(x(3, j).to_string());
    }
    CHECK(row2 == std::vector<std::string>{"z21", "z22", "z23", "z24", "1"});
    CHECK(row3 == std::vector<std::string>{"1", "0", "0", "0", "0"});
    CHECK(c.free_positions().size() == 10);
    CHECK(c.d_up() == std::vector<Position>{{2, 2}, {4, 1}, {4, 2}, {5, 1}, {5, 2}});
    CHECK(c.d_down() == std::vector<Position>{{1, 1}, {2, 1}, {2, 3}, {2, 4}, {4, 3}});
    CHECK_FALSE(c.variable_at(3, 1).has_value());
    CHECK(chart_variable_name(10, 10, 3) == "z10_3");
    CHECK(chart_variable_name(5, 4, 2) == "z42");
}

TEST_CASE("chart bookkeeping") {
    for (std::size_t n : {2, 3, 4, 5})
        for (const auto& u : all_permutations(n)) {
            Chart c(u);
            CHECK(c.free_positions().size() == n * (n - 1) / 2);
            CHECK(c.d_down().size() == length(u));
            CHECK(c.d_up().size() == n * (n - 1) / 2 - length(u));
        }
    ChartMatrix id = generic_matrix(Chart(Permutation::identity(3)));
    CHECK(id(1, 1).to_string() == "1");
    CHECK(id(2, 1).to_string() == "z21");
    CHECK(id(1, 2).is_zero());
}

TEST_CASE("rank conditions") {
    CHECK(schubert_conditions(Permutation::longest(4)).empty());
    CHECK(opposite_conditions(Permutation::identity(4)).empty());
    CHECK(schubert_ideal_in_chart(Permutation::longest(4), P("2413")).empty());
    auto all = schubert_conditions(P("1324"));
    auto essential = schubert_conditions(P("1324"), RankConditions::Essential);
    CHECK(essential.size() < all.size());
    CHECK_FALSE(essential.empty());
}

TEST_CASE("small ideals") {
    IdealGens point = schubert_ideal_in_chart(Permutation::identity(3), Permutation::identity(3));
    Chart id(Permutation::identity(3));
    GroebnerBasis gb = buchberger(point, MonomialOrder::degrevlex(3));
    for (std::size_t k = 0; k < 3; ++k) CHECK(ideal_contains(gb, Polynomial::variable(id.context(), k)));
    CHECK(krull_dimension(schubert_ideal_in_chart(P("132"), P("132"))) == 1);
    IdealGens opp = opposite_ideal_in_chart(P("21"), P("21"));
    REQUIRE(opp.generators().size() == 1);
    CHECK(opp.generators()[0].to_string() == "z11");
    CHECK(krull_dimension(opposite_ideal_in_chart(P("312"), P("312"))) == 1);
    CHECK(krull_dimension(richardson_ideal_in_chart(P("2413"), P("2413"), P("2413"))) == 0);
}

TEST_CASE("richardson ideal is the concatenation") {
    auto v = P("1324"), w = P("3412"), u = P("1342");
    IdealGens r = richardson_ideal_in_chart(v, w, u);
    IdealGens both = schubert_ideal_in_chart(w, u);
    both.append(opposite_ideal_in_chart(v, u));
    CHECK(ideal_equal(r, both));
    CHECK(ideal_equal(richardson_ideal_in_chart(Permutation::identity(4), w, u), schubert_ideal_in_chart(w, u)));
}

TEST_CASE("essential conditions generate the same ideal") {
    for (const auto& u : all_permutations(4))
        for (const auto& w : all_permutations(4)) {
            CHECK(ideal_equal(schubert_ideal_in_chart(w, u), schubert_ideal_in_chart(w, u, RankConditions::Essential)));
            CHECK(ideal_equal(opposite_ideal_in_chart(w, u), opposite_ideal_in_chart(w, u, RankConditions::Essential)));
        }
}

TEST_CASE("charts meet X_w^v exactly at interval points") {
    for (const auto& u : all_permutations(3))
        for (const auto& v : all_permutations(3))
            for (const auto& w : all_permutations(3)) {
                if (!bruhat_leq(v, w)) continue;
                bool inside = bruhat_leq(v, u) && bruhat_leq(u, w);
                CHECK(contains_one(richardson_ideal_in_chart(v, w, u)) == !inside);
            }
}

TEST_CASE("dimension of chart intersections in S4") {
    for (const auto& v : all_permutations(4))
        for (const auto& w : all_permutations(4)) {
            if (!bruhat_leq(v, w)) continue;
            for (const auto& u : bruhat_interval(v, w))
                CHECK(krull_dimension(richardson_ideal_in_chart(v, w, u)) == length(w) - length(v));
        }
}

TEST_CASE("fixed points and bruhat consistency") {
    CHECK(fixed_points_of_richardson(P("2143"), P("2143")) == std::vector<Permutation>{P("2143")});
    CHECK(fixed_points_of_richardson(Permutation::identity(3), Permutation::longest(3)).size() == 6);
    for (const auto& v : all_permutations(4))
        for (const auto& w : all_permutations(4)) {
            CHECK(bruhat_leq(v, w) == vanishes_at_origin(schubert_ideal_in_chart(w, v)));
            auto fixed = fixed_points_of_richardson(v, w);
            for (const auto& s : all_permutations(4)) {
                bool listed = std::find(fixed.begin(), fixed.end(), s) != fixed.end();
                CHECK(listed == vanishes_at_origin(richardson_ideal_in_chart(v, w, s)));
            }
        }
}

TEST_CASE("identify cells") {
    for (const auto& s : all_permutations(4)) {
        CellPair c = identify_cells(RationalMatrix::permutation(s));
        CHECK(c.sigma == s);
        CHECK(c.tau == s);
    }
    CellPair id = identify_cells(RationalMatrix::identity(3));
    CHECK(id.sigma == Permutation::identity(3));
    RationalMatrix singular(3, 3);
    singular(1, 1) = 1;
    CHECK_THROWS(identify_cells(singular));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (const auto& u : all_permutations(4)) {
        Chart c(u);
        std::vector<Rational> p;
        for (std::size_t k = 0; k < c.free_positions().size(); ++k) p.push_back(dist(rng));
        CellPair cells = identify_cells(generic_matrix(c).evaluate(p));
        CHECK(bruhat_leq(cells.tau, cells.sigma));
        CHECK(bruhat_leq(cells.tau, u));
        CHECK(bruhat_leq(u, cells.sigma));
    }
}

TEST_CASE("chart form normalization") {
    RationalMatrix x = RationalMatrix::permutation(P("312"));
    auto normal = to_chart_form(x, P("312"));
    REQUIRE(normal.has_value());
    CHECK(*normal == x);
    CHECK(chart_coordinates(Chart(P("312")), *normal) == zeros(Chart(P("312"))));
    CHECK_FALSE(to_chart_form(RationalMatrix::permutation(P("123")), P("312")).has_value());
    // Right multiplication by an upper triangular matrix does not move the flag.
    RationalMatrix b(3, 3);
    b(1, 1) = 2, b(1, 2) = 1, b(1, 3) = -3, b(2, 2) = 5, b(2, 3) = 7, b(3, 3) = -1;
    Chart c(P("231"));
    RationalMatrix y = generic_matrix(c).evaluate({1, 2, 3});
    auto back = to_chart_form(y * b, P("231"));
    REQUIRE(back.has_value());
    CHECK(*back == y);
}

TEST_CASE("sampled richardson points") {
    CHECK(*sample_richardson_point(P("2143"), P("2143"), 1) == RationalMatrix::permutation(P("2143")));
    CHECK_THROWS(sample_richardson_point(P("4321"), P("1234"), 1));
    std::size_t found = 0, tried = 0;
    for (const auto& s : all_permutations(4))
        for (const auto& t : bruhat_interval(Permutation::identity(4), s)) {
            ++tried;
            auto x = sample_richardson_point(t, s, tried);
            if (!x) continue;
            ++found;
            CellPair cells = identify_cells(*x);
            CHECK(cells.sigma == s);
            CHECK(cells.tau == t);
            CHECK(to_chart_form(*x, s).has_value());
        }
    CHECK(found == tried);
    auto a = sample_richardson_point(P("1234"), P("4321"), 5);
    auto b = sample_richardson_point(P("1234"), P("4321"), 5);
    CHECK(*a == *b);
}

TEST_CASE("reduced words") {
    for (const auto& w : all_permutations(4)) {
        auto word = reduced_word(w);
        CHECK(word.size() == length(w));
        Permutation p = Permutation::identity(4);
        for (std::size_t i : word) p = p * Permutation::simple(4, i);
        CHECK(p == w);
    }
}

}  // TEST_SUITE
