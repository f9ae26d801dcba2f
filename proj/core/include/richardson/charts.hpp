#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "richardson/groebner.hpp"
#include "richardson/permutation.hpp"
#include "richardson/rational_matrix.hpp"

namespace richardson {

/// (row, column), both 1-based.
using Position = std::pair<std::size_t, std::size_t>;

/// The affine chart u X°_id of GL_n/B: matrices with 1 at (u(j), j), a free
/// variable z_ij at every (i, j) left of the 1 in row i, and 0 elsewhere.
/// Variables are indexed row-major over the free positions.
class Chart {
public:
    explicit Chart(Permutation u);

    const Permutation& u() const { return u_; }
    std::size_t n() const { return u_.size(); }
    const ContextPtr& context() const { return context_; }
    const std::vector<Position>& free_positions() const { return free_; }
    /// Variable index of a free position, or nullopt.
    std::optional<std::size_t> variable_at(std::size_t i, std::size_t j) const;
    /// Positions below the 1 in their column (i > u(j)).
    std::vector<Position> d_up() const;
    /// Positions above the 1 in their column (i < u(j)).
    std::vector<Position> d_down() const;

private:
    Permutation u_;
    ContextPtr context_;
    std::vector<Position> free_;
    std::vector<int> index_;  // n*n, -1 when not free
};

/// Variable name for position (i, j): `z42` for n <= 9, `z10_3` beyond.
std::string chart_variable_name(std::size_t n, std::size_t i, std::size_t j, const char* stem = "z");

/// n x n matrix with polynomial entries sharing one context.
class ChartMatrix {
public:
    ChartMatrix() = default;
    ChartMatrix(std::size_t n, ContextPtr context);

    std::size_t n() const { return n_; }
    const ContextPtr& context() const { return context_; }
    Polynomial& operator()(std::size_t i, std::size_t j) { return e_[(i - 1) * n_ + (j - 1)]; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return e_[(i - 1) * n_ + (j - 1)]; }
    bool operator==(const ChartMatrix& other) const { return n_ == other.n_ && e_ == other.e_; }

    /// Numeric specialization at a full assignment of the context variables.
    RationalMatrix evaluate(const std::vector<Rational>& point) const;

private:
    std::size_t n_ = 0;
    ContextPtr context_;
    std::vector<Polynomial> e_;
};

ChartMatrix generic_matrix(const Chart& chart);

enum class RankConditions {
    /// Every non-vacuous condition.
    All,
    /// Drops conditions implied by a neighbouring condition through Laplace
    /// expansion; generates the same ideal.
    Essential,
};

struct RankCondition {
    std::size_t i;
    std::size_t j;
    int rank;
};

/// Non-vacuous conditions rank(rows i..n, cols 1..j) <= r_w(i, j).
std::vector<RankCondition> schubert_conditions(const Permutation& w, RankConditions mode = RankConditions::All);
/// Non-vacuous conditions rank(rows 1..i, cols 1..j) <= r'_v(i, j).
std::vector<RankCondition> opposite_conditions(const Permutation& v, RankConditions mode = RankConditions::All);

/// Minors for Schubert conditions of w evaluated on an arbitrary matrix.
IdealGens schubert_ideal_on(const ChartMatrix& m, const Permutation& w, RankConditions mode = RankConditions::All);
IdealGens opposite_ideal_on(const ChartMatrix& m, const Permutation& v, RankConditions mode = RankConditions::All);

IdealGens schubert_ideal_in_chart(const Permutation& w, const Permutation& u, RankConditions mode = RankConditions::All);
IdealGens opposite_ideal_in_chart(const Permutation& v, const Permutation& u, RankConditions mode = RankConditions::All);
IdealGens richardson_ideal_in_chart(const Permutation& v, const Permutation& w, const Permutation& u,
                                    RankConditions mode = RankConditions::All);

struct CellPair {
    Permutation sigma;  // Schubert cell
    Permutation tau;    // opposite Schubert cell
};

/// Bruhat and opposite Bruhat cells of xB. Throws on singular input.
CellPair identify_cells(const RationalMatrix& x);

std::vector<Permutation> fixed_points_of_richardson(const Permutation& v, const Permutation& w);

/// Normalizes xB into the standard form of chart u by column operations from
/// B; nullopt when xB is not in the chart.
std::optional<RationalMatrix> to_chart_form(const RationalMatrix& x, const Permutation& u);
/// Values of the chart variables for a matrix already in chart-u form.
std::vector<Rational> chart_coordinates(const Chart& chart, const RationalMatrix& x);

/// A rational point of the open stratum X°_sigma ∩ X°^tau, in chart-sigma
/// standard form, or nullopt after a bounded number of failed attempts.
/// Throws when tau is not below sigma.
std::optional<RationalMatrix> sample_richardson_point(const Permutation& tau, const Permutation& sigma,
                                                      std::uint64_t seed);

/// Reduced word i_1..i_l with w = s_{i_1} ... s_{i_l}.
std::vector<std::size_t> reduced_word(const Permutation& w);

}  // namespace richardson
