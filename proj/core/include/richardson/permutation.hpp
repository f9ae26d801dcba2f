#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace richardson {

/// Element of S_n in one-line notation, values 1..n.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `window` is a bijection of 1..n.
    explicit Permutation(std::vector<int> window);

    static Permutation identity(std::size_t n);
    static Permutation longest(std::size_t n);
    /// Simple transposition s_i (1 <= i < n) swapping i and i+1.
    static Permutation simple(std::size_t n, std::size_t i);
    /// Parses `31542` or, for any n, comma-separated `10,3,1,...`.
    static Permutation parse(const std::string& text);

    std::size_t size() const { return window_.size(); }
    /// w(i) for 1 <= i <= n.
    int operator()(std::size_t i) const { return window_[i - 1]; }
    const std::vector<int>& window() const { return window_; }

    Permutation inverse() const;
    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    /// s_i * w: swaps the values i and i+1.
    Permutation left_simple(std::size_t i) const;
    /// w * s_i: swaps the entries in positions i and i+1.
    Permutation right_simple(std::size_t i) const;
    bool has_left_descent(std::size_t i) const;
    bool has_right_descent(std::size_t i) const { return window_[i - 1] > window_[i]; }

    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> window_;
};

/// All permutations of S_n in lexicographic order of their windows.
std::vector<Permutation> all_permutations(std::size_t n);

/// Inversion count.
std::size_t length(const Permutation& w);

/// r(i, j) for 1 <= i, j <= n, stored row-major.
class RankMatrix {
public:
    explicit RankMatrix(std::size_t n) : n_(n), r_(n * n, 0) {}
    std::size_t size() const { return n_; }
    int operator()(std::size_t i, std::size_t j) const { return r_[(i - 1) * n_ + (j - 1)]; }
    int& operator()(std::size_t i, std::size_t j) { return r_[(i - 1) * n_ + (j - 1)]; }
    bool operator==(const RankMatrix& o) const { return n_ == o.n_ && r_ == o.r_; }

private:
    std::size_t n_;
    std::vector<int> r_;
};

/// r_w(i, j) = #{k <= j : w(k) >= i}: rank of rows i..n, columns 1..j of the
/// permutation matrix with 1's at (w(k), k).
RankMatrix schubert_rank(const Permutation& w);
/// r'_v(i, j) = #{k <= j : v(k) <= i}: rank of rows 1..i, columns 1..j.
RankMatrix opposite_rank(const Permutation& v);

bool bruhat_leq(const Permutation& v, const Permutation& w);
/// Permutations sigma with v <= sigma <= w, sorted.
std::vector<Permutation> bruhat_interval(const Permutation& v, const Permutation& w);

/// Simple reflection indices J subset of {1..n-1}.
using ReflectionSet = std::set<std::size_t>;

struct CosetReps {
    Permutation min_rep;
    Permutation max_rep;
};

/// Minimal- and maximal-length elements of the coset w W_J.
CosetReps coset_reps(const Permutation& w, const ReflectionSet& J);
/// Length of the longest element of W_J.
std::size_t longest_parabolic_length(std::size_t n, const ReflectionSet& J);
ReflectionSet parse_reflection_set(const std::string& text);

/// True iff some subsequence of w is order-isomorphic to `pattern`.
bool contains_pattern(const Permutation& w, const Permutation& pattern);
/// 3412-avoiding.
bool is_covexillary(const Permutation& w);

}  // namespace richardson
