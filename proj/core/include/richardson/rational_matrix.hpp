#pragma once

#include <cstddef>
#include <vector>

#include "richardson/monomial.hpp"
#include "richardson/permutation.hpp"

namespace richardson {

/// Dense matrix over Q, indexed from 1 like the flag-variety conventions.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    /// 1 at (w(k), k).
    static RationalMatrix permutation(const Permutation& w);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[(i - 1) * cols_ + (j - 1)]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[(i - 1) * cols_ + (j - 1)]; }

    /// Rows r0..r1 and columns c0..c1, inclusive.
    RationalMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
    std::size_t rank() const;
    bool operator==(const RationalMatrix& o) const = default;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

}  // namespace richardson
