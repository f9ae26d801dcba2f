#include "richardson/rational_matrix.hpp"

#include <stdexcept>

namespace richardson {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::permutation(const Permutation& w) {
    RationalMatrix m(w.size(), w.size());
    for (std::size_t k = 1; k <= w.size(); ++k) m(static_cast<std::size_t>(w(k)), k) = 1;
    return m;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    if (r1 < r0 || c1 < c0) return RationalMatrix(0, 0);
    RationalMatrix b(r1 - r0 + 1, c1 - c0 + 1);
    for (std::size_t i = r0; i <= r1; ++i)
        for (std::size_t j = c0; j <= c1; ++j) b(i - r0 + 1, j - c0 + 1) = (*this)(i, j);
    return b;
}

std::size_t RationalMatrix::rank() const {
    std::vector<Rational> a = a_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && a[pivot * cols_ + c] == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(a[pivot * cols_ + k], a[rank * cols_ + k]);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (a[r * cols_ + c] == 0) continue;
            Rational f = a[r * cols_ + c] / a[rank * cols_ + c];
            for (std::size_t k = c; k < cols_; ++k) a[r * cols_ + k] -= f * a[rank * cols_ + k];
        }
        ++rank;
    }
    return rank;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 1; i <= a.rows_; ++i)
        for (std::size_t k = 1; k <= a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 1; j <= b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    return c;
}

}  // namespace richardson
