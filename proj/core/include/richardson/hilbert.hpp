#pragma once

#include <string>
#include <vector>

#include "richardson/groebner.hpp"

namespace richardson {

/// Dense univariate polynomial in q with integer coefficients, lowest degree
/// first. Trailing zeros are trimmed, so the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coefficients);
    explicit IntPoly(std::vector<Integer> coefficients);

    static IntPoly monomial(std::size_t degree, Integer coefficient = 1);

    const std::vector<Integer>& coefficients() const { return c_; }
    Integer coefficient(std::size_t degree) const { return degree < c_.size() ? c_[degree] : Integer(0); }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Integer at_one() const;
    bool nonnegative() const;

    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly& other) const { return c_ == other.c_; }
    bool operator!=(const IntPoly& other) const { return !(*this == other); }

    /// Quotient by (1 - q); throws std::domain_error unless exact.
    IntPoly divide_one_minus_q() const;
    /// Coefficient-wise <=.
    bool coefficientwise_leq(const IntPoly& other) const;

    /// e.g. "1 + 2*q + q^2"
    std::string to_string() const;
    Polynomial to_polynomial(const ContextPtr& q_context) const;

private:
    void trim();
    std::vector<Integer> c_;
};

/// Hilbert series data of a graded quotient k[x_1..x_n]/I:
/// series = numerator / (1-q)^num_vars = reduced_numerator / (1-q)^dimension,
/// with reduced_numerator(1) != 0.
struct HilbertData {
    IntPoly numerator;
    std::size_t num_vars = 0;
    IntPoly reduced_numerator;
    std::size_t dimension = 0;
};

/// Numerator of the Hilbert series of k[x]/M for a monomial ideal M, by
/// recursive splitting on a variable: N(M) = N(M + <x>) + q N(M : x).
IntPoly monomial_hilbert_numerator(std::vector<Monomial> generators, std::size_t num_vars);

HilbertData hilbert_from_numerator(IntPoly numerator, std::size_t num_vars);

/// Requires homogeneous generators and a proper ideal.
HilbertData hilbert_numerator(const IdealGens& ideal);

/// Coefficients of q^0..q^upto in numerator/(1-q)^num_vars.
std::vector<Integer> hilbert_function(const HilbertData& data, unsigned upto);

}  // namespace richardson
