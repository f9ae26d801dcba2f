#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace richardson {

/// Exact rational coefficient. gmpxx keeps values canonical after every
/// arithmetic operation; values built from strings go through `make_rational`.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Upper bound on the number of variables in one context. Charts of S_9 use
/// 36 variables; the tangent-cone homogenization adds one more.
inline constexpr std::size_t kMaxVariables = 40;

class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Names of the variables of a polynomial ring. Variables are interned as
/// indices 0..size()-1; index 0 is the most significant variable in the
/// default variable priority.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of `name`, or size() when absent.
    std::size_t find(const std::string& name) const;

    bool operator==(const VarContext& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names);
bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Exponent vector of a monomial. Unused slots are zero, so a monomial
/// does not need to know the size of its context.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(std::size_t index, unsigned power = 1);

    unsigned exponent(std::size_t index) const { return exps_[index]; }
    unsigned degree() const { return degree_; }
    std::uint64_t support() const { return support_; }
    bool is_one() const { return degree_ == 0; }

    void set_exponent(std::size_t index, unsigned power);

    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

    /// Exact quotient; requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const;
    Monomial operator*(const Monomial& other) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const {
        return degree_ == other.degree_ && exps_ == other.exps_;
    }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    std::size_t hash() const;

private:
    std::array<std::uint16_t, kMaxVariables> exps_{};
    std::uint32_t degree_ = 0;
    std::uint64_t support_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Enumerate all monomials of exactly `degree` in the first `num_vars` variables.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

}  // namespace richardson
