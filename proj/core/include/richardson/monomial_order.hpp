#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "richardson/monomial.hpp"

namespace richardson {

enum class OrderKind {
    Lex,
    DegRevLex,
    DegLex,
};

/// A monomial order. `priority` lists variable indices from most to least
/// significant; an empty priority means the natural order 0, 1, 2, ...
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(OrderKind kind, std::vector<std::size_t> priority = {});

    static MonomialOrder lex(std::size_t num_vars);
    static MonomialOrder degrevlex(std::size_t num_vars);
    static MonomialOrder deglex(std::size_t num_vars);

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& priority() const { return priority_; }

    /// Negative, zero or positive as a <, =, > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Stable textual key, used for memoization.
    std::string key() const;

private:
    int compare_lex(const Monomial& a, const Monomial& b) const;
    int compare_revlex(const Monomial& a, const Monomial& b) const;

    OrderKind kind_ = OrderKind::DegRevLex;
    std::vector<std::size_t> priority_;
};

}  // namespace richardson
