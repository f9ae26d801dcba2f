#include "richardson/monomial_order.hpp"

#include <numeric>

namespace richardson {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {}

MonomialOrder MonomialOrder::lex(std::size_t num_vars) {
    std::vector<std::size_t> p(num_vars);
    std::iota(p.begin(), p.end(), 0);
    return MonomialOrder(OrderKind::Lex, std::move(p));
}

MonomialOrder MonomialOrder::degrevlex(std::size_t num_vars) {
    std::vector<std::size_t> p(num_vars);
    std::iota(p.begin(), p.end(), 0);
    return MonomialOrder(OrderKind::DegRevLex, std::move(p));
}

MonomialOrder MonomialOrder::deglex(std::size_t num_vars) {
    std::vector<std::size_t> p(num_vars);
    std::iota(p.begin(), p.end(), 0);
    return MonomialOrder(OrderKind::DegLex, std::move(p));
}

int MonomialOrder::compare_lex(const Monomial& a, const Monomial& b) const {
    if (priority_.empty()) {
        for (std::size_t v = 0; v < kMaxVariables; ++v) {
            unsigned ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea > eb ? 1 : -1;
        }
        return 0;
    }
    for (std::size_t v : priority_) {
        unsigned ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare_revlex(const Monomial& a, const Monomial& b) const {
    // Smaller exponent in the least significant differing variable wins.
    if (priority_.empty()) {
        for (std::size_t v = kMaxVariables; v-- > 0;) {
            unsigned ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea < eb ? 1 : -1;
        }
        return 0;
    }
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
        unsigned ea = a.exponent(*it), eb = b.exponent(*it);
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case OrderKind::Lex:
        return compare_lex(a, b);
    case OrderKind::DegLex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        return compare_lex(a, b);
    case OrderKind::DegRevLex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        return compare_revlex(a, b);
    }
    return 0;
}

std::string MonomialOrder::key() const {
    std::string out;
    switch (kind_) {
    case OrderKind::Lex: out = "lex"; break;
    case OrderKind::DegLex: out = "deglex"; break;
    case OrderKind::DegRevLex: out = "degrevlex"; break;
    }
    for (std::size_t v : priority_) {
        out += ':';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace richardson
