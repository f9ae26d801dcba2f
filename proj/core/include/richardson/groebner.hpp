#pragma once

#include <string>
#include <vector>

#include "richardson/concurrency.hpp"
#include "richardson/monomial_order.hpp"
#include "richardson/polynomial.hpp"

namespace richardson {

/// Generators of an ideal. Zero generators are dropped on construction.
class IdealGens {
public:
    IdealGens() = default;
    explicit IdealGens(ContextPtr context, std::vector<Polynomial> generators = {});

    const ContextPtr& context() const { return context_; }
    std::size_t num_vars() const { return context_ ? context_->size() : 0; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    bool empty() const { return generators_.empty(); }

    void add(Polynomial p);
    /// Appends the generators of `other`; contexts must agree.
    void append(const IdealGens& other);

    /// Serialized generator list; used as a memo key.
    std::string key() const;

private:
    ContextPtr context_;
    std::vector<Polynomial> generators_;
};

/// Reduced Groebner basis: monic, auto-reduced, sorted by ascending leading
/// monomial.
struct GroebnerBasis {
    ContextPtr context;
    MonomialOrder order;
    std::vector<Polynomial> basis;
    /// Leading monomial of basis[i] under `order`.
    std::vector<Monomial> leading;

    bool is_unit() const;
};

/// Leading term of f under the order (f nonzero).
Term leading_term(const Polynomial& f, const MonomialOrder& order);

GroebnerBasis buchberger(const IdealGens& ideal, const MonomialOrder& order);
/// Memoized buchberger over a process-wide cache keyed by (generators, order).
GroebnerBasis cached_buchberger(const IdealGens& ideal, const MonomialOrder& order);
void clear_groebner_cache();
std::size_t groebner_cache_size();

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_equal(const IdealGens& a, const IdealGens& b);
bool contains_one(const IdealGens& ideal);
bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f);

/// Krull dimension of k[x]/I via maximal independent sets modulo the
/// degrevlex leading-term ideal. Throws on the unit ideal.
std::size_t krull_dimension(const IdealGens& ideal);
std::size_t dimension_of_monomial_ideal(const std::vector<Monomial>& generators, std::size_t num_vars);

/// Leading monomials of a reduced degrevlex basis of I + m^(degree+1), where
/// m is the ideal of all variables. The power of m is handled implicitly by
/// truncating every polynomial above `degree`.
std::vector<Monomial> truncated_leading_monomials(const IdealGens& ideal, unsigned degree);

}  // namespace richardson
