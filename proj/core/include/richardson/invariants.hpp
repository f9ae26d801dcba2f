#pragma once

#include <string>
#include <vector>

#include "richardson/charts.hpp"
#include "richardson/hilbert.hpp"

namespace richardson {

class PointOffVariety : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when the local computations contradict each other, e.g. the
/// tangent cone has a different dimension than the variety.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct LocalInvariants {
    std::size_t dimension = 0;
    std::size_t tangent_dim = 0;
    bool is_smooth = true;
    Integer multiplicity = 1;
    IntPoly h_polynomial{1};

    /// is_smooth agrees with multiplicity 1 and H = 1.
    bool consistent() const;
    bool operator==(const LocalInvariants& other) const = default;
};

/// Translates every generator so that p becomes the origin.
IdealGens localize(const IdealGens& ideal, const std::vector<Rational>& p);

/// Number of variables minus the rank of the Jacobian of the generators at p.
std::size_t tangent_dim_at(const IdealGens& ideal, const std::vector<Rational>& p);

/// Removes generators of the form c*z + h with h free of z, substituting
/// z = -h/c elsewhere, until none is left. The quotient rings are isomorphic
/// and the origin is preserved when every generator vanishes there.
IdealGens eliminate_linear_variables(const IdealGens& ideal);

LocalInvariants local_invariants_at(const IdealGens& ideal, const std::vector<Rational>& p);

/// Comparison of every computed tangent cone against the truncated local
/// Hilbert function. Disabled by default; process-wide.
struct OracleTally {
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    /// Cases where the degree bound reached the end of the H-polynomial, so
    /// the multiplicity could be read off the oracle.
    std::size_t plateau_checked = 0;
    std::size_t plateau_mismatches = 0;
    std::size_t plateau_insufficient_degree = 0;
    std::vector<std::string> mismatch_details;
};

void set_oracle_checking(bool enabled, unsigned degree_bound = 6);
OracleTally oracle_tally();
void reset_oracle_tally();

/// Oracle comparison for one ideal at the origin; returns the mismatch
/// description, or empty when the Hilbert function matches.
std::string oracle_discrepancy(const IdealGens& localized, const LocalInvariants& inv, unsigned degree_bound);

/// Invariants of X_w at the fixed point sigma, in chart sigma. Memoized.
LocalInvariants schubert_invariants(const Permutation& w, const Permutation& sigma);
/// Invariants of X^v at the fixed point tau, in chart tau. Memoized.
LocalInvariants opposite_invariants(const Permutation& v, const Permutation& tau);
/// Invariants of X_w^v at the fixed point sigma, in chart sigma. Memoized.
LocalInvariants richardson_invariants(const Permutation& v, const Permutation& w, const Permutation& sigma);
void clear_invariant_cache();

struct PointInvariants {
    LocalInvariants invariants;
    CellPair cells;
};

/// Invariants of X_w^v at a rational point x given in chart-u standard form.
PointInvariants richardson_invariants_at_point(const Permutation& v, const Permutation& w, const Permutation& u,
                                               const RationalMatrix& x);

/// Invariants of the Richardson variety of G/P at the fixed point sigma P,
/// read off the preimage in G/B.
LocalInvariants parabolic_invariants(const Permutation& v, const Permutation& w, const Permutation& sigma,
                                     const ReflectionSet& J);

}  // namespace richardson
