#pragma once

#include "richardson/hilbert.hpp"
#include "richardson/permutation.hpp"

namespace richardson {

struct KLPolynomial {
    Permutation v;
    Permutation w;
    IntPoly coefficients;
};

/// Kazhdan-Lusztig polynomial P_{v,w}(q), via the descending recursion on
/// l(w) with the leftmost left descent of w. Memoized process-wide.
KLPolynomial kl_polynomial(const Permutation& v, const Permutation& w);

/// mu(v, w): coefficient of q^((l(w)-l(v)-1)/2) in P_{v,w}, zero when the
/// length difference is even or v is not below w.
Integer kl_mu(const Permutation& v, const Permutation& w);

}  // namespace richardson
