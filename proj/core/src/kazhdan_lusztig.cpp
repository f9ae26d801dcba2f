#include "richardson/kazhdan_lusztig.hpp"

#include <stdexcept>

#include "richardson/concurrency.hpp"

namespace richardson {

namespace {

MemoMap<std::pair<Permutation, Permutation>, IntPoly>& kl_cache() {
    static MemoMap<std::pair<Permutation, Permutation>, IntPoly> table;
    return table;
}

IntPoly kl(const Permutation& x, const Permutation& w);

IntPoly compute(const Permutation& x, const Permutation& w) {
    if (!bruhat_leq(x, w)) return {};
    if (x == w) return IntPoly{1};
    std::size_t s = 1;
    while (!w.has_left_descent(s)) ++s;
    const Permutation v = w.left_simple(s);  // sw < w
    const Permutation sx = x.left_simple(s);
    const bool c = x.has_left_descent(s);  // sx < x

    IntPoly result = IntPoly::monomial(c ? 0 : 1) * kl(sx, v) + IntPoly::monomial(c ? 1 : 0) * kl(x, v);
    const std::size_t lw = length(w);
    for (const Permutation& z : bruhat_interval(x, v)) {
        if (z == v || !z.has_left_descent(s)) continue;
        Integer m = kl_mu(z, v);
        if (m == 0) continue;
        std::size_t shift = (lw - length(z)) / 2;
        result -= IntPoly::monomial(shift, m) * kl(x, z);
    }
    return result;
}

IntPoly kl(const Permutation& x, const Permutation& w) {
    return kl_cache().get_or_compute({x, w}, [&] { return compute(x, w); });
}

}  // namespace

KLPolynomial kl_polynomial(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw std::invalid_argument("kl_polynomial: size mismatch");
    return {v, w, kl(v, w)};
}

Integer kl_mu(const Permutation& v, const Permutation& w) {
    std::size_t lv = length(v), lw = length(w);
    if (lw <= lv || (lw - lv) % 2 == 0) return 0;
    return kl(v, w).coefficient((lw - lv - 1) / 2);
}

}  // namespace richardson
