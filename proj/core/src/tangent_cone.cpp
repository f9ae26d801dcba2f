#include "richardson/tangent_cone.hpp"

namespace richardson {

namespace {

void require_origin(const IdealGens& ideal, const char* who) {
    for (const auto& g : ideal.generators())
        if (g.constant_term() != 0)
            throw std::invalid_argument(std::string(who) + ": generator does not vanish at the origin: " + g.to_string());
}

}  // namespace

IdealGens tangent_cone(const IdealGens& ideal) {
    require_origin(ideal, "tangent_cone");
    const std::size_t k = ideal.num_vars();
    if (k + 1 > kMaxVariables) throw std::invalid_argument("tangent_cone: too many variables for homogenization");

    bool homogeneous = true;
    for (const auto& g : ideal.generators()) homogeneous = homogeneous && g.is_homogeneous();
    if (homogeneous) return ideal;

    std::vector<std::string> names = ideal.context()->names();
    names.push_back("t__h");
    ContextPtr hctx = make_context(std::move(names));
    const std::size_t t = k;

    IdealGens homogenized(hctx);
    for (const auto& g : ideal.generators()) {
        unsigned top = static_cast<unsigned>(g.degree());
        std::vector<Term> terms;
        for (const auto& term : g.terms()) {
            Monomial m = term.monomial;
            m.set_exponent(t, top - term.monomial.degree());
            terms.push_back({m, term.coefficient});
        }
        homogenized.add(Polynomial::from_terms(hctx, std::move(terms)));
    }

    std::vector<std::size_t> priority{t};
    for (std::size_t v = 0; v < k; ++v) priority.push_back(v);
    GroebnerBasis gb = buchberger(homogenized, MonomialOrder(OrderKind::DegLex, std::move(priority)));

    IdealGens cone(ideal.context());
    for (const auto& g : gb.basis) {
        std::vector<Term> terms;
        for (const auto& term : g.terms()) {
            Monomial m = term.monomial;
            m.set_exponent(t, 0);
            terms.push_back({m, term.coefficient});
        }
        Polynomial dehomogenized = Polynomial::from_terms(ideal.context(), std::move(terms));
        if (dehomogenized.is_zero()) continue;
        cone.add(lowest_degree_form(dehomogenized));
    }
    return cone;
}

std::vector<Integer> local_hilbert_oracle(const IdealGens& ideal, unsigned max_degree) {
    require_origin(ideal, "local_hilbert_oracle");
    const std::size_t k = ideal.num_vars();
    std::vector<Integer> out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        std::vector<Monomial> leading = truncated_leading_monomials(ideal, d);
        Integer count = 0;
        for (unsigned e = 0; e <= d; ++e) {
            for (const Monomial& m : monomials_of_degree(k, e)) {
                bool standard = true;
                for (const auto& l : leading)
                    if (l.divides(m)) {
                        standard = false;
                        break;
                    }
                if (standard) ++count;
            }
        }
        out.push_back(count);
    }
    return out;
}

std::vector<Integer> first_differences(const std::vector<Integer>& cumulative) {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < cumulative.size(); ++i) out.push_back(cumulative[i] - (i ? cumulative[i - 1] : Integer(0)));
    return out;
}

}  // namespace richardson
