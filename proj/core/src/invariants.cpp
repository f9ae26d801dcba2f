#include "richardson/invariants.hpp"

#include <mutex>

#include "richardson/tangent_cone.hpp"

namespace richardson {

namespace {

struct OracleState {
    std::mutex mutex;
    bool enabled = false;
    unsigned degree = 6;
    OracleTally tally;
};

OracleState& oracle_state() {
    static OracleState state;
    return state;
}

MemoMap<std::string, LocalInvariants>& invariant_memo() {
    static MemoMap<std::string, LocalInvariants> memo;
    return memo;
}

void require_on_variety(const IdealGens& ideal, const std::vector<Rational>& p) {
    if (p.size() != ideal.num_vars()) throw PointOffVariety("point has the wrong number of coordinates");
    for (const auto& g : ideal.generators())
        if (evaluate(g, p) != 0) throw PointOffVariety("generator " + g.to_string() + " does not vanish at the point");
}

bool all_zero(const std::vector<Rational>& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

std::size_t linear_rank_at_origin(const IdealGens& ideal) {
    const std::size_t nv = ideal.num_vars();
    if (ideal.empty() || nv == 0) return 0;
    RationalMatrix jac(ideal.generators().size(), nv);
    for (std::size_t r = 0; r < ideal.generators().size(); ++r)
        for (const auto& t : ideal.generators()[r].terms())
            if (t.monomial.degree() == 1)
                for (std::size_t k = 0; k < nv; ++k)
                    if (t.monomial.exponent(k) == 1) jac(r + 1, k + 1) = t.coefficient;
    return jac.rank();
}

// Variable that occurs in f only as a bare linear term, preferring the
// highest index; nv when there is none.
std::size_t isolated_linear_variable(const Polynomial& f, std::size_t nv) {
    std::uint64_t linear = 0, other = 0;
    for (const auto& t : f.terms()) {
        if (t.monomial.degree() == 1)
            linear |= t.monomial.support();
        else
            other |= t.monomial.support();
    }
    std::uint64_t candidates = linear & ~other;
    for (std::size_t k = nv; k-- > 0;)
        if (candidates & (std::uint64_t{1} << k)) return k;
    return nv;
}

void record_oracle(const IdealGens& reduced, const LocalInvariants& inv) {
    auto& state = oracle_state();
    unsigned degree;
    {
        std::lock_guard lock(state.mutex);
        if (!state.enabled) return;
        degree = state.degree;
    }
    std::string discrepancy = oracle_discrepancy(reduced, inv, degree);
    bool plateau = static_cast<int>(degree) >= inv.h_polynomial.degree();
    bool plateau_bad = plateau && discrepancy.find("multiplicity") != std::string::npos;
    std::lock_guard lock(state.mutex);
    ++state.tally.checked;
    if (plateau) {
        ++state.tally.plateau_checked;
        if (plateau_bad) ++state.tally.plateau_mismatches;
    } else {
        ++state.tally.plateau_insufficient_degree;
    }
    if (!discrepancy.empty()) {
        ++state.tally.mismatches;
        state.tally.mismatch_details.push_back(reduced.key() + ": " + discrepancy);
    }
}

std::string invariant_key(const char* kind, const Permutation& a, const Permutation& b, const Permutation& c) {
    return std::string(kind) + ":" + a.to_string() + ":" + b.to_string() + ":" + c.to_string();
}

}  // namespace

bool LocalInvariants::consistent() const {
    bool trivial = multiplicity == 1 && h_polynomial == IntPoly{1};
    return is_smooth == trivial && h_polynomial.at_one() == multiplicity;
}

IdealGens localize(const IdealGens& ideal, const std::vector<Rational>& p) {
    require_on_variety(ideal, p);
    if (all_zero(p)) return ideal;
    IdealGens out(ideal.context());
    for (const auto& g : ideal.generators()) out.add(translate(g, p));
    return out;
}

std::size_t tangent_dim_at(const IdealGens& ideal, const std::vector<Rational>& p) {
    return ideal.num_vars() - linear_rank_at_origin(localize(ideal, p));
}

IdealGens eliminate_linear_variables(const IdealGens& ideal) {
    const std::size_t nv = ideal.num_vars();
    std::vector<Polynomial> gens = ideal.generators();
    std::vector<bool> eliminated(nv, false);
    for (;;) {
        std::size_t best = gens.size(), var = nv;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            std::size_t k = isolated_linear_variable(gens[g], nv);
            if (k == nv) continue;
            if (best == gens.size() || gens[g].size() < gens[best].size()) best = g, var = k;
        }
        if (best == gens.size()) break;
        check_deadline();
        const Polynomial& g = gens[best];
        Rational c = g.coefficient(Monomial::variable(var));
        Polynomial z = Polynomial::variable(ideal.context(), var);
        Polynomial image = z - g * Rational(1 / c);
        Substitution subst;
        for (std::size_t k = 0; k < nv; ++k)
            subst.emplace(k, k == var ? image : Polynomial::variable(ideal.context(), k));
        std::vector<Polynomial> next;
        for (std::size_t h = 0; h < gens.size(); ++h) {
            if (h == best) continue;
            Polynomial r = gens[h].uses_variable(var) ? substitute(gens[h], subst).with_context(ideal.context()) : gens[h];
            if (!r.is_zero()) next.push_back(std::move(r));
        }
        gens = std::move(next);
        eliminated[var] = true;
    }

    std::vector<std::string> names;
    std::vector<Polynomial> images;
    for (std::size_t k = 0; k < nv; ++k)
        if (!eliminated[k]) names.push_back(ideal.context()->name(k));
    ContextPtr compact = make_context(names);
    for (std::size_t k = 0, next = 0; k < nv; ++k)
        images.push_back(eliminated[k] ? Polynomial(compact) : Polynomial::variable(compact, next++));
    IdealGens out(compact);
    for (const auto& g : gens) out.add(substitute(g, images, compact));
    return out;
}

LocalInvariants local_invariants_at(const IdealGens& ideal, const std::vector<Rational>& p) {
    IdealGens localized = localize(ideal, p);
    LocalInvariants inv;
    inv.tangent_dim = ideal.num_vars() - linear_rank_at_origin(localized);
    IdealGens reduced = eliminate_linear_variables(localized);
    if (reduced.empty()) {
        inv.dimension = reduced.num_vars();
    } else {
        inv.dimension = krull_dimension(reduced);
        HilbertData cone = hilbert_numerator(tangent_cone(reduced));
        if (cone.dimension != inv.dimension)
            throw InvariantError("tangent cone dimension " + std::to_string(cone.dimension) +
                                 " differs from Krull dimension " + std::to_string(inv.dimension));
        inv.h_polynomial = cone.reduced_numerator;
        inv.multiplicity = inv.h_polynomial.at_one();
    }
    inv.is_smooth = inv.tangent_dim == inv.dimension;
    record_oracle(reduced, inv);
    return inv;
}

void set_oracle_checking(bool enabled, unsigned degree_bound) {
    auto& state = oracle_state();
    std::lock_guard lock(state.mutex);
    state.enabled = enabled;
    state.degree = degree_bound;
}

OracleTally oracle_tally() {
    auto& state = oracle_state();
    std::lock_guard lock(state.mutex);
    return state.tally;
}

void reset_oracle_tally() {
    auto& state = oracle_state();
    std::lock_guard lock(state.mutex);
    state.tally = OracleTally{};
}

std::string oracle_discrepancy(const IdealGens& localized, const LocalInvariants& inv, unsigned degree_bound) {
    std::vector<Integer> cumulative = local_hilbert_oracle(localized, degree_bound);
    std::vector<Integer> observed = first_differences(cumulative);
    HilbertData data;
    data.numerator = inv.h_polynomial;
    data.num_vars = inv.dimension;
    std::vector<Integer> expected = hilbert_function(data, degree_bound);
    std::string out;
    if (observed != expected) {
        out = "hilbert function [";
        for (std::size_t d = 0; d < observed.size(); ++d) out += (d ? "," : "") + observed[d].get_str();
        out += "] vs [";
        for (std::size_t d = 0; d < expected.size(); ++d) out += (d ? "," : "") + expected[d].get_str();
        out += "]";
    }
    if (static_cast<int>(degree_bound) >= inv.h_polynomial.degree()) {
        // Apply (1 - q)^dimension to the cumulative sequence.
        std::vector<Integer> s = cumulative;
        for (std::size_t k = 0; k < inv.dimension; ++k)
            for (std::size_t d = s.size(); d-- > 1;) s[d] -= s[d - 1];
        if (s.back() != inv.multiplicity) {
            if (!out.empty()) out += "; ";
            out += "multiplicity " + s.back().get_str() + " vs " + inv.multiplicity.get_str();
        }
    }
    return out;
}

LocalInvariants schubert_invariants(const Permutation& w, const Permutation& sigma) {
    if (!bruhat_leq(sigma, w)) throw PointOffVariety("fixed point " + sigma.to_string() + " is not in X_" + w.to_string());
    return invariant_memo().get_or_compute(invariant_key("s", w, w, sigma), [&] {
        std::vector<Rational> origin(Chart(sigma).free_positions().size());
        return local_invariants_at(schubert_ideal_in_chart(w, sigma), origin);
    });
}

LocalInvariants opposite_invariants(const Permutation& v, const Permutation& tau) {
    if (!bruhat_leq(v, tau)) throw PointOffVariety("fixed point " + tau.to_string() + " is not in X^" + v.to_string());
    return invariant_memo().get_or_compute(invariant_key("o", v, v, tau), [&] {
        std::vector<Rational> origin(Chart(tau).free_positions().size());
        return local_invariants_at(opposite_ideal_in_chart(v, tau), origin);
    });
}

LocalInvariants richardson_invariants(const Permutation& v, const Permutation& w, const Permutation& sigma) {
    if (!bruhat_leq(v, sigma) || !bruhat_leq(sigma, w))
        throw PointOffVariety("fixed point " + sigma.to_string() + " is not in the Richardson variety");
    return invariant_memo().get_or_compute(invariant_key("r", v, w, sigma), [&] {
        std::vector<Rational> origin(Chart(sigma).free_positions().size());
        return local_invariants_at(richardson_ideal_in_chart(v, w, sigma), origin);
    });
}

void clear_invariant_cache() { invariant_memo().clear(); }

PointInvariants richardson_invariants_at_point(const Permutation& v, const Permutation& w, const Permutation& u,
                                               const RationalMatrix& x) {
    Chart chart(u);
    auto normal = to_chart_form(x, u);
    if (!normal) throw PointOffVariety("point is not in chart " + u.to_string());
    IdealGens ideal = richardson_ideal_in_chart(v, w, u);
    LocalInvariants inv = local_invariants_at(ideal, chart_coordinates(chart, *normal));
    return {inv, identify_cells(*normal)};
}

LocalInvariants parabolic_invariants(const Permutation& v, const Permutation& w, const Permutation& sigma,
                                     const ReflectionSet& J) {
    const Permutation vmin = coset_reps(v, J).min_rep;
    const Permutation wmax = coset_reps(w, J).max_rep;
    const Permutation coset = coset_reps(sigma, J).min_rep;
    const std::size_t fiber = longest_parabolic_length(sigma.size(), J);
    for (const auto& s : bruhat_interval(vmin, wmax)) {
        if (coset_reps(s, J).min_rep != coset) continue;
        LocalInvariants inv = richardson_invariants(vmin, wmax, s);
        inv.dimension -= fiber;
        inv.tangent_dim -= fiber;
        return inv;
    }
    throw PointOffVariety("coset of " + sigma.to_string() + " misses the parabolic Richardson variety");
}

}  // namespace richardson
