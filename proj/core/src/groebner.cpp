#include "richardson/groebner.hpp"

#include <algorithm>
#include <deque>

namespace richardson {

// ---------------------------------------------------------------------------
// Deadline

namespace {
thread_local bool t_has_deadline = false;
thread_local std::chrono::steady_clock::time_point t_deadline;
thread_local unsigned t_tick = 0;
}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::steady_clock::duration budget)
    : previous_(t_deadline), had_previous_(t_has_deadline) {
    auto proposed = std::chrono::steady_clock::now() + budget;
    if (!t_has_deadline || proposed < t_deadline) t_deadline = proposed;
    t_has_deadline = true;
}

ScopedDeadline::~ScopedDeadline() {
    t_deadline = previous_;
    t_has_deadline = had_previous_;
}

void check_deadline() {
    if (!t_has_deadline) return;
    if ((++t_tick & 0xff) != 0) return;
    if (std::chrono::steady_clock::now() > t_deadline) throw Timeout();
}

// ---------------------------------------------------------------------------
// IdealGens

IdealGens::IdealGens(ContextPtr context, std::vector<Polynomial> generators) : context_(std::move(context)) {
    for (auto& g : generators) add(std::move(g));
}

void IdealGens::add(Polynomial p) {
    if (p.is_zero()) return;
    if (p.context() && !same_context(p.context(), context_))
        throw ContextMismatch("ideal generator in a different context");
    generators_.push_back(p.with_context(context_));
}

void IdealGens::append(const IdealGens& other) {
    if (!same_context(context_, other.context_)) throw ContextMismatch("appending ideals from different contexts");
    for (const auto& g : other.generators_) generators_.push_back(g);
}

std::string IdealGens::key() const {
    std::string out;
    if (context_)
        for (const auto& n : context_->names()) out += n + ",";
    out += "|";
    for (const auto& g : generators_) out += g.to_string() + ";";
    return out;
}

bool GroebnerBasis::is_unit() const {
    return basis.size() == 1 && basis.front().is_constant();
}

// ---------------------------------------------------------------------------
// Engine

namespace {

using Terms = std::vector<Term>;

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

class Engine {
public:
    Engine(const MonomialOrder& order, int truncate) : order_(order), truncate_(truncate) {}

    Terms to_terms(const Polynomial& p) const {
        Terms t;
        t.reserve(p.size());
        for (const auto& term : p.terms())
            if (truncate_ < 0 || static_cast<int>(term.monomial.degree()) <= truncate_) t.push_back(term);
        std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order_.greater(a.monomial, b.monomial); });
        return t;
    }

    void add_input(const Polynomial& p) {
        Terms t = reduce(to_terms(p));
        if (!t.empty()) insert(std::move(t));
    }

    void run() {
        while (!unit_ && (!pending_.empty() || !pairs_.empty())) {
            check_deadline();
            Terms s;
            if (!pending_.empty()) {
                s = std::move(pending_.front());
                pending_.pop_front();
            } else {
                s = spoly(select_pair());
            }
            Terms h = reduce(std::move(s));
            if (!h.empty()) insert(std::move(h));
        }
    }

    /// Reduced basis in ascending leading-monomial order.
    std::vector<Terms> reduced_basis() {
        if (unit_) return {Terms{Term{Monomial{}, Rational(1)}}};
        std::vector<std::size_t> keep = active_;
        std::vector<Terms> out;
        out.reserve(keep.size());
        for (std::size_t idx : keep) {
            Terms tail(polys_[idx].begin() + 1, polys_[idx].end());
            Terms r = reduce(std::move(tail));
            Terms g;
            g.reserve(r.size() + 1);
            g.push_back(polys_[idx].front());
            for (auto& t : r) g.push_back(std::move(t));
            out.push_back(std::move(g));
        }
        std::sort(out.begin(), out.end(),
                  [&](const Terms& a, const Terms& b) { return order_.compare(a.front().monomial, b.front().monomial) < 0; });
        return out;
    }

    /// Full reduction modulo the current active basis.
    Terms reduce(Terms p) const {
        Terms rem;
        std::size_t start = 0;
        while (start < p.size()) {
            check_deadline();
            const Term& lt = p[start];
            const Terms* divisor = nullptr;
            for (std::size_t idx : active_) {
                const Monomial& lead = polys_[idx].front().monomial;
                if (lead.divides(lt.monomial)) {
                    divisor = &polys_[idx];
                    break;
                }
            }
            if (divisor) {
                Monomial m = lt.monomial / divisor->front().monomial;
                Rational c = lt.coefficient;
                p = sub_mul(p, start + 1, c, m, *divisor);
                start = 0;
            } else {
                rem.push_back(lt);
                ++start;
            }
        }
        return rem;
    }

private:
    // a[a_start..] - c * m * b[1..]
    Terms sub_mul(const Terms& a, std::size_t a_start, const Rational& c, const Monomial& m, const Terms& b) const {
        Terms out;
        out.reserve(a.size() - a_start + b.size());
        std::size_t i = a_start, j = 1;
        Monomial bm;
        bool have_bm = false;
        auto next_b = [&]() {
            while (j < b.size()) {
                bm = b[j].monomial * m;
                if (truncate_ < 0 || static_cast<int>(bm.degree()) <= truncate_) {
                    have_bm = true;
                    return;
                }
                ++j;
            }
            have_bm = false;
        };
        next_b();
        while (i < a.size() && have_bm) {
            int cmp = order_.compare(a[i].monomial, bm);
            if (cmp > 0) {
                out.push_back(a[i++]);
            } else if (cmp < 0) {
                out.push_back({bm, -c * b[j].coefficient});
                ++j;
                next_b();
            } else {
                Rational v = a[i].coefficient - c * b[j].coefficient;
                if (v != 0) out.push_back({bm, std::move(v)});
                ++i;
                ++j;
                next_b();
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        while (have_bm) {
            out.push_back({bm, -c * b[j].coefficient});
            ++j;
            next_b();
        }
        return out;
    }

    Terms spoly(const Pair& p) const {
        const Terms& f = polys_[p.i];
        const Terms& g = polys_[p.j];
        // Both monic: S = (L/lf) f - (L/lg) g.
        Monomial mf = p.lcm / f.front().monomial;
        Monomial mg = p.lcm / g.front().monomial;
        Terms scaled;
        scaled.reserve(f.size());
        for (std::size_t k = 1; k < f.size(); ++k) {
            Monomial mono = f[k].monomial * mf;
            if (truncate_ >= 0 && static_cast<int>(mono.degree()) > truncate_) continue;
            scaled.push_back({mono, f[k].coefficient});
        }
        return sub_mul(scaled, 0, Rational(1), mg, g);
    }

    Pair select_pair() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            int cmp = order_.compare(pairs_[k].lcm, pairs_[best].lcm);
            if (cmp < 0 || (cmp == 0 && std::tie(pairs_[k].j, pairs_[k].i) < std::tie(pairs_[best].j, pairs_[best].i)))
                best = k;
        }
        Pair p = pairs_[best];
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    }

    void insert(Terms h) {
        Rational lc = h.front().coefficient;
        if (lc != 1)
            for (auto& t : h) t.coefficient /= lc;
        if (h.front().monomial.is_one()) {
            unit_ = true;
            return;
        }
        std::size_t idx = polys_.size();
        polys_.push_back(std::move(h));
        update(idx);
        if (truncate_ >= 0) enqueue_boundary(idx);
    }

    // Products m*h with deg(m*lead(h)) = truncate+1 stand in for the S-pairs
    // between h and the implicit generators of m^(truncate+1).
    void enqueue_boundary(std::size_t idx) {
        const Terms& h = polys_[idx];
        unsigned e = h.front().monomial.degree();
        bool has_lower = false;
        for (const auto& t : h)
            if (t.monomial.degree() < e) has_lower = true;
        if (!has_lower) return;
        unsigned need = static_cast<unsigned>(truncate_) + 1 - e;
        for (const Monomial& m : monomials_of_degree(num_vars_, need)) {
            Terms q;
            for (const auto& t : h) {
                Monomial mono = t.monomial * m;
                if (static_cast<int>(mono.degree()) <= truncate_) q.push_back({mono, t.coefficient});
            }
            if (!q.empty()) pending_.push_back(std::move(q));
        }
    }

    // Gebauer-Moeller update.
    void update(std::size_t h) {
        const Monomial& lh = polys_[h].front().monomial;
        std::vector<Pair> candidates;
        candidates.reserve(active_.size());
        for (std::size_t g : active_) candidates.push_back({g, h, lcm(polys_[g].front().monomial, lh)});

        std::vector<Pair> kept;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const Pair& p = candidates[k];
            bool keep = polys_[p.i].front().monomial.coprime(lh);
            if (!keep) {
                keep = true;
                for (std::size_t l = k + 1; l < candidates.size() && keep; ++l)
                    if (candidates[l].lcm.divides(p.lcm)) keep = false;
                for (std::size_t l = 0; l < kept.size() && keep; ++l)
                    if (kept[l].lcm.divides(p.lcm)) keep = false;
            }
            if (keep) kept.push_back(p);
        }
        std::erase_if(kept, [&](const Pair& p) { return polys_[p.i].front().monomial.coprime(lh); });

        std::erase_if(pairs_, [&](const Pair& p) {
            if (!lh.divides(p.lcm)) return false;
            Monomial a = lcm(polys_[p.i].front().monomial, lh);
            Monomial b = lcm(lh, polys_[p.j].front().monomial);
            return a != p.lcm && b != p.lcm;
        });
        for (auto& p : kept) pairs_.push_back(std::move(p));

        std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g].front().monomial); });
        active_.push_back(h);
    }

public:
    std::size_t num_vars_ = 0;

private:
    const MonomialOrder& order_;
    int truncate_;
    std::vector<Terms> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    std::deque<Terms> pending_;
    bool unit_ = false;
};

Polynomial from_terms(const ContextPtr& ctx, Terms t) { return Polynomial::from_terms(ctx, std::move(t)); }

GroebnerBasis run_engine(const IdealGens& ideal, const MonomialOrder& order, int truncate) {
    Engine engine(order, truncate);
    engine.num_vars_ = ideal.num_vars();
    for (const auto& g : ideal.generators()) engine.add_input(g);
    engine.run();
    GroebnerBasis gb;
    gb.context = ideal.context();
    gb.order = order;
    for (auto& t : engine.reduced_basis()) {
        gb.leading.push_back(t.front().monomial);
        gb.basis.push_back(from_terms(ideal.context(), std::move(t)));
    }
    return gb;
}

MemoMap<std::string, GroebnerBasis>& cache() {
    static MemoMap<std::string, GroebnerBasis> table;
    return table;
}

}  // namespace

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw std::invalid_argument("leading_term of zero polynomial");
    const Term* best = &f.terms().front();
    for (const auto& t : f.terms())
        if (order.greater(t.monomial, best->monomial)) best = &t;
    return *best;
}

GroebnerBasis buchberger(const IdealGens& ideal, const MonomialOrder& order) {
    return run_engine(ideal, order, -1);
}

GroebnerBasis cached_buchberger(const IdealGens& ideal, const MonomialOrder& order) {
    std::string key = order.key() + "#" + ideal.key();
    return cache().get_or_compute(key, [&] { return buchberger(ideal, order); });
}

void clear_groebner_cache() { cache().clear(); }
std::size_t groebner_cache_size() { return cache().size(); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    Term lf = leading_term(f, order);
    Term lg = leading_term(g, order);
    Monomial l = lcm(lf.monomial, lg.monomial);
    Polynomial a = Polynomial::monomial(f.context(), l / lf.monomial, Rational(1) / lf.coefficient) * f;
    Polynomial b = Polynomial::monomial(g.context(), l / lg.monomial, Rational(1) / lg.coefficient) * g;
    return a - b;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (f.context() && basis.context && !same_context(f.context(), basis.context))
        throw ContextMismatch("normal_form: mismatched contexts");
    const MonomialOrder& order = basis.order;
    // Remainder accumulates irreducible terms; `p` is reduced from the top.
    std::vector<Term> p;
    for (const auto& t : f.terms()) p.push_back(t);
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
    std::vector<Term> rem;
    while (!p.empty()) {
        check_deadline();
        Term lt = p.front();
        std::size_t k = 0;
        for (; k < basis.basis.size(); ++k)
            if (basis.leading[k].divides(lt.monomial)) break;
        if (k == basis.basis.size()) {
            rem.push_back(lt);
            p.erase(p.begin());
            continue;
        }
        const Polynomial& g = basis.basis[k];
        Rational lc = g.coefficient(basis.leading[k]);
        Polynomial sub = Polynomial::monomial(f.context(), lt.monomial / basis.leading[k], lt.coefficient / lc) * g;
        Polynomial cur = Polynomial::from_terms(f.context(), p) - sub;
        p = cur.terms();
        std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
    }
    return Polynomial::from_terms(f.context() ? f.context() : basis.context, std::move(rem));
}

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f) { return normal_form(f, basis).is_zero(); }

bool ideal_equal(const IdealGens& a, const IdealGens& b) {
    if (!same_context(a.context(), b.context())) throw ContextMismatch("ideal_equal: mismatched contexts");
    MonomialOrder order = MonomialOrder::degrevlex(a.num_vars());
    GroebnerBasis ga = cached_buchberger(a, order);
    GroebnerBasis gb = cached_buchberger(b, order);
    for (const auto& g : b.generators())
        if (!ideal_contains(ga, g)) return false;
    for (const auto& g : a.generators())
        if (!ideal_contains(gb, g)) return false;
    return true;
}

bool contains_one(const IdealGens& ideal) {
    return cached_buchberger(ideal, MonomialOrder::degrevlex(ideal.num_vars())).is_unit();
}

std::size_t dimension_of_monomial_ideal(const std::vector<Monomial>& generators, std::size_t num_vars) {
    for (const auto& g : generators)
        if (g.is_one()) throw std::domain_error("dimension of the unit ideal is undefined");
    std::vector<std::uint64_t> supports;
    for (const auto& g : generators) supports.push_back(g.support());
    std::size_t best = 0;
    // Depth-first search over variable subsets with a size bound.
    auto rec = [&](auto&& self, std::size_t v, std::uint64_t chosen, std::size_t size) -> void {
        if (size + (num_vars - v) <= best) return;
        if (v == num_vars) {
            best = size;
            return;
        }
        std::uint64_t with = chosen | (std::uint64_t{1} << v);
        bool independent = true;
        for (auto s : supports)
            if ((s & ~with) == 0) {
                independent = false;
                break;
            }
        if (independent) self(self, v + 1, with, size + 1);
        self(self, v + 1, chosen, size);
    };
    rec(rec, 0, 0, 0);
    return best;
}

std::size_t krull_dimension(const IdealGens& ideal) {
    GroebnerBasis gb = cached_buchberger(ideal, MonomialOrder::degrevlex(ideal.num_vars()));
    if (gb.is_unit()) throw std::domain_error("krull_dimension: unit ideal");
    return dimension_of_monomial_ideal(gb.leading, ideal.num_vars());
}

std::vector<Monomial> truncated_leading_monomials(const IdealGens& ideal, unsigned degree) {
    return run_engine(ideal, MonomialOrder::degrevlex(ideal.num_vars()), static_cast<int>(degree)).leading;
}

}  // namespace richardson
