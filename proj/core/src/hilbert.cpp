#include "richardson/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace richardson {

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    for (long c : coefficients) c_.emplace_back(c);
    trim();
}

IntPoly::IntPoly(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPoly IntPoly::monomial(std::size_t degree, Integer coefficient) {
    std::vector<Integer> c(degree + 1);
    c[degree] = std::move(coefficient);
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::at_one() const {
    Integer s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

bool IntPoly::nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c >= 0; });
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    if (c_.size() < other.c_.size()) c_.resize(other.c_.size());
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
    if (c_.size() < other.c_.size()) c_.resize(other.c_.size());
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::divide_one_minus_q() const {
    // p = (1 - q) r  <=>  r_k = sum_{i<=k} p_i, and the full sum vanishes.
    if (at_one() != 0) throw std::domain_error("polynomial is not divisible by (1 - q)");
    if (c_.empty()) return {};
    std::vector<Integer> r(c_.size() - 1);
    Integer running = 0;
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
        running += c_[k];
        r[k] = running;
    }
    return IntPoly(std::move(r));
}

bool IntPoly::coefficientwise_leq(const IntPoly& other) const {
    std::size_t n = std::max(c_.size(), other.c_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (coefficient(i) > other.coefficient(i)) return false;
    return true;
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Integer a = abs(c_[k]);
        bool negative = c_[k] < 0;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (k == 0) {
            out << a.get_str();
            continue;
        }
        if (a != 1) out << a.get_str() << '*';
        out << 'q';
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

Polynomial IntPoly::to_polynomial(const ContextPtr& q_context) const {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) terms.push_back({Monomial::variable(0, static_cast<unsigned>(k)), Rational(c_[k])});
    return Polynomial::from_terms(q_context, std::move(terms));
}

// ---------------------------------------------------------------------------

namespace {

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    gens = std::move(out);
}

IntPoly numerator_rec(std::vector<Monomial> gens, std::size_t num_vars) {
    check_deadline();
    minimalize(gens);
    if (gens.empty()) return IntPoly{1};
    for (const auto& g : gens)
        if (g.is_one()) return {};
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        IntPoly n{1};
        for (const auto& g : gens) n = n * (IntPoly{1} - IntPoly::monomial(g.degree()));
        return n;
    }
    // Pivot on the variable occurring in the most generators.
    std::size_t pivot = 0, best = 0;
    for (std::size_t v = 0; v < num_vars; ++v) {
        std::size_t count = 0;
        for (const auto& g : gens)
            if (g.exponent(v)) ++count;
        if (count > best) {
            best = count;
            pivot = v;
        }
    }
    Monomial x = Monomial::variable(pivot);
    std::vector<Monomial> sum_gens{x};
    std::vector<Monomial> colon_gens;
    for (const auto& g : gens) {
        if (!g.exponent(pivot)) sum_gens.push_back(g);
        Monomial c = g;
        if (c.exponent(pivot)) c.set_exponent(pivot, c.exponent(pivot) - 1);
        colon_gens.push_back(c);
    }
    return numerator_rec(std::move(sum_gens), num_vars) +
           IntPoly::monomial(1) * numerator_rec(std::move(colon_gens), num_vars);
}

}  // namespace

IntPoly monomial_hilbert_numerator(std::vector<Monomial> generators, std::size_t num_vars) {
    return numerator_rec(std::move(generators), num_vars);
}

HilbertData hilbert_from_numerator(IntPoly numerator, std::size_t num_vars) {
    HilbertData data;
    data.numerator = numerator;
    data.num_vars = num_vars;
    if (numerator.is_zero()) throw std::domain_error("Hilbert numerator of the unit ideal");
    std::size_t cancelled = 0;
    while (numerator.at_one() == 0) {
        numerator = numerator.divide_one_minus_q();
        ++cancelled;
    }
    if (cancelled > num_vars) throw std::logic_error("Hilbert numerator cancelled more than num_vars times");
    data.reduced_numerator = std::move(numerator);
    data.dimension = num_vars - cancelled;
    return data;
}

HilbertData hilbert_numerator(const IdealGens& ideal) {
    for (const auto& g : ideal.generators())
        if (!g.is_homogeneous()) throw std::invalid_argument("hilbert_numerator: inhomogeneous generator " + g.to_string());
    GroebnerBasis gb = cached_buchberger(ideal, MonomialOrder::degrevlex(ideal.num_vars()));
    if (gb.is_unit()) throw std::domain_error("hilbert_numerator: unit ideal");
    return hilbert_from_numerator(monomial_hilbert_numerator(gb.leading, ideal.num_vars()), ideal.num_vars());
}

std::vector<Integer> hilbert_function(const HilbertData& data, unsigned upto) {
    // Multiply the numerator by 1/(1-q) num_vars times, truncating at q^upto.
    std::vector<Integer> series(upto + 1);
    for (std::size_t k = 0; k <= upto; ++k) series[k] = data.numerator.coefficient(k);
    for (std::size_t r = 0; r < data.num_vars; ++r)
        for (std::size_t k = 1; k <= upto; ++k) series[k] += series[k - 1];
    return series;
}

}  // namespace richardson
