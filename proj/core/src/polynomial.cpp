#include "richardson/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace richardson {

// ---------------------------------------------------------------------------
// Rational / context / monomial

Rational make_rational(const std::string& text) {
    Rational q(text, 10);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVariables)
        throw std::invalid_argument("too many variables: " + std::to_string(names_.size()));
}

std::size_t VarContext::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return static_cast<std::size_t>(it - names_.begin());
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const VarContext>(std::move(names));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
    Monomial m;
    m.set_exponent(index, power);
    return m;
}

void Monomial::set_exponent(std::size_t index, unsigned power) {
    if (index >= kMaxVariables) throw std::out_of_range("variable index out of range");
    if (power > 0xffffu) throw std::overflow_error("exponent overflow");
    degree_ = degree_ - exps_[index] + power;
    exps_[index] = static_cast<std::uint16_t>(power);
    if (power)
        support_ |= (std::uint64_t{1} << index);
    else
        support_ &= ~(std::uint64_t{1} << index);
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    if ((support_ & ~other.support_) != 0) return false;
    for (std::size_t v = 0; v < kMaxVariables; ++v)
        if (exps_[v] > other.exps_[v]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    Monomial q;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
        if (divisor.exps_[v] > exps_[v]) throw std::domain_error("monomial division is not exact");
        q.exps_[v] = static_cast<std::uint16_t>(exps_[v] - divisor.exps_[v]);
        if (q.exps_[v]) q.support_ |= (std::uint64_t{1} << v);
    }
    q.degree_ = degree_ - divisor.degree_;
    return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial p;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
        unsigned e = unsigned(exps_[v]) + other.exps_[v];
        if (e > 0xffffu) throw std::overflow_error("exponent overflow");
        p.exps_[v] = static_cast<std::uint16_t>(e);
    }
    p.degree_ = degree_ + other.degree_;
    p.support_ = support_ | other.support_;
    return p;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
        m.exps_[v] = std::max(a.exps_[v], b.exps_[v]);
        m.degree_ += m.exps_[v];
    }
    m.support_ = a.support_ | b.support_;
    return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
        m.exps_[v] = std::min(a.exps_[v], b.exps_[v]);
        m.degree_ += m.exps_[v];
    }
    m.support_ = a.support_ & b.support_;
    return m;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
        h ^= exps_[v];
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
    std::vector<Monomial> out;
    if (num_vars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Monomial current;
    // Distribute `remaining` over variables v..num_vars-1.
    auto rec = [&](auto&& self, std::size_t v, unsigned remaining) -> void {
        if (v + 1 == num_vars) {
            current.set_exponent(v, remaining);
            out.push_back(current);
            current.set_exponent(v, 0);
            return;
        }
        for (unsigned e = remaining + 1; e-- > 0;) {
            current.set_exponent(v, e);
            self(self, v + 1, remaining - e);
        }
        current.set_exponent(v, 0);
    };
    rec(rec, 0, degree);
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

// Storage order: deglex, natural priority, descending.
bool storage_greater(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    for (std::size_t v = 0; v < kMaxVariables; ++v)
        if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v);
    return false;
}

ContextPtr merge_context(const ContextPtr& a, const ContextPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_context(a, b)) throw ContextMismatch("polynomials live in different variable contexts");
    return a;
}

}  // namespace

Polynomial::Polynomial(ContextPtr context, Rational constant) : context_(std::move(context)) {
    constant.canonicalize();
    if (constant != 0) terms_.push_back({Monomial{}, std::move(constant)});
}

Polynomial Polynomial::variable(ContextPtr context, std::size_t index) {
    if (!context || index >= context->size()) throw std::out_of_range("variable index out of range");
    return monomial(std::move(context), Monomial::variable(index));
}

Polynomial Polynomial::monomial(ContextPtr context, Monomial m, Rational coefficient) {
    Polynomial p(std::move(context));
    coefficient.canonicalize();
    if (coefficient != 0) p.terms_.push_back({m, std::move(coefficient)});
    return p;
}

Polynomial Polynomial::from_terms(ContextPtr context, std::vector<Term> terms) {
    Polynomial p(std::move(context));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return storage_greater(a.monomial, b.monomial); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().monomial == t.monomial)
            merged.back().coefficient += t.coefficient;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coefficient == 0; });
    terms_ = std::move(merged);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
    return 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.monomial == m) return t.coefficient;
    return 0;
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

int Polynomial::low_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.back().monomial.degree());
}

bool Polynomial::is_homogeneous() const {
    return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

std::uint64_t Polynomial::support() const {
    std::uint64_t s = 0;
    for (const auto& t : terms_) s |= t.monomial.support();
    return s;
}

bool Polynomial::uses_variable(std::size_t index) const {
    return (support() >> index) & 1u;
}

unsigned Polynomial::degree_in(std::size_t index) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(index));
    return d;
}

Polynomial Polynomial::with_context(ContextPtr context) const {
    if (context_ && context && context_->size() != context->size())
        throw ContextMismatch("context size mismatch");
    Polynomial p = *this;
    p.context_ = std::move(context);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    context_ = merge_context(context_, other.context_);
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = other.terms_.begin(), be = other.terms_.end();
    while (a != ae && b != be) {
        if (storage_greater(a->monomial, b->monomial)) {
            out.push_back(std::move(*a++));
        } else if (storage_greater(b->monomial, a->monomial)) {
            out.push_back(*b++);
        } else {
            Rational c = a->coefficient + b->coefficient;
            if (c != 0) out.push_back({a->monomial, std::move(c)});
            ++a;
            ++b;
        }
    }
    for (; a != ae; ++a) out.push_back(std::move(*a));
    for (; b != be; ++b) out.push_back(*b);
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p(merge_context(a.context_, b.context_));
    if (a.terms_.empty() || b.terms_.empty()) return p;
    p.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) p.terms_.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    p.normalize();
    return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coefficient *= scalar;
    return *this;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    if (!terms_.empty() && !same_context(context_, other.context_)) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].monomial != other.terms_[i].monomial || terms_[i].coefficient != other.terms_[i].coefficient)
            return false;
    return true;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(context_, Rational(1));
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

bool canonical_text_before(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t v = 0; v < kMaxVariables; ++v)
        if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v);
    return false;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const Term* x, const Term* y) { return canonical_text_before(x->monomial, y->monomial); });
    std::ostringstream out;
    bool first = true;
    for (const Term* t : order) {
        Rational c = t->coefficient;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < kMaxVariables; ++v) {
            unsigned e = t->monomial.exponent(v);
            if (!e) continue;
            if (!mono.empty()) mono += '*';
            mono += context_ ? context_->name(v) : ("x" + std::to_string(v));
            if (e > 1) mono += '^' + std::to_string(e);
        }
        if (mono.empty())
            out << richardson::to_string(c);
        else if (c == 1)
            out << mono;
        else
            out << richardson::to_string(c) << '*' << mono;
    }
    return out.str();
}

Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial& b) {
    if (a.context() && b.context() && !same_context(a.context(), b.context()))
        throw ContextMismatch("poly_arith: mismatched variable contexts");
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    }
    return {};
}

// ---------------------------------------------------------------------------
// Substitution and evaluation

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, ContextPtr target) {
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial(target, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    std::vector<Term> acc;
    for (const auto& t : f.terms()) {
        Polynomial prod(target, t.coefficient);
        for (std::size_t v = 0; v < kMaxVariables && !prod.is_zero(); ++v) {
            unsigned e = t.monomial.exponent(v);
            if (!e) continue;
            if (v >= images.size()) throw std::invalid_argument("substitute: missing image for variable " + std::to_string(v));
            prod *= power_of(v, e);
        }
        for (const auto& s : prod.terms()) acc.push_back(s);
    }
    ContextPtr ctx = target;
    for (const auto& img : images)
        if (!ctx && img.context()) ctx = img.context();
    return Polynomial::from_terms(ctx, std::move(acc));
}

Polynomial substitute(const Polynomial& f, const Substitution& images) {
    std::uint64_t s = f.support();
    std::size_t top = 0;
    ContextPtr target;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
        if (!((s >> v) & 1u)) continue;
        auto it = images.find(v);
        if (it == images.end()) {
            std::string name = f.context() ? f.context()->name(v) : std::to_string(v);
            throw std::invalid_argument("substitute: missing image for variable " + name);
        }
        top = v + 1;
    }
    for (const auto& [v, img] : images)
        if (img.context()) target = merge_context(target, img.context());
    std::vector<Polynomial> dense(top);
    for (std::size_t v = 0; v < top; ++v) {
        auto it = images.find(v);
        if (it != images.end()) dense[v] = it->second;
    }
    return substitute(f, dense, target);
}

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
    Rational total = 0;
    for (const auto& t : f.terms()) {
        Rational value = t.coefficient;
        for (std::size_t v = 0; v < kMaxVariables; ++v) {
            unsigned e = t.monomial.exponent(v);
            if (!e) continue;
            if (v >= point.size()) throw std::invalid_argument("evaluate: missing value for variable " + std::to_string(v));
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), point[v].get_num_mpz_t(), e);
            mpz_pow_ui(p.get_den_mpz_t(), point[v].get_den_mpz_t(), e);
            value *= p;
        }
        total += value;
    }
    return total;
}

Rational evaluate(const Polynomial& f, const PointMap& point) {
    std::uint64_t s = f.support();
    std::vector<Rational> dense;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
        if (!((s >> v) & 1u)) continue;
        auto it = point.find(v);
        if (it == point.end()) {
            std::string name = f.context() ? f.context()->name(v) : std::to_string(v);
            throw std::invalid_argument("evaluate: missing value for variable " + name);
        }
        if (dense.size() <= v) dense.resize(v + 1);
        dense[v] = it->second;
    }
    return evaluate(f, dense);
}

Polynomial translate(const Polynomial& f, const std::vector<Rational>& center) {
    if (f.is_constant()) return f;
    std::vector<Polynomial> images;
    std::uint64_t s = f.support();
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
        if (!((s >> v) & 1u)) continue;
        if (v >= center.size()) throw std::invalid_argument("translate: missing center for variable " + std::to_string(v));
    }
    images.reserve(center.size());
    for (std::size_t v = 0; v < center.size(); ++v) {
        if (f.context() && v >= f.context()->size()) break;
        images.push_back(Polynomial::variable(f.context(), v) + Polynomial(f.context(), center[v]));
    }
    return substitute(f, images, f.context());
}

Polynomial translate(const Polynomial& f, const PointMap& center) {
    std::uint64_t s = f.support();
    std::vector<Rational> dense;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
        if (!((s >> v) & 1u)) continue;
        auto it = center.find(v);
        if (it == center.end()) {
            std::string name = f.context() ? f.context()->name(v) : std::to_string(v);
            throw std::invalid_argument("translate: missing center for variable " + name);
        }
    }
    for (const auto& [v, c] : center) {
        if (dense.size() <= v) dense.resize(v + 1);
        dense[v] = c;
    }
    return translate(f, dense);
}

Polynomial homogeneous_component(const Polynomial& f, unsigned degree) {
    std::vector<Term> keep;
    for (const auto& t : f.terms())
        if (t.monomial.degree() == degree) keep.push_back(t);
    return Polynomial::from_terms(f.context(), std::move(keep));
}

Polynomial lowest_degree_form(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("lowest_degree_form: zero polynomial");
    return homogeneous_component(f, static_cast<unsigned>(f.low_degree()));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(const std::string& text, const ContextPtr& ctx) : s_(text), ctx_(ctx) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse_polynomial: " + what + " at offset " + std::to_string(pos_) +
                                    " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }
    Polynomial term() {
        Polynomial p = unary();
        for (;;) {
            if (accept('*'))
                p *= unary();
            else if (starts_factor())
                p *= unary();
            else
                return p;
        }
    }
    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }
    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return base;
    }
    Polynomial primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string lit = s_.substr(start, pos_ - start);
            std::size_t save = pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                std::size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (dstart == pos_) fail("expected denominator");
                lit += "/" + s_.substr(dstart, pos_ - dstart);
            } else {
                pos_ = save;
            }
            return Polynomial(ctx_, make_rational(lit));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (!ctx_) fail("no variable context for '" + name + "'");
            std::size_t idx = ctx_->find(name);
            if (idx == ctx_->size()) fail("unknown variable '" + name + "'");
            return Polynomial::variable(ctx_, idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const ContextPtr& context) {
    Polynomial p = Parser(text, context).parse();
    return p.with_context(context);
}

}  // namespace richardson
