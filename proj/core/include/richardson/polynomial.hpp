#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "richardson/monomial.hpp"
#include "richardson/monomial_order.hpp"

namespace richardson {

struct Term {
    Monomial monomial;
    Rational coefficient;
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept sorted strictly descending under deglex with the natural
/// variable priority and carry nonzero coefficients, so two equal polynomials
/// have identical term vectors. A polynomial without a context is a constant
/// and combines with polynomials of any context.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(ContextPtr context, Rational constant);
    explicit Polynomial(ContextPtr context) : context_(std::move(context)) {}

    static Polynomial variable(ContextPtr context, std::size_t index);
    static Polynomial monomial(ContextPtr context, Monomial m, Rational coefficient = 1);
    /// Builds from unsorted terms with possible repeats and zero coefficients.
    static Polynomial from_terms(ContextPtr context, std::vector<Term> terms);

    const ContextPtr& context() const { return context_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    /// Maximum total degree; -1 for the zero polynomial.
    int degree() const;
    /// Minimum total degree; -1 for the zero polynomial.
    int low_degree() const;
    bool is_homogeneous() const;
    /// Bitmask of variables that occur.
    std::uint64_t support() const;
    bool uses_variable(std::size_t index) const;
    unsigned degree_in(std::size_t index) const;

    /// Same polynomial viewed in another context of equal size.
    Polynomial with_context(ContextPtr context) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial pow(unsigned exponent) const;

    /// Canonical text form, e.g. `z42 - z43*z52`.
    std::string to_string() const;

private:
    void normalize();

    ContextPtr context_;
    std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// Checked binary arithmetic; throws ContextMismatch on incompatible contexts.
Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial& b);

/// Sparse assignment of values to variable indices.
using Substitution = std::map<std::size_t, Polynomial>;
using PointMap = std::map<std::size_t, Rational>;

/// Simultaneous substitution. Every variable occurring in `f` must have an
/// image; the result lives in the images' context (or f's, if all images
/// are constants).
Polynomial substitute(const Polynomial& f, const Substitution& images);
/// Dense form: images[i] is the image of variable i.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      ContextPtr target);

Rational evaluate(const Polynomial& f, const PointMap& point);
Rational evaluate(const Polynomial& f, const std::vector<Rational>& point);

/// f(z + center). Every variable of f must be assigned.
Polynomial translate(const Polynomial& f, const PointMap& center);
Polynomial translate(const Polynomial& f, const std::vector<Rational>& center);

/// Homogeneous component of minimal total degree; throws on zero input.
Polynomial lowest_degree_form(const Polynomial& f);
/// Homogeneous component of the given degree (possibly zero).
Polynomial homogeneous_component(const Polynomial& f, unsigned degree);

/// Parses expressions such as `z22 - z24*(z42 - z52*z43) - 3/2*z23^2`.
Polynomial parse_polynomial(const std::string& text, const ContextPtr& context);

/// Canonical comparison used for text output: ascending total degree, then
/// descending lexicographic in the natural variable priority.
bool canonical_text_before(const Monomial& a, const Monomial& b);

}  // namespace richardson
