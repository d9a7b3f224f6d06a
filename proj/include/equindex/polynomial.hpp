#pragma once

// Exact multivariate polynomial arithmetic over Q with dense exponent
// vectors, the two monomial orders used by the basis engine, and the
// expression parser/printer.

#include <map>
#include <string>
#include <vector>

#include "equindex/rational.hpp"

namespace equindex {

/// Exponent vector; its length is the ambient ring's variable count.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& a, const Monomial& b);       // a | b
Monomial monomial_quotient(const Monomial& b, const Monomial& a);  // b / a, pre: a | b
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
bool monomials_coprime(const Monomial& a, const Monomial& b);

/// GLOBAL_DEGREVLEX: larger total degree wins, ties broken reverse
/// lexicographically; 1 is the smallest monomial (a well-order).
/// LOCAL_NEGDEGREVLEX: smaller total degree wins, same tie-break; 1 is the
/// largest monomial. This is the order of the germ ring at the origin.
enum class MonomialOrder { GLOBAL_DEGREVLEX, LOCAL_NEGDEGREVLEX };

/// Strict comparison a < b under `order`. Both are total multiplicative
/// semigroup orders.
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Term {
    Monomial monomial;
    Rational coefficient;
};

/// Canonical form: no zero coefficients are ever stored, so two equal
/// polynomials compare equal as containers.
class Polynomial {
public:
    explicit Polynomial(int num_vars = 0) : nvars_(num_vars) {}

    static Polynomial constant(int num_vars, const Rational& c);
    static Polynomial variable(int num_vars, int index);
    static Polynomial from_term(Monomial m, const Rational& c);

    /// Parses the expression grammar: integer and rational literals (p/q),
    /// variable names, + - * ^, unary minus, parentheses. Implicit
    /// multiplication is a syntax error. Throws parse_error with position.
    static Polynomial parse(const std::string& text,
                            const std::vector<std::string>& variables);

    int num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    bool is_constant() const;

    /// Largest term under `order`. Pre: nonzero.
    Term leading_term(MonomialOrder order) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& other) const = default;

    /// Adds c * x^m, dropping the entry if the coefficient cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial partial_derivative(int coordinate) const;

    /// Drops every monomial with a positive exponent on a listed coordinate
    /// and re-expresses the rest in the remaining variables (in their
    /// original order). The result has num_vars() - |coordinates| variables.
    Polynomial substitute_zero(const std::vector<int>& coordinates) const;

    /// Canonical printing: terms in descending GLOBAL_DEGREVLEX order with
    /// explicit '*', so parse(to_string(p)) == p.
    std::string to_string(const std::vector<std::string>& variables) const;

private:
    int nvars_;
    std::map<Monomial, Rational> terms_;  // keyed lexicographically
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Exact determinant by cofactor expansion along the first column.
/// Pre: square, all entries in one ring.
Polynomial determinant(const PolyMatrix& m);

}  // namespace equindex
