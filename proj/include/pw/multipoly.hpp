#pragma once

// Sparse multivariate polynomials over exact rationals.
//
// A MultiPoly is a map from exponent vectors to nonzero rational
// coefficients, over a fixed ordered list of variable names. Terms are kept
// in graded-lexicographic order, which makes printing canonical and equality
// syntactic. Values are immutable in spirit: every operation returns a new
// polynomial, so instances are safe to share across threads.

#include "pw/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace pw {

// Exponent vector; length always equals the number of variables.
using Exponents = std::vector<int>;

// Graded-lexicographic order: first by total degree, ties broken
// lexicographically on the exponent vector.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Parse failure, with a 1-based character position into the input text.
class PolyParseError : public std::invalid_argument {
public:
    PolyParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    // The zero polynomial over the given variables.
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables);

    static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
    static MultiPoly variable(std::vector<std::string> variables, const std::string& name);

    const std::vector<std::string>& variables() const { return variables_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous_of_degree(int d) const;

    // Index of a declared variable; throws std::invalid_argument otherwise.
    int variable_index(const std::string& name) const;
    bool depends_on(const std::string& name) const;

    // Coefficient of an exponent vector (zero if absent).
    Rational coefficient(const Exponents& e) const;
    // Adds c * x^e, erasing the term if the sum cancels.
    void add_term(const Exponents& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);

    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    // Canonical text form, terms in descending graded-lex order,
    // e.g. "x0^3 - 2*x0^2*x1 + x1*x2*x3". The zero polynomial prints "0".
    std::string str() const;

private:
    void require_same_variables(const MultiPoly& rhs) const;

    std::vector<std::string> variables_;
    TermMap terms_;
};

// Parses an expression over the declared variables. Grammar:
//   expr    := ["+"|"-"] term { ("+"|"-") term }
//   term    := factor { "*" factor }
//   factor  := primary [ "^" integer ]
//   primary := integer [ "/" integer ] | variable | "(" expr ")"
// Throws PolyParseError with a 1-based position on syntax errors and on
// undeclared variable names.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& variables);

// Multiplies each term by new_var^(degree - term degree). new_var may be a
// declared variable the polynomial does not depend on; an undeclared name is
// appended to the variable list. Throws std::domain_error when degree is
// smaller than the total degree.
MultiPoly homogenize(const MultiPoly& p, int degree, const std::string& new_var);

MultiPoly partial_derivative(const MultiPoly& p, const std::string& var);

// Sum of the terms of total degree exactly d.
MultiPoly graded_part(const MultiPoly& p, int d);

// Substitution of a scalar or of a polynomial over the same variable list;
// both keep the variable list unchanged.
MultiPoly substitute(const MultiPoly& p, const std::string& var, const Rational& value);
MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& value);

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point);

// Ring homomorphism determined by variable images: variable i is replaced by
// images[i]. All images must share one variable list, which becomes the
// result's variable list.
MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& images);

// Re-expresses p over a superset of its variables (matched by name).
MultiPoly extend_variables(const MultiPoly& p, const std::vector<std::string>& variables);

// Re-expresses p over a subset of its variables; every dropped variable must
// be one p does not depend on.
MultiPoly restrict_variables(const MultiPoly& p, const std::vector<std::string>& variables);

}  // namespace pw
