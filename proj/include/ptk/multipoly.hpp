#pragma once

/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials with rational coefficients, optional
 * Laurent variables, and 2x2 matrices over them.
 *
 * Terms are kept in graded-lexicographic order (earlier variables are larger),
 * highest term first. Negative exponents are only accepted for variables
 * flagged as Laurent.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptk/poly_integer.hpp"
#include "ptk/poly_io.hpp"

namespace ptk {

struct VariableSet {
    std::vector<std::string> names;
    std::vector<bool> laurent;

    VariableSet() = default;
    VariableSet(std::vector<std::string> names, const std::vector<std::string>& laurent_names = {});

    int size() const { return static_cast<int>(names.size()); }
    /// Index of name, or -1.
    int find(std::string_view name) const;
    /// Index of name; throws std::invalid_argument when absent.
    int index(std::string_view name) const;
    bool is_laurent(int i) const { return laurent[static_cast<std::size_t>(i)]; }

    friend bool operator==(const VariableSet&, const VariableSet&) = default;
};

/// u, v, w with no Laurent variables.
VariableSet standard_variables();

using Exponents = std::vector<int>;

struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPolynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    MultiPolynomial() = default;
    explicit MultiPolynomial(VariableSet vars) : vars_(std::move(vars)) {}

    static MultiPolynomial constant(const VariableSet& vars, const Rational& c);
    static MultiPolynomial variable(const VariableSet& vars, std::string_view name, int power = 1);
    static MultiPolynomial monomial(const VariableSet& vars, const Rational& c, Exponents e);

    const VariableSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }

    /// Largest and smallest exponent of variable i over all terms (0 for the zero polynomial).
    int max_degree(int i) const;
    int min_degree(int i) const;
    bool involves(int i) const;

    /// Highest term in grlex order; throws on zero.
    const std::pair<const Exponents, Rational>& leading_term() const;

    MultiPolynomial& operator+=(const MultiPolynomial& o);
    MultiPolynomial& operator-=(const MultiPolynomial& o);
    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
    friend MultiPolynomial operator-(const MultiPolynomial& a);
    MultiPolynomial scale(const Rational& c) const;
    /// Multiplies by the monomial x^e; negative entries only in Laurent variables.
    MultiPolynomial shift(const Exponents& e) const;

    friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    /// Collects terms by the exponent of variable i: exponent -> coefficient free of i.
    std::map<int, MultiPolynomial> collect(int i) const;

    /// Exact substitution of a polynomial value; a negative exponent of the
    /// variable requires the value to be a monomial in Laurent variables.
    MultiPolynomial substitute(std::string_view var, const MultiPolynomial& value) const;

    /**
     * Substitutes var = num/den and multiplies through by
     * den^max(deg,0) * num^max(-mindeg,0), so the result is a polynomial.
     * A variable that does not occur leaves the polynomial unchanged.
     */
    MultiPolynomial substitute_fraction(std::string_view var, const MultiPolynomial& num,
                                        const MultiPolynomial& den) const;

    /// Integer primitive form with positive leading coefficient and Laurent monomial factors removed.
    MultiPolynomial normalized() const;

    /// Univariate view in var; requires every other exponent zero and var exponents >= 0.
    QPoly to_univariate(std::string_view var) const;
    /// As to_univariate but requires integer coefficients.
    ZPoly to_integer_univariate(std::string_view var) const;

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    void check_exponents(const Exponents& e) const;
    void require_same_vars(const MultiPolynomial& o) const;

    VariableSet vars_;
    TermMap terms_;
};

MultiPolynomial pow(const MultiPolynomial& base, unsigned k);

/// A rational expression num/den, as produced by the expression parser.
struct RationalExpression {
    MultiPolynomial num;
    MultiPolynomial den;
};

/**
 * Parses +, -, *, /, ^ (integer powers), parentheses, integer
 * literals, and the variables of vars. Throws std::invalid_argument with the
 * offending position on a syntax error or unknown variable.
 */
RationalExpression parse_expression(std::string_view text, const VariableSet& vars);

/// parse_expression that only accepts denominators invertible as Laurent monomials.
MultiPolynomial parse_polynomial(std::string_view text, const VariableSet& vars);

struct Mat2 {
    MultiPolynomial a, b, c, d;

    static Mat2 identity(const VariableSet& vars);

    MultiPolynomial det() const { return a * d - b * c; }
    MultiPolynomial trace() const { return a + d; }
    /// Inverse when det = 1.
    Mat2 adjugate() const { return {d, -b, -c, a}; }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    const MultiPolynomial& entry(int i) const;  ///< 0..3 in row-major order

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;

    Mat2 substitute(std::string_view var, const MultiPolynomial& value) const;
};

ordered_json to_json(const MultiPolynomial& f);
MultiPolynomial multipoly_from_json(const ordered_json& j);

}  // namespace ptk
