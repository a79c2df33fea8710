#pragma once

/**
 * @file riley.hpp
 * @brief Parabolic representations of three-generator knot groups.
 *
 * Words in f, g, h are evaluated as 2x2 matrices over multivariate
 * polynomials in u, v, w. Relation residues are reduced by a chain of
 * substitutions var = num/den, clearing denominators at each step, until a
 * single variable remains; the common content of the remaining entries is the
 * Riley polynomial.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ptk/factor.hpp"
#include "ptk/multipoly.hpp"
#include "ptk/pretzel.hpp"

namespace ptk {

class PresentationError : public std::invalid_argument {
public:
    PresentationError(std::size_t position, const std::string& what);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Substitution side condition violated, e.g. a denominator that vanishes identically.
class DegenerateSubstitution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Derived polynomial differs from the reference polynomial.
class RileyMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Letter {
    char generator;  ///< 'f', 'g' or 'h'
    int exponent;    ///< nonzero
    friend bool operator==(const Letter&, const Letter&) = default;
};

class GroupWord {
public:
    GroupWord() = default;
    /// Freely reduces: merges adjacent letters with the same generator and drops zero exponents.
    explicit GroupWord(const std::vector<Letter>& letters);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    /// Sum of |exponent|.
    int length() const;
    GroupWord inverse() const;
    GroupWord power(int k) const;
    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
    friend bool operator==(const GroupWord&, const GroupWord&) = default;

    /// Like "hfhfg^-1"; the empty word is "1".
    std::string to_string() const;

private:
    std::vector<Letter> letters_;
};

struct Relation {
    GroupWord lhs;
    GroupWord rhs;
};

struct Presentation {
    std::vector<Relation> relations;
};

/**
 * Grammar: generators f, g, h; an uppercase letter is the inverse; `^k` or
 * `^(k)` powers a letter or parenthesized subword; relations `lhs = rhs`
 * separated by newlines or semicolons. Whitespace is ignored.
 */
Presentation parse_presentation(std::string_view text);
GroupWord parse_word(std::string_view text);

/// The (-2,3,n) presentation: hfhg = fhgf; gf(hg)^m = f(hg)^m h with m = (n-1)/2.
std::string family_presentation(int n);

enum class Parametrization { Standard, InvertedV };

/// "standard" or "inverted_v"; throws std::invalid_argument otherwise.
Parametrization parse_parametrization(std::string_view name);
std::string to_string(Parametrization p);

/// u, v, w; v is a Laurent variable for InvertedV.
VariableSet parametrization_variables(Parametrization p);

struct GeneratorImages {
    Mat2 f, g, h;
    const Mat2& of(char generator) const;
};

/// Standard: f = (1-uv, -v^2; u^2, 1+uv), g = (1, 0; w, 1), h = (1, -1; 0, 1).
/// InvertedV: f = (1-u, -u/v; uv, 1+u), g = (1, 0; w^2, 1), same h.
GeneratorImages generator_matrices(Parametrization p);
/// As above over a caller-chosen variable set containing u, v, w.
GeneratorImages generator_matrices(Parametrization p, const VariableSet& vars);

Mat2 eval_word(const GeneratorImages& images, const GroupWord& word);
Mat2 relation_residue(const GeneratorImages& images, const Relation& relation);

struct SubstitutionStep {
    std::string var;
    MultiPolynomial num;
    MultiPolynomial den;
};
using SubstitutionChain = std::vector<SubstitutionStep>;

/// Steps `var = expression` separated by newlines or semicolons.
SubstitutionChain parse_chain(std::string_view text, const VariableSet& vars);

/// Applies each step with substitute_fraction, then content-normalizes.
MultiPolynomial apply_substitution_chain(const MultiPolynomial& poly, const SubstitutionChain& chain);

struct RileyDerivation {
    std::string variable;
    bool first_relations_vanish = false;   ///< every relation but the last has zero residue after the chain
    std::vector<ZPoly> entry_numerators;   ///< nonzero entries of the last residue, reduced
    ZPoly common{IntegerRing{}};           ///< their gcd
    std::vector<ZPoly> stripped;           ///< factors shared with the chain's numerators and denominators
    std::vector<ZPoly> side_polynomials;   ///< chain denominators reduced to one variable
    bool side_conditions = false;          ///< polynomial coprime to every side polynomial
    ZPoly polynomial{IntegerRing{}};
};

/**
 * Runs the pipeline on an arbitrary presentation. Throws
 * DegenerateSubstitution when a chain denominator vanishes after the later
 * steps, and std::invalid_argument when the chain leaves more than one variable.
 */
RileyDerivation derive_riley(const Presentation& presentation, Parametrization p, const SubstitutionChain& chain,
                             const std::string& variable);

struct KnotData {
    std::string name;  ///< "2,3,5", "2,3,-5", "-3,3,4"
    std::string presentation;
    Parametrization parametrization;
    std::string chain;
    std::string variable;
    std::vector<long> reference;  ///< ascending coefficients
};

const std::vector<KnotData>& builtin_knots();
/// Throws std::invalid_argument for an unknown name.
const KnotData& knot_data(std::string_view name);

struct RileyResult {
    std::string knot;
    RileyDerivation derivation;
    ZPoly reference{IntegerRing{}};
    bool matches = false;  ///< equal up to sign
    IrreducibilityWitness irreducibility;
};

/// Derives the Riley polynomial of a built-in knot; throws RileyMismatch when it differs from the reference.
RileyResult riley_polynomial(std::string_view knot, std::uint64_t seed = 0);

struct FamilyEntry {
    int index = 0;  ///< 0..3, row-major
    bool zero = false;
    bool divisible = false;         ///< p_n divides the entry numerator
    bool cofactor_coprime = false;  ///< gcd(numerator / p_n, p_n) = 1
    ZPoly numerator{IntegerRing{}};
};

struct FamilyResidueReport {
    int n = 0;
    bool first_relation_zero = false;
    std::vector<FamilyEntry> entries;
    bool ok() const;  ///< every nonzero entry divisible
};

inline constexpr int kFamilyBound = 49;

/**
 * Evaluates the second (-2,3,n) relation with u = v+1 and w = (v+1)(v+2)/v
 * substituted exactly (v Laurent) and checks that p_n divides every nonzero
 * entry numerator. Throws FamilyIndexError for bad n and
 * std::invalid_argument when |n| exceeds bound.
 */
FamilyResidueReport family_residue_check(int n, int bound = kFamilyBound);

ordered_json to_json(const GroupWord& word);
ordered_json to_json(const RileyResult& result);
ordered_json to_json(const RileyDerivation& derivation);
ordered_json to_json(const FamilyResidueReport& report);

}  // namespace ptk
