#pragma once

/**
 * @file obstruction.hpp
 * @brief Certificates that Q(i) and Q(sqrt(-3)) are not subfields of the
 * trace field k_n, and the resulting hidden-symmetry verdict.
 *
 * A certificate quantifies over every irreducible factor of the defining
 * polynomial, so no choice of root or factor is needed. Each factor is
 * handled by a lemma route (reduction patterns plus the family identities)
 * and a direct route (discriminant valuation and splitting type); the two
 * must agree or construction throws ChainDisagreement.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptk/factor.hpp"
#include "ptk/pretzel.hpp"

namespace ptk {

class ChainDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class TargetField { QI, QSqrtMinus3 };
enum class Verdict { NotSubfield, Inconclusive };

std::string to_string(TargetField target);  ///< "Q(i)" or "Q(sqrt(-3))"
std::string to_string(Verdict verdict);     ///< "not_subfield" or "inconclusive"

inline constexpr const char* kCaseSquarefree = "squarefree_discriminant";
inline constexpr const char* kCaseUnramified = "unramified_prime_exists";
inline constexpr const char* kCaseOddDegree = "odd_degree";
inline constexpr int kCertificateSchema = 1;

struct ConjectureCheck {
    int n = 0;
    bool p_irreducible = false;
    bool q_irreducible = false;
    IrreducibilityWitness p_witness;
    IrreducibilityWitness q_witness;
};
ConjectureCheck verify_conjecture(int n, std::uint64_t seed = 0);

struct QuadraticSearch {
    ZPoly target_lift{IntegerRing{}};  ///< the target, coefficients in [0, p)
    std::uint32_t prime = 0;
    std::vector<std::pair<int, Integer>> anchors;  ///< (x, f(x)) used for the divisor enumeration
    long enumerated = 0;                         ///< quadratics built from divisor pairs
    std::vector<ZPoly> survivors;                ///< passed the congruence and every divisibility test
    std::vector<ZPoly> factors;                  ///< survivors dividing f
};

/**
 * Monic integer quadratics g = target mod p with g(x) | f(x) for x in
 * {0, 2, 1, -1}, trial-divided into f. Throws std::invalid_argument unless the
 * target is the square of a monic linear polynomial and f is nonzero at two
 * of the anchor points.
 */
QuadraticSearch quadratic_factor_search(const ZPoly& f, const FpPoly& target, std::uint32_t p);

struct LemmaFact {
    std::string name;
    bool holds = false;
};

struct FactorEvidence {
    ZPoly factor{IntegerRing{}};
    FactorPattern pattern;        ///< factor mod p
    int disc_valuation = 0;       ///< v_p(disc factor)
    std::optional<SplittingType> splitting;  ///< only when the reduction is not squarefree
    std::string splitting_note;              ///< why splitting is absent, if it is
    bool lemma_route = false;     ///< squarefree, or a simple factor mod p exists
    bool direct_route = false;    ///< v_p(disc) = 0, or an unramified entry in the splitting type
};

struct ChainResult {
    std::string name;
    bool complete = false;
};

struct Certificate {
    int n = 0;
    TargetField target = TargetField::QI;
    Verdict verdict = Verdict::Inconclusive;
    std::string case_tag;
    std::string polynomial_name;  ///< "q_n" or "p_n" with n substituted
    ZPoly polynomial{IntegerRing{}};
    std::uint32_t prime = 0;
    IrreducibilityWitness irreducibility;
    std::vector<LemmaFact> lemmas;
    std::vector<FactorEvidence> factors;
    std::optional<QuadraticSearch> quadratic_search;
    std::vector<ChainResult> chains;  ///< case chain, discriminant_valuation, odd_degree
    std::vector<std::string> assumptions;

    bool chain_complete(const std::string& name) const;
};

Certificate no_qi_certificate(int n, std::uint64_t seed = 0);
Certificate no_qsqrt3_certificate(int n, std::uint64_t seed = 0);

struct HiddenSymmetryVerdict {
    int n = 0;
    bool no_hidden_symmetries = false;
    bool product_identity = false;  ///< ties k_(6-n) to the same polynomial as k_n
    Certificate qi;
    Certificate qsqrt3;
    std::vector<std::string> assumptions;
};
HiddenSymmetryVerdict hidden_symmetry_verdict(int n, std::uint64_t seed = 0);

/// Re-checks the stored evidence without recomputing the certificate; empty when consistent.
std::vector<std::string> recheck(const Certificate& cert);

ordered_json to_json(const ConjectureCheck& check);
ordered_json to_json(const QuadraticSearch& search);
QuadraticSearch quadratic_search_from_json(const ordered_json& j);
ordered_json to_json(const Certificate& cert);
Certificate certificate_from_json(const ordered_json& j);
ordered_json to_json(const HiddenSymmetryVerdict& verdict);

}  // namespace ptk
