#pragma once

/**
 * @file pretzel.hpp
 * @brief The (-2,3,n) pretzel polynomial families and their identities.
 *
 * p_n (variable v) is defined for odd n < 0 and odd n >= 7; q_n (variable w)
 * for odd n < 0. Both come from three-term recurrences evaluated bottom-up
 * and memoized; closed forms appear only as independent checks.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptk/factor.hpp"
#include "ptk/laurent.hpp"
#include "ptk/quad_ext.hpp"

namespace ptk {

class FamilyIndexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws FamilyIndexError unless n is odd and not 1, 3, or 5.
void validate_family_index(int n);
/// Throws FamilyIndexError unless n is odd and negative.
void validate_negative_index(int n);

/// Mathematical residue of n modulo m (always in [0, m)).
int mod_floor(int n, int m);

ZPoly gen_p(int n);
ZPoly gen_q(int n);

struct ProductIdentity {
    bool holds = false;
    ZPoly lhs{IntegerRing{}, "v"};  ///< v^(2-n) * q_n((2v - (v+1)(v+2))/v)
    ZPoly rhs{IntegerRing{}, "v"};  ///< p_n * p_(6-n)
};
ProductIdentity check_product_identity(int n);

struct ReciprocalCheck {
    bool holds = false;      ///< proportional with |c| = 2^((5-n)/2)
    bool proportional = false;
    Integer constant;        ///< c with v^(2-n) p_(6-n)(2/v) = c * p_n(v)
};
ReciprocalCheck check_reciprocal(int n);

/// x[x^(2k) + x^(-2k) + x^3 + 4x^2 - 8 + 4x^(-2) + x^(-3)] / (x+1)^2 for k >= 2.
LaurentPolynomial<IntegerRing> gen_f(int k);

/// q_n(x + 1/x) == f_((3-n)/2).
bool check_laurent_identity(int n);

/// The sqrt-part of (a+b)^k - (a-b)^k - (a+b)^(k+2) + (a-b)^(k+2) over F_3[v], k = (1-n)/2.
FpPoly gen_g_mod3(int n);

struct GIdentity {
    bool holds = false;
    int sign = 0;  ///< s with g_n = s * v * p_n mod 3; 0 when neither sign works
};
GIdentity check_g_identity(int n);

struct SpecialValues {
    int n = 0;
    Integer q_at_0, q_at_1, q_at_neg1, q_at_2;
    QuadElem<Integer> q_at_sqrt3{Integer(0), Integer(0)};
    Integer p_const;
    Residue p_at_1_mod3, p_at_neg1_mod3, w2_coeff_mod3;
};
SpecialValues special_values(int n);

/// Each closed-form expectation that fails, as a message; empty when all hold.
std::vector<std::string> check_special_values(const SpecialValues& values);

struct Mod2Report {
    int n = 0;
    int e = 0;           ///< multiplicity of (w+1) in q_n mod 2
    int expected_e = 0;  ///< 2 if 3 | n else 0
    FactorPattern pattern;
    bool derivative_identity = false;  ///< q_n - w q_n' == (w+1)^2 mod 2
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
Mod2Report check_mod2_pattern(int n, std::uint64_t seed = 0);

struct Mod3Report {
    int n = 0;
    bool three_divides = false;
    // 3 | n
    int w_multiplicity = -1;
    int expected_w_multiplicity = -1;
    std::optional<bool> derivative_identity;   ///< q_n - (1-w) q_n' == -w mod 3
    std::optional<bool> combination_identity;  ///< only when q_(n+4) exists
    // 3 does not divide n
    std::optional<bool> g_coprime;          ///< gcd(g_n, g_n') = 1 in F_3[v]
    std::optional<bool> p_squarefree_mod3;  ///< gcd(p_n, p_n') = 1 mod 3
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
Mod3Report check_mod3_structure(int n);

/// Degree and constant-term laws for gen_p / gen_q at n; empty when all hold.
std::vector<std::string> check_family_invariants(int n);

ordered_json to_json(const SpecialValues& values);
ordered_json to_json(const Mod2Report& report);
ordered_json to_json(const Mod3Report& report);

}  // namespace ptk
