#pragma once

/**
 * @file factor.hpp
 * @brief Factorization over F_p and Z, Hensel lifting, irreducibility over Q,
 * and prime splitting types.
 *
 * Randomized steps (equal-degree splitting) take an explicit seed. Given the
 * same input and seed every function returns the same result.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptk/poly_integer.hpp"
#include "ptk/poly_io.hpp"

namespace ptk {

/// Repeated-factor shape outside what splitting_type handles.
class UnsupportedShape : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FactorPower {
    FpPoly factor;
    int multiplicity = 1;
};

struct FactorPattern {
    std::uint32_t prime = 0;
    std::vector<FactorPower> factors;  ///< monic, irreducible, pairwise distinct, canonical order

    /// Product of factor^multiplicity; equals the monic normalization of the input.
    FpPoly product(const std::string& var = "x") const;
    int multiplicity_of(const FpPoly& g) const;
    bool is_squarefree() const;
};

struct SplittingEntry {
    int e = 1;  ///< ramification index
    int f = 1;  ///< residue degree
    friend bool operator==(const SplittingEntry&, const SplittingEntry&) = default;
};

struct SplittingType {
    std::uint32_t prime = 0;
    std::vector<SplittingEntry> entries;  ///< sorted: e descending, then f ascending

    int degree() const;
    bool is_unramified() const;
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Canonical order on F_p polynomials: degree, then coefficients from the top down.
bool canonical_less(const FpPoly& a, const FpPoly& b);

// ---------------------------------------------------------------------------
// Over F_p
// ---------------------------------------------------------------------------

/// Squarefree parts with multiplicities, sorted by multiplicity. Input need not be monic.
std::vector<FactorPower> squarefree_decomposition(const FpPoly& f);

/**
 * Distinct-degree factorization of a monic squarefree polynomial: pairs
 * (product of all irreducible factors of degree d, d).
 */
std::vector<std::pair<FpPoly, int>> distinct_degree_factorization(const FpPoly& f);

/// Splits a monic squarefree product of irreducibles of degree d (Cantor-Zassenhaus).
std::vector<FpPoly> equal_degree_factorization(const FpPoly& f, int d, std::mt19937_64& rng);

FactorPattern factor_modp(const FpPoly& f, std::uint64_t seed = 0);

/// Rabin's test. Requires deg f >= 1.
bool irreducible_modp(const FpPoly& f);

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

struct HenselPair {
    ZPoly g;          ///< coefficients in [0, p^l)
    ZPoly h;
    Integer modulus;  ///< p^l
};

/**
 * Lifts f = g0*h0 mod p to f = g*h mod p^l by quadratic Hensel steps.
 * f monic; g0, h0 monic and coprime mod p. Throws std::invalid_argument for a
 * non-monic f or a wrong seed product, std::domain_error for non-coprime seeds.
 */
HenselPair hensel_lift(const ZPoly& f, const FpPoly& g0, const FpPoly& h0, int l);

/// Lifts a factorization of monic f mod p into pairwise coprime monic factors, to p^l.
std::vector<ZPoly> multifactor_hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, int l);

// ---------------------------------------------------------------------------
// Over Z and Q
// ---------------------------------------------------------------------------

struct IntegerFactorization {
    Integer content;                            ///< signed, so the product reproduces the input
    std::vector<std::pair<ZPoly, int>> factors;  ///< primitive, positive leading coefficient

    ZPoly product(const std::string& var = "x") const;
};

/// Squarefree decomposition over Z of a primitive polynomial (Yun).
std::vector<std::pair<ZPoly, int>> squarefree_decomposition_Z(const ZPoly& f);

IntegerFactorization factor_over_Z(const ZPoly& f, std::uint64_t seed = 0);

struct SieveRow {
    std::uint32_t prime;
    std::vector<int> degrees;  ///< degrees of the irreducible factors mod prime
};

struct IrreducibilityWitness {
    bool irreducible = false;
    /// "degree_one", "irreducible_mod_p", "degree_sieve", or "zassenhaus"
    std::string method;
    std::uint32_t prime = 0;         ///< for irreducible_mod_p
    std::vector<SieveRow> sieve;     ///< for degree_sieve
    std::optional<ZPoly> factor;     ///< a nontrivial factor when reducible
};

/// Largest prime tried by the mod-p fast path.
inline constexpr std::uint32_t kIrreducibilityPrimeBound = 200;

IrreducibilityWitness irreducible_over_Q(const ZPoly& f, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Splitting of primes
// ---------------------------------------------------------------------------

struct SplittingOptions {
    bool check_irreducible = true;
    std::uint64_t seed = 0;
};

/**
 * Splitting type of p in Q[x]/(f) for monic irreducible f.
 *
 * Squarefree reduction: read off the factor degrees. Otherwise the only
 * supported shape is a single repeated linear factor of multiplicity 2; the
 * matching quadratic block is split off over Z_p and classified through the
 * square class of its discriminant. Throws UnsupportedShape for any other
 * shape and std::invalid_argument for non-monic or reducible input.
 */
SplittingType splitting_type(const ZPoly& f, std::uint32_t p, const SplittingOptions& options = {});

/// Quadratic block classification from disc = p^e*u (u a unit): split, inert, or ramified entries.
std::vector<SplittingEntry> classify_quadratic_block(const Integer& disc_mod, const Integer& modulus, std::uint32_t p);

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

ordered_json to_json(const FactorPattern& pattern);
FactorPattern factor_pattern_from_json(const ordered_json& j);
ordered_json to_json(const SplittingType& type);
SplittingType splitting_type_from_json(const ordered_json& j);
ordered_json to_json(const IrreducibilityWitness& w);
IrreducibilityWitness irreducibility_witness_from_json(const ordered_json& j);

/// Text like [(2,1),(1,3)].
std::string to_string(const SplittingType& type);

}  // namespace ptk
