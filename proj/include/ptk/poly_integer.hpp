#pragma once

/**
 * @file poly_integer.hpp
 * @brief Algorithms specific to Z[x]: content, subresultant gcd and
 * resultant, discriminant, and reduction to prime fields.
 *
 * Gcd and resultant run the subresultant polynomial remainder sequence so
 * intermediate coefficients stay bounded; there is no naive Euclid over Z.
 */

#include <cstdint>
#include <optional>

#include "ptk/polynomial.hpp"

namespace ptk {

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
Integer content(const ZPoly& f);

/// f / content(f), normalized to a positive leading coefficient.
ZPoly primitive_part(const ZPoly& f);

/// Multiplies by -1 when the leading coefficient is negative.
ZPoly normalize_sign(const ZPoly& f);

/**
 * Greatest common divisor in Z[x] with positive leading coefficient.
 * gcd(f, 0) = normalize_sign(f). Throws std::domain_error for gcd(0, 0).
 */
ZPoly gcd(const ZPoly& f, const ZPoly& g);

/// Resultant via the subresultant PRS. Throws std::domain_error on a zero input.
Integer resultant(const ZPoly& f, const ZPoly& g);

/// (-1)^(d(d-1)/2) * Res(f, f') / lc(f). Requires deg f >= 1.
Integer discriminant(const ZPoly& f);

/// Quotient f/g when g divides f in Z[x], std::nullopt otherwise.
std::optional<ZPoly> try_divide(const ZPoly& f, const ZPoly& g);

/// Quotient f/g; throws std::domain_error when g does not divide f in Z[x].
ZPoly divexact(const ZPoly& f, const ZPoly& g);

/// Coefficientwise reduction. Throws std::invalid_argument if p is not prime.
FpPoly reduce_mod(const ZPoly& f, std::uint32_t p);

/// Coefficientwise reduction into Z/m.
ZmPoly reduce_mod(const ZPoly& f, const IntegerModRing& ring);

/// Integer polynomial with coefficients in (-p/2, p/2].
ZPoly lift_symmetric(const FpPoly& f);
ZPoly lift_symmetric(const ZmPoly& f);

/// Integer polynomial with coefficients in [0, m).
ZPoly lift_nonnegative(const ZmPoly& f);

/// Integer polynomial with coefficients in [0, p).
ZPoly lift_nonnegative(const FpPoly& f);

/// Largest absolute coefficient.
Integer max_norm(const ZPoly& f);

/// Ceiling of the Euclidean norm of the coefficient vector.
Integer norm2_ceil(const ZPoly& f);

/// Scales a rational polynomial to a primitive integer polynomial with the same roots.
ZPoly clear_denominators(const QPoly& f);

ZPoly to_integer_poly(const std::vector<long>& ascending, const std::string& var = "x");

}  // namespace ptk
