#pragma once

/**
 * @file poly_io.hpp
 * @brief Canonical JSON and human-readable rendering of polynomials.
 *
 * Canonical form: {"var":"v","coeffs":["1","1","2","1"]}, ascending degree,
 * decimal strings, no whitespace. Pretty form: descending terms with `*` and
 * `^`; a multi-term polynomial with negative leading coefficient is printed
 * as -(...) of its negation.
 */

#include <string>
#include <string_view>

#include <json.hpp>

#include "ptk/polynomial.hpp"

namespace ptk {

using ordered_json = nlohmann::ordered_json;

template <CoefficientRing R>
ordered_json to_json(const Polynomial<R>& f) {
    ordered_json j;
    j["var"] = f.var();
    ordered_json cs = ordered_json::array();
    for (const auto& c : f.coeffs()) cs.push_back(f.ring().format(c));
    j["coeffs"] = std::move(cs);
    return j;
}

template <CoefficientRing R>
std::string to_canonical(const Polynomial<R>& f) {
    return to_json(f).dump();
}

/// Throws std::invalid_argument on malformed input or non-canonical coefficients.
ZPoly zpoly_from_json(const ordered_json& j);
ZPoly parse_canonical(std::string_view text);

namespace detail {

template <CoefficientRing R>
std::string render_terms(const Polynomial<R>& f, bool negate) {
    const R& ring = f.ring();
    std::string out;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        auto c = f.coeffs()[static_cast<std::size_t>(i)];
        if (ring.is_zero(c)) continue;
        if (negate) c = ring.neg(c);
        const bool neg = ring.sign(c) < 0;
        const auto mag = neg ? ring.neg(c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const bool unit = ring.equal(mag, ring.one());
        if (i == 0) {
            out += ring.format(mag);
            continue;
        }
        if (!unit) out += ring.format(mag) + "*";
        out += f.var();
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace detail

template <CoefficientRing R>
std::string to_pretty(const Polynomial<R>& f) {
    if (f.is_zero()) return "0";
    const R& ring = f.ring();
    std::size_t nonzero = 0;
    for (const auto& c : f.coeffs()) nonzero += ring.is_zero(c) ? 0 : 1;
    if (nonzero > 1 && ring.sign(f.lc()) < 0) return "-(" + detail::render_terms(f, true) + ")";
    return detail::render_terms(f, false);
}

}  // namespace ptk
