#include "ptk/poly_io.hpp"

#include <stdexcept>

namespace ptk {

ZPoly zpoly_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("var") || !j.contains("coeffs")) {
        throw std::invalid_argument("polynomial JSON needs \"var\" and \"coeffs\"");
    }
    if (!j["var"].is_string() || !j["coeffs"].is_array()) throw std::invalid_argument("malformed polynomial JSON");
    std::vector<Integer> cs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
        cs.push_back(Integer::from_string(c.get<std::string>()));
    }
    if (!cs.empty() && cs.back().is_zero()) throw std::invalid_argument("trailing zero coefficient");
    return ZPoly(IntegerRing{}, std::move(cs), j["var"].get<std::string>());
}

ZPoly parse_canonical(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid polynomial JSON: ") + e.what());
    }
    return zpoly_from_json(j);
}

}  // namespace ptk
