#include "ptk/rings.hpp"

namespace ptk {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Residue PrimeField::from_integer(const Integer& n) const {
    return {static_cast<std::uint32_t>(mod(n, Integer(static_cast<long>(p_))).to_long())};
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
    Residue result = one();
    while (e > 0) {
        if (e & 1U) result = mul(result, a);
        e >>= 1U;
        if (e > 0) a = mul(a, a);
    }
    return result;
}

Residue PrimeField::inv(Residue a) const {
    if (a.value == 0) throw std::domain_error("zero has no inverse in F_p");
    return pow(a, p_ - 2);
}

IntegerModRing::IntegerModRing(Integer m) : m_(std::move(m)) {
    if (m_ < Integer(2)) throw std::invalid_argument("modulus must be at least 2");
}

}  // namespace ptk
