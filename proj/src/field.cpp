#include "cedga/field.hpp"
#include "cedga/error.hpp"

#include <string>

namespace cedga {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p > 65521 || !is_prime(p))
        throw Error(ErrorCode::Unsupported, "characteristic must be a prime below 65536, got " + std::to_string(p));
}

Fp PrimeField::inv(Fp a) const {
    if (a % p_ == 0)
        throw Error(ErrorCode::InvalidPoint, "division by zero in F_" + std::to_string(p_));
    return pow(a, static_cast<std::int64_t>(p_) - 2);
}

Fp PrimeField::pow(Fp a, std::int64_t e) const {
    if (e < 0)
        return pow(inv(a), -e);
    Fp result = 1 % p_;
    Fp base = a % p_;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

} // namespace cedga
