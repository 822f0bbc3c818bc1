#pragma once

#include <cstdint>

namespace cedga {

using Fp = std::uint32_t;

/// Arithmetic in the prime field Z/p. Elements are canonical residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = 2);

    std::uint32_t characteristic() const noexcept { return p_; }

    Fp add(Fp a, Fp b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Fp sub(Fp a, Fp b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Fp neg(Fp a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Fp mul(Fp a, Fp b) const noexcept {
        return static_cast<Fp>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Fp inv(Fp a) const;
    /// a^e for any integer e; negative exponents need a != 0.
    Fp pow(Fp a, std::int64_t e) const;
    Fp from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Fp>(r < 0 ? r + p_ : r);
    }
    /// Symmetric representative in (-p/2, p/2], used for printing.
    std::int64_t lift(Fp a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
    }
    Fp minus_one() const noexcept { return p_ - 1; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

} // namespace cedga
