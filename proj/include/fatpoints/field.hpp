#pragma once

#include <cstdint>

namespace fatpoints {

/// Working prime of the bundled reference computations.
inline constexpr std::uint32_t kDefaultPrime = 32749;

bool is_prime(std::uint32_t n);

/// Arithmetic in GF(p) on canonical residues in [0, p).
///
/// p is checked for primality at construction (trial division) and must fit
/// in 31 bits so that a product of two residues fits in 64 bits.
class FieldContext {
public:
    explicit FieldContext(std::uint32_t prime = kDefaultPrime);

    std::uint32_t p() const { return p_; }

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t base, std::uint64_t e) const;

    /// Multiplicative inverse by extended Euclid; throws on a == 0.
    std::uint32_t inv(std::uint32_t a) const;

    friend bool operator==(const FieldContext&, const FieldContext&) = default;

private:
    std::uint32_t p_;
};

}  // namespace fatpoints
