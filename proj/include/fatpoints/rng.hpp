#pragma once

#include <cstdint>

#include "fatpoints/field.hpp"

namespace fatpoints {

/// splitmix64 step; used to condition seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// xorshift64* generator.
///
/// Update rule (documented so other implementations can reproduce streams):
///   s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;  output = s * 0x2545F4914F6CDD1D
/// The seed is conditioned through splitmix64, so any 64-bit value
/// (including 0) is a valid seed. Residues are drawn as next() % p.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed);

    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    std::uint32_t residue(const FieldContext& F) {
        return static_cast<std::uint32_t>(below(F.p()));
    }

private:
    std::uint64_t state_;
};

/// Per-record seed for parallel sweeps:
///   splitmix64(master ^ (0x9E3779B97F4A7C15 * (index + 1)))
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace fatpoints
