#include "fatpoints/field.hpp"

#include <stdexcept>
#include <string>

namespace fatpoints {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * static_cast<std::uint64_t>(d) <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldContext::FieldContext(std::uint32_t prime) : p_(prime) {
    if (prime >= (1u << 31))
        throw std::invalid_argument("modulus " + std::to_string(prime) +
                                    " does not fit in 31 bits");
    if (!is_prime(prime))
        throw std::invalid_argument("modulus " + std::to_string(prime) +
                                    " is not prime");
}

std::uint32_t FieldContext::pow(std::uint32_t base, std::uint64_t e) const {
    std::uint64_t acc = 1, b = base % p_;
    while (e) {
        if (e & 1) acc = acc * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t FieldContext::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    // extended Euclid on (a, p); only the Bezout coefficient of a is tracked
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    // r == gcd == 1 because p is prime and a != 0
    return reduce(t);
}

}  // namespace fatpoints
