#pragma once

#include <cstdint>

namespace spinel::fp {

// The field modulus, a Mersenne prime: 2^31 - 1.
inline constexpr std::uint32_t kP = 0x7fffffffu;

// Reduces any 64-bit value into [0, p). Two folds bring the value below
// 2^31 + 8, after which a single conditional subtraction suffices.
constexpr std::uint32_t reduce64(std::uint64_t x) {
    x = (x >> 31) + (x & kP);
    x = (x >> 31) + (x & kP);
    auto r = static_cast<std::uint32_t>(x);
    if (r >= kP) r -= kP;
    return r;
}

constexpr std::uint32_t add(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = a + b;
    if (r >= kP) r -= kP;
    return r;
}

constexpr std::uint32_t sub(std::uint32_t a, std::uint32_t b) {
    return a >= b ? a - b : a + kP - b;
}

constexpr std::uint32_t neg(std::uint32_t a) { return a == 0 ? 0 : kP - a; }

constexpr std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
    return reduce64(static_cast<std::uint64_t>(a) * b);
}

// a^e by square-and-multiply.
constexpr std::uint32_t pow(std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

// Modular inverse by extended Euclid. Precondition: a != 0 mod p.
std::uint32_t inv(std::uint32_t a);

}  // namespace spinel::fp
