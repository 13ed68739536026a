#include "spinel/fp.hpp"

#include <stdexcept>

namespace spinel::fp {

std::uint32_t inv(std::uint32_t a) {
    if (a == 0) throw std::invalid_argument("fp::inv: zero has no inverse");
    // extended Euclid on (a, p)
    std::int64_t r0 = a, r1 = kP;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (s0 < 0) s0 += kP;
    return static_cast<std::uint32_t>(s0);
}

}  // namespace spinel::fp
