#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinel/generators.hpp"
#include "spinel/mat4.hpp"

namespace spinel {

// Base-3 digits of a byte, most-significant first, leading zeros suppressed.
// Byte 0x00 yields the single digit [0] so that zero bytes stay visible to
// the walk.
std::vector<std::uint8_t> byte_to_trits(std::uint8_t b);

// Ternary walk symbols (trit + 1) for a byte string.
std::vector<std::uint8_t> encode_message(std::span<const std::uint8_t> data);

// Streaming non-backtracking walk over SL4(F_p).
class WalkState {
public:
    WalkState() : acc_(Mat4::identity()) {}

    void step(unsigned symbol);                      // symbol in {1,2,3}
    void absorb_byte(std::uint8_t b);
    void absorb(std::span<const std::uint8_t> data);

    const Mat4& matrix() const { return acc_; }

private:
    Mat4 acc_;
    Gen prev_ = Gen::A;
    bool started_ = false;
};

// Product of the selected generator matrices; empty input gives the identity.
Mat4 walk(std::span<const std::uint8_t> symbols);

// Instrumented variant exposing the realized generator sequence.
std::vector<Gen> walk_trace(std::span<const std::uint8_t> symbols);

}  // namespace spinel
