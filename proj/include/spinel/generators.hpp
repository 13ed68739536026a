#pragma once

#include <array>
#include <cstdint>

#include "spinel/mat4.hpp"

namespace spinel {

// Walk generator alphabet.
enum class Gen : std::uint8_t { A = 0, B = 1, AInv = 2, BInv = 3 };

constexpr Gen inverse(Gen g) {
    switch (g) {
        case Gen::A: return Gen::AInv;
        case Gen::B: return Gen::BInv;
        case Gen::AInv: return Gen::A;
        default: return Gen::B;
    }
}

struct GeneratorSet {
    std::array<Mat4, 4> mat;                    // indexed by Gen
    std::array<Gen, 3> first;                   // symbol -> first generator
    std::array<std::array<Gen, 3>, 4> next;     // (prev, symbol) -> generator
};

// The process-wide generator set. First call reduces the configured base
// matrices mod p, raises them to the configured power, builds the selection
// tables, and runs the self-check; throws std::logic_error if the shipped
// constants violate any required property. Immutable afterwards.
const GeneratorSet& generators();

// Fixed bijection {1,2,3} -> {A, B, AInv}. Throws std::invalid_argument on a
// symbol outside {1,2,3}.
Gen select_first(unsigned symbol);
// From the ordered list [A, B, AInv, BInv] with inverse(prev) removed, picks
// the symbol-th entry (1-based). Never returns inverse(prev).
Gen select_next(Gen prev, unsigned symbol);

namespace detail {
// Base generator constants, replaceable at build time (see the constants
// translation unit): integer matrices Atilde, AtildeInv, Btilde, BtildeInv
// and the power applied to form the walk generators.
extern const std::array<std::array<std::int64_t, 16>, 4> kBaseGenerators;
extern const unsigned kGeneratorPower;
}  // namespace detail

}  // namespace spinel
