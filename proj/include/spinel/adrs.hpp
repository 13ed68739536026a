#pragma once

#include <array>
#include <cstdint>

namespace spinel {

inline constexpr std::size_t kAdrsBytes = 32;

// Hash-domain address types.
enum class AdrsType : std::uint32_t {
    WotsChain = 1,   // ctx: key pair, chain, hash position
    WotsPk = 2,      // ctx: key pair
    TreeNode = 3,    // ctx: -, height, index
    ForsNode = 4,    // ctx: key pair, height, index
    ForsRoots = 5,   // ctx: key pair
};

// 256-bit structured address: eight 32-bit words
// [layer | tree0 tree1 tree2 | type | ctx0 ctx1 ctx2], serialized big-endian.
// Unused context words stay zero.
struct Adrs {
    std::uint32_t layer = 0;
    std::uint64_t tree = 0;   // occupies the low 64 of the 96-bit tree field
    std::uint32_t type = 0;
    std::array<std::uint32_t, 3> ctx{};

    void set_type(AdrsType t) {
        type = static_cast<std::uint32_t>(t);
        ctx = {0, 0, 0};
    }
    void set_key_pair(std::uint32_t v) { ctx[0] = v; }
    void set_chain(std::uint32_t v) { ctx[1] = v; }
    void set_hash(std::uint32_t v) { ctx[2] = v; }
    void set_height(std::uint32_t v) { ctx[1] = v; }
    void set_index(std::uint64_t v) { ctx[2] = static_cast<std::uint32_t>(v); }

    std::array<std::uint8_t, kAdrsBytes> serialize() const {
        std::array<std::uint8_t, kAdrsBytes> out{};
        const std::uint32_t words[8] = {
            layer,
            0,
            static_cast<std::uint32_t>(tree >> 32),
            static_cast<std::uint32_t>(tree),
            type,
            ctx[0],
            ctx[1],
            ctx[2],
        };
        for (int i = 0; i < 8; ++i) {
            out[4 * i + 0] = static_cast<std::uint8_t>(words[i] >> 24);
            out[4 * i + 1] = static_cast<std::uint8_t>(words[i] >> 16);
            out[4 * i + 2] = static_cast<std::uint8_t>(words[i] >> 8);
            out[4 * i + 3] = static_cast<std::uint8_t>(words[i]);
        }
        return out;
    }

    friend bool operator==(const Adrs&, const Adrs&) = default;
};

}  // namespace spinel
