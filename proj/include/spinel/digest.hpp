#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace spinel {

inline constexpr std::size_t kDigestBytes = 64;
inline constexpr std::size_t kDigestWords = 16;
inline constexpr std::size_t kSeedBytes = 64;

// 512-bit hash output: 16 little-endian 32-bit words, each < p.
struct Digest {
    std::array<std::uint8_t, kDigestBytes> bytes{};

    std::uint32_t word(std::size_t i) const {
        const std::uint8_t* q = bytes.data() + 4 * i;
        return static_cast<std::uint32_t>(q[0]) | (static_cast<std::uint32_t>(q[1]) << 8) |
               (static_cast<std::uint32_t>(q[2]) << 16) | (static_cast<std::uint32_t>(q[3]) << 24);
    }

    friend bool operator==(const Digest&, const Digest&) = default;
};

// n-bit seed material (n = 512). Same width as a digest but not constrained
// to field-element words.
struct Seed {
    std::array<std::uint8_t, kSeedBytes> bytes{};

    friend bool operator==(const Seed&, const Seed&) = default;
};

std::string to_hex(std::span<const std::uint8_t> data);
// Returns false on odd length or a non-hex character.
bool from_hex(std::string_view hex, std::span<std::uint8_t> out);

}  // namespace spinel
