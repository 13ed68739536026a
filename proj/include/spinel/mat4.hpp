#pragma once

#include <array>
#include <cstdint>

#include "spinel/digest.hpp"

namespace spinel {

// 4x4 matrix over F_p, row-major. Walk products stay in SL4 (det = 1).
struct Mat4 {
    std::array<std::uint32_t, 16> e{};

    static Mat4 identity() {
        Mat4 m;
        m.e[0] = m.e[5] = m.e[10] = m.e[15] = 1;
        return m;
    }

    std::uint32_t& at(int r, int c) { return e[4 * r + c]; }
    std::uint32_t at(int r, int c) const { return e[4 * r + c]; }

    friend bool operator==(const Mat4&, const Mat4&) = default;
};

Mat4 mat_mul(const Mat4& x, const Mat4& y);
std::uint32_t mat_det(const Mat4& x);
Mat4 mat_pow(const Mat4& x, std::uint64_t e);

// 64-byte digest: entries row-major, each a 4-byte little-endian word.
Digest serialize_mat(const Mat4& m);
// Throws std::invalid_argument if any decoded word >= p.
Mat4 deserialize_mat(const Digest& d);
// True iff every 32-bit word of the 64-byte block decodes below p.
bool digest_words_valid(std::span<const std::uint8_t> block);

}  // namespace spinel
