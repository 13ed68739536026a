#include "spinel/mat4.hpp"

#include <stdexcept>

#include "spinel/fp.hpp"

namespace spinel {

Mat4 mat_mul(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (int i = 0; i < 4; ++i) {
        const std::uint64_t a0 = x.e[4 * i + 0];
        const std::uint64_t a1 = x.e[4 * i + 1];
        const std::uint64_t a2 = x.e[4 * i + 2];
        const std::uint64_t a3 = x.e[4 * i + 3];
        for (int j = 0; j < 4; ++j) {
            // 4 * (p-1)^2 < 2^64, so the dot product accumulates exactly.
            std::uint64_t acc = a0 * y.e[j] + a1 * y.e[4 + j] + a2 * y.e[8 + j] + a3 * y.e[12 + j];
            r.e[4 * i + j] = fp::reduce64(acc);
        }
    }
    return r;
}

namespace {

// Determinant of a 3x3 minor given by row/column index lists.
std::uint32_t det3(const Mat4& m, const int r[3], const int c[3]) {
    using namespace fp;
    std::uint32_t a = m.at(r[0], c[0]), b = m.at(r[0], c[1]), cc = m.at(r[0], c[2]);
    std::uint32_t d = m.at(r[1], c[0]), e = m.at(r[1], c[1]), f = m.at(r[1], c[2]);
    std::uint32_t g = m.at(r[2], c[0]), h = m.at(r[2], c[1]), i = m.at(r[2], c[2]);
    std::uint32_t t0 = mul(a, sub(mul(e, i), mul(f, h)));
    std::uint32_t t1 = mul(b, sub(mul(d, i), mul(f, g)));
    std::uint32_t t2 = mul(cc, sub(mul(d, h), mul(e, g)));
    return add(sub(t0, t1), t2);
}

}  // namespace

std::uint32_t mat_det(const Mat4& x) {
    using namespace fp;
    static constexpr int rows[3] = {1, 2, 3};
    std::uint32_t det = 0;
    for (int j = 0; j < 4; ++j) {
        int cols[3];
        int n = 0;
        for (int c = 0; c < 4; ++c)
            if (c != j) cols[n++] = c;
        std::uint32_t term = mul(x.at(0, j), det3(x, rows, cols));
        det = (j % 2 == 0) ? add(det, term) : sub(det, term);
    }
    return det;
}

Mat4 mat_pow(const Mat4& x, std::uint64_t e) {
    Mat4 result = Mat4::identity();
    Mat4 base = x;
    while (e != 0) {
        if (e & 1) result = mat_mul(result, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return result;
}

Digest serialize_mat(const Mat4& m) {
    Digest d;
    for (int i = 0; i < 16; ++i) {
        const std::uint32_t v = m.e[i];
        d.bytes[4 * i + 0] = static_cast<std::uint8_t>(v);
        d.bytes[4 * i + 1] = static_cast<std::uint8_t>(v >> 8);
        d.bytes[4 * i + 2] = static_cast<std::uint8_t>(v >> 16);
        d.bytes[4 * i + 3] = static_cast<std::uint8_t>(v >> 24);
    }
    return d;
}

Mat4 deserialize_mat(const Digest& d) {
    Mat4 m;
    for (std::size_t i = 0; i < kDigestWords; ++i) {
        const std::uint32_t v = d.word(i);
        if (v >= fp::kP) throw std::invalid_argument("digest word out of field range");
        m.e[i] = v;
    }
    return m;
}

bool digest_words_valid(std::span<const std::uint8_t> block) {
    if (block.size() != kDigestBytes) return false;
    for (std::size_t i = 0; i < kDigestWords; ++i) {
        const std::uint8_t* q = block.data() + 4 * i;
        std::uint32_t v = static_cast<std::uint32_t>(q[0]) | (static_cast<std::uint32_t>(q[1]) << 8) |
                          (static_cast<std::uint32_t>(q[2]) << 16) |
                          (static_cast<std::uint32_t>(q[3]) << 24);
        if (v >= fp::kP) return false;
    }
    return true;
}

}  // namespace spinel
