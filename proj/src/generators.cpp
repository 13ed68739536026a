#include "spinel/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spinel/fp.hpp"

namespace spinel {

namespace {

Mat4 reduce_base(const std::array<std::int64_t, 16>& entries) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) {
        std::int64_t v = entries[i] % static_cast<std::int64_t>(fp::kP);
        if (v < 0) v += fp::kP;
        m.e[i] = static_cast<std::uint32_t>(v);
    }
    return m;
}

// All non-backtracking generator words of length 1..6 must land on pairwise
// distinct group elements.
void check_word_distinctness(const std::array<Mat4, 4>& mat) {
    std::vector<std::array<std::uint32_t, 16>> seen;
    seen.reserve(1456);
    struct Frame {
        Mat4 m;
        Gen last;
        int depth;
    };
    std::vector<Frame> stack;
    for (int g = 0; g < 4; ++g)
        stack.push_back({mat[g], static_cast<Gen>(g), 1});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        seen.push_back(f.m.e);
        if (f.depth == 6) continue;
        for (int g = 0; g < 4; ++g) {
            if (static_cast<Gen>(g) == inverse(f.last)) continue;
            stack.push_back({mat_mul(f.m, mat[g]), static_cast<Gen>(g), f.depth + 1});
        }
    }
    if (seen.size() != 1456)
        throw std::logic_error("generator self-check: wrong word count");
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::logic_error("generator self-check: short-word collision");
    const auto identity = Mat4::identity().e;
    if (std::binary_search(seen.begin(), seen.end(), identity))
        throw std::logic_error("generator self-check: short word equals identity");
}

GeneratorSet build() {
    const Mat4 a_base = reduce_base(detail::kBaseGenerators[0]);
    const Mat4 a_base_inv = reduce_base(detail::kBaseGenerators[1]);
    const Mat4 b_base = reduce_base(detail::kBaseGenerators[2]);
    const Mat4 b_base_inv = reduce_base(detail::kBaseGenerators[3]);
    const Mat4 id = Mat4::identity();

    if (mat_det(a_base) != 1 || mat_det(b_base) != 1)
        throw std::logic_error("generator self-check: base determinant != 1");
    if (mat_mul(a_base, a_base_inv) != id || mat_mul(b_base, b_base_inv) != id)
        throw std::logic_error("generator self-check: base inverse mismatch");

    GeneratorSet gs;
    gs.mat[static_cast<int>(Gen::A)] = mat_pow(a_base, detail::kGeneratorPower);
    gs.mat[static_cast<int>(Gen::AInv)] = mat_pow(a_base_inv, detail::kGeneratorPower);
    gs.mat[static_cast<int>(Gen::B)] = mat_pow(b_base, detail::kGeneratorPower);
    gs.mat[static_cast<int>(Gen::BInv)] = mat_pow(b_base_inv, detail::kGeneratorPower);

    for (Gen g : {Gen::A, Gen::B}) {
        const Mat4& m = gs.mat[static_cast<int>(g)];
        const Mat4& mi = gs.mat[static_cast<int>(inverse(g))];
        if (mat_mul(m, mi) != id)
            throw std::logic_error("generator self-check: walk inverse mismatch");
        if (mat_det(m) != 1)
            throw std::logic_error("generator self-check: walk determinant != 1");
    }

    gs.first = {Gen::A, Gen::B, Gen::AInv};
    for (int prev = 0; prev < 4; ++prev) {
        int n = 0;
        for (Gen g : {Gen::A, Gen::B, Gen::AInv, Gen::BInv}) {
            if (g == inverse(static_cast<Gen>(prev))) continue;
            gs.next[prev][n++] = g;
        }
    }

    check_word_distinctness(gs.mat);
    return gs;
}

}  // namespace

const GeneratorSet& generators() {
    static const GeneratorSet gs = build();
    return gs;
}

Gen select_first(unsigned symbol) {
    if (symbol < 1 || symbol > 3) throw std::invalid_argument("walk symbol outside {1,2,3}");
    return generators().first[symbol - 1];
}

Gen select_next(Gen prev, unsigned symbol) {
    if (symbol < 1 || symbol > 3) throw std::invalid_argument("walk symbol outside {1,2,3}");
    return generators().next[static_cast<int>(prev)][symbol - 1];
}

}  // namespace spinel
