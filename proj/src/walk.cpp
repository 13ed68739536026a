#include "spinel/walk.hpp"

#include <stdexcept>

namespace spinel {

namespace {

struct ByteSymbols {
    std::uint8_t len;
    std::array<std::uint8_t, 6> sym;   // walk symbols (trit + 1), MSB-first
};

constexpr std::array<ByteSymbols, 256> make_byte_symbols() {
    std::array<ByteSymbols, 256> table{};
    for (int b = 0; b < 256; ++b) {
        std::array<std::uint8_t, 6> digits{};   // digits[j] = coefficient of 3^j
        int v = b;
        for (int j = 0; j < 6; ++j) {
            digits[j] = static_cast<std::uint8_t>(v % 3);
            v /= 3;
        }
        int len = 6;
        while (len > 1 && digits[len - 1] == 0) --len;   // keep one digit for 0x00
        ByteSymbols bs{};
        bs.len = static_cast<std::uint8_t>(len);
        for (int i = 0; i < len; ++i) bs.sym[i] = static_cast<std::uint8_t>(digits[len - 1 - i] + 1);
        table[b] = bs;
    }
    return table;
}

constexpr auto kByteSymbols = make_byte_symbols();

}  // namespace

std::vector<std::uint8_t> byte_to_trits(std::uint8_t b) {
    const ByteSymbols& bs = kByteSymbols[b];
    std::vector<std::uint8_t> out(bs.len);
    for (int i = 0; i < bs.len; ++i) out[i] = static_cast<std::uint8_t>(bs.sym[i] - 1);
    return out;
}

std::vector<std::uint8_t> encode_message(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out;
    out.reserve(data.size() * 5);
    for (std::uint8_t b : data) {
        const ByteSymbols& bs = kByteSymbols[b];
        out.insert(out.end(), bs.sym.begin(), bs.sym.begin() + bs.len);
    }
    return out;
}

void WalkState::step(unsigned symbol) {
    const GeneratorSet& gs = generators();
    Gen g;
    if (started_) {
        if (symbol < 1 || symbol > 3) throw std::invalid_argument("walk symbol outside {1,2,3}");
        g = gs.next[static_cast<int>(prev_)][symbol - 1];
    } else {
        if (symbol < 1 || symbol > 3) throw std::invalid_argument("walk symbol outside {1,2,3}");
        g = gs.first[symbol - 1];
        started_ = true;
    }
    acc_ = mat_mul(acc_, gs.mat[static_cast<int>(g)]);
    prev_ = g;
}

void WalkState::absorb_byte(std::uint8_t b) {
    const GeneratorSet& gs = generators();
    const ByteSymbols& bs = kByteSymbols[b];
    for (int i = 0; i < bs.len; ++i) {
        Gen g = started_ ? gs.next[static_cast<int>(prev_)][bs.sym[i] - 1] : gs.first[bs.sym[i] - 1];
        started_ = true;
        acc_ = mat_mul(acc_, gs.mat[static_cast<int>(g)]);
        prev_ = g;
    }
}

void WalkState::absorb(std::span<const std::uint8_t> data) {
    for (std::uint8_t b : data) absorb_byte(b);
}

Mat4 walk(std::span<const std::uint8_t> symbols) {
    WalkState st;
    for (std::uint8_t s : symbols) st.step(s);
    return st.matrix();
}

std::vector<Gen> walk_trace(std::span<const std::uint8_t> symbols) {
    std::vector<Gen> trace;
    trace.reserve(symbols.size());
    bool started = false;
    Gen prev = Gen::A;
    for (std::uint8_t s : symbols) {
        Gen g = started ? select_next(prev, s) : select_first(s);
        trace.push_back(g);
        prev = g;
        started = true;
    }
    return trace;
}

}  // namespace spinel
