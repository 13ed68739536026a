#include "spinel/randgen.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "spinel/hash.hpp"

namespace spinel {

namespace {

// Fixed affine encoding of (stream id, counter) into the 16-byte message.
// The raw big-endian encoding degenerates: its zero bytes collapse to
// single walk symbols and consecutive counters share long walk prefixes,
// which measurably biases the output. The offsets keep every message a
// full-length walk; the odd multiplier decorrelates successive counters.
constexpr std::uint64_t kIdOffset = 0x9e3779b97f4a7c15ull;
constexpr std::uint64_t kCtrMul = 0xd1b54a32d192ed03ull;
constexpr std::uint64_t kCtrOffset = 0x8bb84b93962eacc9ull;

void store_be64(std::uint8_t* p, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
}

class BitPacker {
public:
    explicit BitPacker(std::vector<std::uint8_t>& out, std::uint64_t nbits)
        : out_(out), remaining_(nbits) {
        out_.reserve((nbits + 7) / 8);
    }

    bool done() const { return remaining_ == 0; }

    // Emits the `width` low bits of v, MSB-first, stopping at the bit budget.
    void push(std::uint32_t v, unsigned width) {
        for (int j = static_cast<int>(width) - 1; j >= 0 && remaining_ != 0; --j) {
            const std::uint32_t bit = (v >> j) & 1;
            if (fill_ == 0) out_.push_back(0);
            out_.back() |= static_cast<std::uint8_t>(bit << (7 - fill_));
            fill_ = (fill_ + 1) % 8;
            --remaining_;
        }
    }

private:
    std::vector<std::uint8_t>& out_;
    std::uint64_t remaining_;
    unsigned fill_ = 0;
};

}  // namespace

std::vector<std::uint8_t> generate_stream(std::uint64_t stream_id, std::uint64_t nbits) {
    std::vector<std::uint8_t> out;
    BitPacker packer(out, nbits);
    std::array<std::uint8_t, 16> msg;
    store_be64(msg.data(), stream_id + kIdOffset);
    std::uint64_t ctr = 0;
    while (!packer.done()) {
        store_be64(msg.data() + 8, ctr * kCtrMul + kCtrOffset);
        const Digest d = hash(msg);
        for (std::size_t w = 0; w < kDigestWords && !packer.done(); ++w)
            packer.push(d.word(w), 31);
        ++ctr;
    }
    return out;
}

void generate_streams(const StreamSpec& spec, std::ostream& out) {
    if (spec.bits_per_stream == 0) throw std::invalid_argument("bits_per_stream must be positive");
    // Streams are emitted back to back; a stream whose bit count is not a
    // multiple of 8 is padded to a byte boundary so per-stream output stays
    // byte-aligned and independent of its successors.
    for (std::uint64_t s = 0; s < spec.stream_count; ++s) {
        const auto bytes = generate_stream(spec.id_offset + s, spec.bits_per_stream);
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("stream write failed");
    }
}

namespace {

std::uint64_t count_ones(std::span<const std::uint8_t> packed, std::uint64_t nbits) {
    std::uint64_t ones = 0;
    const std::uint64_t full = nbits / 8;
    for (std::uint64_t i = 0; i < full; ++i) ones += std::popcount(packed[i]);
    for (std::uint64_t b = full * 8; b < nbits; ++b)
        ones += (packed[b / 8] >> (7 - b % 8)) & 1;
    return ones;
}

void check_bits(std::span<const std::uint8_t> packed, std::uint64_t nbits) {
    if (nbits < 100) throw std::invalid_argument("statistical test needs at least 100 bits");
    if (packed.size() * 8 < nbits) throw std::invalid_argument("bit buffer shorter than nbits");
}

}  // namespace

double monobit_test(std::span<const std::uint8_t> packed, std::uint64_t nbits) {
    check_bits(packed, nbits);
    const std::uint64_t ones = count_ones(packed, nbits);
    const double n = static_cast<double>(nbits);
    const double s = 2.0 * static_cast<double>(ones) - n;
    return std::erfc(std::fabs(s) / std::sqrt(2.0 * n));
}

double runs_test(std::span<const std::uint8_t> packed, std::uint64_t nbits) {
    check_bits(packed, nbits);
    const double n = static_cast<double>(nbits);
    const double pi = static_cast<double>(count_ones(packed, nbits)) / n;
    if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(n)) return 0.0;

    auto bit_at = [&](std::uint64_t i) { return (packed[i / 8] >> (7 - i % 8)) & 1; };
    std::uint64_t v = 1;
    int prev = bit_at(0);
    for (std::uint64_t i = 1; i < nbits; ++i) {
        const int cur = bit_at(i);
        v += (cur != prev);
        prev = cur;
    }
    const double expected = 2.0 * n * pi * (1.0 - pi);
    return std::erfc(std::fabs(static_cast<double>(v) - expected) /
                     (2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi)));
}

}  // namespace spinel
