#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "spinel/digest.hpp"

namespace spinel {

// Test-stream construction: per stream, successive 16-byte messages are
// hashed and the 31 significant bits of each digest word are emitted
// MSB-first until bits_per_stream bits have been produced.
struct StreamSpec {
    std::uint64_t stream_count = 100;
    std::uint64_t bits_per_stream = 1'000'000;
    std::uint64_t id_offset = 0;
};

// Bits usable per digest: 16 words x 31 significant bits.
inline constexpr std::uint64_t kStreamBitsPerDigest = 496;

// One stream, packed MSB-first; the final byte of an unaligned stream is
// zero-padded on the right.
std::vector<std::uint8_t> generate_stream(std::uint64_t stream_id, std::uint64_t nbits);

// All streams concatenated in order; total ceil(count*bits/8) bytes.
void generate_streams(const StreamSpec& spec, std::ostream& out);

// Frequency-test p-value over nbits MSB-first-packed bits. Throws
// std::invalid_argument for nbits < 100.
double monobit_test(std::span<const std::uint8_t> packed, std::uint64_t nbits);

// Runs-test p-value; returns 0 when the ones-proportion precondition fails.
double runs_test(std::span<const std::uint8_t> packed, std::uint64_t nbits);

}  // namespace spinel
