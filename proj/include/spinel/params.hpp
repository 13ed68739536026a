#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinel {

// Winternitz layout for a 512-bit message digest.
struct WotsParams {
    std::uint32_t w = 0;
    std::uint32_t log_w = 0;
    std::uint32_t len1 = 0;   // base-w digits of the message
    std::uint32_t len2 = 0;   // checksum digits
    std::uint32_t len = 0;    // len1 + len2

    static WotsParams for_w(std::uint32_t w);
};

// Full scheme parameter set. n is fixed at 64 bytes.
struct SpinelParams {
    std::uint32_t h = 0;   // hypertree height
    std::uint32_t d = 0;   // hypertree layers
    std::uint32_t b = 0;   // height of one FORS tree
    std::uint32_t k = 0;   // number of FORS trees
    std::uint32_t w = 0;   // Winternitz parameter (16 or 256)

    std::uint32_t tree_height() const { return h / d; }          // h' = h/d
    std::uint64_t fors_leaves() const { return 1ull << b; }      // t = 2^b
    std::uint32_t idx_tree_bits() const { return h - h / d; }
    WotsParams wots() const { return WotsParams::for_w(w); }

    // Validates d | h, w in {16, 256}, k*b + h <= 512 and basic ranges;
    // throws std::invalid_argument with a specific message.
    void validate() const;

    static SpinelParams make(std::uint32_t h, std::uint32_t d, std::uint32_t b,
                             std::uint32_t k, std::uint32_t w);
    // Named sets: F1..F10, P1..P10, desk.
    static std::optional<SpinelParams> by_name(std::string_view name);

    friend bool operator==(const SpinelParams&, const SpinelParams&) = default;
};

struct NamedParams {
    std::string name;
    SpinelParams params;
};

// All built-in named sets in declaration order.
const std::vector<NamedParams>& builtin_param_sets();

// Parses a registry: one "h d b k w" row per line, blank lines and
// '#' comments ignored. Throws std::invalid_argument on malformed rows.
std::vector<SpinelParams> parse_registry(std::istream& in);

// The built-in registry (the full 256-bit-security parameter table).
const std::vector<SpinelParams>& builtin_registry();

}  // namespace spinel
