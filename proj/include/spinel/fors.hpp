#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinel/adrs.hpp"
#include "spinel/digest.hpp"
#include "spinel/params.hpp"
#include "spinel/thash.hpp"

namespace spinel {

struct ForsSig {
    struct TreeReveal {
        Digest leaf_secret;
        std::vector<Digest> auth;   // b nodes, bottom-up

        friend bool operator==(const TreeReveal&, const TreeReveal&) = default;
    };
    std::vector<TreeReveal> trees;  // k entries

    friend bool operator==(const ForsSig&, const ForsSig&) = default;
};

// Splits md into k consecutive b-bit groups, MSB-first, each read big-endian.
// Throws std::invalid_argument if md carries fewer than k*b bits.
std::vector<std::uint32_t> message_to_indices(std::span<const std::uint8_t> md, std::uint32_t k,
                                              std::uint32_t b);

// Root of one of the k trees. `base_adrs` carries layer/tree/key-pair of the
// FORS instance.
Digest fors_tree_root(std::uint32_t tree_index, const SeedContext& sk, const SeedContext& pub,
                      const Adrs& base_adrs, const SpinelParams& params);

// With pk_out set, also emits the compressed public key from the same tree
// build (no extra hash work).
ForsSig fors_sign(std::span<const std::uint8_t> md, const SeedContext& sk, const SeedContext& pub,
                  const Adrs& base_adrs, const SpinelParams& params, Digest* pk_out = nullptr);

Digest fors_pk_from_sig(const ForsSig& sig, std::span<const std::uint8_t> md,
                        const SeedContext& pub, const Adrs& base_adrs, const SpinelParams& params);

// Direct public key (all roots + compression); sign/verify agree with it.
Digest fors_pk(const SeedContext& sk, const SeedContext& pub, const Adrs& base_adrs,
               const SpinelParams& params);

}  // namespace spinel
