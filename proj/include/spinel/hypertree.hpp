#pragma once

#include <cstdint>
#include <vector>

#include "spinel/digest.hpp"
#include "spinel/params.hpp"
#include "spinel/thash.hpp"
#include "spinel/wots.hpp"

namespace spinel {

struct HtSig {
    struct Layer {
        WotsSig wots;
        std::vector<Digest> auth;   // h/d nodes, bottom-up

        friend bool operator==(const Layer&, const Layer&) = default;
    };
    std::vector<Layer> layers;      // d entries, layer 0 first

    friend bool operator==(const HtSig&, const HtSig&) = default;
};

// Root of the height-h/d tree at (layer, tree_idx) whose leaves are one-time
// public keys. With `target_leaf`/`auth_out` set, also collects the
// authentication path; with `wots_digits`/`wots_sig_out` set, captures the
// one-time signature for the target leaf during the build.
Digest treehash(std::uint32_t layer, std::uint64_t tree_idx, const SeedContext& sk,
                const SeedContext& pub, const SpinelParams& params,
                std::uint32_t target_leaf = 0, std::vector<Digest>* auth_out = nullptr,
                const std::uint32_t* wots_digits = nullptr, WotsSig* wots_sig_out = nullptr);

// Signs msg_root with the chain of one-time signatures along the hypertree
// path selected by (idx_tree, idx_leaf). Throws std::invalid_argument on
// index range violations.
HtSig ht_sign(const Digest& msg_root, std::uint64_t idx_tree, std::uint32_t idx_leaf,
              const SeedContext& sk, const SeedContext& pub, const SpinelParams& params);

// Recovers the top root implied by the signature; the caller compares it to
// the public root.
Digest ht_verify(const Digest& msg_root, const HtSig& sig, std::uint64_t idx_tree,
                 std::uint32_t idx_leaf, const SeedContext& pub, const SpinelParams& params);

}  // namespace spinel
