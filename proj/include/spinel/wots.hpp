#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinel/adrs.hpp"
#include "spinel/digest.hpp"
#include "spinel/params.hpp"
#include "spinel/thash.hpp"

namespace spinel {

struct WotsSig {
    std::vector<Digest> chains;   // len entries

    friend bool operator==(const WotsSig&, const WotsSig&) = default;
};

// Applies `steps` tweakable-hash iterations to x, walking the hash-position
// context word through start .. start+steps-1. Requires start+steps <= w-1.
// `adrs` must carry layer/tree/key-pair/chain identity (type 1).
Digest chain(const Digest& x, std::uint32_t start, std::uint32_t steps,
             const SeedContext& pub, Adrs adrs, const WotsParams& wp);

// Base-w digits of the 64-byte digest (MSB-first within each byte) followed
// by the big-endian checksum digits. Requires md.size() == 64.
std::vector<std::uint32_t> msg_to_basew(std::span<const std::uint8_t> md, const WotsParams& wp);

// One-time public key: every chain advanced w-1 steps, compressed by a
// type-2 thash. `keypair_adrs` carries layer/tree/key-pair.
Digest wots_pk_gen(const SeedContext& sk, const SeedContext& pub, const Adrs& keypair_adrs,
                   const WotsParams& wp);

WotsSig wots_sign(std::span<const std::uint8_t> md, const SeedContext& sk, const SeedContext& pub,
                  const Adrs& keypair_adrs, const WotsParams& wp);

Digest wots_pk_from_sig(const WotsSig& sig, std::span<const std::uint8_t> md,
                        const SeedContext& pub, const Adrs& keypair_adrs, const WotsParams& wp);

// Tree-leaf computation: runs every chain to the end (as wots_pk_gen) and,
// when `digits`/`sig_out` are given, captures the chain values at the digit
// cut points, producing the signature at zero extra hash cost.
Digest wots_leaf(const SeedContext& sk, const SeedContext& pub, const Adrs& keypair_adrs,
                 const WotsParams& wp, const std::uint32_t* digits, WotsSig* sig_out);

}  // namespace spinel
