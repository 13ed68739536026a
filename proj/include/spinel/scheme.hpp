#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spinel/digest.hpp"
#include "spinel/fors.hpp"
#include "spinel/hypertree.hpp"
#include "spinel/params.hpp"

namespace spinel {

inline constexpr std::size_t kPublicKeyBytes = 128;
inline constexpr std::size_t kSecretKeyBytes = 256;
inline constexpr std::size_t kEntropyBytes = 192;

struct SecretKey {
    Seed sk_seed;
    Seed sk_prf;
    Seed pk_seed;
    Digest pk_root;

    friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

struct PublicKey {
    Seed pk_seed;
    Digest pk_root;

    friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct SpinelSignature {
    Digest randomizer;
    ForsSig fors;
    HtSig ht;

    friend bool operator==(const SpinelSignature&, const SpinelSignature&) = default;
};

struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// entropy = sk_seed || sk_prf || pk_seed (192 bytes); throws on short input.
std::pair<SecretKey, PublicKey> keygen(std::span<const std::uint8_t> entropy,
                                       const SpinelParams& params);

// Deterministic for a fixed opt_rand (empty = 64 zero bytes); callers may
// pass 64 bytes of fresh randomness.
SpinelSignature sign(std::span<const std::uint8_t> msg, const SecretKey& sk,
                     const SpinelParams& params, std::span<const std::uint8_t> opt_rand = {});

bool verify(std::span<const std::uint8_t> msg, const SpinelSignature& sig, const PublicKey& pk,
            const SpinelParams& params);

// Fixed-layout codecs. Decoders validate total length and that every digest
// word lies below p; they throw DecodeError, never crash.
std::vector<std::uint8_t> encode(const SecretKey& sk);
std::vector<std::uint8_t> encode(const PublicKey& pk);
std::vector<std::uint8_t> encode(const SpinelSignature& sig, const SpinelParams& params);
SecretKey decode_secret_key(std::span<const std::uint8_t> in);
PublicKey decode_public_key(std::span<const std::uint8_t> in);
SpinelSignature decode_signature(std::span<const std::uint8_t> in, const SpinelParams& params);

// 64 * (1 + k*(b+1) + h + d*len).
std::uint64_t signature_encoded_bytes(const SpinelParams& params);

// Byte-level verification: malformed input rejects instead of throwing.
bool verify_encoded(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> sig_bytes,
                    std::span<const std::uint8_t> pk_bytes, const SpinelParams& params);

}  // namespace spinel
