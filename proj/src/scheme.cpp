#include "spinel/scheme.hpp"

#include <cstring>

#include "spinel/thash.hpp"

namespace spinel {

namespace {

Adrs fors_base_adrs(std::uint64_t idx_tree, std::uint32_t idx_leaf) {
    Adrs a;
    a.layer = 0;
    a.tree = idx_tree;
    a.set_key_pair(idx_leaf);
    return a;
}

}  // namespace

std::pair<SecretKey, PublicKey> keygen(std::span<const std::uint8_t> entropy,
                                       const SpinelParams& params) {
    params.validate();
    if (entropy.size() < kEntropyBytes)
        throw std::invalid_argument("keygen requires 192 bytes of entropy");
    SecretKey sk;
    std::memcpy(sk.sk_seed.bytes.data(), entropy.data(), kSeedBytes);
    std::memcpy(sk.sk_prf.bytes.data(), entropy.data() + kSeedBytes, kSeedBytes);
    std::memcpy(sk.pk_seed.bytes.data(), entropy.data() + 2 * kSeedBytes, kSeedBytes);

    const SeedContext skc(sk.sk_seed);
    const SeedContext pkc(sk.pk_seed);
    sk.pk_root = treehash(params.d - 1, 0, skc, pkc, params);

    PublicKey pk{sk.pk_seed, sk.pk_root};
    return {sk, pk};
}

SpinelSignature sign(std::span<const std::uint8_t> msg, const SecretKey& sk,
                     const SpinelParams& params, std::span<const std::uint8_t> opt_rand) {
    params.validate();
    SpinelSignature sig;
    sig.randomizer = message_randomizer(sk.sk_prf, opt_rand, msg);

    const MsgIndices mi = h_msg(sig.randomizer, sk.pk_seed, sk.pk_root, msg, params);
    const SeedContext skc(sk.sk_seed);
    const SeedContext pkc(sk.pk_seed);

    Digest fors_root;
    sig.fors = fors_sign(mi.md, skc, pkc, fors_base_adrs(mi.idx_tree, mi.idx_leaf), params,
                         &fors_root);
    sig.ht = ht_sign(fors_root, mi.idx_tree, mi.idx_leaf, skc, pkc, params);
    return sig;
}

bool verify(std::span<const std::uint8_t> msg, const SpinelSignature& sig, const PublicKey& pk,
            const SpinelParams& params) {
    params.validate();
    const WotsParams wp = params.wots();
    if (sig.fors.trees.size() != params.k || sig.ht.layers.size() != params.d) return false;
    for (const auto& t : sig.fors.trees)
        if (t.auth.size() != params.b) return false;
    for (const auto& l : sig.ht.layers)
        if (l.auth.size() != params.tree_height() || l.wots.chains.size() != wp.len) return false;

    const MsgIndices mi = h_msg(sig.randomizer, pk.pk_seed, pk.pk_root, msg, params);
    const SeedContext pkc(pk.pk_seed);
    const Digest fors_root = fors_pk_from_sig(
        sig.fors, mi.md, pkc, fors_base_adrs(mi.idx_tree, mi.idx_leaf), params);
    const Digest root = ht_verify(fors_root, sig.ht, mi.idx_tree, mi.idx_leaf, pkc, params);
    return root == pk.pk_root;
}

std::uint64_t signature_encoded_bytes(const SpinelParams& params) {
    const WotsParams wp = params.wots();
    return static_cast<std::uint64_t>(kDigestBytes) *
           (1 + static_cast<std::uint64_t>(params.k) * (params.b + 1) + params.h +
            static_cast<std::uint64_t>(params.d) * wp.len);
}

namespace {

void put(std::vector<std::uint8_t>& out, std::span<const std::uint8_t> bytes) {
    out.insert(out.end(), bytes.begin(), bytes.end());
}

struct Reader {
    std::span<const std::uint8_t> in;
    std::size_t pos = 0;

    std::span<const std::uint8_t> take(std::size_t n) {
        if (pos + n > in.size()) throw DecodeError("input truncated");
        auto s = in.subspan(pos, n);
        pos += n;
        return s;
    }

    Digest take_digest() {
        auto s = take(kDigestBytes);
        if (!digest_words_valid(s)) throw DecodeError("digest word out of field range");
        Digest d;
        std::memcpy(d.bytes.data(), s.data(), kDigestBytes);
        return d;
    }

    Seed take_seed() {
        auto s = take(kSeedBytes);
        Seed sd;
        std::memcpy(sd.bytes.data(), s.data(), kSeedBytes);
        return sd;
    }

    void expect_end() const {
        if (pos != in.size()) throw DecodeError("trailing bytes after decoded value");
    }
};

}  // namespace

std::vector<std::uint8_t> encode(const SecretKey& sk) {
    std::vector<std::uint8_t> out;
    out.reserve(kSecretKeyBytes);
    put(out, sk.sk_seed.bytes);
    put(out, sk.sk_prf.bytes);
    put(out, sk.pk_seed.bytes);
    put(out, sk.pk_root.bytes);
    return out;
}

std::vector<std::uint8_t> encode(const PublicKey& pk) {
    std::vector<std::uint8_t> out;
    out.reserve(kPublicKeyBytes);
    put(out, pk.pk_seed.bytes);
    put(out, pk.pk_root.bytes);
    return out;
}

std::vector<std::uint8_t> encode(const SpinelSignature& sig, const SpinelParams& params) {
    std::vector<std::uint8_t> out;
    out.reserve(signature_encoded_bytes(params));
    put(out, sig.randomizer.bytes);
    for (const auto& t : sig.fors.trees) {
        put(out, t.leaf_secret.bytes);
        for (const auto& n : t.auth) put(out, n.bytes);
    }
    for (const auto& l : sig.ht.layers) {
        for (const auto& c : l.wots.chains) put(out, c.bytes);
        for (const auto& n : l.auth) put(out, n.bytes);
    }
    return out;
}

SecretKey decode_secret_key(std::span<const std::uint8_t> in) {
    if (in.size() != kSecretKeyBytes) throw DecodeError("secret key must be 256 bytes");
    Reader r{in};
    SecretKey sk;
    sk.sk_seed = r.take_seed();
    sk.sk_prf = r.take_seed();
    sk.pk_seed = r.take_seed();
    sk.pk_root = r.take_digest();
    r.expect_end();
    return sk;
}

PublicKey decode_public_key(std::span<const std::uint8_t> in) {
    if (in.size() != kPublicKeyBytes) throw DecodeError("public key must be 128 bytes");
    Reader r{in};
    PublicKey pk;
    pk.pk_seed = r.take_seed();
    pk.pk_root = r.take_digest();
    r.expect_end();
    return pk;
}

SpinelSignature decode_signature(std::span<const std::uint8_t> in, const SpinelParams& params) {
    params.validate();
    if (in.size() != signature_encoded_bytes(params))
        throw DecodeError("signature length does not match the parameter set");
    const WotsParams wp = params.wots();
    Reader r{in};
    SpinelSignature sig;
    sig.randomizer = r.take_digest();
    sig.fors.trees.resize(params.k);
    for (auto& t : sig.fors.trees) {
        t.leaf_secret = r.take_digest();
        t.auth.resize(params.b);
        for (auto& n : t.auth) n = r.take_digest();
    }
    sig.ht.layers.resize(params.d);
    for (auto& l : sig.ht.layers) {
        l.wots.chains.resize(wp.len);
        for (auto& c : l.wots.chains) c = r.take_digest();
        l.auth.resize(params.tree_height());
        for (auto& n : l.auth) n = r.take_digest();
    }
    r.expect_end();
    return sig;
}

bool verify_encoded(std::span<const std::uint8_t> msg, std::span<const std::uint8_t> sig_bytes,
                    std::span<const std::uint8_t> pk_bytes, const SpinelParams& params) {
    try {
        const PublicKey pk = decode_public_key(pk_bytes);
        const SpinelSignature sig = decode_signature(sig_bytes, params);
        return verify(msg, sig, pk, params);
    } catch (const DecodeError&) {
        return false;
    }
}

}  // namespace spinel
