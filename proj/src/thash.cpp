#include "spinel/thash.hpp"

#include <cstring>
#include <stdexcept>

namespace spinel {

namespace {
thread_local HashObserver* t_observer = nullptr;
}

void set_hash_observer(HashObserver* obs) { t_observer = obs; }
HashObserver* hash_observer() { return t_observer; }

Digest thash(const SeedContext& pub, const Adrs& adrs, std::span<const std::uint8_t> msg) {
    if (t_observer) t_observer->on_thash(adrs.type);
    WalkState st = pub.prefix();
    st.absorb(adrs.serialize());
    st.absorb(msg);
    return serialize_mat(st.matrix());
}

Digest thash(const Seed& pub, const Adrs& adrs, std::span<const std::uint8_t> msg) {
    return thash(SeedContext(pub), adrs, msg);
}

Digest prf(const SeedContext& sk, const Adrs& adrs) {
    if (t_observer) t_observer->on_prf(adrs.type);
    WalkState st = sk.prefix();
    st.absorb(adrs.serialize());
    return serialize_mat(st.matrix());
}

namespace {

// Big-endian value of a byte run masked to its low `bits` bits (bits < 64).
std::uint64_t masked_be(const std::uint8_t* p, std::uint32_t bits) {
    if (bits == 0) return 0;
    const std::uint32_t nbytes = (bits + 7) / 8;
    std::uint64_t v = 0;
    for (std::uint32_t i = 0; i < nbytes; ++i) v = (v << 8) | p[i];
    return v & ((1ull << bits) - 1);
}

}  // namespace

MsgIndices h_msg(const Digest& randomizer, const Seed& pk_seed, const Digest& pk_root,
                 std::span<const std::uint8_t> msg, const SpinelParams& params) {
    params.validate();
    std::vector<std::uint8_t> buf;
    buf.reserve(3 * kDigestBytes + msg.size());
    buf.insert(buf.end(), randomizer.bytes.begin(), randomizer.bytes.end());
    buf.insert(buf.end(), pk_seed.bytes.begin(), pk_seed.bytes.end());
    buf.insert(buf.end(), pk_root.bytes.begin(), pk_root.bytes.end());
    buf.insert(buf.end(), msg.begin(), msg.end());
    const Digest digest = hash(buf);

    MsgIndices out;
    const std::uint32_t md_bits = params.k * params.b;
    const std::uint32_t md_bytes = (md_bits + 7) / 8;
    const std::uint32_t tree_bits = params.idx_tree_bits();
    const std::uint32_t tree_bytes = (tree_bits + 7) / 8;
    const std::uint32_t leaf_bits = params.tree_height();

    out.md.assign(digest.bytes.begin(), digest.bytes.begin() + md_bytes);
    if (md_bits % 8 != 0)
        out.md.back() &= static_cast<std::uint8_t>(0xff << (8 - md_bits % 8));

    const std::uint8_t* p = digest.bytes.data() + md_bytes;
    if (tree_bits >= 64) {
        std::uint64_t v = 0;
        for (std::uint32_t i = 0; i < tree_bytes; ++i) v = (v << 8) | p[i];
        out.idx_tree = v;   // tree_bits == 64: full word
    } else {
        out.idx_tree = masked_be(p, tree_bits);
    }
    p += tree_bytes;
    out.idx_leaf = static_cast<std::uint32_t>(masked_be(p, leaf_bits));
    return out;
}

Digest message_randomizer(const Seed& sk_prf, std::span<const std::uint8_t> opt_rand,
                          std::span<const std::uint8_t> msg) {
    std::array<std::uint8_t, kSeedBytes> rand_bytes{};
    if (!opt_rand.empty()) {
        if (opt_rand.size() != kSeedBytes)
            throw std::invalid_argument("opt_rand must be 64 bytes");
        std::memcpy(rand_bytes.data(), opt_rand.data(), kSeedBytes);
    }
    std::vector<std::uint8_t> buf;
    buf.reserve(2 * kSeedBytes + msg.size());
    buf.insert(buf.end(), sk_prf.bytes.begin(), sk_prf.bytes.end());
    buf.insert(buf.end(), rand_bytes.begin(), rand_bytes.end());
    buf.insert(buf.end(), msg.begin(), msg.end());
    return hash(buf);
}

}  // namespace spinel
