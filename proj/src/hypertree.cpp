#include "spinel/hypertree.hpp"

#include <stdexcept>

namespace spinel {

namespace {

Digest ht_node(std::uint32_t layer, std::uint64_t tree_idx, const SeedContext& sk,
               const SeedContext& pub, const SpinelParams& params, std::uint32_t height,
               std::uint64_t index, std::uint32_t target_leaf, std::vector<Digest>* auth,
               const std::uint32_t* wots_digits, WotsSig* wots_sig_out) {
    if (height == 0) {
        Adrs kp;
        kp.layer = layer;
        kp.tree = tree_idx;
        kp.set_key_pair(static_cast<std::uint32_t>(index));
        const bool capture = wots_sig_out && index == target_leaf;
        return wots_leaf(sk, pub, kp, params.wots(), capture ? wots_digits : nullptr,
                         capture ? wots_sig_out : nullptr);
    }
    const Digest left = ht_node(layer, tree_idx, sk, pub, params, height - 1, 2 * index,
                                target_leaf, auth, wots_digits, wots_sig_out);
    const Digest right = ht_node(layer, tree_idx, sk, pub, params, height - 1, 2 * index + 1,
                                 target_leaf, auth, wots_digits, wots_sig_out);
    if (auth && index == (static_cast<std::uint64_t>(target_leaf) >> height))
        (*auth)[height - 1] = ((target_leaf >> (height - 1)) & 1) ? left : right;

    Adrs a;
    a.layer = layer;
    a.tree = tree_idx;
    a.set_type(AdrsType::TreeNode);
    a.set_height(height);
    a.set_index(index);
    std::array<std::uint8_t, 2 * kDigestBytes> children;
    std::copy(left.bytes.begin(), left.bytes.end(), children.begin());
    std::copy(right.bytes.begin(), right.bytes.end(), children.begin() + kDigestBytes);
    return thash(pub, a, children);
}

void check_indices(std::uint64_t idx_tree, std::uint32_t idx_leaf, const SpinelParams& params) {
    const std::uint32_t tree_bits = params.idx_tree_bits();
    if (tree_bits < 64 && idx_tree >= (1ull << tree_bits))
        throw std::invalid_argument("idx_tree out of range");
    if (idx_leaf >= (1u << params.tree_height()))
        throw std::invalid_argument("idx_leaf out of range");
}

}  // namespace

Digest treehash(std::uint32_t layer, std::uint64_t tree_idx, const SeedContext& sk,
                const SeedContext& pub, const SpinelParams& params, std::uint32_t target_leaf,
                std::vector<Digest>* auth_out, const std::uint32_t* wots_digits,
                WotsSig* wots_sig_out) {
    if (auth_out) auth_out->assign(params.tree_height(), Digest{});
    return ht_node(layer, tree_idx, sk, pub, params, params.tree_height(), 0, target_leaf,
                   auth_out, wots_digits, wots_sig_out);
}

HtSig ht_sign(const Digest& msg_root, std::uint64_t idx_tree, std::uint32_t idx_leaf,
              const SeedContext& sk, const SeedContext& pub, const SpinelParams& params) {
    check_indices(idx_tree, idx_leaf, params);
    const std::uint32_t hp = params.tree_height();
    const WotsParams wp = params.wots();

    HtSig sig;
    sig.layers.resize(params.d);
    Digest cur = msg_root;
    std::uint64_t t = idx_tree;
    std::uint32_t leaf = idx_leaf;
    for (std::uint32_t layer = 0; layer < params.d; ++layer) {
        const auto digits = msg_to_basew(cur.bytes, wp);
        auto& out = sig.layers[layer];
        cur = treehash(layer, t, sk, pub, params, leaf, &out.auth, digits.data(), &out.wots);
        leaf = static_cast<std::uint32_t>(t & ((1ull << hp) - 1));
        t >>= hp;
    }
    return sig;
}

Digest ht_verify(const Digest& msg_root, const HtSig& sig, std::uint64_t idx_tree,
                 std::uint32_t idx_leaf, const SeedContext& pub, const SpinelParams& params) {
    check_indices(idx_tree, idx_leaf, params);
    const std::uint32_t hp = params.tree_height();
    const WotsParams wp = params.wots();
    if (sig.layers.size() != params.d)
        throw std::invalid_argument("hypertree signature has wrong layer count");

    Digest cur = msg_root;
    std::uint64_t t = idx_tree;
    std::uint32_t leaf = idx_leaf;
    for (std::uint32_t layer = 0; layer < params.d; ++layer) {
        const auto& in = sig.layers[layer];
        if (in.auth.size() != hp)
            throw std::invalid_argument("hypertree auth path has wrong length");
        Adrs kp;
        kp.layer = layer;
        kp.tree = t;
        kp.set_key_pair(leaf);
        Digest node = wots_pk_from_sig(in.wots, cur.bytes, pub, kp, wp);

        std::uint64_t idx = leaf;
        for (std::uint32_t z = 1; z <= hp; ++z) {
            std::array<std::uint8_t, 2 * kDigestBytes> children;
            const Digest& sibling = in.auth[z - 1];
            if (idx & 1) {
                std::copy(sibling.bytes.begin(), sibling.bytes.end(), children.begin());
                std::copy(node.bytes.begin(), node.bytes.end(), children.begin() + kDigestBytes);
            } else {
                std::copy(node.bytes.begin(), node.bytes.end(), children.begin());
                std::copy(sibling.bytes.begin(), sibling.bytes.end(),
                          children.begin() + kDigestBytes);
            }
            idx >>= 1;
            Adrs a;
            a.layer = layer;
            a.tree = t;
            a.set_type(AdrsType::TreeNode);
            a.set_height(z);
            a.set_index(idx);
            node = thash(pub, a, children);
        }
        cur = node;
        leaf = static_cast<std::uint32_t>(t & ((1ull << hp) - 1));
        t >>= hp;
    }
    return cur;
}

}  // namespace spinel
