#include "spinel/fors.hpp"

#include <stdexcept>

namespace spinel {

std::vector<std::uint32_t> message_to_indices(std::span<const std::uint8_t> md, std::uint32_t k,
                                              std::uint32_t b) {
    if (md.size() * 8 < static_cast<std::size_t>(k) * b)
        throw std::invalid_argument("message digest shorter than k*b bits");
    std::vector<std::uint32_t> indices;
    indices.reserve(k);
    std::size_t bit = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t v = 0;
        for (std::uint32_t j = 0; j < b; ++j, ++bit)
            v = (v << 1) | ((md[bit / 8] >> (7 - bit % 8)) & 1);
        indices.push_back(v);
    }
    return indices;
}

namespace {

Adrs fors_node_adrs(const Adrs& base, std::uint32_t key_pair, std::uint32_t height,
                    std::uint64_t index) {
    Adrs a = base;
    a.set_type(AdrsType::ForsNode);
    a.set_key_pair(key_pair);
    a.set_height(height);
    a.set_index(index);
    return a;
}

// Merkle node of one FORS tree; `index` counts nodes at `height` within the
// tree, the serialized index word is global across the forest.
Digest fors_node(const SeedContext& sk, const SeedContext& pub, const Adrs& base,
                 const SpinelParams& params, std::uint32_t tree_index, std::uint32_t height,
                 std::uint64_t index, std::uint32_t target_leaf, std::vector<Digest>* auth) {
    const std::uint32_t kp = base.ctx[0];
    if (height == 0) {
        const std::uint64_t global = tree_index * params.fors_leaves() + index;
        const Adrs a = fors_node_adrs(base, kp, 0, global);
        const Digest secret = prf(sk, a);
        return thash(pub, a, secret.bytes);
    }
    const Digest left =
        fors_node(sk, pub, base, params, tree_index, height - 1, 2 * index, target_leaf, auth);
    const Digest right =
        fors_node(sk, pub, base, params, tree_index, height - 1, 2 * index + 1, target_leaf, auth);
    if (auth && index == (target_leaf >> height))
        (*auth)[height - 1] = ((target_leaf >> (height - 1)) & 1) ? left : right;

    const std::uint64_t global = (static_cast<std::uint64_t>(tree_index) << (params.b - height)) + index;
    const Adrs a = fors_node_adrs(base, kp, height, global);
    std::array<std::uint8_t, 2 * kDigestBytes> children;
    std::copy(left.bytes.begin(), left.bytes.end(), children.begin());
    std::copy(right.bytes.begin(), right.bytes.end(), children.begin() + kDigestBytes);
    return thash(pub, a, children);
}

Digest compress_roots(const SeedContext& pub, const Adrs& base,
                      std::span<const std::uint8_t> roots) {
    Adrs a = base;
    a.set_type(AdrsType::ForsRoots);
    a.set_key_pair(base.ctx[0]);
    return thash(pub, a, roots);
}

}  // namespace

Digest fors_tree_root(std::uint32_t tree_index, const SeedContext& sk, const SeedContext& pub,
                      const Adrs& base_adrs, const SpinelParams& params) {
    if (tree_index >= params.k) throw std::invalid_argument("fors tree index out of range");
    return fors_node(sk, pub, base_adrs, params, tree_index, params.b, 0, 0, nullptr);
}

ForsSig fors_sign(std::span<const std::uint8_t> md, const SeedContext& sk, const SeedContext& pub,
                  const Adrs& base_adrs, const SpinelParams& params, Digest* pk_out) {
    const auto indices = message_to_indices(md, params.k, params.b);
    ForsSig sig;
    sig.trees.resize(params.k);
    std::vector<std::uint8_t> roots;
    roots.reserve(static_cast<std::size_t>(params.k) * kDigestBytes);
    for (std::uint32_t i = 0; i < params.k; ++i) {
        auto& reveal = sig.trees[i];
        const std::uint64_t global = i * params.fors_leaves() + indices[i];
        reveal.leaf_secret = prf(sk, fors_node_adrs(base_adrs, base_adrs.ctx[0], 0, global));
        reveal.auth.assign(params.b, Digest{});
        const Digest root =
            fors_node(sk, pub, base_adrs, params, i, params.b, 0, indices[i], &reveal.auth);
        roots.insert(roots.end(), root.bytes.begin(), root.bytes.end());
    }
    if (pk_out) *pk_out = compress_roots(pub, base_adrs, roots);
    return sig;
}

Digest fors_pk_from_sig(const ForsSig& sig, std::span<const std::uint8_t> md,
                        const SeedContext& pub, const Adrs& base_adrs,
                        const SpinelParams& params) {
    if (sig.trees.size() != params.k) throw std::invalid_argument("fors signature has wrong arity");
    const auto indices = message_to_indices(md, params.k, params.b);
    const std::uint32_t kp = base_adrs.ctx[0];
    std::vector<std::uint8_t> roots;
    roots.reserve(static_cast<std::size_t>(params.k) * kDigestBytes);
    for (std::uint32_t i = 0; i < params.k; ++i) {
        const auto& reveal = sig.trees[i];
        if (reveal.auth.size() != params.b)
            throw std::invalid_argument("fors auth path has wrong length");
        std::uint64_t idx = indices[i];
        std::uint64_t global = i * params.fors_leaves() + idx;
        Digest node =
            thash(pub, fors_node_adrs(base_adrs, kp, 0, global), reveal.leaf_secret.bytes);
        for (std::uint32_t z = 1; z <= params.b; ++z) {
            std::array<std::uint8_t, 2 * kDigestBytes> children;
            const Digest& sibling = reveal.auth[z - 1];
            if (idx & 1) {
                std::copy(sibling.bytes.begin(), sibling.bytes.end(), children.begin());
                std::copy(node.bytes.begin(), node.bytes.end(), children.begin() + kDigestBytes);
            } else {
                std::copy(node.bytes.begin(), node.bytes.end(), children.begin());
                std::copy(sibling.bytes.begin(), sibling.bytes.end(),
                          children.begin() + kDigestBytes);
            }
            idx >>= 1;
            global = (static_cast<std::uint64_t>(i) << (params.b - z)) + idx;
            node = thash(pub, fors_node_adrs(base_adrs, kp, z, global), children);
        }
        roots.insert(roots.end(), node.bytes.begin(), node.bytes.end());
    }
    return compress_roots(pub, base_adrs, roots);
}

Digest fors_pk(const SeedContext& sk, const SeedContext& pub, const Adrs& base_adrs,
               const SpinelParams& params) {
    std::vector<std::uint8_t> roots;
    roots.reserve(static_cast<std::size_t>(params.k) * kDigestBytes);
    for (std::uint32_t i = 0; i < params.k; ++i) {
        const Digest root = fors_node(sk, pub, base_adrs, params, i, params.b, 0, 0, nullptr);
        roots.insert(roots.end(), root.bytes.begin(), root.bytes.end());
    }
    return compress_roots(pub, base_adrs, roots);
}

}  // namespace spinel
