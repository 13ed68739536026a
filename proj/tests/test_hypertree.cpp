#include <doctest.h>

#include <random>
#include <stdexcept>

#include "spinel/analysis.hpp"
#include "spinel/hypertree.hpp"

using namespace spinel;

namespace {

Seed random_seed(std::mt19937_64& rng) {
    Seed s;
    for (auto& b : s.bytes) b = static_cast<std::uint8_t>(rng());
    return s;
}

Digest random_root(std::mt19937_64& rng) {
    Digest d;
    for (auto& b : d.bytes) b = static_cast<std::uint8_t>(rng() & 0x7f);
    return d;
}

// Independent recursive builder over wots_pk_gen.
Digest oracle_node(std::uint32_t layer, std::uint64_t tree, const SeedContext& sk,
                   const SeedContext& pub, const SpinelParams& params, std::uint32_t height,
                   std::uint64_t index) {
    if (height == 0) {
        Adrs kp;
        kp.layer = layer;
        kp.tree = tree;
        kp.set_key_pair(static_cast<std::uint32_t>(index));
        return wots_pk_gen(sk, pub, kp, params.wots());
    }
    const Digest l = oracle_node(layer, tree, sk, pub, params, height - 1, 2 * index);
    const Digest r = oracle_node(layer, tree, sk, pub, params, height - 1, 2 * index + 1);
    std::vector<std::uint8_t> cat(l.bytes.begin(), l.bytes.end());
    cat.insert(cat.end(), r.bytes.begin(), r.bytes.end());
    Adrs a;
    a.layer = layer;
    a.tree = tree;
    a.set_type(AdrsType::TreeNode);
    a.set_height(height);
    a.set_index(index);
    return thash(pub, a, cat);
}

}  // namespace

TEST_CASE("two-leaf tree root") {
    std::mt19937_64 rng(0x5eed0501);
    const auto params = SpinelParams::make(2, 2, 4, 8, 16);   // h' = 1
    const SeedContext sk(random_seed(rng));
    const SeedContext pub(random_seed(rng));

    Adrs kp0;
    kp0.layer = 1;
    kp0.set_key_pair(0);
    Adrs kp1 = kp0;
    kp1.set_key_pair(1);
    const Digest pk0 = wots_pk_gen(sk, pub, kp0, params.wots());
    const Digest pk1 = wots_pk_gen(sk, pub, kp1, params.wots());
    std::vector<std::uint8_t> cat(pk0.bytes.begin(), pk0.bytes.end());
    cat.insert(cat.end(), pk1.bytes.begin(), pk1.bytes.end());
    Adrs a;
    a.layer = 1;
    a.set_type(AdrsType::TreeNode);
    a.set_height(1);
    a.set_index(0);
    CHECK(treehash(1, 0, sk, pub, params) == thash(pub, a, cat));
    CHECK(treehash(1, 0, sk, pub, params) == treehash(1, 0, sk, pub, params));
}

TEST_CASE("treehash matches the independent recursive oracle") {
    std::mt19937_64 rng(0x5eed0502);
    const auto params = SpinelParams::make(3, 1, 4, 8, 16);   // h' = 3
    const SeedContext sk(random_seed(rng));
    const SeedContext pub(random_seed(rng));
    CHECK(treehash(0, 5, sk, pub, params) == oracle_node(0, 5, sk, pub, params, 3, 0));
}

TEST_CASE("sign and verify recover the root") {
    std::mt19937_64 rng(0x5eed0503);
    const auto params = SpinelParams::make(8, 2, 4, 8, 16);
    const SeedContext sk(random_seed(rng));
    const SeedContext pub(random_seed(rng));
    const Digest top = treehash(params.d - 1, 0, sk, pub, params);

    for (int trial = 0; trial < 3; ++trial) {
        const Digest msg_root = random_root(rng);
        const std::uint64_t idx_tree = rng() % (1ull << params.idx_tree_bits());
        const std::uint32_t idx_leaf = static_cast<std::uint32_t>(rng() % (1u << params.tree_height()));
        const HtSig sig = ht_sign(msg_root, idx_tree, idx_leaf, sk, pub, params);
        REQUIRE(sig.layers.size() == params.d);
        CHECK(ht_verify(msg_root, sig, idx_tree, idx_leaf, pub, params) == top);
    }
}

TEST_CASE("index preconditions") {
    std::mt19937_64 rng(0x5eed0504);
    const auto params = SpinelParams::make(8, 2, 4, 8, 16);
    const SeedContext sk(random_seed(rng));
    const SeedContext pub(random_seed(rng));
    const Digest msg_root = random_root(rng);
    CHECK_THROWS_AS(ht_sign(msg_root, 1ull << 4, 0, sk, pub, params), std::invalid_argument);
    CHECK_THROWS_AS(ht_sign(msg_root, 0, 1u << 4, sk, pub, params), std::invalid_argument);
}

TEST_CASE("layer-0 signature verifies against the addressed one-time key") {
    std::mt19937_64 rng(0x5eed0505);
    const auto params = SpinelParams::make(4, 2, 4, 8, 16);
    const SeedContext sk(random_seed(rng));
    const SeedContext pub(random_seed(rng));
    const Digest msg_root = random_root(rng);
    const std::uint64_t idx_tree = 2;
    const std::uint32_t idx_leaf = 3;
    const HtSig sig = ht_sign(msg_root, idx_tree, idx_leaf, sk, pub, params);

    Adrs kp;
    kp.layer = 0;
    kp.tree = idx_tree;
    kp.set_key_pair(idx_leaf);
    const Digest expected = wots_pk_gen(sk, pub, kp, params.wots());
    CHECK(wots_pk_from_sig(sig.layers[0].wots, msg_root.bytes, pub, kp, params.wots()) ==
          expected);

    // distinct hypertree slots use distinct one-time instances: the same
    // message signed at another slot yields a different layer-0 signature
    const HtSig other = ht_sign(msg_root, idx_tree, idx_leaf ^ 1, sk, pub, params);
    CHECK(other.layers[0].wots != sig.layers[0].wots);
}

TEST_CASE("single-bit corruption anywhere changes the recovered root") {
    std::mt19937_64 rng(0x5eed0506);
    const auto params = SpinelParams::make(4, 2, 4, 8, 16);
    const SeedContext sk(random_seed(rng));
    const SeedContext pub(random_seed(rng));
    const Digest msg_root = random_root(rng);
    const HtSig sig = ht_sign(msg_root, 1, 2, sk, pub, params);
    const Digest top = ht_verify(msg_root, sig, 1, 2, pub, params);

    for (int trial = 0; trial < 100; ++trial) {
        HtSig bad = sig;
        auto& layer = bad.layers[rng() % params.d];
        // flip a sub-2^31 bit so digest words stay valid field elements
        const std::size_t bit = 1 + (rng() % 30);
        if (rng() & 1) {
            auto& word = layer.wots.chains[rng() % layer.wots.chains.size()];
            word.bytes[4 * (rng() % 16) + bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        } else {
            auto& node = layer.auth[rng() % layer.auth.size()];
            node.bytes[4 * (rng() % 16) + bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        }
        CHECK(ht_verify(msg_root, bad, 1, 2, pub, params) != top);
    }
}

TEST_CASE("per-layer hash work matches the cost model") {
    std::mt19937_64 rng(0x5eed0507);
    const auto params = SpinelParams::make(8, 2, 4, 8, 16);
    const SeedContext sk(random_seed(rng));
    const SeedContext pub(random_seed(rng));
    const Digest msg_root = random_root(rng);

    CountingObserver counts;
    {
        ScopedObserver guard(&counts);
        ht_sign(msg_root, 5, 9, sk, pub, params);
    }
    CHECK(counts.model_units() == params.d * keygen_cost_hashes(params.h, params.d, params.w));
}
