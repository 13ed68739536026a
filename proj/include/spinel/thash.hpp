#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "spinel/adrs.hpp"
#include "spinel/digest.hpp"
#include "spinel/hash.hpp"
#include "spinel/params.hpp"
#include "spinel/walk.hpp"

namespace spinel {

// Walk state pre-seeded with a 64-byte seed. Every tweakable-hash call under
// the same seed shares this prefix, so it is computed once per seed.
class SeedContext {
public:
    explicit SeedContext(const Seed& seed) : seed_(seed) { prefix_.absorb(seed.bytes); }

    const Seed& seed() const { return seed_; }
    const WalkState& prefix() const { return prefix_; }

private:
    Seed seed_;
    WalkState prefix_;
};

// Injectable counting observer; see CountingObserver for the cost-model
// accounting. Null (the default) disables all notification.
struct HashObserver {
    virtual ~HashObserver() = default;
    virtual void on_thash(std::uint32_t adrs_type) = 0;
    virtual void on_prf(std::uint32_t adrs_type) = 0;
};

void set_hash_observer(HashObserver* obs);
HashObserver* hash_observer();

// Tallies hash work per address category. model_units() reproduces the
// closed-form cost model's accounting: chain steps (type 1) plus the WOTS
// secret expansions, tree nodes (type 3), FORS nodes and root compression
// (types 4, 5). WOTS pk compression (type 2) and FORS secret expansions sit
// outside the model and are tallied separately; total() counts everything.
class CountingObserver : public HashObserver {
public:
    void on_thash(std::uint32_t t) override { thash_[t <= 5 ? t : 0]++; }
    void on_prf(std::uint32_t t) override { prf_[t <= 5 ? t : 0]++; }

    std::uint64_t thash_count(AdrsType t) const { return thash_[static_cast<std::uint32_t>(t)]; }
    std::uint64_t prf_count(AdrsType t) const { return prf_[static_cast<std::uint32_t>(t)]; }

    std::uint64_t model_units() const {
        return thash_[1] + thash_[3] + thash_[4] + thash_[5] + prf_[1];
    }
    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (int i = 0; i < 6; ++i) s += thash_[i] + prf_[i];
        return s;
    }
    void reset() { thash_ = {}; prf_ = {}; }

private:
    std::array<std::uint64_t, 6> thash_{};
    std::array<std::uint64_t, 6> prf_{};
};

// Installs an observer for the current scope.
class ScopedObserver {
public:
    explicit ScopedObserver(HashObserver* obs) : prev_(hash_observer()) { set_hash_observer(obs); }
    ~ScopedObserver() { set_hash_observer(prev_); }
    ScopedObserver(const ScopedObserver&) = delete;
    ScopedObserver& operator=(const ScopedObserver&) = delete;

private:
    HashObserver* prev_;
};

// Th(P, T, M) = hash(P || T || M).
Digest thash(const SeedContext& pub, const Adrs& adrs, std::span<const std::uint8_t> msg);
Digest thash(const Seed& pub, const Adrs& adrs, std::span<const std::uint8_t> msg);

// Secret-element expansion: thash(seed, adrs, "").
Digest prf(const SeedContext& sk, const Adrs& adrs);

// Message digest + hypertree indices from one hash invocation.
// Requires k*b + h <= 512 (enforced by SpinelParams::validate).
struct MsgIndices {
    std::vector<std::uint8_t> md;   // ceil(k*b/8) bytes; trailing bits zeroed
    std::uint64_t idx_tree = 0;
    std::uint32_t idx_leaf = 0;
};

MsgIndices h_msg(const Digest& randomizer, const Seed& pk_seed, const Digest& pk_root,
                 std::span<const std::uint8_t> msg, const SpinelParams& params);

// R = hash(sk_prf || opt_rand || msg).
Digest message_randomizer(const Seed& sk_prf, std::span<const std::uint8_t> opt_rand,
                          std::span<const std::uint8_t> msg);

}  // namespace spinel
