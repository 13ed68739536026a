#include "spinel/wots.hpp"

#include <stdexcept>

namespace spinel {

Digest chain(const Digest& x, std::uint32_t start, std::uint32_t steps, const SeedContext& pub,
             Adrs adrs, const WotsParams& wp) {
    if (start + steps > wp.w - 1)
        throw std::invalid_argument("chain: start + steps exceeds w - 1");
    Digest cur = x;
    for (std::uint32_t j = start; j < start + steps; ++j) {
        adrs.set_hash(j);
        cur = thash(pub, adrs, cur.bytes);
    }
    return cur;
}

std::vector<std::uint32_t> msg_to_basew(std::span<const std::uint8_t> md, const WotsParams& wp) {
    if (md.size() != kDigestBytes)
        throw std::invalid_argument("msg_to_basew: digest must be 64 bytes");
    std::vector<std::uint32_t> digits;
    digits.reserve(wp.len);

    // message digits, MSB-first within each byte
    for (std::uint32_t i = 0; i < wp.len1; ++i) {
        const std::uint32_t bit = i * wp.log_w;
        const std::uint8_t byte = md[bit / 8];
        digits.push_back((wp.log_w == 8) ? byte : ((bit % 8 == 0) ? (byte >> 4) : (byte & 0xf)));
    }

    std::uint64_t csum = 0;
    for (std::uint32_t i = 0; i < wp.len1; ++i) csum += wp.w - 1 - digits[i];

    // left-align the checksum inside its len2-digit big-endian field
    const std::uint32_t csum_bits = wp.len2 * wp.log_w;
    csum <<= (8 - (csum_bits % 8)) % 8;
    const std::uint32_t csum_bytes = (csum_bits + 7) / 8;
    std::vector<std::uint8_t> packed(csum_bytes);
    for (std::uint32_t i = 0; i < csum_bytes; ++i)
        packed[i] = static_cast<std::uint8_t>(csum >> (8 * (csum_bytes - 1 - i)));
    for (std::uint32_t i = 0; i < wp.len2; ++i) {
        const std::uint32_t bit = i * wp.log_w;
        const std::uint8_t byte = packed[bit / 8];
        digits.push_back((wp.log_w == 8) ? byte : ((bit % 8 == 0) ? (byte >> 4) : (byte & 0xf)));
    }
    return digits;
}

Digest wots_leaf(const SeedContext& sk, const SeedContext& pub, const Adrs& keypair_adrs,
                 const WotsParams& wp, const std::uint32_t* digits, WotsSig* sig_out) {
    if (sig_out) sig_out->chains.assign(wp.len, Digest{});
    std::vector<std::uint8_t> ends;
    ends.reserve(static_cast<std::size_t>(wp.len) * kDigestBytes);

    for (std::uint32_t i = 0; i < wp.len; ++i) {
        Adrs a = keypair_adrs;
        a.set_type(AdrsType::WotsChain);
        a.set_key_pair(keypair_adrs.ctx[0]);
        a.set_chain(i);
        Digest cur = prf(sk, a);
        if (digits && sig_out && digits[i] == 0) sig_out->chains[i] = cur;
        for (std::uint32_t j = 0; j + 1 < wp.w; ++j) {
            a.set_hash(j);
            cur = thash(pub, a, cur.bytes);
            if (digits && sig_out && digits[i] == j + 1) sig_out->chains[i] = cur;
        }
        ends.insert(ends.end(), cur.bytes.begin(), cur.bytes.end());
    }

    Adrs a2 = keypair_adrs;
    a2.set_type(AdrsType::WotsPk);
    a2.set_key_pair(keypair_adrs.ctx[0]);
    return thash(pub, a2, ends);
}

Digest wots_pk_gen(const SeedContext& sk, const SeedContext& pub, const Adrs& keypair_adrs,
                   const WotsParams& wp) {
    return wots_leaf(sk, pub, keypair_adrs, wp, nullptr, nullptr);
}

WotsSig wots_sign(std::span<const std::uint8_t> md, const SeedContext& sk, const SeedContext& pub,
                  const Adrs& keypair_adrs, const WotsParams& wp) {
    const auto digits = msg_to_basew(md, wp);
    WotsSig sig;
    sig.chains.reserve(wp.len);
    for (std::uint32_t i = 0; i < wp.len; ++i) {
        Adrs a = keypair_adrs;
        a.set_type(AdrsType::WotsChain);
        a.set_key_pair(keypair_adrs.ctx[0]);
        a.set_chain(i);
        sig.chains.push_back(chain(prf(sk, a), 0, digits[i], pub, a, wp));
    }
    return sig;
}

Digest wots_pk_from_sig(const WotsSig& sig, std::span<const std::uint8_t> md,
                        const SeedContext& pub, const Adrs& keypair_adrs, const WotsParams& wp) {
    const auto digits = msg_to_basew(md, wp);
    if (sig.chains.size() != wp.len)
        throw std::invalid_argument("wots signature has wrong chain count");
    std::vector<std::uint8_t> ends;
    ends.reserve(static_cast<std::size_t>(wp.len) * kDigestBytes);
    for (std::uint32_t i = 0; i < wp.len; ++i) {
        Adrs a = keypair_adrs;
        a.set_type(AdrsType::WotsChain);
        a.set_key_pair(keypair_adrs.ctx[0]);
        a.set_chain(i);
        Digest end = chain(sig.chains[i], digits[i], wp.w - 1 - digits[i], pub, a, wp);
        ends.insert(ends.end(), end.bytes.begin(), end.bytes.end());
    }
    Adrs a2 = keypair_adrs;
    a2.set_type(AdrsType::WotsPk);
    a2.set_key_pair(keypair_adrs.ctx[0]);
    return thash(pub, a2, ends);
}

}  // namespace spinel
