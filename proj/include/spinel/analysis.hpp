#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spinel/params.hpp"

namespace spinel {

// Inputs of the exposure-degradation model. lambda = 2^(m-h) is the expected
// number of prior signatures colliding on one few-time instance.
struct DegradationQuery {
    std::uint32_t h = 0;
    std::uint32_t b = 0;
    std::uint32_t k = 0;
    double m = 0;             // log2 of the signature budget
    double m0 = 0;            // baseline exponent for the degradation delta
    double target_bits = 256;
};

struct ForgeryProbability {
    double p = 0;          // recombination-forgery probability
    double sec_bits = 0;   // -log2 p
};

// p(m) = sum_g Poisson(g; lambda) * (1 - (1 - 1/t)^g)^k, summed in the log
// domain until the Poisson tail falls below 1e-18 of the running sum.
ForgeryProbability forgery_probability(const DegradationQuery& q);

struct SecurityPoint {
    double sec = 0;        // Sec(m)
    double delta_sec = 0;  // max(0, Sec(m0) - Sec(m))
    double sec_eff = 0;    // target - delta_sec
};

SecurityPoint effective_security(const DegradationQuery& q);

std::uint64_t signature_size_bytes(std::uint32_t h, std::uint32_t d, std::uint32_t b,
                                   std::uint32_t k, std::uint32_t w);
// Closed-form cost models in instrumented hash units (see CountingObserver).
std::uint64_t signing_cost_hashes(std::uint32_t h, std::uint32_t d, std::uint32_t b,
                                  std::uint32_t k, std::uint32_t w);
std::uint64_t keygen_cost_hashes(std::uint32_t h, std::uint32_t d, std::uint32_t w);

struct CandidateRow {
    SpinelParams params;
    std::uint64_t sig_bytes = 0;
    std::uint64_t sign_cost = 0;
    std::uint64_t keygen_cost = 0;
    double sec_eff = 0;   // at the queried budget
};

enum class CandidateRank { CostFirst, SizeFirst };

// Filters the registry by Sec_eff(budget_m) >= sigma_bits and ranks the
// survivors lexicographically by (sign_cost, sig_bytes) or (sig_bytes,
// sign_cost). An empty result is a valid outcome.
std::vector<CandidateRow> enumerate_candidates(double budget_m, double sigma_bits,
                                               std::span<const SpinelParams> registry,
                                               CandidateRank rank = CandidateRank::CostFirst,
                                               double m0 = 0, double target_bits = 256);

}  // namespace spinel
