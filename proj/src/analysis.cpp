#include "spinel/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spinel {

namespace {

void check_query(const DegradationQuery& q) {
    if (q.b == 0 || q.b > 60) throw std::invalid_argument("degradation query: b out of range");
    if (q.k == 0) throw std::invalid_argument("degradation query: k must be positive");
    if (q.h == 0) throw std::invalid_argument("degradation query: h must be positive");
    if (!std::isfinite(q.m) || !std::isfinite(q.m0))
        throw std::invalid_argument("degradation query: non-finite exponent");
}

}  // namespace

ForgeryProbability forgery_probability(const DegradationQuery& q) {
    check_query(q);
    const double ln2 = std::log(2.0);
    const double log_lambda = (q.m - q.h) * ln2;
    const double lambda = std::exp(log_lambda);
    const double log_miss = std::log1p(-std::exp2(-static_cast<double>(q.b)));  // log(1 - 1/t)

    // Streaming log-sum-exp with Kahan compensation; Poisson factor advanced
    // by term_{g+1} = term_g * lambda / (g+1).
    double log_pois = -lambda;   // g = 0
    double max_log = -std::numeric_limits<double>::infinity();
    double acc = 0.0, comp = 0.0;
    std::uint64_t g = 0;
    while (true) {
        if (g >= 1) {
            const double y = static_cast<double>(g) * log_miss;
            const double hit = -std::expm1(y);   // 1 - (1 - 1/t)^g, full precision
            const double log_term = log_pois + q.k * std::log(hit);
            if (std::isfinite(log_term)) {
                if (log_term > max_log) {
                    const double scale = std::exp(max_log - log_term);
                    acc *= scale;
                    comp *= scale;
                    max_log = log_term;
                }
                const double v = std::exp(log_term - max_log);
                const double t = acc + v;
                comp += (acc - t) + v;
                acc = t;
            }
        }
        if (static_cast<double>(g) > lambda + 5.0) {
            // Poisson(G > g) < Poisson(g) * (g+1)/(g+1-lambda); the coverage
            // factor is <= 1, so this bounds the unsummed remainder.
            const double log_tail =
                log_pois + std::log((static_cast<double>(g) + 1) /
                                    (static_cast<double>(g) + 1 - lambda));
            const double log_sum = max_log + std::log(acc > 0 ? acc : 1e-300);
            if (log_tail < std::log(1e-18) + log_sum || log_tail < -1300.0) break;
        }
        ++g;
        log_pois += log_lambda - std::log(static_cast<double>(g));
        if (g > 50'000'000) throw std::runtime_error("degradation sum failed to converge");
    }

    ForgeryProbability out;
    const double total = acc + comp;
    if (total <= 0.0 || !std::isfinite(max_log)) {
        out.p = 0.0;
        out.sec_bits = std::numeric_limits<double>::infinity();
        return out;
    }
    out.p = std::exp(max_log) * total;
    out.sec_bits = -(max_log + std::log(total)) / std::log(2.0);
    return out;
}

SecurityPoint effective_security(const DegradationQuery& q) {
    const double sec_m = forgery_probability(q).sec_bits;
    DegradationQuery base = q;
    base.m = q.m0;
    const double sec_m0 = forgery_probability(base).sec_bits;
    SecurityPoint out;
    out.sec = sec_m;
    out.delta_sec = std::max(0.0, sec_m0 - sec_m);
    out.sec_eff = q.target_bits - out.delta_sec;
    return out;
}

std::uint64_t signature_size_bytes(std::uint32_t h, std::uint32_t d, std::uint32_t b,
                                   std::uint32_t k, std::uint32_t w) {
    const WotsParams wp = WotsParams::for_w(w);
    return 64ull * (1 + static_cast<std::uint64_t>(k) * (b + 1) + h +
                    static_cast<std::uint64_t>(d) * wp.len);
}

std::uint64_t keygen_cost_hashes(std::uint32_t h, std::uint32_t d, std::uint32_t w) {
    const WotsParams wp = WotsParams::for_w(w);
    const std::uint64_t leaves = 1ull << (h / d);
    return leaves * wp.len * w + leaves - 1;
}

std::uint64_t signing_cost_hashes(std::uint32_t h, std::uint32_t d, std::uint32_t b,
                                  std::uint32_t k, std::uint32_t w) {
    return static_cast<std::uint64_t>(d) * keygen_cost_hashes(h, d, w) +
           static_cast<std::uint64_t>(k) * ((1ull << (b + 1)) - 1) + 1;
}

std::vector<CandidateRow> enumerate_candidates(double budget_m, double sigma_bits,
                                               std::span<const SpinelParams> registry,
                                               CandidateRank rank, double m0,
                                               double target_bits) {
    std::vector<CandidateRow> rows;
    for (const SpinelParams& p : registry) {
        DegradationQuery q{p.h, p.b, p.k, budget_m, m0, target_bits};
        CandidateRow row;
        row.params = p;
        row.sig_bytes = signature_size_bytes(p.h, p.d, p.b, p.k, p.w);
        row.sign_cost = signing_cost_hashes(p.h, p.d, p.b, p.k, p.w);
        row.keygen_cost = keygen_cost_hashes(p.h, p.d, p.w);
        row.sec_eff = effective_security(q).sec_eff;
        if (row.sec_eff >= sigma_bits) rows.push_back(row);
    }
    std::stable_sort(rows.begin(), rows.end(), [rank](const CandidateRow& a, const CandidateRow& b) {
        if (rank == CandidateRank::SizeFirst) {
            if (a.sig_bytes != b.sig_bytes) return a.sig_bytes < b.sig_bytes;
            return a.sign_cost < b.sign_cost;
        }
        if (a.sign_cost != b.sign_cost) return a.sign_cost < b.sign_cost;
        return a.sig_bytes < b.sig_bytes;
    });
    return rows;
}

}  // namespace spinel
