#pragma once

// Test-only high-precision oracle for the exposure-degradation sum,
// evaluated with 200-decimal-digit arithmetic. Independent of the
// double-precision implementation path.

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <string>

namespace oracle {

// p = sum_{g=0}^{gmax} lambda^g e^-lambda / g! * (1 - (1 - 1/t)^g)^k
// with lambda = 2^(m-h), t = 2^b. Returns the value as a double together
// with its -log2 (computed in high precision before rounding).
struct Result {
    double p;
    double sec_bits;
};

inline Result poisson_sum(std::uint32_t h, std::uint32_t b, std::uint32_t k, double m) {
    constexpr mpfr_prec_t kPrec = 700;   // ~210 decimal digits
    mpfr_t lambda, q, term, hit, total, tmp, logp;
    mpfr_inits2(kPrec, lambda, q, term, hit, total, tmp, logp, static_cast<mpfr_ptr>(nullptr));

    // lambda = 2^(m-h)
    mpfr_set_d(lambda, m - static_cast<double>(h), MPFR_RNDN);
    mpfr_exp2(lambda, lambda, MPFR_RNDN);

    // q = 1 - 2^-b
    mpfr_set_ui(q, 1, MPFR_RNDN);
    mpfr_set_si(tmp, -static_cast<long>(b), MPFR_RNDN);
    mpfr_exp2(tmp, tmp, MPFR_RNDN);
    mpfr_sub(q, q, tmp, MPFR_RNDN);

    const double lam_d = mpfr_get_d(lambda, MPFR_RNDN);
    const long gmax = static_cast<long>(lam_d + 200.0 * std::sqrt(lam_d) + 400.0);

    // term = e^-lambda  (g = 0 Poisson weight)
    mpfr_neg(term, lambda, MPFR_RNDN);
    mpfr_exp(term, term, MPFR_RNDN);
    mpfr_set_ui(total, 0, MPFR_RNDN);

    for (long g = 0; g <= gmax; ++g) {
        if (g > 0) {
            mpfr_mul(term, term, lambda, MPFR_RNDN);
            mpfr_div_ui(term, term, static_cast<unsigned long>(g), MPFR_RNDN);
        }
        // hit = 1 - q^g
        mpfr_pow_ui(hit, q, static_cast<unsigned long>(g), MPFR_RNDN);
        mpfr_ui_sub(hit, 1, hit, MPFR_RNDN);
        mpfr_pow_ui(hit, hit, k, MPFR_RNDN);
        mpfr_mul(tmp, term, hit, MPFR_RNDN);
        mpfr_add(total, total, tmp, MPFR_RNDN);
    }

    Result r{};
    r.p = mpfr_get_d(total, MPFR_RNDN);
    mpfr_log2(logp, total, MPFR_RNDN);
    r.sec_bits = -mpfr_get_d(logp, MPFR_RNDN);
    mpfr_clears(lambda, q, term, hit, total, tmp, logp, static_cast<mpfr_ptr>(nullptr));
    return r;
}

}  // namespace oracle
