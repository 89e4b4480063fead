#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hermax/factorials.hpp"
#include "hermax/scaled_value.hpp"

namespace hermax {

// Weighted values at one point. The contract is
//   (H_k(x))^2 e^{-x^2} = psi_k^2 * exp(2*log_scale + ln(2^k k! sqrt(pi))),
// with psi_j the orthonormal Hermite functions up to the exp(log_scale)
// factor that keeps the recurrence inside double range.
struct HermiteState {
    std::int64_t k;
    double x;
    double psi_km1;   // psi_{k-1}(x) / exp(log_scale); 0 for k == 0
    double psi_k;     // psi_k(x)     / exp(log_scale)
    double log_scale;
    double t;         // H'_k(x)/H_k(x); +-inf at a zero of H_k
};

// Orthonormal three-term recurrence
//   psi_{j+1} = x sqrt(2/(j+1)) psi_j - sqrt(j/(j+1)) psi_{j-1},
// started from psi_0 = pi^{-1/4} with log_scale = -x^2/2. The raw H_j
// recurrence overflows near k ~ 150; psi_j stays O(1) in the oscillatory
// region and any super-exponential decay is absorbed into log_scale.
inline HermiteState eval_weighted(std::int64_t k, double x) {
    if (k < 0) throw std::domain_error("eval_weighted: negative degree");
    if (!std::isfinite(x)) throw std::domain_error("eval_weighted: non-finite x");

    constexpr double kRescaleHi = 1e150;
    constexpr double kRescaleLo = 1e-150;
    static const double kLogRescaleHi = std::log(kRescaleHi);

    double log_scale = -0.5 * x * x;
    double pm1 = 0.0;
    double p = std::pow(std::numbers::pi, -0.25);
    for (std::int64_t j = 0; j < k; ++j) {
        const double jd = static_cast<double>(j);
        const double pn = x * std::sqrt(2.0 / (jd + 1)) * p
                        - std::sqrt(jd / (jd + 1)) * pm1;
        pm1 = p;
        p = pn;
        const double a = std::fabs(p);
        if (a > kRescaleHi) {
            pm1 *= kRescaleLo;
            p *= kRescaleLo;
            log_scale += kLogRescaleHi;
        } else if (a < kRescaleLo && a > 0.0) {
            pm1 *= kRescaleHi;
            p *= kRescaleHi;
            log_scale -= kLogRescaleHi;
        }
    }

    double t;
    if (k == 0) {
        t = 0.0;  // H_0' = 0
    } else if (p == 0.0 || std::fabs(p) < 1e-300 * std::fabs(pm1)) {
        // pole of t; sign of the approach from the right is always +inf
        t = std::numeric_limits<double>::infinity();
    } else {
        t = std::sqrt(2.0 * static_cast<double>(k)) * pm1 / p;
    }
    return {k, x, pm1, p, log_scale, t};
}

// y(x) = 2k - x^2
inline double y_of(std::int64_t k, double x) {
    return 2.0 * static_cast<double>(k) - x * x;
}

// ln((H_k(x))^2 e^{-x^2}); throws at a zero of H_k
inline double ln_weighted_square(const HermiteState& st) {
    if (st.psi_k == 0.0)
        throw std::domain_error("ln_weighted_square: H_k vanishes here");
    return 2.0 * (std::log(std::fabs(st.psi_k)) + st.log_scale)
         + static_cast<double>(st.k) * std::numbers::ln2
         + log_factorial(st.k) + 0.5 * std::log(std::numbers::pi);
}

inline double ln_weighted_square(std::int64_t k, double x) {
    return ln_weighted_square(eval_weighted(k, x));
}

inline ScaledValue weighted_square_scaled(const HermiteState& st) {
    if (st.psi_k == 0.0) return ScaledValue::zero();
    return ScaledValue::from_log(1, ln_weighted_square(st));
}

// t^2 - 2xt + 2k = ({H'_k}^2 - H_k H''_k)/H_k^2, by the differential
// equation; equals the sum of (x - x_i)^{-2} over the zeros, hence > 0.
inline double laguerre_expression(std::int64_t k, double x) {
    const HermiteState st = eval_weighted(k, x);
    if (!std::isfinite(st.t))
        throw std::domain_error("laguerre_expression: pole (H_k vanishes)");
    return (st.t - x) * (st.t - x) + y_of(k, x);
}

// Relative residual of H_k = 2x H_{k-1} - 2(k-1) H_{k-2} assembled from two
// independently scaled runs; exercises the log_scale bookkeeping.
inline double ode_residual(std::int64_t k, double x) {
    if (k < 2) throw std::domain_error("ode_residual: requires k >= 2");
    const HermiteState lo = eval_weighted(k - 1, x);
    const HermiteState hi = eval_weighted(k, x);
    const double kd = static_cast<double>(k);
    const double rescale = std::exp(lo.log_scale - hi.log_scale);
    const double a = std::sqrt((kd - 1.0) / kd) * lo.psi_km1 * rescale;
    const double b = -x * std::sqrt(2.0 / kd) * lo.psi_k * rescale;
    const double c = hi.psi_k;
    const double den = std::fabs(a) + std::fabs(b) + std::fabs(c);
    return den == 0.0 ? 0.0 : std::fabs(a + b + c) / den;
}

}  // namespace hermax
