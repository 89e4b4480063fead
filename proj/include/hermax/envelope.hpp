#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "hermax/factorials.hpp"
#include "hermax/hermite.hpp"
#include "hermax/solvers.hpp"
#include "hermax/zeros.hpp"

namespace hermax {

// m = (k + sqrt(k^2 + 1/27))^{1/6}; rationalizes the cubic tangency that
// bounds the last fixed point of t. Inverse: k = (27 m^12 - 1)/(54 m^6).
struct MParam {
    std::int64_t k;
    double m;
};

inline MParam m_param(std::int64_t k) {
    if (k < 1) throw std::domain_error("m_param: requires k >= 1");
    const double kd = static_cast<double>(k);
    return {k, std::pow(kd + std::sqrt(kd * kd + 1.0 / 27.0), 1.0 / 6.0)};
}

// ln C_k, parity dispatch:
//   even: 2k sqrt(4k-2) k!^2 / (sqrt(8k^2-8k+3) (k/2)!^2)
//   odd:  sqrt(16k^2-16k+6) k! (k-1)! / (sqrt(2k-1) ((k-1)/2)!^2)
inline double log_Ck(std::int64_t k) {
    if (k < 1) throw std::domain_error("log_Ck: requires k >= 1");
    const double kd = static_cast<double>(k);
    if (k % 2 == 0)
        return std::log(2.0 * kd) + 0.5 * std::log(4.0 * kd - 2.0)
             + 2.0 * log_factorial(k)
             - 0.5 * std::log(8.0 * kd * kd - 8.0 * kd + 3.0)
             - 2.0 * log_factorial(k / 2);
    return 0.5 * std::log(16.0 * kd * kd - 16.0 * kd + 6.0)
         + log_factorial(k) + log_factorial(k - 1)
         - 0.5 * std::log(2.0 * kd - 1.0)
         - 2.0 * log_factorial((k - 1) / 2);
}

// F_k(y) = (2y^2-4y+3) / sqrt(y (4y^4-12y^3+9y^2+10ky-12k)), y >= 2
inline double ln_envelope_F(std::int64_t k, double y) {
    if (!(y >= 2.0)) throw std::domain_error("envelope_F: requires y >= 2");
    const double kd = static_cast<double>(k);
    const double rad = y * (((4.0 * y - 12.0) * y + 9.0) * y * y + 10.0 * kd * y - 12.0 * kd);
    if (!(rad > 0.0)) throw std::domain_error("envelope_F: nonpositive radicand");
    return std::log((2.0 * y - 4.0) * y + 3.0) - 0.5 * std::log(rad);
}

inline double envelope_F(std::int64_t k, double y) { return std::exp(ln_envelope_F(k, y)); }

// G_k(y) = exp(15(2k-y) / (2y(2y-3)^2)), 3/2 < y <= 2k
inline double ln_envelope_G(std::int64_t k, double y) {
    if (!(y > 1.5)) throw std::domain_error("envelope_G: pole at y = 3/2");
    const double kd = static_cast<double>(k);
    if (!(y <= 2.0 * kd)) throw std::domain_error("envelope_G: requires y <= 2k");
    const double d = 2.0 * y - 3.0;
    return 15.0 * (2.0 * kd - y) / (2.0 * y * d * d);
}

inline double envelope_G(std::int64_t k, double y) { return std::exp(ln_envelope_G(k, y)); }

// The two-sided constants around ln C_k, valid for k >= 6.
struct Theorem1Bounds {
    std::int64_t k;
    double ln_lower;       // ln(27/61 C_k)
    double ln_upper;       // ln(2/3 C_k exp((15/8)(1 + 12/(4(2k)^{1/3} - 9))))
    double lower_over_Ck;  // 27/61
    double upper_over_Ck;
};

inline Theorem1Bounds theorem1_bounds(std::int64_t k) {
    if (k < 6) throw std::domain_error("theorem1_bounds: stated for k >= 6");
    const double lnC = log_Ck(k);
    const double cube = std::cbrt(2.0 * static_cast<double>(k));
    const double ln_upper_ratio =
        std::log(2.0 / 3.0) + (15.0 / 8.0) * (1.0 + 12.0 / (4.0 * cube - 9.0));
    const double ln_lower_ratio = std::log(27.0 / 61.0);
    return {k, lnC + ln_lower_ratio, lnC + ln_upper_ratio,
            27.0 / 61.0, std::exp(ln_upper_ratio)};
}

// Upper bound (m^4 - 1/3)^{3/2} m^{-3} for the last fixed point of t,
// from the tangent cubic; q0 is the tangency parameter.
inline double omega_upper(std::int64_t k) {
    const double m = m_param(k).m;
    const double m2 = m * m;
    return std::pow(m2 * m2 - 1.0 / 3.0, 1.5) / (m2 * m);
}

inline double tangency_q0(std::int64_t k) {
    const double m = m_param(k).m;
    const double m2 = m * m, m3 = m2 * m, m4 = m2 * m2;
    return (3.0 * m4 - 3.0 * m2 - 1.0) * std::sqrt(9.0 * m4 - 3.0) / (9.0 * m3);
}

// The last solution of t(x) = x, beyond x_kk; location of the global
// maximum of (H_k)^2 e^{-x^2}. t - x decreases from +inf (right of x_kk)
// through the root; the right endpoint is padded past the closed-form
// bound because the bound is attained exactly at k = 1.
inline double find_omega(std::int64_t k, double rel_tol = kDefaultRelTol) {
    if (k < 1) throw std::domain_error("find_omega: requires k >= 1");
    const double xkk = find_largest_zero(k, rel_tol);
    const double hi = omega_upper(k) * (1.0 + 1e-9);
    const auto f = [k](double x) { return eval_weighted(k, x).t - x; };

    double offset = 1e-9;
    for (int attempt = 0; attempt < 8; ++attempt, offset *= 1e-2) {
        const double lo = xkk > 0.0 ? xkk * (1.0 + offset) : offset;
        if (!(lo < hi)) continue;
        const double flo = f(lo);
        if (flo == 0.0) return lo;
        if (flo > 0.0) return solve_bracketed(f, Bracket(lo, hi, 1, -1), rel_tol);
    }
    throw std::runtime_error("find_omega: bracket construction failed");
}

enum class SandwichStatus { not_applicable, pass, fail };

// Per-k record of the closed-form quantities and the computed maximum.
struct EnvelopeReport {
    std::int64_t k;
    double ln_Ck;
    double y0;           // m^2 - 1/(3m^2)
    double omega;
    double omega_upper;
    double ln_Mk;        // ln((2k)^{1/6} (H_k(omega))^2 e^{-omega^2})
    double ln_lower;     // ln(27/61 C_k); meaningful for k >= 6
    double ln_upper;
    double ratio_Mk_Ck;
    SandwichStatus sandwich;
};

inline EnvelopeReport compute_Mk(std::int64_t k, double rel_tol = kDefaultRelTol) {
    if (k < 1) throw std::domain_error("compute_Mk: requires k >= 1");
    const double lnC = log_Ck(k);
    const double m = m_param(k).m;
    const double om = find_omega(k, rel_tol);
    const double ln_mk = std::log(2.0 * static_cast<double>(k)) / 6.0
                       + ln_weighted_square(k, om);
    EnvelopeReport r;
    r.k = k;
    r.ln_Ck = lnC;
    r.y0 = m * m - 1.0 / (3.0 * m * m);
    r.omega = om;
    r.omega_upper = omega_upper(k);
    r.ln_Mk = ln_mk;
    r.ratio_Mk_Ck = std::exp(ln_mk - lnC);
    if (k >= 6) {
        const Theorem1Bounds b = theorem1_bounds(k);
        r.ln_lower = b.ln_lower;
        r.ln_upper = b.ln_upper;
        r.sandwich = (b.ln_lower < ln_mk && ln_mk < b.ln_upper)
                         ? SandwichStatus::pass
                         : SandwichStatus::fail;
    } else {
        r.ln_lower = lnC + std::log(27.0 / 61.0);
        r.ln_upper = 0.0;
        r.sandwich = SandwichStatus::not_applicable;
    }
    return r;
}

// (2k)^{1/6} F_k(y)/G_k(y) at x = sqrt(2k-2) - (9/4)(2k-2)^{-1/6}.
// Profile has a single interior minimum near k = 46.
inline double lower_bound_point_value(std::int64_t k) {
    if (k < 3) throw std::domain_error("lower_bound_point_value: requires k >= 3");
    const double w = 2.0 * static_cast<double>(k) - 2.0;
    const double x = std::sqrt(w) - 2.25 * std::pow(w, -1.0 / 6.0);
    const double y = y_of(k, x);
    return std::exp(std::log(2.0 * static_cast<double>(k)) / 6.0
                    + ln_envelope_F(k, y) - ln_envelope_G(k, y));
}

// Intersection of t with the touching curve of the lower envelope on the
// last branch (x_{k-1,k}, x_kk):
//   t(x) = x (2y^2 - 4y + 3) / (y (2y - 3)).
// Since t(tau) > 0 the root lies left of x_{k-1,k-1}, where t crosses zero.
struct SharpnessPoint {
    std::int64_t k;
    double tau;
    double ln_lower_envelope_value;  // ln(C_k F_k/G_k at y(tau))
    double ln_function_value;        // ln((H_k(tau))^2 e^{-tau^2})
};

inline SharpnessPoint sharpness_point(std::int64_t k, double rel_tol = kDefaultRelTol) {
    if (k < 3 || k > 500)
        throw std::domain_error("sharpness_point: supported range is 3 <= k <= 500");
    const ZeroSet zs = all_zeros(k, rel_tol);
    const double xl = zs.zeros[static_cast<size_t>(k) - 2];
    const double xr = zs.zeros[static_cast<size_t>(k) - 1];
    const auto h = [k](double x) {
        const double y = y_of(k, x);
        const double curve = x * ((2.0 * y - 4.0) * y + 3.0) / (y * (2.0 * y - 3.0));
        return eval_weighted(k, x).t - curve;
    };
    const double gap = xr - xl;
    double tau = 0.0;
    bool found = false;
    for (double pad = 1e-9; pad < 1e-2; pad *= 100.0) {
        const double lo = xl + pad * gap, hi = xr - pad * gap;
        const double flo = h(lo), fhi = h(hi);
        if (flo > 0.0 && fhi < 0.0) {
            tau = solve_bracketed(h, Bracket(lo, hi, 1, -1), rel_tol);
            found = true;
            break;
        }
    }
    if (!found) throw std::runtime_error("sharpness_point: no sign change in the interval");
    const double y = y_of(k, tau);
    return {k, tau,
            log_Ck(k) + ln_envelope_F(k, y) - ln_envelope_G(k, y),
            ln_weighted_square(k, tau)};
}

}  // namespace hermax
