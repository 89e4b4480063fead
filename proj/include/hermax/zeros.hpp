#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hermax/hermite.hpp"
#include "hermax/solvers.hpp"

namespace hermax {

// 6^{-1/3} i_1 where i_1 is the first Airy zero in the A(z) normalization;
// stored with the provenance digits the closed-form upper bound uses.
constexpr double kSzegoUpperCoeff = 1.85574;

struct ZeroBounds {
    std::int64_t k;
    double lower;  // sqrt(2k)   - (9/4)   (2k)^{-1/6}
    double upper;  // sqrt(2k+1) - 1.85574 (2k+1)^{-1/6}
};

struct ZeroSet {
    std::int64_t k;
    std::vector<double> zeros;  // ascending, length k
};

inline ZeroBounds largest_zero_bounds(std::int64_t k) {
    if (k <= 2) throw std::domain_error("largest_zero_bounds: requires k > 2");
    const double tk = 2.0 * static_cast<double>(k);
    const double lower = std::sqrt(tk) - 2.25 * std::pow(tk, -1.0 / 6.0);
    const double upper = std::sqrt(tk + 1) - kSzegoUpperCoeff * std::pow(tk + 1, -1.0 / 6.0);
    return {k, lower, upper};
}

// Largest zero x_kk to ~1e-12 relative. For k >= 3 the closed-form bounds
// bracket x_kk away from x_{k-1,k}, so the interval holds exactly one zero.
inline double find_largest_zero(std::int64_t k, double rel_tol = kDefaultRelTol) {
    if (k < 1) throw std::domain_error("find_largest_zero: requires k >= 1");
    const auto psi = [k](double x) { return eval_weighted(k, x).psi_k; };
    if (k == 1) return 0.0;
    if (k == 2) return solve_bracketed(psi, 0.0, std::sqrt(5.0), rel_tol);
    const ZeroBounds b = largest_zero_bounds(k);
    return solve_bracketed(psi, b.lower, b.upper, rel_tol);
}

namespace detail {

inline std::vector<double> zeros_by_scan(std::int64_t k, double rel_tol) {
    const auto psi = [k](double x) { return eval_weighted(k, x).psi_k; };
    const double edge = std::sqrt(2.0 * static_cast<double>(k) + 1);
    const std::int64_t n = 8 * k;
    std::vector<double> zeros;
    zeros.reserve(static_cast<size_t>(k));
    double x_prev = -edge;
    double f_prev = psi(x_prev);
    for (std::int64_t i = 1; i <= n; ++i) {
        const double x = -edge + 2.0 * edge * static_cast<double>(i) / static_cast<double>(n);
        const double f = psi(x);
        if (f_prev == 0.0) {
            zeros.push_back(x_prev);
        } else if (f != 0.0 && sign_of(f) != sign_of(f_prev)) {
            zeros.push_back(solve_bracketed(psi, x_prev, x, rel_tol));
        }
        x_prev = x;
        f_prev = f;
    }
    if (f_prev == 0.0) zeros.push_back(x_prev);
    return zeros;
}

}  // namespace detail

// All k zeros by sign-change scan plus bracketed refinement. The 8k-point
// grid beats the minimal zero gap by a factor >= 4 for k <= 500; if a scan
// ever comes up short the interlacing brackets from all_zeros(k-1) recover
// the missing ones.
inline ZeroSet all_zeros(std::int64_t k, double rel_tol = kDefaultRelTol) {
    if (k < 1 || k > 500) throw std::domain_error("all_zeros: supported range is 1 <= k <= 500");
    if (k == 1) return {1, {0.0}};
    std::vector<double> zeros = detail::zeros_by_scan(k, rel_tol);
    if (static_cast<std::int64_t>(zeros.size()) != k) {
        // interlacing fallback: one zero of H_k strictly between consecutive
        // zeros of H_{k-1}, plus one beyond each end
        const ZeroSet prev = all_zeros(k - 1, rel_tol);
        const double edge = std::sqrt(2.0 * static_cast<double>(k) + 1);
        std::vector<double> pts;
        pts.push_back(-edge);
        pts.insert(pts.end(), prev.zeros.begin(), prev.zeros.end());
        pts.push_back(edge);
        const auto psi = [k](double x) { return eval_weighted(k, x).psi_k; };
        zeros.clear();
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            zeros.push_back(solve_bracketed(psi, pts[i], pts[i + 1], rel_tol));
    }
    return {k, std::move(zeros)};
}

struct ZeroSumCheck {
    double lhs;  // sum over i<k of (x_kk - x_ik)^{-2}
    double rhs;  // (2k - x_kk^2 - 2)/3
};

inline ZeroSumCheck zero_sum_identity_check(std::int64_t k) {
    if (k < 3 || k > 500)
        throw std::domain_error("zero_sum_identity_check: supported range is 3 <= k <= 500");
    const ZeroSet zs = all_zeros(k);
    const double xkk = zs.zeros.back();
    double lhs = 0.0;
    for (size_t i = 0; i + 1 < zs.zeros.size(); ++i) {
        const double d = xkk - zs.zeros[i];
        lhs += 1.0 / (d * d);
    }
    const double rhs = (2.0 * static_cast<double>(k) - xkk * xkk - 2.0) / 3.0;
    return {lhs, rhs};
}

struct BetheCheck {
    double lhs;  // 2k - x^2
    double rhs;  // (x - x_kk)^{-2} + (2k - 2 - x_kk^2)/3
};

inline BetheCheck bethe_inequality_check(std::int64_t k, double x) {
    const double xkk = find_largest_zero(k);
    if (!(x > xkk)) throw std::domain_error("bethe_inequality_check: requires x > x_kk");
    const double lhs = y_of(k, x);
    const double d = x - xkk;
    const double rhs = 1.0 / (d * d) + (2.0 * static_cast<double>(k) - 2.0 - xkk * xkk) / 3.0;
    return {lhs, rhs};
}

}  // namespace hermax
