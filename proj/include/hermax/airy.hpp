#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "hermax/factorials.hpp"
#include "hermax/scaled_value.hpp"
#include "hermax/solvers.hpp"

namespace hermax {

namespace detail {

// Gamma(2/3) and Gamma(4/3) to 20 significant digits; the series gamma
// factors follow by the recurrence Gamma(z+1) = z Gamma(z).
constexpr long double kGammaTwoThirds = 1.3541179394264004169L;
constexpr long double kGammaFourThirds = 0.89297951156924921122L;

}  // namespace detail

// J_nu(x) for nu = +-1/3 by plain power series on 0 <= x <= 50. Alternating
// term ratio is (x/2)^2/((j+1)(j+1+nu)); once below 1/2 the truncated tail
// is under twice the next term, so stopping at |term| < 5e-18 |sum| leaves a
// truncation error well below 1e-14.
inline double bessel_j_third(int nu_sign, double x) {
    if (nu_sign != 1 && nu_sign != -1)
        throw std::domain_error("bessel_j_third: nu must be +-1/3");
    if (!(x >= 0.0 && x <= 50.0))
        throw std::domain_error("bessel_j_third: domain is 0 <= x <= 50");
    const long double nu = nu_sign / 3.0L;
    const long double g1 = nu_sign > 0 ? detail::kGammaFourThirds : detail::kGammaTwoThirds;
    const long double half = 0.5L * static_cast<long double>(x);
    long double term = std::pow(half, nu) / g1;  // j = 0; diverges at x=0 for nu=-1/3
    long double sum = term;
    const long double q = half * half;
    for (int j = 0; j < 400; ++j) {
        term *= -q / ((j + 1) * (j + 1 + nu));
        sum += term;
        if (std::fabs(term) < 5e-18L * std::fabs(sum) && q / ((j + 2) * (j + 2 + nu)) < 0.5L)
            break;
    }
    return static_cast<double>(sum);
}

// A(z) = (pi xi / 3)(J_{-1/3}(2 xi^3) + J_{1/3}(2 xi^3)), xi = sqrt(z/3).
struct AiryValue {
    double z;
    double xi;
    double value;
};

inline AiryValue airy_A(double z) {
    if (!(z > 0.0 && z <= 20.0))
        throw std::domain_error("airy_A: domain is 0 < z <= 20");
    const double xi = std::sqrt(z / 3.0);
    const double arg = 2.0 * xi * xi * xi;
    const double value = std::numbers::pi * xi / 3.0
                       * (bessel_j_third(-1, arg) + bessel_j_third(1, arg));
    return {z, xi, value};
}

// Absolute maximum of A on [0.5, 3] by golden section.
struct AiryMax {
    double z_star;
    double value;
};

inline AiryMax airy_max() {
    auto [z, v] = maximize_golden([](double z) { return airy_A(z).value; }, 0.5, 3.0);
    return {z, v};
}

// First positive zero of A (the i_1 of the closed-form zero bound).
inline double airy_first_zero() {
    return solve_bracketed([](double z) { return airy_A(z).value; }, 3.0, 3.5);
}

// Leading-order transition prediction at x = sqrt(2k+1) - 2^{-1/2} 3^{-1/3} k^{-1/6} z:
//   3^{2/3} pi^{-3/2} 2^{k+1/2} k! k^{-1/6} A(z)^2
inline ScaledValue transition_asymptotic(std::int64_t k, double z) {
    if (k < 10) throw std::domain_error("transition_asymptotic: requires k >= 10");
    if (!(std::fabs(z) <= 3.0))
        throw std::domain_error("transition_asymptotic: requires |z| <= 3");
    const double kd = static_cast<double>(k);
    const double a = airy_A(z).value;
    const double ln = (2.0 / 3.0) * std::log(3.0) - 1.5 * std::log(std::numbers::pi)
                    + (kd + 0.5) * std::numbers::ln2 + log_factorial(k)
                    - std::log(kd) / 6.0 + 2.0 * std::log(std::fabs(a));
    return ScaledValue::from_log(1, ln);
}

// The x the transition variable z maps to.
inline double transition_x(std::int64_t k, double z) {
    const double kd = static_cast<double>(k);
    return std::sqrt(2.0 * kd + 1.0)
         - std::pow(2.0, -0.5) * std::pow(3.0, -1.0 / 3.0) * std::pow(kd, -1.0 / 6.0) * z;
}

}  // namespace hermax
