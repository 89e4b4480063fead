#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hermax {

// Sign-and-log representation for quantities like (H_k(x))^2 e^{-x^2} 2^{-k}/k!
// whose magnitudes leave double range long before k reaches interesting sizes.
// sign == 0 represents exactly zero; log_mag is then meaningless.
struct ScaledValue {
    int sign = 0;
    double log_mag = 0.0;

    static ScaledValue zero() { return {0, 0.0}; }

    static ScaledValue from_log(int sign, double log_mag) {
        return sign == 0 ? zero() : ScaledValue{sign < 0 ? -1 : 1, log_mag};
    }

    static ScaledValue from_real(double x) {
        if (!std::isfinite(x))
            throw std::domain_error("ScaledValue: non-finite input");
        if (x == 0.0) return zero();
        return {x < 0 ? -1 : 1, std::log(std::fabs(x))};
    }

    double to_real() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_mag);  // may over/underflow to inf/0
    }

    bool is_zero() const { return sign == 0; }

    ScaledValue operator-() const { return {-sign, log_mag}; }

    ScaledValue abs() const { return {sign == 0 ? 0 : 1, log_mag}; }

    friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.sign * b.sign, a.log_mag + b.log_mag};
    }

    friend ScaledValue operator/(const ScaledValue& a, const ScaledValue& b) {
        if (b.sign == 0) throw std::domain_error("ScaledValue: division by zero");
        if (a.sign == 0) return zero();
        return {a.sign * b.sign, a.log_mag - b.log_mag};
    }

    // |a| >= |b| branch does log1p(+-exp(small-large)); never overflows.
    friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const ScaledValue *hi = &a, *lo = &b;
        if (b.log_mag > a.log_mag) { hi = &b; lo = &a; }
        const double d = lo->log_mag - hi->log_mag;  // <= 0
        if (a.sign == b.sign)
            return {hi->sign, hi->log_mag + std::log1p(std::exp(d))};
        if (d == 0.0) return zero();  // exact cancellation
        const double r = std::expm1(d);  // in (-1, 0)
        return {hi->sign, hi->log_mag + std::log1p(r)};
    }

    friend ScaledValue operator-(const ScaledValue& a, const ScaledValue& b) {
        return a + (-b);
    }

    ScaledValue sqrt() const {
        if (sign < 0) throw std::domain_error("ScaledValue: sqrt of negative");
        if (sign == 0) return zero();
        return {1, 0.5 * log_mag};
    }

    ScaledValue pow_int(long n) const {
        if (sign == 0) {
            if (n <= 0) throw std::domain_error("ScaledValue: 0^nonpositive");
            return zero();
        }
        int s = (sign < 0 && (n & 1L)) ? -1 : 1;
        return {s, log_mag * static_cast<double>(n)};
    }

    // natural log of |value|; caller must check sign
    double ln_abs() const {
        if (sign == 0) throw std::domain_error("ScaledValue: ln of zero");
        return log_mag;
    }

    friend bool operator<(const ScaledValue& a, const ScaledValue& b) {
        if (a.sign != b.sign) return a.sign < b.sign;
        if (a.sign == 0) return false;
        return a.sign > 0 ? a.log_mag < b.log_mag : a.log_mag > b.log_mag;
    }
    friend bool operator>(const ScaledValue& a, const ScaledValue& b) { return b < a; }
};

}  // namespace hermax
