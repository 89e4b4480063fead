#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hermax {

// A sign-change interval. f_lo_sign/f_hi_sign are the recorded signs of f at
// the endpoints; construction enforces lo < hi and opposite signs.
struct Bracket {
    double lo;
    double hi;
    int f_lo_sign;
    int f_hi_sign;

    Bracket(double lo_, double hi_, int f_lo_sign_, int f_hi_sign_)
        : lo(lo_), hi(hi_), f_lo_sign(f_lo_sign_), f_hi_sign(f_hi_sign_) {
        if (!(lo < hi)) throw std::invalid_argument("Bracket: requires lo < hi");
        if (f_lo_sign * f_hi_sign >= 0)
            throw std::invalid_argument("Bracket: endpoint signs must differ");
    }
};

inline int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

template <typename F>
Bracket make_bracket(F&& f, double lo, double hi) {
    const int slo = sign_of(f(lo));
    const int shi = sign_of(f(hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("make_bracket: no sign change on [lo, hi]");
    return Bracket(lo, hi, slo, shi);
}

constexpr double kDefaultRelTol = 1e-13;

// Hybrid secant/bisection on a bracketed root. The bracket is maintained at
// every step, so convergence is guaranteed even across poles adjacent to the
// interval (secant steps that stall or leave the interval fall back to
// bisection). Endpoint zeros are returned as-is. Infinite f values at an
// endpoint keep their sign and force bisection until f is finite.
template <typename F>
double solve_bracketed(F&& f, const Bracket& b, double rel_tol = kDefaultRelTol) {
    double lo = b.lo, hi = b.hi;
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    int slo = sign_of(flo), shi = sign_of(fhi);
    if (slo == shi || std::isnan(flo) || std::isnan(fhi))
        throw std::invalid_argument("solve_bracketed: endpoint signs match");

    double width_two_ago = hi - lo;
    for (int iter = 0; iter < 300; ++iter) {
        const double width = hi - lo;
        if (width <= rel_tol * std::max(std::fabs(lo), std::fabs(hi)))
            break;

        double x;
        const bool secant_ok = std::isfinite(flo) && std::isfinite(fhi) && flo != fhi;
        if (secant_ok && (iter < 2 || width < 0.5 * width_two_ago)) {
            x = lo - flo * (hi - lo) / (fhi - flo);
            const double pad = 0.01 * width;
            if (!(x > lo + pad && x < hi - pad)) x = 0.5 * (lo + hi);
        } else {
            x = 0.5 * (lo + hi);
        }
        if (!(x > lo && x < hi)) break;  // interval exhausted at double precision

        width_two_ago = (iter >= 2) ? width : width_two_ago;
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (std::isnan(fx))
            throw std::runtime_error("solve_bracketed: f evaluated to NaN");
        if (sign_of(fx) == slo) {
            lo = x; flo = fx;
        } else {
            hi = x; fhi = fx;
        }
    }
    return 0.5 * (lo + hi);
}

template <typename F>
double solve_bracketed(F&& f, double lo, double hi, double rel_tol = kDefaultRelTol) {
    return solve_bracketed(std::forward<F>(f), make_bracket(f, lo, hi), rel_tol);
}

// Golden-section maximizer for a unimodal function on [lo, hi].
template <typename F>
std::pair<double, double> maximize_golden(F&& f, double lo, double hi,
                                          double rel_tol = 1e-11) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > rel_tol * (std::fabs(a) + std::fabs(b))) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a); f2 = f(x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a); f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace hermax
