#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hermax/airy.hpp"
#include "hermax/certificates.hpp"
#include "hermax/envelope.hpp"
#include "hermax/hermite.hpp"
#include "hermax/zeros.hpp"

namespace hermax {

struct Check {
    std::string name;
    bool pass;
    std::string detail;  // first counterexample on failure, summary on pass
};

namespace verify_detail {

inline void add(std::vector<Check>& out, const std::string& name, bool pass,
                const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

}  // namespace verify_detail

inline std::vector<Check> verify_bounds() {
    using verify_detail::add;
    using verify_detail::str;
    std::vector<Check> out;

    // two-sided sandwich over the full desk range, plus the fixed-point
    // bracket x_kk < omega <= omega_upper collected in the same sweep
    {
        bool sandwich_ok = true, bracket_ok = true;
        std::string sfail, bfail;
        for (std::int64_t k = 1; k <= 2000; ++k) {
            const double xkk = find_largest_zero(k);
            const double om = find_omega(k);
            const double up = omega_upper(k);
            if (!(xkk < om) || (k >= 2 ? !(om < up) : !(om <= up * (1 + 1e-12)))) {
                if (bracket_ok) bfail = "k=" + str(k) + " xkk=" + str(xkk) +
                                        " omega=" + str(om) + " upper=" + str(up);
                bracket_ok = false;
            }
            if (k < 6) continue;
            const Theorem1Bounds b = theorem1_bounds(k);
            const double ln_mk = std::log(2.0 * static_cast<double>(k)) / 6.0
                               + ln_weighted_square(k, om);
            if (!(b.ln_lower < ln_mk && ln_mk < b.ln_upper)) {
                if (sandwich_ok) sfail = "k=" + str(k) + " ln_Mk=" + str(ln_mk);
                sandwich_ok = false;
            }
        }
        add(out, "mainth:sandwich k=6..2000", sandwich_ok, sfail);
        add(out, "xt:omega-bracket k=1..2000", bracket_ok, bfail);
    }

    // M_k/C_k approaches 0.715452 with decreasing deviation
    {
        double dev[3];
        const std::int64_t ks[3] = {1000, 10000, 100000};
        for (int i = 0; i < 3; ++i)
            dev[i] = std::fabs(compute_Mk(ks[i]).ratio_Mk_Ck - 0.715452);
        const bool ok = dev[2] <= 0.01 && dev[0] > dev[1] && dev[1] > dev[2];
        add(out, "mainth:ratio-limit k=1e3,1e4,1e5", ok,
            "dev=" + str(dev[0]) + "," + str(dev[1]) + "," + str(dev[2]));
    }

    // single interior minimum of the lower-bound profile
    {
        std::int64_t argmin = 3;
        double best = lower_bound_point_value(3);
        for (std::int64_t k = 4; k <= 10000; ++k) {
            const double v = lower_bound_point_value(k);
            if (v < best) { best = v; argmin = k; }
        }
        const bool ok = argmin == 46 && std::fabs(best - 0.44265) <= 1e-4
                     && best > 27.0 / 61.0;
        add(out, "max:profile-min k=3..1e4", ok,
            "min=" + str(best) + " at k=" + str(argmin));
    }

    // pointwise upper envelope on 2 <= y < 2k - 3/2
    {
        bool ok = true;
        std::string fail;
        for (std::int64_t k : {6, 20, 100, 200}) {
            const double lnC = log_Ck(k);
            for (int i = 0; i < 400 && ok; ++i) {
                const double y = 2.0 + (2.0 * static_cast<double>(k) - 3.5) * i / 400.0;
                const double x = std::sqrt(2.0 * static_cast<double>(k) - y);
                const double lhs = ln_weighted_square(k, x);
                const double rhs = lnC + ln_envelope_F(k, y) + ln_envelope_G(k, y);
                if (!(lhs <= rhs)) {
                    ok = false;
                    fail = "k=" + str(k) + " x=" + str(x);
                }
            }
        }
        add(out, "th2:pointwise k in {6,20,100,200}", ok, fail);
    }

    // lower envelope touches at the last-branch intersection point
    {
        bool ok = true;
        std::string fail;
        for (std::int64_t k : {6, 10, 20, 46, 100, 200}) {
            const SharpnessPoint sp = sharpness_point(k);
            const ZeroSet zs = all_zeros(k);
            const double xl = zs.zeros[static_cast<size_t>(k) - 2];
            const double xr = zs.zeros.back();
            const double xprev = find_largest_zero(k - 1);
            const bool here = xl < sp.tau && sp.tau < xr && sp.tau < xprev
                           && y_of(k, sp.tau) > 3.0 * std::cbrt(2.0 * static_cast<double>(k))
                           && sp.ln_function_value >= sp.ln_lower_envelope_value;
            if (!here && ok) fail = "k=" + str(k) + " tau=" + str(sp.tau);
            ok = ok && here;
        }
        add(out, "th2:sharpness k in {6,10,20,46,100,200}", ok, fail);
    }

    // relative maxima of the weighted square increase toward omega
    {
        bool ok = true;
        std::string fail;
        for (std::int64_t k : {5, 12, 33}) {
            const ZeroSet zs = all_zeros(k);
            std::vector<double> maxima;
            if (k % 2 == 0) maxima.push_back(0.0);
            for (size_t i = 0; i + 1 < zs.zeros.size(); ++i) {
                if (zs.zeros[i] < 0.0) continue;
                const double lo = zs.zeros[i], hi = zs.zeros[i + 1];
                const double pad = 1e-9 * (hi - lo);
                maxima.push_back(solve_bracketed(
                    [k](double x) { return eval_weighted(k, x).t - x; },
                    lo + pad, hi - pad));
            }
            maxima.push_back(find_omega(k));
            double prev = -1e300;
            for (double xm : maxima) {
                const double v = ln_weighted_square(k, xm);
                if (!(v > prev)) {
                    if (ok) fail = "k=" + str(k) + " x=" + str(xm);
                    ok = false;
                }
                prev = v;
            }
        }
        add(out, "szego:monotone-maxima k in {5,12,33}", ok, fail);
    }

    // numeric sampling of the monotonicity lemma
    {
        bool ok = true;
        std::string fail;
        for (std::int64_t k : {2, 5, 20, 200}) {
            const double tk = 2.0 * static_cast<double>(k);
            double prev = 1e300;
            for (int i = 0; i <= 200; ++i) {
                const double y = 2.0 + (tk - 2.0) * i / 200.0;
                const double v = std::exp(ln_envelope_F(k, y) + ln_envelope_G(k, y));
                if (v > prev * (1 + 1e-12)) {
                    if (ok) fail = "v1 k=" + str(k) + " y=" + str(y);
                    ok = false;
                }
                prev = v;
            }
            const double y_lo = 3.0 * std::cbrt(tk);
            prev = 1e300;
            for (int i = 0; i <= 200; ++i) {
                const double y = y_lo + (tk - y_lo) * i / 200.0;
                const double v = std::exp(ln_envelope_F(k, y) - ln_envelope_G(k, y));
                if (v > prev * (1 + 1e-12)) {
                    if (ok) fail = "v2 k=" + str(k) + " y=" + str(y);
                    ok = false;
                }
                prev = v;
            }
        }
        add(out, "incr:numeric-monotone k in {2,5,20,200}", ok, fail);
    }

    // the y0 evaluations behind the upper-bound assembly
    {
        bool ok = true;
        std::string fail;
        for (std::int64_t k : {6, 7, 20, 46, 100, 200}) {
            const double m = m_param(k).m;
            const double y0 = m * m - 1.0 / (3.0 * m * m);
            const double f = envelope_F(k, y0);
            const double g_ln = ln_envelope_G(k, y0);
            const double g_cap = (15.0 / 8.0) * (1.0 + 12.0 / (4.0 * m * m - 9.0));
            if (!(f < 2.0 / (3.0 * m) && g_ln <= g_cap)) {
                if (ok) fail = "k=" + str(k);
                ok = false;
            }
        }
        add(out, "voz:y0-chain k in {6..200}", ok, fail);
    }

    return out;
}

inline std::vector<Check> verify_zeros() {
    using verify_detail::add;
    using verify_detail::str;
    std::vector<Check> out;

    // closed-form bounds, the corollary, and the s-form, one sweep
    {
        bool bounds_ok = true, coroll_ok = true, sform_ok = true;
        std::string bfail, cfail, sfail;
        double x_prev = find_largest_zero(2);
        for (std::int64_t k = 3; k <= 2000; ++k) {
            const ZeroBounds zb = largest_zero_bounds(k);
            const double xkk = find_largest_zero(k);
            if (!(zb.lower < xkk && xkk < zb.upper)) {
                if (bounds_ok) bfail = "k=" + str(k) + " xkk=" + str(xkk);
                bounds_ok = false;
            }
            const double tk = 2.0 * static_cast<double>(k);
            if (!(tk - x_prev * x_prev > 3.0 * std::cbrt(tk))) {
                if (coroll_ok) cfail = "k=" + str(k);
                coroll_ok = false;
            }
            const double s = std::pow(tk, 1.0 / 6.0);
            const double s2 = s * s, s4 = s2 * s2;
            const double sform = 2.0 * s2 * xkk * xkk + 6.0 * s * xkk
                                - 2.0 * s4 * s4 + 3.0 * s4 - 2.0 * s2 + 3.0;
            if (!(sform > 0.0)) {
                if (sform_ok) sfail = "k=" + str(k) + " value=" + str(sform);
                sform_ok = false;
            }
            x_prev = xkk;
        }
        add(out, "ozkor:bounds k=3..2000", bounds_ok, bfail);
        add(out, "ozkor:corollary k=3..2000", coroll_ok, cfail);
        add(out, "ozkor:s-form k=3..2000", sform_ok, sfail);
    }

    // interlacing and the zero-sum identity share the zero sets
    {
        bool inter_ok = true, sum_ok = true;
        std::string ifail, sfail;
        ZeroSet prev = all_zeros(2);
        for (std::int64_t k = 3; k <= 200; ++k) {
            const ZeroSet zs = all_zeros(k);
            for (size_t i = 0; i < prev.zeros.size(); ++i) {
                if (!(zs.zeros[i] < prev.zeros[i] && prev.zeros[i] < zs.zeros[i + 1])) {
                    if (inter_ok) ifail = "k=" + str(k) + " i=" + str(i);
                    inter_ok = false;
                }
            }
            const double xkk = zs.zeros.back();
            double lhs = 0.0;
            for (size_t i = 0; i + 1 < zs.zeros.size(); ++i) {
                const double d = xkk - zs.zeros[i];
                lhs += 1.0 / (d * d);
            }
            const double rhs = (2.0 * static_cast<double>(k) - xkk * xkk - 2.0) / 3.0;
            if (!(std::fabs(lhs - rhs) / rhs <= 1e-8)) {
                if (sum_ok) sfail = "k=" + str(k) + " gap=" + str(std::fabs(lhs - rhs) / rhs);
                sum_ok = false;
            }
            prev = zs;
        }
        add(out, "interlace k=2..200", inter_ok, ifail);
        add(out, "ozkor:zero-sum k=3..200", sum_ok, sfail);
    }

    // Laguerre expression equals the inverse-square sum over zeros
    {
        bool ok = true;
        std::string fail;
        for (std::int64_t k : {5, 17, 33, 50}) {
            const ZeroSet zs = all_zeros(k);
            const double edge = std::sqrt(2.0 * static_cast<double>(k) + 1);
            for (int i = 0; i <= 160 && ok; ++i) {
                const double x = -edge - 1.0 + (2.0 * edge + 2.0) * i / 160.0;
                bool near_zero = false;
                double sum = 0.0;
                for (double z : zs.zeros) {
                    if (std::fabs(x - z) < 1e-3) { near_zero = true; break; }
                    sum += 1.0 / ((x - z) * (x - z));
                }
                if (near_zero) continue;
                const double lag = laguerre_expression(k, x);
                if (!(lag > 0.0) || std::fabs(lag - sum) / sum > 1e-8) {
                    ok = false;
                    fail = "k=" + str(k) + " x=" + str(x);
                }
            }
        }
        add(out, "lagineqv:identity k in {5,17,33,50}", ok, fail);
    }

    // ODE residual bound across degrees
    {
        bool ok = true;
        std::string fail;
        for (std::int64_t k : {2, 5, 100, 1000, 10000}) {
            const double edge = std::sqrt(2.0 * static_cast<double>(k)) + 5.0;
            for (int i = 0; i <= 40 && ok; ++i) {
                const double x = -edge + 2.0 * edge * i / 40.0;
                const double r = ode_residual(k, x);
                if (!(r <= 1e-10)) {
                    ok = false;
                    fail = "k=" + str(k) + " x=" + str(x) + " res=" + str(r);
                }
            }
        }
        add(out, "difequ:ode-residual", ok, fail);
    }

    // parity of the weighted values
    {
        bool ok = true;
        std::string fail;
        for (std::int64_t k : {3, 8, 46, 123}) {
            for (int i = 1; i <= 25 && ok; ++i) {
                const double x = 0.37 * i;
                const HermiteState a = eval_weighted(k, x);
                const HermiteState b = eval_weighted(k, -x);
                const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
                const double scale = std::max(std::fabs(a.psi_k), 1e-300);
                if (std::fabs(b.psi_k - sgn * a.psi_k) / scale > 1e-13
                    || a.log_scale != b.log_scale) {
                    ok = false;
                    fail = "k=" + str(k) + " x=" + str(x);
                }
            }
        }
        add(out, "parity:psi", ok, fail);
    }

    // orthonormal scaling sanity via trapezoid quadrature
    {
        bool ok = true;
        std::string fail;
        for (std::int64_t k : {0, 1, 7, 40, 200}) {
            const double L = std::sqrt(2.0 * static_cast<double>(k) + 1) + 8.0;
            const double h0 = std::min(0.05, std::numbers::pi / (4.0 * std::sqrt(2.0 * static_cast<double>(k) + 1)));
            const long n = static_cast<long>(2.0 * L / h0) + 1;
            double sum = 0.0;
            for (long i = 0; i <= n; ++i) {
                const double x = -L + 2.0 * L * static_cast<double>(i) / static_cast<double>(n);
                const HermiteState st = eval_weighted(k, x);
                const double v = st.psi_k * std::exp(st.log_scale);
                sum += v * v;
            }
            sum *= 2.0 * L / static_cast<double>(n);
            if (std::fabs(sum - 1.0) > 1e-6) {
                if (ok) fail = "k=" + str(k) + " integral=" + str(sum);
                ok = false;
            }
        }
        add(out, "norm:quadrature k in {0,1,7,40,200}", ok, fail);
    }

    // the inequality driving the lower zero bound
    {
        const BetheCheck b1 = bethe_inequality_check(3, find_largest_zero(3) + 0.1);
        const BetheCheck b2 = bethe_inequality_check(10, std::sqrt(20.0));
        const BetheCheck b3 = bethe_inequality_check(
            50, find_largest_zero(50) + std::pow(100.0, -1.0 / 6.0));
        const bool ok = b1.lhs < b1.rhs && b2.lhs < b2.rhs && b3.lhs < b3.rhs;
        add(out, "eqd:bethe samples", ok);
    }

    return out;
}

inline std::vector<Check> verify_certificates() {
    using verify_detail::add;
    using verify_detail::str;
    std::vector<Check> out;

    const MultiPoly A = derive_monotonicity_numerator(MonotoneVariant::v1);
    const MultiPoly B = derive_monotonicity_numerator(MonotoneVariant::v2);

    add(out, "incr:degrees",
        A.degree(Var::k) == 2 && A.degree(Var::y) == 10
            && B.degree(Var::k) == 2 && B.degree(Var::y) == 10,
        "deg_k A=" + str(A.degree(Var::k)) + " deg_y A=" + str(A.degree(Var::y)));

    const Certificate certA =
        certify_shift_positivity(A, {{Var::k, Rational(2)}, {Var::y, Rational(2)}});
    add(out, "incr:A shift-positivity", certA.pass && certA.witness.term_count() <= 33,
        "witness terms=" + str(certA.witness.term_count()));

    const Certificate certB = certify_v2_with_reparam();
    add(out, "incr:B reparam+sturm", certB.pass);

    // exact signs of A and B match finite differences of F G^{+-1}
    {
        bool ok = true;
        std::string fail;
        int checked = 0;
        const auto ln_FG = [](long double kk, long double y, int eps) {
            const long double rad = y * (4 * y * y * y * y - 12 * y * y * y + 9 * y * y
                                         + 10 * kk * y - 12 * kk);
            const long double lnF = std::log(2 * y * y - 4 * y + 3) - 0.5L * std::log(rad);
            const long double lnG = 15 * (2 * kk - y) / (2 * y * (2 * y - 3) * (2 * y - 3));
            return lnF + eps * lnG;
        };
        for (int i = 0; i < 1000; ++i) {
            const Rational kr = Rational(2) + (i % 28) + Rational(i % 5, 7);
            const Rational yr = Rational(2) + (i % 37) + Rational(i % 11, 13);
            const std::map<Var, Rational> pt{{Var::k, kr}, {Var::y, yr}};
            const long double kk = static_cast<long double>(kr.convert_to<double>());
            const long double yy = static_cast<long double>(yr.convert_to<double>());
            for (const auto& [p, eps] : {std::pair{&A, 1}, std::pair{&B, -1}}) {
                const Rational val = p->eval(pt);
                const long double h = 1e-6L * yy;
                const long double fd =
                    (ln_FG(kk, yy + h, eps) - ln_FG(kk, yy - h, eps)) / (2 * h);
                if (std::fabs(static_cast<double>(fd)) < 1e-9) continue;
                ++checked;
                const int s_exact = val > 0 ? 1 : (val < 0 ? -1 : 0);
                if (s_exact != (fd < 0 ? 1 : -1)) {
                    if (ok) fail = "k=" + str(kk) + " y=" + str(yy) + " eps=" + str(eps);
                    ok = false;
                }
            }
        }
        add(out, "incr:sign-consistency 1000 samples", ok && checked > 1500,
            ok ? "checked=" + str(checked) : fail);
    }

    // the tangency cubic and its closed-form specializations
    {
        bool ok = true;
        std::string fail;
        const LaguerreCubic lc = build_U();
        // t^2 coefficient of the quadratic, extracted as (U(1)+U(-1))/2 - U(0)
        const MultiPoly k = MultiPoly::variable(Var::k), q = MultiPoly::variable(Var::q),
                        x = MultiPoly::variable(Var::x);
        const MultiPoly c2 = MultiPoly::constant(2);
        const MultiPoly t2_expected = c2 * k + q * q - c2 - c2 * q * x;
        const MultiPoly u0 = lc.U.substitute(Var::t, MultiPoly::constant(0));
        const MultiPoly u1 = lc.U.substitute(Var::t, MultiPoly::constant(1));
        const MultiPoly um1 = lc.U.substitute(Var::t, MultiPoly::constant(-1));
        const MultiPoly t2_derived = Rational(1, 2) * (u1 + um1) - u0;
        if (!(t2_derived == t2_expected)) { ok = false; fail = "t^2 coefficient"; }

        const MultiPoly q0spec = lc.u_cubic.substitute(Var::q, MultiPoly::constant(0));
        const MultiPoly q0expected = c2 * (c2 * k * k - (k + MultiPoly::constant(1)) * x * x);
        if (ok && !(q0spec == q0expected)) { ok = false; fail = "q=0 specialization"; }

        // u(sqrt(2k-1)) = -2(9m^8 - 15m^4 + 1)/(9m^4) under the m-parameterization
        for (int i = 1; i <= 100 && ok; ++i) {
            const long double m = 1.0L + i / 100.0L;
            const long double m2 = m * m, m4 = m2 * m2, m6 = m4 * m2, m8 = m4 * m4;
            const long double m12 = m6 * m6;
            const long double kk = (27 * m12 - 1) / (54 * m6);
            const long double q0 = (3 * m4 - 3 * m2 - 1) * std::sqrt(9 * m4 - 3) / (9 * m2 * m);
            const long double xx = std::sqrt(2 * kk - 1);
            const std::map<Var, long double> pt{{Var::k, kk}, {Var::q, q0}, {Var::x, xx}};
            const long double val = lc.u_cubic.eval_double(pt);
            const long double target = -2 * (9 * m8 - 15 * m4 + 1) / (9 * m4);
            if (std::fabs(static_cast<double>((val - target) / target)) > 1e-12) {
                ok = false;
                fail = "m-identity at m=" + str(static_cast<double>(m));
            }
        }
        add(out, "xt:U-cubic", ok, fail);
    }

    // exact squared comparison for the s-substitution chain
    {
        bool ok = true;
        std::string fail;
        for (int i = 1; i <= 1000; ++i) {
            const Rational s = 1 + Rational(i, 100);
            const Rational s2 = s * s, s4 = s2 * s2, s8 = s4 * s4;
            const Rational E = 4 * s8 - 6 * s4 + 4 * s2 + 3;
            const Rational W = 2 * s4 - Rational(3, 2);
            if (!(W > 0 && E > W * W)) {
                if (ok) fail = "s=" + str(s.convert_to<double>());
                ok = false;
            }
        }
        add(out, "ozkor:s-chain 1000 samples", ok, fail);
    }

    // canonical serialization is reproducible
    {
        const MultiPoly A2 = derive_monotonicity_numerator(MonotoneVariant::v1);
        const Certificate certA2 =
            certify_shift_positivity(A2, {{Var::k, Rational(2)}, {Var::y, Rational(2)}});
        const bool ok = A2.to_string() == A.to_string()
                     && certA2.to_text() == certA.to_text()
                     && certify_v2_with_reparam().to_text() == certB.to_text();
        add(out, "certificates:deterministic", ok);
    }

    return out;
}

inline std::vector<Check> verify_airy() {
    using verify_detail::add;
    using verify_detail::str;
    std::vector<Check> out;

    const AiryMax mx = airy_max();
    add(out, "airy:max", std::fabs(mx.z_star - 1.46935) <= 1e-3
                             && std::fabs(mx.value - 1.1668) <= 1e-3,
        "z*=" + str(mx.z_star) + " A=" + str(mx.value));

    add(out, "airy:A(1)", std::fabs(airy_A(1.0).value - 1.110982) <= 1e-3,
        "A(1)=" + str(airy_A(1.0).value));

    {
        const double z1 = airy_first_zero();
        const double coeff = std::pow(6.0, -1.0 / 3.0) * z1;
        add(out, "airy:first-zero", std::fabs(coeff - kSzegoUpperCoeff) <= 5e-5,
            "6^{-1/3} i1=" + str(coeff));
    }

    {
        double dev[2];
        const std::int64_t ks[2] = {1000, 8000};
        for (int i = 0; i < 2; ++i) {
            const std::int64_t k = ks[i];
            const double x = transition_x(k, mx.z_star);
            const double ratio = std::exp(transition_asymptotic(k, mx.z_star).ln_abs()
                                          - ln_weighted_square(k, x));
            dev[i] = std::fabs(ratio - 1.0);
        }
        add(out, "airy:transition-ratio k=1000,8000",
            dev[0] <= 0.01 && dev[1] <= 0.5 * dev[0],
            "dev=" + str(dev[0]) + "," + str(dev[1]));
    }

    {
        const std::int64_t k = 100000;
        const double om = find_omega(k);
        const double tk = 2.0 * static_cast<double>(k);
        const double offset = (std::sqrt(tk) - om) * std::pow(tk, 1.0 / 6.0);
        const double predicted = std::pow(6.0, -1.0 / 3.0) * mx.z_star;
        add(out, "airy:omega-offset k=1e5",
            std::fabs(offset - predicted) <= 0.02 * predicted,
            "offset=" + str(offset) + " predicted=" + str(predicted));
    }

    {
        bool ok = true;
        std::string detail;
        for (std::int64_t k : {1000, 10000, 100000}) {
            const double v = std::exp(transition_asymptotic(k, mx.z_star).ln_abs()
                                      + std::log(2.0 * static_cast<double>(k)) / 6.0
                                      - log_Ck(k));
            if (std::fabs(v - 0.715452) > 1e-5) ok = false;
            detail += str(v) + " ";
        }
        add(out, "airy:ratio-consistency", ok, detail);
    }

    return out;
}

inline std::vector<Check> verify_suite(const std::string& suite) {
    std::vector<Check> out;
    const auto append = [&out](std::vector<Check> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    if (suite == "bounds" || suite == "all") append(verify_bounds());
    if (suite == "zeros" || suite == "all") append(verify_zeros());
    if (suite == "certificates" || suite == "all") append(verify_certificates());
    if (suite == "airy" || suite == "all") append(verify_airy());
    if (out.empty()) throw std::domain_error("verify_suite: unknown suite " + suite);
    return out;
}

}  // namespace hermax
