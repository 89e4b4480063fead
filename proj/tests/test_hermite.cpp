#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hermax/hermite.hpp"

using hermax::eval_weighted;
using hermax::HermiteState;
using hermax::laguerre_expression;
using hermax::ln_weighted_square;
using hermax::ode_residual;
using hermax::y_of;

namespace {

// raw H_k recurrence in long double; oracle for small k
long double raw_hermite(int k, long double x) {
    long double hm1 = 0.0L, h = 1.0L;
    for (int j = 0; j < k; ++j) {
        const long double hn = 2.0L * x * h - 2.0L * j * hm1;
        hm1 = h;
        h = hn;
    }
    return h;
}

// exact-rational shadow of the raw recurrence; oracle for parity
boost::multiprecision::cpp_rational raw_hermite_exact(
    int k, const boost::multiprecision::cpp_rational& x) {
    boost::multiprecision::cpp_rational hm1 = 0, h = 1;
    for (int j = 0; j < k; ++j) {
        const auto hn = 2 * x * h - 2 * j * hm1;
        hm1 = h;
        h = hn;
    }
    return h;
}

}  // namespace

TEST_CASE("weighted evaluation at simple points") {
    const HermiteState s0 = eval_weighted(0, 0.0);
    CHECK(s0.psi_k * std::exp(s0.log_scale)
          == Catch::Approx(0.7511255444649425).epsilon(1e-14));

    const HermiteState s1 = eval_weighted(1, 0.0);
    CHECK(s1.psi_k == 0.0);
    CHECK(std::isinf(s1.t));  // t is finite iff psi_k != 0

    const HermiteState s2 = eval_weighted(2, 2.0);
    CHECK(s2.t == Catch::Approx(8.0 / 7.0).epsilon(1e-13));
}

TEST_CASE("representation contract against direct evaluation, k <= 20") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xs(-6.0, 6.0);
    for (int k = 0; k <= 20; ++k) {
        for (int i = 0; i < 20; ++i) {
            const double x = xs(rng);
            const long double h = raw_hermite(k, x);
            if (std::fabs(static_cast<double>(h)) < 1e-8) continue;
            const long double direct =
                std::log(h * h) - static_cast<long double>(x) * x;
            CHECK(ln_weighted_square(k, x)
                  == Catch::Approx(static_cast<double>(direct)).epsilon(1e-10));
        }
    }
}

TEST_CASE("parity: exact shadow and floating") {
    using boost::multiprecision::cpp_rational;
    for (int k : {3, 4, 9, 14}) {
        for (int num = 1; num <= 9; num += 2) {
            const cpp_rational x(num, 4);
            const cpp_rational left = raw_hermite_exact(k, -x);
            const cpp_rational right = raw_hermite_exact(k, x);
            CHECK(left == (k % 2 == 0 ? right : -right));
        }
    }
    for (std::int64_t k : {6, 13, 122, 157}) {
        for (double x : {0.31, 1.7, 9.4, 15.0}) {
            const HermiteState a = eval_weighted(k, x);
            const HermiteState b = eval_weighted(k, -x);
            const double want = (k % 2 == 0 ? 1.0 : -1.0) * a.psi_k;
            CHECK(b.psi_k == Catch::Approx(want).margin(1e-13 * std::fabs(a.psi_k)));
            CHECK(b.log_scale == a.log_scale);
        }
    }
}

TEST_CASE("y_of") {
    CHECK(y_of(3, 0.0) == 6.0);
    CHECK(y_of(6, std::sqrt(12.0)) == Catch::Approx(0.0).margin(1e-14));
    CHECK(y_of(2, 1.5) == Catch::Approx(1.75).epsilon(1e-15));
}

TEST_CASE("laguerre expression values and positivity") {
    // k=2: zeros at +-1/sqrt(2); at x=2 the sum of inverse squares is 36/49
    CHECK(laguerre_expression(2, 2.0) == Catch::Approx(36.0 / 49.0).epsilon(1e-12));
    // k=1: t = 1/x
    CHECK(laguerre_expression(1, 2.0) == Catch::Approx(0.25).epsilon(1e-12));
    // pole at a zero of H_k
    CHECK_THROWS_AS(laguerre_expression(1, 0.0), std::domain_error);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> xs(-20.0, 20.0);
    std::uniform_int_distribution<int> ks(1, 60);
    for (int i = 0; i < 400; ++i) {
        const std::int64_t k = ks(rng);
        const double x = xs(rng);
        const HermiteState st = eval_weighted(k, x);
        if (!std::isfinite(st.t) || std::fabs(st.psi_k) < 1e-6) continue;
        CHECK(laguerre_expression(k, x) > 0.0);
    }
}

TEST_CASE("far-field laguerre expression dominates 2k - x^2") {
    for (std::int64_t k : {3, 12, 40}) {
        for (double x : {9.0, 14.5, 30.0}) {
            CHECK(laguerre_expression(k, x) >= y_of(k, x));
            CHECK(laguerre_expression(k, x) > 0.0);
        }
    }
}

TEST_CASE("ode residual") {
    CHECK(ode_residual(2, 0.3) < 1e-12);
    CHECK(ode_residual(100, 10.0) < 1e-10);
    CHECK(ode_residual(5, -1.0) == ode_residual(5, 1.0));
    CHECK(ode_residual(10000, 50.0) < 1e-10);
    CHECK_THROWS_AS(ode_residual(1, 0.5), std::domain_error);
}

TEST_CASE("rescaling keeps decayed tails representable") {
    // far outside the oscillatory region the function underflows doubles,
    // but the log-domain value stays finite
    const std::int64_t k = 500;
    const double x = std::sqrt(2.0 * 500.0) + 10.0;
    const double lnw = ln_weighted_square(k, x);
    CHECK(std::isfinite(lnw));
    CHECK(lnw < -100.0);
    const HermiteState st = eval_weighted(k, x);
    CHECK(std::fabs(st.psi_k) >= 1e-150);
    CHECK(std::fabs(st.psi_k) <= 1e150);
}
