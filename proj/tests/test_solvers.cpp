#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "hermax/solvers.hpp"

using hermax::Bracket;
using hermax::make_bracket;
using hermax::solve_bracketed;

namespace {

// pi via Machin's formula with plain Taylor series; test-side oracle,
// independent of any library constant
double machin_pi() {
    const auto atan_inv = [](long double x) {
        long double inv = 1.0L / x, term = inv, sum = inv;
        const long double x2 = x * x;
        for (int n = 1; n < 60; ++n) {
            term /= -x2;
            sum += term / (2 * n + 1);
            if (std::fabs(static_cast<double>(term)) < 1e-25) break;
        }
        return sum;
    };
    return static_cast<double>(16.0L * atan_inv(5.0L) - 4.0L * atan_inv(239.0L));
}

}  // namespace

TEST_CASE("bracketed examples") {
    const double r = solve_bracketed([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-14);
    CHECK(r == Catch::Approx(1.41421356237309505).epsilon(1e-13));

    CHECK(solve_bracketed([](double x) { return x - 1.0; }, 0.0, 2.0)
          == Catch::Approx(1.0).epsilon(1e-13));

    const double half_pi = solve_bracketed([](double x) { return std::cos(x); }, 1.0, 2.0);
    CHECK(half_pi == Catch::Approx(machin_pi() / 2.0).epsilon(1e-12));
}

TEST_CASE("matching endpoint signs are rejected") {
    CHECK_THROWS_AS(solve_bracketed([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_bracket([](double x) { return x; }, 1.0, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(Bracket(1.0, 2.0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Bracket(2.0, 1.0, 1, -1), std::invalid_argument);
}

TEST_CASE("endpoint zeros are returned directly") {
    CHECK(solve_bracketed([](double x) { return x; }, 0.0, 1.0) == 0.0);
    CHECK(solve_bracketed([](double x) { return x - 1.0; }, 0.5, 1.0) == 1.0);
}

TEST_CASE("pole-adjacent bracket with an infinite endpoint") {
    const auto f = [](double x) { return 1.0 / (x - 1.0) - 2.0; };
    const double r = solve_bracketed(f, std::nextafter(1.0, 2.0), 4.0);
    CHECK(r == Catch::Approx(1.5).epsilon(1e-12));
    CHECK(std::isinf(f(1.0)));
}

TEST_CASE("returned point properties on random cubics") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    int tested = 0;
    while (tested < 300) {
        const double a = coef(rng), b = coef(rng), c = coef(rng);
        const auto f = [=](double x) { return ((x + a) * x + b) * x + c; };
        const double lo = -8.0, hi = 8.0;
        if (hermax::sign_of(f(lo)) * hermax::sign_of(f(hi)) >= 0) continue;
        ++tested;
        const double rel_tol = 1e-12;
        const double x = solve_bracketed(f, lo, hi, rel_tol);
        CHECK(std::fabs(f(x)) <= std::fabs(f(lo)) + std::fabs(f(hi)));
        // the sign change lies inside [x(1-tol), x(1+tol)]
        const double pad = std::max(rel_tol * std::fabs(x), 1e-300);
        CHECK(hermax::sign_of(f(x - pad)) * hermax::sign_of(f(x + pad)) <= 0);
    }
}

TEST_CASE("golden-section maximizer") {
    const auto [x, v] = hermax::maximize_golden(
        [](double x) { return -(x - 0.7) * (x - 0.7) + 3.0; }, 0.0, 2.0);
    CHECK(x == Catch::Approx(0.7).margin(1e-9));
    CHECK(v == Catch::Approx(3.0).margin(1e-14));
}
