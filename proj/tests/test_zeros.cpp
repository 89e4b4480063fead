#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hermax/zeros.hpp"

using hermax::all_zeros;
using hermax::bethe_inequality_check;
using hermax::find_largest_zero;
using hermax::largest_zero_bounds;
using hermax::zero_sum_identity_check;
using hermax::ZeroBounds;
using hermax::ZeroSet;

TEST_CASE("closed-form bounds at k=3") {
    const ZeroBounds b = largest_zero_bounds(3);
    CHECK(b.lower == Catch::Approx(0.7803578977047729).epsilon(1e-12));
    CHECK(b.upper == Catch::Approx(1.3040141272740126).epsilon(1e-12));
    // brackets the exact zero sqrt(3/2) of 8x^3 - 12x
    const double x33 = std::sqrt(1.5);
    CHECK(b.lower < x33);
    CHECK(x33 < b.upper);
    CHECK_THROWS_AS(largest_zero_bounds(2), std::domain_error);
}

TEST_CASE("bound gap shrinks like (9/4 - 1.85574)(2k)^{-1/6}") {
    const ZeroBounds b = largest_zero_bounds(1000000);
    const double scaled = (b.upper - b.lower) * std::pow(2.0e6, 1.0 / 6.0);
    CHECK(scaled == Catch::Approx(2.25 - 1.85574).margin(0.01));
}

TEST_CASE("find_largest_zero small closed forms") {
    CHECK(find_largest_zero(1) == 0.0);
    CHECK(find_largest_zero(2) == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(find_largest_zero(3) == Catch::Approx(std::sqrt(1.5)).epsilon(1e-12));
    const ZeroBounds b46 = largest_zero_bounds(46);
    const double x46 = find_largest_zero(46);
    CHECK(b46.lower < x46);
    CHECK(x46 < b46.upper);
}

TEST_CASE("all_zeros closed forms and structure") {
    CHECK(all_zeros(1).zeros == std::vector<double>{0.0});

    const ZeroSet z3 = all_zeros(3);
    REQUIRE(z3.zeros.size() == 3);
    CHECK(z3.zeros[0] == Catch::Approx(-std::sqrt(1.5)).epsilon(1e-11));
    CHECK(z3.zeros[1] == Catch::Approx(0.0).margin(1e-11));
    CHECK(z3.zeros[2] == Catch::Approx(std::sqrt(1.5)).epsilon(1e-11));

    // roots of 16x^4 - 48x^2 + 12: +-sqrt((3 +- sqrt(6))/2)
    const ZeroSet z4 = all_zeros(4);
    REQUIRE(z4.zeros.size() == 4);
    const double outer = std::sqrt((3.0 + std::sqrt(6.0)) / 2.0);
    const double inner = std::sqrt((3.0 - std::sqrt(6.0)) / 2.0);
    CHECK(z4.zeros[3] == Catch::Approx(outer).epsilon(1e-11));
    CHECK(z4.zeros[2] == Catch::Approx(inner).epsilon(1e-11));
    CHECK(z4.zeros[0] == Catch::Approx(-outer).epsilon(1e-11));

    for (std::int64_t k : {37, 100}) {
        const ZeroSet zs = all_zeros(k);
        REQUIRE(static_cast<std::int64_t>(zs.zeros.size()) == k);
        for (size_t i = 0; i + 1 < zs.zeros.size(); ++i)
            CHECK(zs.zeros[i] < zs.zeros[i + 1]);
        for (size_t i = 0; i < zs.zeros.size(); ++i)
            CHECK(zs.zeros[i] == Catch::Approx(-zs.zeros[zs.zeros.size() - 1 - i]).margin(1e-10));
    }

    CHECK_THROWS_AS(all_zeros(0), std::domain_error);
    CHECK_THROWS_AS(all_zeros(501), std::domain_error);
}

TEST_CASE("interlacing for small degrees") {
    ZeroSet prev = all_zeros(2);
    for (std::int64_t k = 3; k <= 12; ++k) {
        const ZeroSet cur = all_zeros(k);
        for (size_t i = 0; i < prev.zeros.size(); ++i) {
            CHECK(cur.zeros[i] < prev.zeros[i]);
            CHECK(prev.zeros[i] < cur.zeros[i + 1]);
        }
        prev = cur;
    }
}

TEST_CASE("zero-sum identity") {
    // k=3: zeros {-sqrt(3/2), 0, sqrt(3/2)}; both sides equal 5/6
    const auto [lhs3, rhs3] = zero_sum_identity_check(3);
    CHECK(lhs3 == Catch::Approx(5.0 / 6.0).epsilon(1e-11));
    CHECK(rhs3 == Catch::Approx(5.0 / 6.0).epsilon(1e-11));

    // k=4: rhs = (6 - (3+sqrt(6))/2)/3 = (9 - sqrt(6))/6 from the closed-form zeros
    const auto [lhs4, rhs4] = zero_sum_identity_check(4);
    const double expected4 = (9.0 - std::sqrt(6.0)) / 6.0;
    CHECK(rhs4 == Catch::Approx(expected4).epsilon(1e-11));
    CHECK(lhs4 == Catch::Approx(expected4).epsilon(1e-9));

    const auto [lhs100, rhs100] = zero_sum_identity_check(100);
    CHECK(std::fabs(lhs100 - rhs100) / rhs100 <= 1e-8);

    CHECK_THROWS_AS(zero_sum_identity_check(2), std::domain_error);
}

TEST_CASE("bethe inequality") {
    // k=3 at x = x_33 + 0.1: lhs = 6 - (sqrt(3/2)+0.1)^2, rhs = 100 + 5/6
    const auto [lhs, rhs] = bethe_inequality_check(3, std::sqrt(1.5) + 0.1);
    CHECK(lhs == Catch::Approx(4.245051025721682).epsilon(1e-9));
    CHECK(rhs == Catch::Approx(100.83333333333333).epsilon(1e-9));
    CHECK(lhs < rhs);

    const auto [lhs2, rhs2] = bethe_inequality_check(10, std::sqrt(20.0));
    CHECK(lhs2 == Catch::Approx(0.0).margin(1e-12));
    CHECK(rhs2 > 0.0);

    const double x50 = find_largest_zero(50);
    const auto [lhs3b, rhs3b] = bethe_inequality_check(50, x50 + std::pow(100.0, -1.0 / 6.0));
    CHECK(lhs3b < rhs3b);

    CHECK_THROWS_AS(bethe_inequality_check(3, 0.5), std::domain_error);
}
