#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hermax/factorials.hpp"

using hermax::log_factorial;

TEST_CASE("exact small cases") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    // 5! = 120, 20! = 2432902008176640000 (exact integer products)
    CHECK(log_factorial(5) == Catch::Approx(std::log(120.0)).epsilon(1e-15));
    CHECK(log_factorial(20)
          == Catch::Approx(std::log(2432902008176640000.0)).epsilon(1e-15));
    CHECK_THROWS_AS(log_factorial(-1), std::domain_error);
}

TEST_CASE("telescoping across the series switch") {
    for (std::int64_t n : {2, 10, 63, 64, 65, 66, 100, 1234, 99999, 1000000}) {
        const double diff = log_factorial(n) - log_factorial(n - 1);
        CHECK(diff == Catch::Approx(std::log(static_cast<double>(n))).epsilon(1e-12));
    }
}

TEST_CASE("agrees with lgamma") {
    for (std::int64_t n : {3, 30, 64, 65, 300, 10000, 10000000}) {
        CHECK(log_factorial(n)
              == Catch::Approx(std::lgamma(static_cast<double>(n) + 1.0)).epsilon(1e-13));
    }
}
