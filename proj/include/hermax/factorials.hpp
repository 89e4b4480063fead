#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace hermax {

namespace detail {

// ln of an exact big integer: shift to a 53-bit window, log the window,
// add back shift*ln2. Error is a few ulp of the result.
inline double log_cpp_int(const boost::multiprecision::cpp_int& n) {
    using boost::multiprecision::msb;
    const unsigned bits = msb(n) + 1;
    if (bits <= 53) return std::log(n.template convert_to<double>());
    const unsigned shift = bits - 53;
    const double mant = (n >> shift).template convert_to<double>();
    return std::log(mant) + shift * std::numbers::ln2;
}

inline const std::array<double, 65>& small_log_factorials() {
    static const std::array<double, 65> table = [] {
        std::array<double, 65> t{};
        boost::multiprecision::cpp_int f = 1;
        t[0] = 0.0;
        for (int n = 1; n <= 64; ++n) {
            f *= n;
            t[n] = log_cpp_int(f);
        }
        return t;
    }();
    return table;
}

}  // namespace detail

// ln(n!). Exact integer products for n <= 64; Stirling series beyond, with
// the 1/(1680 n^7) term last so the remainder is below 1/(1188*65^9) ~ 4e-20.
inline double log_factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    if (n <= 64) return detail::small_log_factorials()[static_cast<size_t>(n)];
    const double x = static_cast<double>(n);
    const double inv = 1.0 / x, inv2 = inv * inv;
    return (x + 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi)
         + inv * (1.0 / 12 + inv2 * (-1.0 / 360 + inv2 * (1.0 / 1260 - inv2 / 1680)));
}

}  // namespace hermax
