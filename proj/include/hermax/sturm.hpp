#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hermax/multipoly.hpp"

namespace hermax {

// Dense univariate polynomial over the rationals; coefficient of x^i at
// index i. Just enough structure for exact Sturm chains.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly from_multipoly(const MultiPoly& p, Var v) {
        std::vector<Rational> c(p.degree(v) + 1, Rational(0));
        for (const auto& [e, coef] : p.terms()) {
            unsigned total = 0;
            for (unsigned ei : e) total += ei;
            if (total != e[static_cast<int>(v)])
                throw std::domain_error("UniPoly: polynomial is not univariate in the given variable");
            c[e[static_cast<int>(v)]] += coef;
        }
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
        return UniPoly(std::move(d));
    }

    friend UniPoly operator-(const UniPoly& a) {
        std::vector<Rational> r = a.c_;
        for (auto& x : r) x = -x;
        return UniPoly(std::move(r));
    }

    // Euclidean remainder.
    friend UniPoly operator%(UniPoly a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly: remainder by zero");
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const Rational q = a.leading() / b.leading();
            const int shift = a.degree() - b.degree();
            for (int i = 0; i <= b.degree(); ++i)
                a.c_[static_cast<size_t>(i + shift)] -= q * b.c_[static_cast<size_t>(i)];
            a.trim();
        }
        return a;
    }

    friend UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    UniPoly divide_exact(const UniPoly& b) const {
        UniPoly a = *this;
        std::vector<Rational> q(static_cast<size_t>(std::max(0, degree() - b.degree() + 1)), Rational(0));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const Rational qc = a.leading() / b.leading();
            const int shift = a.degree() - b.degree();
            q[static_cast<size_t>(shift)] = qc;
            for (int i = 0; i <= b.degree(); ++i)
                a.c_[static_cast<size_t>(i + shift)] -= qc * b.c_[static_cast<size_t>(i)];
            a.trim();
        }
        if (!a.is_zero()) throw std::domain_error("UniPoly: inexact division");
        return UniPoly(std::move(q));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

namespace detail {

inline int rational_sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0)
        chain.push_back(-(chain[chain.size() - 2] % chain.back()));
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

inline int sign_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    int variations = 0, last = 0;
    for (const auto& p : chain) {
        const int s = rational_sign(p.eval(x));
        if (s != 0 && last != 0 && s != last) ++variations;
        if (s != 0) last = s;
    }
    return variations;
}

inline int sign_variations_at_infinity(const std::vector<UniPoly>& chain, bool positive) {
    int variations = 0, last = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = rational_sign(p.leading());
        if (!positive && p.degree() % 2 == 1) s = -s;
        if (s != 0 && last != 0 && s != last) ++variations;
        if (s != 0) last = s;
    }
    return variations;
}

}  // namespace detail

// Exact count of distinct real roots in (lo, hi], where either bound may be
// infinite (std::nullopt). Non-squarefree input is reduced by gcd with the
// derivative and recounted on the squarefree part.
inline int sturm_root_count(const UniPoly& p,
                            std::optional<Rational> lo,
                            std::optional<Rational> hi) {
    if (p.is_zero()) throw std::domain_error("sturm_root_count: zero polynomial");
    if (p.degree() == 0) return 0;
    UniPoly q = p;
    const UniPoly g = gcd(q, q.derivative());
    if (g.degree() > 0) q = q.divide_exact(g);

    const auto chain = detail::sturm_chain(q);
    const int v_lo = lo ? detail::sign_variations_at(chain, *lo)
                        : detail::sign_variations_at_infinity(chain, false);
    const int v_hi = hi ? detail::sign_variations_at(chain, *hi)
                        : detail::sign_variations_at_infinity(chain, true);
    return v_lo - v_hi;
}

inline int sturm_root_count(const MultiPoly& p, Var v,
                            std::optional<Rational> lo,
                            std::optional<Rational> hi) {
    return sturm_root_count(UniPoly::from_multipoly(p, v), lo, hi);
}

}  // namespace hermax
