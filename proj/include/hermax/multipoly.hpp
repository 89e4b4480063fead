#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hermax {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Variable universe, in the fixed order used by the graded-lex term order
// and by canonical serialization.
enum class Var : int { k = 0, y = 1, s = 2, m = 3, q = 4, x = 5, t = 6 };

constexpr int kNumVars = 7;

inline const char* var_name(Var v) {
    static const char* names[kNumVars] = {"k", "y", "s", "m", "q", "x", "t"};
    return names[static_cast<int>(v)];
}

using Exponents = std::array<unsigned, kNumVars>;

// Descending graded lexicographic: higher total degree first, ties broken by
// the earlier variable's exponent. Map iteration order is therefore the
// canonical print order.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = 0, db = 0;
        for (int i = 0; i < kNumVars; ++i) { da += a[i]; db += b[i]; }
        if (da != db) return da > db;
        for (int i = 0; i < kNumVars; ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

// Exact multivariate polynomial with arbitrary-precision rational
// coefficients. Zero coefficients are never stored.
class MultiPoly {
  public:
    using TermMap = std::map<Exponents, Rational, GradedLexDesc>;

    MultiPoly() = default;

    static MultiPoly constant(Rational c) {
        MultiPoly p;
        if (c != 0) p.terms_[Exponents{}] = std::move(c);
        return p;
    }
    static MultiPoly constant(long c) { return constant(Rational(c)); }

    static MultiPoly variable(Var v, unsigned power = 1) {
        MultiPoly p;
        Exponents e{};
        e[static_cast<int>(v)] = power;
        p.terms_[e] = 1;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Exponents& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    unsigned degree(Var v) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
        return d;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (unsigned ei : e) s += ei;
            d = std::max(d, s);
        }
        return d;
    }

    bool all_coefficients_nonnegative() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
        MultiPoly r;
        if (c == 0) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }

    MultiPoly pow(unsigned n) const {
        MultiPoly r = constant(1);
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    MultiPoly derivative(Var v) const {
        const int iv = static_cast<int>(v);
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[iv] == 0) continue;
            Exponents d = e;
            d[iv] -= 1;
            r.add_term(d, c * e[iv]);
        }
        return r;
    }

    // var := repl, computed by exact expansion; powers of repl are cached.
    MultiPoly substitute(Var v, const MultiPoly& repl) const {
        const int iv = static_cast<int>(v);
        std::vector<MultiPoly> powers = {constant(1)};
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            while (powers.size() <= e[iv]) powers.push_back(powers.back() * repl);
            Exponents rest = e;
            rest[iv] = 0;
            MultiPoly mono;
            mono.terms_[rest] = c;
            r += mono * powers[e[iv]];
        }
        return r;
    }

    MultiPoly shift(Var v, const Rational& c) const {
        return substitute(v, variable(v) + constant(c));
    }

    // Exact division; throws if the remainder is nonzero.
    MultiPoly divide_exact(const MultiPoly& d) const {
        if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero");
        MultiPoly rem = *this, quot;
        const auto& [de, dc] = *d.terms_.begin();  // leading term
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.begin();
            Exponents qe;
            for (int i = 0; i < kNumVars; ++i) {
                if (re[i] < de[i])
                    throw std::domain_error("MultiPoly: inexact division");
                qe[i] = re[i] - de[i];
            }
            MultiPoly qt;
            qt.terms_[qe] = rc / dc;
            quot += qt;
            rem -= qt * d;
        }
        return quot;
    }

    // gcd of all coefficients (as a positive rational p/q with p = gcd of
    // numerators, q = lcm of denominators); dividing by it yields integer
    // coefficients with collective gcd 1.
    Rational content() const {
        if (terms_.empty()) return 0;
        BigInt num_gcd = 0, den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(c)));
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
        }
        return Rational(num_gcd, den_lcm);
    }

    MultiPoly primitive_part() const {
        const Rational c = content();
        if (c == 0) return *this;
        return Rational(1) / c * *this;
    }

    template <typename Map>
    Rational eval(const Map& point) const {
        Rational r = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (int i = 0; i < kNumVars; ++i)
                for (unsigned p = 0; p < e[i]; ++p)
                    term *= point.at(static_cast<Var>(i));
            r += term;
        }
        return r;
    }

    template <typename Map>
    long double eval_double(const Map& point) const {
        long double r = 0;
        for (const auto& [e, c] : terms_) {
            long double term = static_cast<long double>(c.template convert_to<double>());
            for (int i = 0; i < kNumVars; ++i)
                if (e[i] > 0)
                    term *= std::pow(point.at(static_cast<Var>(i)), static_cast<long double>(e[i]));
            r += term;
        }
        return r;
    }

    // Canonical text: terms in descending graded-lex order, exact fractions
    // as "p/q", e.g. "64 y^10 - 672 y^9 + ... + 972 k*y".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            const Rational a = neg ? Rational(-c) : c;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string mono;
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(static_cast<Var>(i));
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            const bool unit = (a == 1) && !mono.empty();
            if (!unit) {
                os << numerator(a).str();
                if (denominator(a) != 1) os << "/" << denominator(a).str();
                if (!mono.empty()) os << " ";
            }
            os << mono;
        }
        return os.str();
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

  private:
    void add_term(const Exponents& e, Rational c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline MultiPoly operator*(const MultiPoly& p, const Rational& c) { return c * p; }

}  // namespace hermax
