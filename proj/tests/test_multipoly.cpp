#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "hermax/multipoly.hpp"

using namespace hermax;

namespace {
MultiPoly V(Var v) { return MultiPoly::variable(v); }
MultiPoly C(long n) { return MultiPoly::constant(n); }
}  // namespace

TEST_CASE("construction and canonical printing") {
    const MultiPoly p = (V(Var::y) + C(1)).pow(2);
    CHECK(p.to_string() == "y^2 + 2 y + 1");
    CHECK(p.term_count() == 3);
    CHECK(p.degree(Var::y) == 2);

    const MultiPoly q = (V(Var::k) + V(Var::y)).pow(2);
    CHECK(q.to_string() == "k^2 + 2 k*y + y^2");

    const MultiPoly half = MultiPoly::constant(Rational(1, 2)) * V(Var::k);
    CHECK(half.to_string() == "1/2 k");

    CHECK(MultiPoly().to_string() == "0");
    CHECK((V(Var::y) - V(Var::y)).is_zero());

    // graded-lex: higher total degree first, then earlier-variable exponent
    const MultiPoly mix = V(Var::y).pow(3) + V(Var::k) * V(Var::y) + V(Var::k);
    CHECK(mix.to_string() == "y^3 + k*y + k");
}

TEST_CASE("ring operations") {
    const MultiPoly k = V(Var::k), y = V(Var::y);
    const MultiPoly a = k * y + C(3);
    const MultiPoly b = y.pow(2) - C(2) * k;
    CHECK((a * b + a) == a * (b + C(1)));
    CHECK((a - a).is_zero());
    CHECK((-a + a).is_zero());

    const MultiPoly d = (C(2) * y * y - C(4) * y + C(3)).derivative(Var::y);
    CHECK(d.to_string() == "4 y - 4");
    CHECK(d.derivative(Var::k).is_zero());
}

TEST_CASE("substitution") {
    const MultiPoly k = V(Var::k), y = V(Var::y), s = V(Var::s);
    const MultiPoly p = y.pow(3) - k * y;

    // shift: binomial expansion of (y+2)^3 - k(y+2)
    const MultiPoly shifted = p.shift(Var::y, 2);
    CHECK(shifted == y.pow(3) + C(6) * y.pow(2) + C(12) * y + C(8) - k * y - C(2) * k);

    // monomial reparameterization k := s^3/2
    const MultiPoly rep = p.substitute(Var::k, MultiPoly::constant(Rational(1, 2)) * s.pow(3));
    CHECK(rep == y.pow(3) - MultiPoly::constant(Rational(1, 2)) * s.pow(3) * y);

    // substitution by a full polynomial
    const MultiPoly comp = (y.pow(2)).substitute(Var::y, y + s);
    CHECK(comp == y.pow(2) + C(2) * y * s + s.pow(2));
}

TEST_CASE("exact division") {
    const MultiPoly k = V(Var::k), y = V(Var::y);
    const MultiPoly p = (C(2) * y - C(3)) * (k * y + C(7));
    CHECK(p.divide_exact(C(2) * y - C(3)) == k * y + C(7));
    CHECK_THROWS_AS((p + C(1)).divide_exact(C(2) * y - C(3)), std::domain_error);
    CHECK_THROWS_AS(p.divide_exact(MultiPoly()), std::domain_error);
}

TEST_CASE("content and primitive part") {
    const MultiPoly p = MultiPoly::constant(Rational(3, 4)) * V(Var::y)
                      + MultiPoly::constant(Rational(9, 2));
    CHECK(p.content() == Rational(3, 4));
    const MultiPoly prim = p.primitive_part();
    CHECK(prim.to_string() == "y + 6");
    CHECK(prim.content() == 1);
}

TEST_CASE("exact evaluation") {
    const MultiPoly p = V(Var::k).pow(2) * V(Var::y) - MultiPoly::constant(Rational(1, 3));
    const std::map<Var, Rational> pt{{Var::k, Rational(3, 2)}, {Var::y, Rational(4)}};
    CHECK(p.eval(pt) == Rational(9, 4) * 4 - Rational(1, 3));

    const std::map<Var, long double> fpt{{Var::k, 1.5L}, {Var::y, 4.0L}};
    CHECK(static_cast<double>(p.eval_double(fpt))
          == Catch::Approx(9.0 - 1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("coefficient queries") {
    const MultiPoly p = C(5) * V(Var::k).pow(2) * V(Var::y) - C(7) * V(Var::y);
    Exponents e{};
    e[static_cast<int>(Var::k)] = 2;
    e[static_cast<int>(Var::y)] = 1;
    CHECK(p.coefficient(e) == 5);
    CHECK_FALSE(p.all_coefficients_nonnegative());
    CHECK((p + C(7) * V(Var::y)).all_coefficients_nonnegative());
}
