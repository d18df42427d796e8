#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pivlab/poly.hpp"
#include "pivlab/ratfunc.hpp"
#include "pivlab/scalars.hpp"
#include "pivlab/wronskian.hpp"

using namespace pivlab;

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
    CHECK(rational_to_string(Rational(4)) == "4");
    CHECK(rational_from_string("-3/6") == Rational(-1, 2));
    CHECK(rational_from_string(" 7 ") == Rational(7));
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("precision guard sets and restores") {
    const auto before = Real::default_precision();
    {
        PrecisionGuard guard(512);
        CHECK(Real::default_precision() >= bits_to_digits10(512) - 1);
    }
    CHECK(Real::default_precision() == before);
}

TEST_CASE("complex arithmetic") {
    PrecisionGuard guard(128);
    const Complex a(Real(1), Real(2)), b(Real(3), Real(-1));
    const Complex p = a * b;
    CHECK(p.re == Real(5));
    CHECK(p.im == Real(5));
    const Complex q = a / a;
    CHECK(abs(q - Complex(1)) < Real("1e-30"));
    const Complex r = sqrt(Complex(Real(-4), Real(0)));
    CHECK(abs(r - Complex(Real(0), Real(2))) < Real("1e-30"));
    CHECK(abs(Complex(Real(3), Real(4))) == Real(5));
}

TEST_CASE("decimal strings") {
    PrecisionGuard guard(128);
    const Real x = Real(1) / 3;
    const Real y = real_from_decimal(to_decimal(x, 128));
    CHECK(abs(x - y) < Real("1e-35"));
}

TEST_CASE("poly basics") {
    const Poly z = Poly::variable();
    const Poly p = Rational(4) * z * z - Poly(Rational(2));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rational(-2));
    CHECK(p.coeff(5) == Rational(0));
    CHECK(p(Rational(1, 2)) == Rational(-1));
    CHECK(p.str() == "4*z^2 - 2");
    CHECK(Poly::from_coeffs({Rational(0), Rational(0)}).is_zero());
    CHECK(p.derivative() == Rational(8) * z);
    CHECK((Rational(8) * z).antiderivative() == Rational(4) * z * z);
}

TEST_CASE("poly division and gcd") {
    const Poly z = Poly::variable();
    const Poly num = z * z * z - Poly(Rational(1));
    const Poly den = z - Poly(Rational(1));
    const auto [q, r] = divmod(num, den);
    CHECK(r.is_zero());
    CHECK(q == z * z + z + Poly(Rational(1)));
    CHECK(divides(den, num));
    CHECK(divexact(num, den) == q);
    CHECK_THROWS_AS(divexact(num, z + Poly(Rational(2))), std::domain_error);
    const Poly g = gcd(z * z - Poly(Rational(1)), z * z - Rational(2) * z + Poly(Rational(1)));
    CHECK(g == z - Poly(Rational(1)));
}

TEST_CASE("squarefree decomposition") {
    const Poly z = Poly::variable();
    const Poly p = (z + Poly(Rational(2))) * (z - Poly(Rational(1))) * (z - Poly(Rational(1)));
    const auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == z + Poly(Rational(2)));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == z - Poly(Rational(1)));
    CHECK(parts[1].second == 2);
    CHECK(squarefree_part(p) == (z + Poly(Rational(2))) * (z - Poly(Rational(1))));
}

TEST_CASE("taylor shift") {
    const Poly z = Poly::variable();
    const Poly p = Rational(4) * z * z - Poly(Rational(2));
    const auto shifted = taylor_shift(p, Rational(1, 2));
    REQUIRE(shifted.size() == 3);
    CHECK(shifted[0] == Rational(-1));
    CHECK(shifted[1] == Rational(4));
    CHECK(shifted[2] == Rational(4));
}

TEST_CASE("ratfunc normalization and arithmetic") {
    const RatFunc z = RatFunc::variable();
    const RatFunc f = RatFunc(Rational(1)) / z + z;
    CHECK(f.num() == Poly::variable() * Poly::variable() + Poly(Rational(1)));
    CHECK(f.den() == Poly::variable());
    const RatFunc g = RatFunc(Poly::variable() * Poly(Rational(2)),
                              Rational(4) * Poly::variable() * Poly::variable() -
                                  Poly(Rational(2)));
    CHECK(g == RatFunc(Poly::variable(), Rational(2) * Poly::variable() * Poly::variable() -
                                             Poly(Rational(1))));
    const RatFunc inv = RatFunc(Rational(1)) / z;
    CHECK(inv.derivative() == -(RatFunc(Rational(1)) / (z * z)));
    CHECK(log_derivative(pow(Poly::variable(), 3)) ==
          RatFunc(Poly(Rational(3)), Poly::variable()));
    CHECK_THROWS_AS(inv(Complex(0)), std::domain_error);
    CHECK(f(Rational(2)) == Rational(5, 2));
}

TEST_CASE("exp poly derivative") {
    const ExpPoly e{Rational(2), Poly::variable()};
    const ExpPoly d = e.derivative();
    CHECK(d.rate == Rational(2));
    CHECK(d.poly == Rational(2) * Poly::variable() + Poly(Rational(1)));
}

TEST_CASE("polynomial wronskians") {
    const Poly z = Poly::variable();
    const Poly h1 = Rational(2) * z;
    const Poly h2 = Rational(4) * z * z - Poly(Rational(2));
    CHECK(wronskian(std::vector<Poly>{h1, h2}) == Rational(8) * z * z + Poly(Rational(4)));
    const Poly p2 = Poly::monomial(Rational(1, 6), 3) + Poly(Rational(5));
    CHECK(wronskian(std::vector<Poly>{z, p2}) ==
          Poly::monomial(Rational(1, 3), 3) - Poly(Rational(5)));
    CHECK(wronskian(std::vector<Poly>{}) == Poly::one());
}

TEST_CASE("exponential wronskian and column order") {
    const ExpPoly tail{Rational(1), Poly::one()};
    const auto w = wronskian(std::vector<Poly>{Poly::one()}, tail);
    CHECK(w.rate == Rational(1));
    CHECK(w.poly == Poly::one());

    std::vector<WronskianEntry> entries;
    entries.push_back(tail);
    entries.push_back(Poly::one());
    const auto flipped = std::get<ExpPoly>(wronskian(entries));
    CHECK(flipped.poly == -Poly::one());
}

TEST_CASE("bareiss determinant") {
    const Poly z = Poly::variable();
    std::vector<std::vector<Poly>> m{{z, Poly(Rational(1))}, {Poly(Rational(1)), z}};
    CHECK(bareiss_determinant(m) == z * z - Poly(Rational(1)));
    std::vector<std::vector<Poly>> s{{Poly(), Poly(Rational(1))}, {Poly(Rational(1)), Poly()}};
    CHECK(bareiss_determinant(s) == -Poly::one());
}
