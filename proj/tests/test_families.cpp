#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pivlab/families.hpp"

using namespace pivlab;
using namespace pivlab::families;

namespace {
const Poly z = Poly::variable();
}

TEST_CASE("hermite polynomials, explicit low orders") {
    CHECK(hermite(0) == Poly::one());
    CHECK(hermite(1) == Rational(2) * z);
    CHECK(hermite(2) == Rational(4) * z * z - Poly(Rational(2)));
    CHECK(hermite(3) == Rational(8) * z * z * z - Rational(12) * z);
}

TEST_CASE("hermite polynomials satisfy their second order equation") {
    for (unsigned n : {5u, 10u}) {
        const Poly h = hermite(n);
        const Poly defect =
            h.derivative().derivative() - Rational(2) * (z * h.derivative()) + Rational(2L * n) * h;
        CHECK(defect.is_zero());
    }
}

TEST_CASE("sequence validation") {
    CHECK_NOTHROW(validate(HermiteSequence{{1, 2, 5}}));
    CHECK_NOTHROW(validate(HermiteSequence{{}}));
    CHECK_THROWS_AS(validate(HermiteSequence{{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(HermiteSequence{{3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(HermiteSequence{{0, 1}}), std::invalid_argument);
}

TEST_CASE("ladder polynomials") {
    const TauVector taus{{Rational(5), Rational(-1, 2)}};
    const auto ladder = adler_moser_ladder(3, taus);
    REQUIRE(ladder.size() == 3);
    CHECK(ladder[0] == z);
    CHECK(ladder[1] == Poly::monomial(Rational(1, 6), 3) + Poly(Rational(5)));
    CHECK(ladder[2] == Poly::monomial(Rational(1, 120), 5) + Poly::monomial(Rational(5, 2), 2) +
                           Poly(Rational(-1, 2)));
    CHECK(adler_moser(3, taus) == ladder[2]);

    TauVector five{{Rational(1), Rational(2), Rational(3), Rational(-7)}};
    const auto long_ladder = adler_moser_ladder(5, five);
    for (size_t k = 1; k < long_ladder.size(); ++k) {
        CHECK(long_ladder[k].derivative().derivative() == long_ladder[k - 1]);
        CHECK(long_ladder[k].coeff(1) == Rational(0));
    }
    CHECK_THROWS_AS(adler_moser(3, TauVector{{Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(adler_moser(0, TauVector{{}}), std::invalid_argument);
}

TEST_CASE("ladder wronskians") {
    const TauVector t1{{Rational(7)}};
    CHECK(adler_moser_wronskian(2, t1) == Poly::monomial(Rational(1, 3), 3) - Poly(Rational(7)));
    for (unsigned n = 1; n <= 5; ++n) {
        const TauVector taus{std::vector<Rational>(n - 1, Rational(0))};
        const Poly w = adler_moser_wronskian(n, taus);
        CHECK(w.degree() == n * (n + 1) / 2);
    }
}

TEST_CASE("hermite wronskians") {
    CHECK(hermite_wronskian(HermiteSequence{{}}) == Poly::one());
    CHECK(hermite_wronskian(HermiteSequence{{2}}) == hermite(2));
    CHECK(hermite_wronskian(HermiteSequence{{1, 2}}) ==
          Rational(8) * z * z + Poly(Rational(4)));
}

TEST_CASE("exponential augmented wronskian") {
    const ExpPoly w = exp_augmented_wronskian(2, TauVector{{Rational(0)}}, Rational(1));
    CHECK(w.rate == Rational(1));
    CHECK(w.poly == Poly::monomial(Rational(1, 3), 3) - z * z + z);
    CHECK_THROWS_AS(exp_augmented_wronskian(2, TauVector{{Rational(0)}}, Rational(0)),
                    std::domain_error);
}
