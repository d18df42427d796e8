#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pivlab/solutions.hpp"

using namespace pivlab;
using namespace pivlab::solutions;

namespace {
const RatFunc z = RatFunc::variable();
const RatFunc one(Rational(1));
}  // namespace

TEST_CASE("hermite mode builds the seed function") {
    PrecisionGuard guard(320);
    const RatFunc f = build_f(HermiteMode{families::HermiteSequence{{}}, 1});
    CHECK(f == one / z - z);

    // the next rung up divides out to H_2 over H_1
    const RatFunc g = build_f(HermiteMode{families::HermiteSequence{{1}}, 2});
    const RatFunc expect = log_derivative(RatFunc(families::hermite_wronskian({{1, 2}}),
                                                  families::hermite_wronskian({{1}}))) - z;
    CHECK(g == expect);
    CHECK_THROWS_AS(build_f(HermiteMode{families::HermiteSequence{{2}}, 2}),
                    std::invalid_argument);
}

TEST_CASE("adler-moser step") {
    PrecisionGuard guard(320);
    const families::TauVector t1{{Rational(0)}};
    const RatFunc f = build_f(AdlerMoserStep{1, 1, t1});
    // (log(W(P1,P2)/W(P1)))' with tau = 0: W ratio is z^3/3 over z
    CHECK(f == RatFunc(Poly(Rational(2)), Poly::variable()));

    const RatFunc back = build_f(AdlerMoserStep{2, -1, t1});
    CHECK(back == -f);
}

TEST_CASE("exp mode") {
    PrecisionGuard guard(320);
    const RatFunc f = build_f(ExpMode{1, Rational(1), families::TauVector{{}}});
    // W(P1, e^z)/W(P1) = e^z (z - 1)/z; log-derivative is 1 + 1/(z-1) - 1/z
    const RatFunc expect = one + one / (z - one) - one / z;
    CHECK(f == expect);
}

TEST_CASE("w and u maps") {
    const RatFunc f = one / z - z;
    CHECK(piv_w_from_f(f) == -(one / z));
    CHECK(potential_from_f(f) == z * z - RatFunc(Rational(3)));
}

TEST_CASE("partial fractions round trip") {
    PrecisionGuard guard(320);
    const RatFunc f = one / z - z + RatFunc(Rational(5));
    const auto data = partial_fractions(f, 256);
    REQUIRE(data.poles.size() == 1);
    CHECK(data.poles[0].residue == 1);
    CHECK(std::get<Rational>(data.poles[0].location) == Rational(0));
    CHECK(data.nu == Rational(5));
    CHECK(data.mu == Rational(1));
    CHECK(rebuild(data) == f);

    const RatFunc g = RatFunc(Rational(3)) / (z - RatFunc(Rational(1, 2))) -
                      RatFunc(Rational(2)) / z + RatFunc(Rational(1, 3)) -
                      RatFunc(Rational(7, 2)) * z;
    CHECK(rebuild(partial_fractions(g, 256)) == g);
}

TEST_CASE("partial fractions class boundaries") {
    PrecisionGuard guard(320);
    CHECK_THROWS_AS(partial_fractions(one / (z * z), 256), NotInClassError);
    CHECK_THROWS_AS(partial_fractions(one / (RatFunc(Rational(2)) * z), 256), NotInClassError);
    CHECK_THROWS_AS(partial_fractions(z * z + one / z, 256), NotInClassError);
}
