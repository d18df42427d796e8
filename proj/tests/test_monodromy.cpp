#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pivlab/families.hpp"
#include "pivlab/monodromy.hpp"

using namespace pivlab;
using namespace pivlab::monodromy;

namespace {
const RatFunc z = RatFunc::variable();
const RatFunc one(Rational(1));

RatFunc inv_power(const Rational& shift, unsigned e) {
    return one / pow(z - RatFunc(shift), e);
}
}  // namespace

TEST_CASE("find_poles orders and locations") {
    PrecisionGuard guard(320);
    const RatFunc f = one / z + inv_power(Rational(1), 2);
    const auto poles = find_poles(f, 256);
    REQUIRE(poles.size() == 2);
    CHECK(poles[0].is_exact());
    CHECK(std::get<Rational>(poles[0].location) == Rational(0));
    CHECK(poles[0].order == 1);
    CHECK(std::get<Rational>(poles[1].location) == Rational(1));
    CHECK(poles[1].order == 2);
}

TEST_CASE("exact laurent window") {
    PrecisionGuard guard(320);
    const RatFunc f = inv_power(Rational(0), 2) + RatFunc(Rational(3)) + z;
    PoleDatum pole;
    pole.location = Rational(0);
    pole.order = 2;
    const auto win = laurent_window(f, pole, -2, 1, 256);
    CHECK(win.exact);
    CHECK(win.exact_at(-2) == Rational(1));
    CHECK(win.exact_at(-1) == Rational(0));
    CHECK(win.exact_at(0) == Rational(3));
    CHECK(win.exact_at(1) == Rational(1));
}

TEST_CASE("trivial monodromy verdicts at a rational pole") {
    PrecisionGuard guard(320);

    SUBCASE("2/z^2 passes with m = 1") {
        const auto rep = trivial_monodromy_report(RatFunc(Rational(2)) * inv_power(Rational(0), 2), 256);
        CHECK(rep.pass);
        REQUIRE(rep.poles.size() == 1);
        CHECK(rep.poles[0].m == 1);
        CHECK(rep.poles[0].indicial == std::pair<long, long>(-1, 2));
    }

    SUBCASE("1/z^2 fails: c_{-2} is not m(m+1)") {
        const auto rep = trivial_monodromy_report(inv_power(Rational(0), 2), 256);
        CHECK_FALSE(rep.pass);
    }

    SUBCASE("1/z fails: odd coefficient survives") {
        const auto rep = trivial_monodromy_report(one / z, 256);
        CHECK_FALSE(rep.pass);
    }

    SUBCASE("third order pole fails") {
        const auto rep = trivial_monodromy_report(inv_power(Rational(0), 3), 256);
        CHECK_FALSE(rep.pass);
    }

    SUBCASE("6/z^2 + z^2 - 6 passes with m = 2") {
        const RatFunc u = RatFunc(Rational(6)) * inv_power(Rational(0), 2) + z * z -
                          RatFunc(Rational(6));
        const auto rep = trivial_monodromy_report(u, 256);
        CHECK(rep.pass);
        REQUIRE(rep.poles.size() == 1);
        CHECK(rep.poles[0].m == 2);
    }
}

TEST_CASE("numeric poles of a wronskian potential") {
    PrecisionGuard guard(320);
    const Poly w = families::hermite_wronskian(families::HermiteSequence{{1, 2}});
    const RatFunc u = RatFunc(Poly::variable() * Poly::variable()) -
                      RatFunc(Rational(2)) * log_derivative(w).derivative();
    const auto rep = trivial_monodromy_report(u, 256);
    CHECK(rep.pass);
    REQUIRE(rep.poles.size() == 2);
    for (const auto& p : rep.poles) CHECK(p.m == 1);

    const RatFunc bumped = u + RatFunc(Rational(1, 1000)) / z;
    CHECK_FALSE(trivial_monodromy_report(bumped, 256).pass);
}

TEST_CASE("pass tolerance scales with precision") {
    PrecisionGuard guard(640);
    CHECK(pass_tolerance(256) == Real("1e-64"));
    CHECK(pass_tolerance(512) < pass_tolerance(256));
}
