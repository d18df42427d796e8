#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pivlab/families.hpp"
#include "pivlab/relations.hpp"

using namespace pivlab;
using namespace pivlab::relations;

namespace {
const RatFunc z = RatFunc::variable();
const RatFunc one(Rational(1));

Real worst(const std::vector<Complex>& v) {
    Real w(0);
    for (const auto& c : v) w = std::max(w, abs(c));
    return w;
}
}  // namespace

TEST_CASE("hermite zeros satisfy the electrostatic relation") {
    PrecisionGuard guard(320);
    const auto cfg = config_from_zeros(families::hermite(2), 256);
    REQUIRE(cfg.points.size() == 2);
    CHECK(worst(stieltjes_residual(cfg)) < Real("1e-60"));
}

TEST_CASE("hand configuration at plus minus one") {
    PrecisionGuard guard(256);
    ChargeConfig cfg;
    cfg.points = {Complex(1), Complex(-1)};
    cfg.charges = {1, 1};
    const auto st = stieltjes_residual(cfg);
    REQUIRE(st.size() == 2);
    // at z = 1: 1/2 + 0 - 1 = -1/2
    CHECK(abs(st[0] - Complex(Real(-1) / 2)) < Real("1e-60"));
    CHECK(abs(st[1] - Complex(Real(1) / 2)) < Real("1e-60"));

    const auto ca = calogero_residual(cfg);
    // at z = 1: 2/8 - 1 = -3/4
    CHECK(abs(ca[0] - Complex(Real(-3) / 4)) < Real("1e-60"));
    CHECK(abs(ca[1] - Complex(Real(3) / 4)) < Real("1e-60"));
}

TEST_CASE("degenerate configurations are rejected") {
    ChargeConfig cfg;
    cfg.points = {Complex(1), Complex(1)};
    cfg.charges = {1, 1};
    CHECK_THROWS_AS(stieltjes_residual(cfg), std::domain_error);

    ChargeConfig zero;
    zero.points = {Complex(1)};
    zero.charges = {0};
    CHECK_THROWS_AS(stieltjes_residual(zero), std::invalid_argument);
}

TEST_CASE("exact divisibility route") {
    const Poly A = families::hermite_wronskian({{1, 2}});
    CHECK(stieltjes_exact_simple(A, Rational(2) * Poly::variable(), Rational(0), Rational(1)));
    CHECK(stieltjes_exact_simple(families::hermite(6), Poly::one(), Rational(0), Rational(1)));
    CHECK_FALSE(stieltjes_exact_simple(families::hermite(2) + Poly::one(), Poly::one(),
                                       Rational(0), Rational(1)));
}

TEST_CASE("generalized residue conditions") {
    PrecisionGuard guard(320);
    CHECK(generalized_stieltjes_check(RatFunc(Rational(3)) / z - z, 256).pass);
    CHECK(generalized_stieltjes_check(RatFunc(Rational(-2)) / z - z, 256).pass);
    CHECK_FALSE(generalized_stieltjes_check(one / z - z + one, 256).pass);
}

TEST_CASE("squared pole condition for the painleve function") {
    PrecisionGuard guard(320);
    CHECK(theorem1_check(-(one / z), 256).pass);
    const auto shifted = theorem1_check(-(one / z) + one, 256);
    CHECK_FALSE(shifted.pass);
    CHECK(!shifted.residuals.empty());
}
