#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pivlab/errors.hpp"
#include "pivlab/families.hpp"
#include "pivlab/roots.hpp"

using namespace pivlab;
using namespace pivlab::roots;

namespace {
const Poly z = Poly::variable();

Real plug_back(const Poly& p, const std::vector<Complex>& rts) {
    Real worst(0);
    for (const auto& r : rts) worst = std::max(worst, abs(p(r)));
    return worst;
}
}  // namespace

TEST_CASE("numeric roots of a real polynomial with imaginary zeros") {
    PrecisionGuard guard(256 + 64);
    const Poly p = Rational(8) * z * z + Poly(Rational(4));
    const RootSet rs = all_roots(p, 256);
    CHECK(rs.rational_roots.empty());
    REQUIRE(rs.numeric_roots.size() == 2);
    const Real target = Real(1) / sqrt(Real(2));
    for (const auto& r : rs.numeric_roots) {
        CHECK(abs(r.re) < Real("1e-70"));
        CHECK(abs(abs(r.im) - target) < Real("1e-70"));
    }
    CHECK(rs.numeric_roots[0].im * rs.numeric_roots[1].im < 0);
}

TEST_CASE("rational roots recognized exactly with multiplicities") {
    PrecisionGuard guard(320);
    const Poly p = (z - Poly(Rational(1, 2))) * (z - Poly(Rational(1, 2))) * (z + Poly(Rational(3)));
    const RootSet rs = all_roots(p, 256);
    CHECK(rs.numeric_roots.empty());
    REQUIRE(rs.rational_roots.size() == 2);
    std::vector<std::pair<Rational, int>> got;
    for (size_t i = 0; i < rs.rational_roots.size(); ++i)
        got.emplace_back(rs.rational_roots[i], rs.rational_mults[i]);
    std::sort(got.begin(), got.end());
    CHECK(got[0] == std::pair<Rational, int>(Rational(-3), 1));
    CHECK(got[1] == std::pair<Rational, int>(Rational(1, 2), 2));
    CHECK(rs.count_with_multiplicity() == 3);
    CHECK(rs.flatten().size() == 3);
}

TEST_CASE("hermite roots plug back to near zero") {
    PrecisionGuard guard(320);
    const Poly h = families::hermite(12);
    const RootSet rs = all_roots(h, 256);
    CHECK(rs.count_with_multiplicity() == 12);
    // scale the tolerance by the leading coefficient size
    const Real worst = plug_back(h, rs.flatten());
    CHECK(worst < Real("1e-55") * Real(h.coeff(12)));
}

TEST_CASE("simple_roots rejects repeated roots") {
    PrecisionGuard guard(320);
    const Poly p = (z - Poly(Rational(1))) * (z - Poly(Rational(1)));
    CHECK_THROWS_AS(simple_roots(p, 256), PrecisionError);
}

TEST_CASE("rationalization by continued fractions") {
    PrecisionGuard guard(256);
    const auto half = rationalize(Real(1) / 2, Integer(1000));
    REQUIRE(half.has_value());
    CHECK(*half == Rational(1, 2));

    // an irrational input still yields its best convergent under the cap;
    // exactness is the caller's job to certify
    const auto approx = rationalize(sqrt(Real(2)), Integer(1000000));
    REQUIRE(approx.has_value());
    CHECK(boost::multiprecision::denominator(*approx) <= 1000000);
    const Real err = abs(sqrt(Real(2)) - Real(*approx));
    const Real den(boost::multiprecision::denominator(*approx));
    CHECK(err < 1 / (den * den));
    CHECK(err > 0);

    const auto neat = rationalize(Real("-2.75"), Integer(100));
    REQUIRE(neat.has_value());
    CHECK(*neat == Rational(-11, 4));
}
