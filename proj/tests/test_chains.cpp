#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pivlab/chains.hpp"

using namespace pivlab;
using namespace pivlab::chains;

namespace {
const RatFunc z = RatFunc::variable();
const RatFunc one(Rational(1));

bool rotation_of(const std::vector<long>& a, const std::vector<long>& b) {
    if (a.size() != b.size()) return false;
    std::vector<long> doubled = a;
    doubled.insert(doubled.end(), a.begin(), a.end());
    return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}
}  // namespace

TEST_CASE("verify_chain certifies a hand-built chain") {
    const std::vector<RatFunc> fs{one / z - z, -(one / z) - z, -z};
    const auto v = verify_chain(fs);
    REQUIRE(v.pass);
    REQUIRE(v.alphas.size() == 3);
    CHECK(v.alphas[0] == Rational(2));
    CHECK(v.alphas[1] == Rational(-4));
    CHECK(v.alphas[2] == Rational(-4));

    const auto bad = verify_chain({one / z - z, one / z - z, -z});
    CHECK_FALSE(bad.pass);
    CHECK(bad.failed_index.has_value());

    CHECK_THROWS_AS(verify_chain({-z, z}), std::invalid_argument);
}

TEST_CASE("build_chain on the one-step tower") {
    PrecisionGuard guard(320);
    const std::vector<families::HermiteSequence> flag{{{}}, {{1}}};
    const DressingChain chain = build_chain(flag, Rational(1));
    REQUIRE(chain.period() == 3);
    CHECK(chain.fs[0] == one / z - z);
    CHECK(chain.alpha_sum() == Rational(-2));
    CHECK(verify_chain(chain.fs).pass);
    // the search settles on the sign assignment (1/z - z, -1/z - z, z)
    CHECK(chain.alphas == std::vector<Rational>{Rational(2), Rational(-2), Rational(-2)});
}

TEST_CASE("build_chain on a two-step tower") {
    PrecisionGuard guard(320);
    const std::vector<families::HermiteSequence> flag{{{}}, {{2}}, {{1, 2}}};
    const DressingChain chain = build_chain(flag, Rational(1));
    REQUIRE(chain.period() == 5);
    CHECK(chain.alpha_sum() == Rational(-2));
    CHECK(verify_chain(chain.fs).pass);
}

TEST_CASE("rescaling multiplies the alphas") {
    const DressingChain chain{{one / z - z, -(one / z) - z, -z},
                              {Rational(2), Rational(-4), Rational(-4)}};
    const DressingChain scaled = rescale_chain(chain, Rational(4));
    REQUIRE(scaled.period() == 3);
    CHECK(scaled.fs[0] == one / z - Rational(4) * z);
    CHECK(scaled.fs[2] == -(Rational(4) * z));
    CHECK(scaled.alphas == std::vector<Rational>{Rational(8), Rational(-16), Rational(-16)});
    CHECK(verify_chain(scaled.fs).pass);
}

TEST_CASE("chain to painleve translation") {
    PrecisionGuard guard(320);
    const std::vector<families::HermiteSequence> flag{{{}}, {{1}}};
    const auto out = chain_to_piv(build_chain(flag, Rational(1)));
    CHECK(out.sol.w == -(one / z));
    CHECK(out.sol.a == Rational(-2));
    CHECK(out.sol.b == Rational(-2));
    CHECK(out.normalized);
    CHECK(out.alpha_sum == Rational(-2));
    CHECK(verify_piv(out.sol));
    CHECK_FALSE(verify_piv(PIVSolution{out.sol.w, Rational(2), Rational(2)}));
}

TEST_CASE("parameter solving from the defect") {
    const auto ok = solve_piv_params(-(one / z));
    REQUIRE(ok.has_value());
    CHECK(ok->first == Rational(-2));
    CHECK(ok->second == Rational(-2));
    CHECK_FALSE(solve_piv_params(z).has_value());
}

TEST_CASE("pole expansion gate") {
    PrecisionGuard guard(320);
    CHECK(piv_pole_expansion_check(-(one / z), 256).pass);
    const auto bad = piv_pole_expansion_check(one / z + one, 256);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.poles.size() == 1);
    CHECK(bad.poles[0].pass == false);
}

TEST_CASE("residue cycles") {
    const auto three = enumerate_residue_cycles(3, 1);
    REQUIRE(three.size() == 2);
    bool saw_zero = false, saw_step = false;
    for (const auto& c : three) {
        saw_zero = saw_zero || rotation_of(c.values, {0, 0, 0});
        saw_step = saw_step || rotation_of(c.values, {0, 1, -1});
        CHECK(c.branch_word.size() == 3);
    }
    CHECK(saw_zero);
    CHECK(saw_step);

    const auto five = enumerate_residue_cycles(5, 2);
    const bool found = std::any_of(five.begin(), five.end(), [](const ResidueCycle& c) {
        return rotation_of(c.values, {1, -1, 0, 0, 0});
    });
    CHECK(found);
    for (const auto& c : five) {
        CHECK(std::find(c.values.begin(), c.values.end(), 0L) != c.values.end());
        for (long v : c.values) CHECK(std::abs(v) <= 2);
    }
}
