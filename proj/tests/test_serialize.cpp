#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pivlab/manifest.hpp"
#include "pivlab/parse.hpp"
#include "pivlab/serialize.hpp"

using namespace pivlab;

namespace {
const RatFunc z = RatFunc::variable();
const RatFunc one(Rational(1));
}  // namespace

TEST_CASE("polynomial json round trip") {
    const Poly p = Poly::from_coeffs({Rational(-2), Rational(0), Rational(4)});
    const Json j = to_json(p);
    CHECK(j.dump() == R"(["-2","0","4"])");
    CHECK(poly_from_json(j) == p);
    CHECK(to_json(Poly()).dump() == "[]");
    CHECK(poly_from_json(Json::array()).is_zero());
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"(["1/0"])")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"a":1})")), std::invalid_argument);
}

TEST_CASE("ratfunc json round trip") {
    const RatFunc f = (z * z + one) / (z * z * z - RatFunc(Rational(3)) * z);
    const Json j = to_json(f);
    CHECK(j.contains("num"));
    CHECK(j.contains("den"));
    CHECK(ratfunc_from_json(j) == f);
    CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"num":[]})")), std::invalid_argument);
}

TEST_CASE("chain json round trip") {
    chains::DressingChain chain;
    chain.fs = {one / z - z, -(one / z) - z, -z};
    chain.alphas = {Rational(2), Rational(-4), Rational(-4)};
    const Json j = to_json(chain);
    CHECK(j["N"] == 3);
    const auto back = chain_from_json(j);
    CHECK(back.fs == chain.fs);
    CHECK(back.alphas == chain.alphas);

    Json broken = j;
    broken["N"] = 5;
    CHECK_THROWS_AS(chain_from_json(broken), std::invalid_argument);
}

TEST_CASE("solution spec json round trip") {
    const Json j = Json::parse(R"({"mode":"hermite","ks":[1,2],"k_extra":3})");
    const auto spec = solution_spec_from_json(j);
    const auto* hm = std::get_if<solutions::HermiteMode>(&spec);
    REQUIRE(hm != nullptr);
    CHECK(hm->ks.ks == std::vector<unsigned>{1, 2});
    CHECK(hm->k_extra == 3);
    CHECK(to_json(spec)["mode"] == "hermite");

    CHECK_THROWS_AS(solution_spec_from_json(Json::parse(R"({"mode":"cubic"})")),
                    std::invalid_argument);

    const auto am = solution_spec_from_json(
        Json::parse(R"({"mode":"adler_moser","n":2,"direction":-1,"taus":["1/2"]})"));
    const auto* step = std::get_if<solutions::AdlerMoserStep>(&am);
    REQUIRE(step != nullptr);
    CHECK(step->n == 2);
    CHECK(step->direction == -1);
    CHECK(step->taus.taus == std::vector<Rational>{Rational(1, 2)});
}

TEST_CASE("numeric json carries decimal strings") {
    PrecisionGuard guard(256);
    const Json j = to_json(Complex(Real(1) / 3, Real(-2)), 256);
    CHECK(j.contains("re"));
    CHECK(j.contains("im"));
    const Real back = real_from_decimal(j["re"].get<std::string>());
    CHECK(abs(back - Real(1) / 3) < Real("1e-70"));
}

TEST_CASE("relation report shape") {
    relations::RelationReport rep;
    rep.relation = "stieltjes";
    rep.residuals = {Real("1e-70")};
    rep.pass = true;
    rep.precision_bits = 256;
    const Json j = to_json(rep);
    CHECK(j["relation"] == "stieltjes");
    CHECK(j["verdict"] == "pass");
    CHECK(j["precision_bits"] == 256);
    REQUIRE(j["residuals"].is_array());
    CHECK(j["residuals"].size() == 1);
}

TEST_CASE("manifest") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") != fnv1a64("b"));

    const Json config = Json::parse(R"({"n":6})");
    const auto m = make_manifest({"pivlab", "verify", "stieltjes"}, config, 256, 7,
                                 "2026-01-01T00:00:00Z");
    CHECK(m.command_line == "pivlab verify stieltjes");
    CHECK(m.precision_bits == 256);
    CHECK(m.seed == 7);
    CHECK(m.timestamp == "2026-01-01T00:00:00Z");
    CHECK(m.config_hash.size() == 16);

    const Json env = report_envelope(m, "report", Json::parse(R"({"x":1})"));
    CHECK(env.contains("manifest"));
    CHECK(env["report"]["x"] == 1);
    const auto repeat = make_manifest({"pivlab", "verify", "stieltjes"}, config, 256, 7,
                                      "2026-01-01T00:00:00Z");
    CHECK(to_json(m).dump() == to_json(repeat).dump());
}

TEST_CASE("expression parser") {
    CHECK(parse_ratfunc("-1/z") == -(one / z));
    CHECK(parse_ratfunc("(z^2+1)/(z^3-3*z)") ==
          (z * z + one) / (z * z * z - RatFunc(Rational(3)) * z));
    CHECK(parse_ratfunc("2z - 1/2") == RatFunc(Rational(2)) * z - RatFunc(Rational(1, 2)));
    CHECK(parse_ratfunc("z^-1") == one / z);
    CHECK(parse_ratfunc("  z \t* (z + 1) ") == z * z + z);
    CHECK_THROWS_AS(parse_ratfunc("z +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfunc("y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfunc("1/(z-z)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfunc("z^999999"), std::invalid_argument);
}

TEST_CASE("flag parser") {
    const auto flag = parse_flag("[]<[1]<[1,2]");
    REQUIRE(flag.size() == 3);
    CHECK(flag[0].empty());
    CHECK(flag[1] == std::vector<unsigned>{1});
    CHECK(flag[2] == std::vector<unsigned>{1, 2});

    const auto seqs = parse_flag_sequences("[]<[2]<[2,1]");
    REQUIRE(seqs.size() == 3);
    CHECK(seqs[2].ks == std::vector<unsigned>{1, 2});

    CHECK_THROWS_AS(parse_flag("[1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_flag(""), std::invalid_argument);
}
