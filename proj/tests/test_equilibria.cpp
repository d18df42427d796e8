#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pivlab/equilibria.hpp"
#include "pivlab/families.hpp"
#include "pivlab/relations.hpp"

using namespace pivlab;
using namespace pivlab::equilibria;

TEST_CASE("newton converges to the two-point hermite configuration") {
    PrecisionGuard guard(320);
    EquilibriumProblem p;
    p.system = SystemKind::Stieltjes;
    p.initial = {Complex(Real(1), Real("0.05")), Complex(Real(-9) / 10, Real(0))};
    const auto res = solve_equilibrium(p);
    REQUIRE(res.converged);
    // converged means the residual fell below 2^-(bits/2)
    CHECK(res.residual_max < Real("1e-38"));
    const auto match = match_to_roots(res.config, families::hermite(2), Real("1e-30"), 256);
    CHECK(match.matched);
}

TEST_CASE("multistart recovers the cubic hermite configuration") {
    PrecisionGuard guard(320);
    EquilibriumProblem base;
    base.system = SystemKind::Stieltjes;
    base.n = 3;
    const auto runs = solve_multistart(base, 8, 11);
    size_t hits = 0;
    for (const auto& r : runs) {
        if (!r.converged) continue;
        if (match_to_roots(r.config, families::hermite(3), Real("1e-30"), 256).matched) ++hits;
    }
    CHECK(hits > 0);
}

TEST_CASE("calogero system from an imaginary-axis start") {
    PrecisionGuard guard(320);
    EquilibriumProblem p;
    p.system = SystemKind::Calogero;
    p.initial = {Complex(Real(0), Real(7) / 10), Complex(Real(0), Real(-7) / 10)};
    const auto res = solve_equilibrium(p);
    REQUIRE(res.converged);
    const Poly w12 = families::hermite_wronskian({{1, 2}});
    CHECK(match_to_roots(res.config, w12, Real("1e-30"), 256).matched);
}

TEST_CASE("gradient agrees with the residual") {
    PrecisionGuard guard(256);
    EquilibriumProblem p;
    p.system = SystemKind::Stieltjes;
    p.initial = {Complex(Real(3) / 2, Real(1) / 3), Complex(Real(-1), Real(1) / 7)};
    p.charges = {1, 2};

    relations::ChargeConfig cfg;
    cfg.points = p.initial;
    cfg.charges = p.charges;
    const auto residual = relations::stieltjes_residual(cfg);
    const auto [value, grad] = potential_and_gradient(p, p.initial);
    REQUIRE(grad.size() == residual.size());
    for (size_t k = 0; k < grad.size(); ++k) {
        const Complex expect = Complex(Real(-2) * Real(p.charges[k])) * residual[k];
        CHECK(abs(grad[k] - expect) < Real("1e-60"));
    }
}

TEST_CASE("default start is deterministic in the seed") {
    PrecisionGuard guard(256);
    const auto a = default_start(4, 42, 256);
    const auto b = default_start(4, 42, 256);
    const auto c = default_start(4, 43, 256);
    REQUIRE(a.size() == 4);
    bool same = true, differs = false;
    for (size_t i = 0; i < 4; ++i) {
        same = same && a[i].re == b[i].re && a[i].im == b[i].im;
        differs = differs || a[i].re != c[i].re || a[i].im != c[i].im;
    }
    CHECK(same);
    CHECK(differs);
}

TEST_CASE("deflation steers away from a known equilibrium") {
    PrecisionGuard guard(320);
    EquilibriumProblem p;
    p.system = SystemKind::Stieltjes;
    p.initial = {Complex(Real(8) / 10, Real(0)), Complex(Real(-7) / 10, Real("0.01"))};
    const auto first = solve_equilibrium(p);
    REQUIRE(first.converged);

    const auto second = solve_equilibrium(p, {first.config});
    if (second.converged) {
        Real dist(0);
        for (size_t i = 0; i < second.config.size(); ++i)
            dist = std::max(dist, abs(second.config[i] - first.config[i]));
        CHECK(dist > Real("1e-10"));
    }
}

TEST_CASE("bad starts are rejected or survive without crashing") {
    PrecisionGuard guard(256);
    EquilibriumProblem exact_collision;
    exact_collision.system = SystemKind::Stieltjes;
    exact_collision.initial = {Complex(Real(1), Real(0)), Complex(Real(1), Real(0))};
    CHECK_THROWS_AS(solve_equilibrium(exact_collision), std::domain_error);

    EquilibriumProblem near_collision;
    near_collision.system = SystemKind::Stieltjes;
    near_collision.initial = {Complex(Real(1), Real(0)), Complex(Real(1) + Real("1e-50"), Real(0))};
    CHECK_NOTHROW(solve_equilibrium(near_collision));
}
