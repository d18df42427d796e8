#include "pivlab/acceptance.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "pivlab/chains.hpp"
#include "pivlab/equilibria.hpp"
#include "pivlab/families.hpp"
#include "pivlab/monodromy.hpp"
#include "pivlab/relations.hpp"
#include "pivlab/roots.hpp"
#include "pivlab/solutions.hpp"

namespace pivlab {
namespace acceptance {

namespace {

constexpr unsigned kBits = 256;

Real max_abs(const std::vector<Complex>& v) {
    Real worst{0};
    for (const auto& z : v) worst = (std::max)(worst, abs(z));
    return worst;
}

// Nested towers of Hermite index sets over {1,2,3}, one and two steps deep.
std::vector<std::vector<families::HermiteSequence>> small_flags() {
    std::vector<std::vector<families::HermiteSequence>> flags;
    for (unsigned a = 1; a <= 3; ++a)
        flags.push_back({families::HermiteSequence{}, families::HermiteSequence{{a}}});
    for (unsigned a = 1; a <= 3; ++a)
        for (unsigned b = 1; b <= 3; ++b) {
            if (a == b) continue;
            std::vector<unsigned> top{a, b};
            std::sort(top.begin(), top.end());
            flags.push_back({families::HermiteSequence{}, families::HermiteSequence{{a}},
                             families::HermiteSequence{top}});
        }
    return flags;
}

bool rotation_equal(const std::vector<long>& a, const std::vector<long>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::vector<long> doubled(a);
    doubled.insert(doubled.end(), a.begin(), a.end());
    return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

}  // namespace

CriterionResult hermite_ode() {
    CriterionResult r{1, "hermite ODE identity exact for n <= 64", false, ""};
    const Poly z = Poly::variable();
    for (unsigned n = 0; n <= 64; ++n) {
        const Poly h = families::hermite(n);
        const Poly defect = h.derivative(2) - Rational(2) * (z * h.derivative()) +
                            Rational(2L * n) * h;
        if (!defect.is_zero()) {
            r.detail = "nonzero defect at n = " + std::to_string(n);
            return r;
        }
    }
    r.pass = true;
    r.detail = "65 identities hold over the rationals";
    return r;
}

CriterionResult stieltjes_at_hermite_zeros() {
    CriterionResult r{2, "stieltjes residual < 1e-60 at hermite zeros, perturbation fails", false,
                      ""};
    PrecisionGuard guard(kBits + 64);
    Real worst{0};
    for (unsigned n = 1; n <= 12; ++n) {
        auto cfg = relations::config_from_zeros(families::hermite(n), kBits);
        worst = (std::max)(worst, max_abs(relations::stieltjes_residual(cfg)));
    }
    std::ostringstream os;
    os << "max residual " << to_decimal(worst, 24);
    if (worst >= Real("1e-60")) {
        r.detail = os.str() + " exceeds 1e-60";
        return r;
    }
    auto cfg = relations::config_from_zeros(families::hermite(12), kBits);
    cfg.points[0].re += Real(1) / 1000;
    const Real bumped = max_abs(relations::stieltjes_residual(cfg));
    os << ", perturbed residual " << to_decimal(bumped, 8);
    if (bumped <= Real("1e-4")) {
        r.detail = os.str() + " not detected";
        return r;
    }
    r.pass = true;
    r.detail = os.str();
    return r;
}

CriterionResult exact_divisibility() {
    CriterionResult r{3, "exact divisibility test: hermite passes, shifted hermite fails", false,
                      ""};
    const Poly one = Poly::one();
    for (unsigned n = 1; n <= 32; ++n) {
        if (!relations::stieltjes_exact_simple(families::hermite(n), one, Rational(0),
                                               Rational(1))) {
            r.detail = "rejected valid input at n = " + std::to_string(n);
            return r;
        }
        bool shifted = false;
        try {
            shifted = relations::stieltjes_exact_simple(families::hermite(n) + one, one,
                                                        Rational(0), Rational(1));
        } catch (const std::invalid_argument&) {
            shifted = false;
        }
        if (shifted) {
            r.detail = "accepted shifted input at n = " + std::to_string(n);
            return r;
        }
    }
    r.pass = true;
    r.detail = "32 accept / 32 reject pairs";
    return r;
}

CriterionResult residue_square_vanishing() {
    CriterionResult r{4, "Res (z+w)^2 vanishes for chain-produced w, fails for w+1", false, ""};
    PrecisionGuard guard(kBits + 64);
    const RatFunc z = RatFunc::variable();
    unsigned checked = 0;
    for (const auto& flag : small_flags()) {
        const auto chain = chains::build_chain(flag, Rational(1));
        const RatFunc w = -(z + chain.fs[0]);
        if (!relations::theorem1_check(w, kBits).pass) {
            r.detail = "vanishing failed for a produced w (period " +
                       std::to_string(chain.period()) + ")";
            return r;
        }
        if (relations::theorem1_check(w + RatFunc(Rational(1)), kBits).pass) {
            r.detail = "w + 1 not rejected";
            return r;
        }
        ++checked;
    }
    r.pass = true;
    r.detail = std::to_string(checked) + " produced w pass, all w+1 rejected";
    return r;
}

CriterionResult equivalence_paths() {
    CriterionResult r{5, "residue-power route agrees with monodromy route", false, ""};
    PrecisionGuard guard(kBits + 64);
    const auto agree = [&](const RatFunc& f, bool* first_path = nullptr) {
        bool a = false, b = false;
        try {
            a = relations::generalized_stieltjes_check(f, kBits).pass;
        } catch (const std::exception&) {
            a = false;
        }
        try {
            b = monodromy::trivial_monodromy_report(solutions::potential_from_f(f), kBits).pass;
        } catch (const std::exception&) {
            b = false;
        }
        if (first_path) *first_path = a;
        return a == b;
    };

    std::mt19937_64 rng(20260814u);
    unsigned agreements = 0;
    for (unsigned i = 0; i < 50; ++i) {
        solutions::PartialFractionData data;
        const size_t npoles = 1 + rng() % 3;
        std::set<Rational> used;
        while (used.size() < npoles) {
            const Rational q(static_cast<long>(rng() % 13) - 6,
                             static_cast<long>(1 + rng() % 4));
            if (!used.insert(q).second) continue;
            long m = 0;
            while (m == 0) m = static_cast<long>(rng() % 7) - 3;
            data.poles.push_back({PoleLocation(q), m});
        }
        data.nu = Rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(1 + rng() % 3));
        data.mu = Rational(static_cast<long>(1 + rng() % 4), static_cast<long>(1 + rng() % 2));
        if (!agree(solutions::rebuild(data))) {
            r.detail = "disagreement on random function " + std::to_string(i);
            return r;
        }
        ++agreements;
    }

    const RatFunc z = RatFunc::variable();
    for (long m = 1; m <= 3; ++m) {
        for (const long sign : {1L, -1L}) {
            const RatFunc f = RatFunc(Poly(Rational(sign * m)), Poly::variable()) - z;
            bool first = false;
            if (!agree(f, &first)) {
                r.detail = "disagreement at residue " + std::to_string(sign * m);
                return r;
            }
            if (!first) {
                r.detail = "constructed solution rejected at residue " +
                           std::to_string(sign * m);
                return r;
            }
            ++agreements;
        }
    }
    r.pass = true;
    r.detail = std::to_string(agreements) + " agreements (6 passing, residues up to +-3)";
    return r;
}

CriterionResult classified_family_monodromy() {
    CriterionResult r{6, "classified families have trivial monodromy, perturbation fails", false,
                      ""};
    PrecisionGuard guard(kBits + 64);
    std::mt19937_64 rng(777u);
    const auto random_taus = [&](size_t len) {
        families::TauVector t;
        for (size_t i = 0; i < len; ++i)
            t.taus.push_back(Rational(static_cast<long>(rng() % 21) - 10,
                                      static_cast<long>(1 + rng() % 4)));
        return t;
    };
    const RatFunc bump(Poly(Rational(1, 100)), Poly::variable());

    unsigned ladder_checked = 0;
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned trial = 0; trial < 20; ++trial) {
            const auto taus = random_taus(n > 0 ? n - 1 : 0);
            const Poly w = families::adler_moser_wronskian(n, taus);
            const RatFunc u = RatFunc(Rational(-2)) * log_derivative(w).derivative();
            const auto rep = monodromy::trivial_monodromy_report(u, kBits);
            if (!rep.pass) {
                r.detail = "ladder family failed at n = " + std::to_string(n);
                return r;
            }
            ++ladder_checked;
            if (trial == 0 && n >= 2 && n <= 4) {
                const auto bad = monodromy::trivial_monodromy_report(u + bump, kBits);
                if (bad.pass) {
                    r.detail = "perturbed ladder potential accepted at n = " + std::to_string(n);
                    return r;
                }
            }
        }
    }

    unsigned weighted_checked = 0;
    const Poly z2 = Poly::monomial(Rational(1), 2);
    std::vector<std::vector<unsigned>> subsets{{}};
    for (unsigned a = 1; a <= 7; ++a) subsets.push_back({a});
    for (unsigned a = 1; a <= 7; ++a)
        for (unsigned b = a + 1; b <= 7; ++b) subsets.push_back({a, b});
    for (unsigned a = 1; a <= 7; ++a)
        for (unsigned b = a + 1; b <= 7; ++b)
            for (unsigned c = b + 1; c <= 7; ++c) subsets.push_back({a, b, c});
    for (const auto& ks : subsets) {
        const Poly w = families::hermite_wronskian(families::HermiteSequence{ks});
        RatFunc u = RatFunc(z2);
        if (w.degree() > 0)
            u = u - RatFunc(Rational(2)) * log_derivative(w).derivative();
        const auto rep = monodromy::trivial_monodromy_report(u, kBits);
        if (!rep.pass) {
            r.detail = "weighted family failed for a " + std::to_string(ks.size()) +
                       "-index set";
            return r;
        }
        ++weighted_checked;
    }
    {
        const Poly w = families::hermite_wronskian(families::HermiteSequence{{1, 2}});
        const RatFunc u =
            RatFunc(z2) - RatFunc(Rational(2)) * log_derivative(w).derivative();
        if (monodromy::trivial_monodromy_report(u + bump, kBits).pass) {
            r.detail = "perturbed weighted potential accepted";
            return r;
        }
    }
    r.pass = true;
    r.detail = std::to_string(ladder_checked) + " ladder + " +
               std::to_string(weighted_checked) + " weighted potentials pass";
    return r;
}

CriterionResult third_order_relations() {
    CriterionResult r{7, "third-order relations hold where required, strictly weaker", false, ""};
    PrecisionGuard guard(kBits + 64);
    Real worst{0};
    for (unsigned n = 1; n <= 12; ++n) {
        auto cfg = relations::config_from_zeros(families::hermite(n), kBits);
        worst = (std::max)(worst, max_abs(relations::calogero_residual(cfg)));
    }
    const Poly w12 = families::hermite_wronskian(families::HermiteSequence{{1, 2}});
    {
        const Poly expected = Rational(8) * Poly::monomial(Rational(1), 2) + Poly(Rational(4));
        if (!(w12 == expected)) {
            r.detail = "two-index Wronskian mismatch";
            return r;
        }
    }
    auto cfg = relations::config_from_zeros(w12, kBits);
    worst = (std::max)(worst, max_abs(relations::calogero_residual(cfg)));
    std::ostringstream os;
    os << "max third-order residual " << to_decimal(worst, 8);
    if (worst >= Real("1e-25")) {
        r.detail = os.str() + " exceeds 1e-25";
        return r;
    }
    const auto st = relations::stieltjes_residual(cfg);
    const Real root2 = sqrt(Real(2));
    for (const auto& component : st) {
        if (abs(abs(component) - root2) >= Real("1e-30")) {
            r.detail = os.str() + "; first-order residual magnitude is not sqrt(2)";
            return r;
        }
    }
    r.pass = true;
    r.detail = os.str() + "; first-order residual stays at sqrt(2)";
    return r;
}

CriterionResult equilibrium_recovery() {
    CriterionResult r{8, "multistart solves recover hermite zeros; axis start recovers the pair",
                      false, ""};
    PrecisionGuard guard(kBits + 64);
    const Real tol("1e-20");
    unsigned total_converged = 0;
    for (size_t n = 1; n <= 8; ++n) {
        equilibria::EquilibriumProblem base;
        base.system = equilibria::SystemKind::Stieltjes;
        base.n = n;
        base.precision_bits = kBits;
        const auto runs = equilibria::solve_multistart(base, 32, 7);
        const Poly h = families::hermite(static_cast<unsigned>(n));
        unsigned converged = 0;
        for (const auto& run : runs) {
            if (!run.converged) continue;
            ++converged;
            const auto match = equilibria::match_to_roots(run.config, h, tol, kBits);
            if (!match.matched) {
                r.detail = "a converged run at n = " + std::to_string(n) +
                           " does not sit on the zero set";
                return r;
            }
        }
        if (converged == 0) {
            r.detail = "no converged runs at n = " + std::to_string(n);
            return r;
        }
        total_converged += converged;
    }

    equilibria::EquilibriumProblem axis;
    axis.system = equilibria::SystemKind::Calogero;
    axis.precision_bits = kBits;
    axis.initial = {Complex(Real(0), Real(7) / 10), Complex(Real(0), Real(-7) / 10)};
    const auto res = equilibria::solve_equilibrium(axis);
    if (!res.converged) {
        r.detail = "axis start did not converge";
        return r;
    }
    const Poly w12 = families::hermite_wronskian(families::HermiteSequence{{1, 2}});
    const auto match = equilibria::match_to_roots(res.config, w12, Real("1e-30"), kBits);
    if (!match.matched) {
        r.detail = "axis equilibrium is not the derived pair";
        return r;
    }
    r.pass = true;
    r.detail = std::to_string(total_converged) + " converged runs, all on zero sets";
    return r;
}

CriterionResult chain_closure() {
    CriterionResult r{9, "built chains verify exactly; period-3 chains map to verified (a,b)",
                      false, ""};
    unsigned chains_built = 0, matched_maps = 0, period3 = 0;
    for (const auto& flag : small_flags()) {
        const auto chain = chains::build_chain(flag, Rational(1));
        const auto ver = chains::verify_chain(chain.fs);
        if (!ver.pass) {
            r.detail = "verify_chain failed on a built chain";
            return r;
        }
        ++chains_built;
        if (chain.period() != 3) continue;
        ++period3;
        const auto map = chains::chain_to_piv(chain);
        if (!chains::verify_piv(map.sol)) {
            r.detail = "mapped (a,b) fails the exact identity";
            return r;
        }
        if (map.map_matches) ++matched_maps;
    }
    const RatFunc w0 = -(RatFunc(Rational(1)) / RatFunc::variable());
    const auto ab = chains::solve_piv_params(w0);
    if (!ab || ab->first != Rational(-2) || ab->second != Rational(-2)) {
        r.detail = "w = -1/z does not solve with (a,b) = (-2,-2)";
        return r;
    }
    r.pass = true;
    std::ostringstream os;
    os << chains_built << " chains verified; stated map matched on " << matched_maps << "/"
       << period3 << " period-3 chains; w = -1/z gives (a,b) = (-2,-2) exactly";
    r.detail = os.str();
    return r;
}

CriterionResult cycle_enumeration() {
    CriterionResult r{10, "residue cycles are integral, contain 0, and stay within (N-1)/2",
                      false, ""};
    for (int N : {3, 5, 7, 9}) {
        const int bound = (N - 1) / 2;
        const auto cycles = chains::enumerate_residue_cycles(N, bound);
        for (const auto& cycle : cycles) {
            if (std::find(cycle.values.begin(), cycle.values.end(), 0L) == cycle.values.end()) {
                r.detail = "a period-" + std::to_string(N) + " cycle misses 0";
                return r;
            }
            for (long v : cycle.values)
                if (v > bound || v < -bound) {
                    r.detail = "a period-" + std::to_string(N) + " cycle leaves the bound";
                    return r;
                }
        }
        if (N == 3) {
            if (cycles.size() != 2) {
                r.detail = "period 3 produced " + std::to_string(cycles.size()) + " cycles";
                return r;
            }
            const std::vector<long> zero{0, 0, 0}, mixed{0, 1, -1};
            bool saw_zero = false, saw_mixed = false;
            for (const auto& cycle : cycles) {
                saw_zero = saw_zero || rotation_equal(cycle.values, zero);
                saw_mixed = saw_mixed || rotation_equal(cycle.values, mixed);
            }
            if (!saw_zero || !saw_mixed) {
                r.detail = "period-3 cycles are not {(0,0,0), (0,1,-1)}";
                return r;
            }
        }
        if (N == 5) {
            const std::vector<long> target{1, -1, 0, 0, 0};
            bool found = false;
            for (const auto& cycle : cycles) found = found || rotation_equal(cycle.values, target);
            if (!found) {
                r.detail = "period 5 misses (1,-1,0,0,0)";
                return r;
            }
        }
    }
    r.pass = true;
    r.detail = "periods 3,5,7,9 enumerated with the expected canonical members";
    return r;
}

CriterionResult pole_expansion() {
    CriterionResult r{11, "every produced rational solution has residue +-1 and constant -z0",
                      false, ""};
    PrecisionGuard guard(kBits + 64);
    std::vector<RatFunc> produced;
    for (const auto& flag : small_flags()) {
        if (flag.size() != 2) continue;
        const auto chain = chains::build_chain(flag, Rational(1));
        produced.push_back(chains::chain_to_piv(chain).sol.w);
    }
    produced.push_back(-(RatFunc(Rational(1)) / RatFunc::variable()));
    const std::vector<std::pair<std::vector<unsigned>, unsigned>> specs{
        {{}, 1}, {{}, 2}, {{1}, 2}, {{2}, 3}, {{1, 2}, 3}};
    for (const auto& [ks, k_extra] : specs) {
        solutions::HermiteMode mode;
        mode.ks.ks = ks;
        mode.k_extra = k_extra;
        produced.push_back(solutions::piv_w_from_f(solutions::build_f(mode)));
    }
    unsigned poles_checked = 0;
    for (const auto& w : produced) {
        const auto rep = chains::piv_pole_expansion_check(w, kBits);
        if (!rep.pass) {
            r.detail = "expansion check failed for " + w.str();
            return r;
        }
        poles_checked += static_cast<unsigned>(rep.poles.size());
    }
    r.pass = true;
    r.detail = std::to_string(produced.size()) + " solutions, " +
               std::to_string(poles_checked) + " poles checked";
    return r;
}

std::vector<CriterionResult> run_all() {
    return {hermite_ode(),
            stieltjes_at_hermite_zeros(),
            exact_divisibility(),
            residue_square_vanishing(),
            equivalence_paths(),
            classified_family_monodromy(),
            third_order_relations(),
            equilibrium_recovery(),
            chain_closure(),
            cycle_enumeration(),
            pole_expansion()};
}

}  // namespace acceptance
}  // namespace pivlab
