#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pivlab/poly.hpp"

namespace pivlab {
namespace equilibria {

enum class SystemKind { Stieltjes, Calogero };

struct EquilibriumProblem {
    SystemKind system = SystemKind::Stieltjes;
    size_t n = 0;  // dimension; initial may be filled by a start generator
    std::vector<Complex> initial;
    std::vector<long> charges;  // Stieltjes only; defaults to all +1
    Rational nu{0}, mu{1};
    unsigned precision_bits = 256;
    unsigned max_iterations = 200;
    unsigned max_backtracks = 40;  // damping schedule: halve until accepted
    uint64_t seed = 0;             // recorded for reproducibility

    size_t dimension() const { return initial.empty() ? n : initial.size(); }
};

struct EquilibriumResult {
    std::vector<Complex> config;
    Real residual_max{0};
    unsigned iterations = 0;
    bool converged = false;
    uint64_t seed = 0;
    unsigned precision_bits = 0;
    std::optional<std::string> matched_label;
    std::optional<Real> matched_distance;
};

// Complex-analytic potential value and gradient; the gradient is -2 m_k
// times the corresponding residual component.
std::pair<Complex, std::vector<Complex>> potential_and_gradient(
    const EquilibriumProblem& problem, const std::vector<Complex>& config);

// Damped Newton on the residual system.  Configurations in `deflate` are
// already-known equilibria to steer away from.
EquilibriumResult solve_equilibrium(const EquilibriumProblem& problem,
                                    const std::vector<std::vector<Complex>>& deflate = {});

struct MatchResult {
    bool matched = false;
    std::vector<Real> distances;  // per config point, in config order
    Real max_distance{0};
    std::vector<size_t> permutation;  // config index -> root index
};

// Bipartite nearest matching (greedy with pair-swap refinement) between a
// configuration and the zero multiset of p.
MatchResult match_to_roots(const std::vector<Complex>& config, const Poly& p, const Real& tol,
                           unsigned bits);

// Scaled roots of unity with seeded jitter.
std::vector<Complex> default_start(size_t n, uint64_t seed, unsigned bits);

std::vector<EquilibriumResult> solve_multistart(const EquilibriumProblem& base, unsigned starts,
                                                uint64_t seed);

}  // namespace equilibria
}  // namespace pivlab
