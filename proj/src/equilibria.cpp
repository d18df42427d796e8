#include "pivlab/equilibria.hpp"

#include <algorithm>
#include <random>

#include "pivlab/errors.hpp"
#include "pivlab/relations.hpp"
#include "pivlab/roots.hpp"

namespace pivlab {
namespace equilibria {

namespace {

relations::ChargeConfig as_charge_config(const EquilibriumProblem& problem,
                                         const std::vector<Complex>& config) {
    relations::ChargeConfig cfg;
    cfg.points = config;
    cfg.charges = problem.charges;
    if (cfg.charges.empty()) cfg.charges.assign(config.size(), 1);
    cfg.nu = Real(problem.nu);
    cfg.mu = Real(problem.mu);
    return cfg;
}

std::vector<Complex> residual(const EquilibriumProblem& problem,
                              const std::vector<Complex>& config) {
    relations::ChargeConfig cfg = as_charge_config(problem, config);
    return problem.system == SystemKind::Stieltjes ? relations::stieltjes_residual(cfg)
                                                   : relations::calogero_residual(cfg);
}

Real max_norm(const std::vector<Complex>& v) {
    Real m(0);
    for (const auto& x : v) m = std::max(m, abs(x));
    return m;
}

// dense LU with partial pivoting; true on success
bool solve_linear(std::vector<std::vector<Complex>> a, std::vector<Complex> rhs,
                  std::vector<Complex>& out) {
    const size_t n = a.size();
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        Real best = norm_sq(a[k][k]);
        for (size_t i = k + 1; i < n; ++i) {
            Real cand = norm_sq(a[i][k]);
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (best.is_zero()) return false;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(rhs[piv], rhs[k]);
        }
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Complex factor = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
            rhs[i] -= factor * rhs[k];
        }
    }
    out.assign(n, Complex());
    for (size_t i = n; i-- > 0;) {
        Complex acc = rhs[i];
        for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * out[j];
        out[i] = acc / a[i][i];
    }
    return true;
}

std::vector<std::vector<Complex>> jacobian(const EquilibriumProblem& problem,
                                           const std::vector<Complex>& config) {
    const size_t n = config.size();
    std::vector<long> charges = problem.charges;
    if (charges.empty()) charges.assign(n, 1);
    std::vector<std::vector<Complex>> J(n, std::vector<Complex>(n));
    if (problem.system == SystemKind::Stieltjes) {
        Complex mu(Real(problem.mu), Real(0));
        for (size_t k = 0; k < n; ++k) {
            Complex diag = -mu;
            for (size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex d = inverse(config[k] - config[j]);
                Complex d2 = Complex(Real(charges[j]), Real(0)) * d * d;
                J[k][j] = d2;
                diag -= d2;
            }
            J[k][k] = diag;
        }
    } else {
        for (size_t k = 0; k < n; ++k) {
            Complex diag(Real(-1), Real(0));
            for (size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex d = inverse(config[k] - config[j]);
                Complex d4 = d * d;
                d4 *= d4;
                Complex t = Complex(Real(6), Real(0)) * d4;
                J[k][j] = t;
                diag -= t;
            }
            J[k][k] = diag;
        }
    }
    return J;
}

Real min_pairwise(const std::vector<Complex>& config) {
    Real m(-1);
    for (size_t i = 0; i < config.size(); ++i)
        for (size_t j = i + 1; j < config.size(); ++j) {
            Real d = abs(config[i] - config[j]);
            if (m < 0 || d < m) m = d;
        }
    return m;
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

}  // namespace

std::pair<Complex, std::vector<Complex>> potential_and_gradient(
    const EquilibriumProblem& problem, const std::vector<Complex>& config) {
    PrecisionGuard guard(problem.precision_bits + 64);
    const size_t n = config.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (config[i] == config[j]) throw std::domain_error("coincident points");

    std::vector<long> charges = problem.charges;
    if (charges.empty()) charges.assign(n, 1);
    Complex value;
    std::vector<Complex> grad(n);

    auto log_sq = [](const Complex& d) {
        // principal log of d^2
        Complex d2 = d * d;
        Real a = abs(d2);
        return Complex(boost::multiprecision::log(a),
                       boost::multiprecision::atan2(d2.im, d2.re));
    };

    if (problem.system == SystemKind::Stieltjes) {
        Complex nu(Real(problem.nu), Real(0)), mu(Real(problem.mu), Real(0));
        for (size_t j = 0; j < n; ++j) {
            Complex mj(Real(charges[j]), Real(0));
            value += mj * (mu * config[j] * config[j] -
                           Complex(Real(2), Real(0)) * nu * config[j]);
            grad[j] = Complex(Real(2), Real(0)) * mj * (mu * config[j] - nu);
        }
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Complex mm(Real(charges[j] * charges[k]), Real(0));
                value -= mm * log_sq(config[j] - config[k]);
                Complex d = inverse(config[j] - config[k]);
                grad[j] -= Complex(Real(2), Real(0)) * mm * d;
                grad[k] += Complex(Real(2), Real(0)) * mm * d;
            }
    } else {
        for (size_t j = 0; j < n; ++j) {
            value += config[j] * config[j];
            grad[j] = Complex(Real(2), Real(0)) * config[j];
        }
        for (size_t j = 0; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Complex d = inverse(config[j] - config[k]);
                Complex d2 = d * d;
                value += Complex(Real(2), Real(0)) * d2;
                Complex d3 = Complex(Real(4), Real(0)) * d2 * d;
                grad[j] -= d3;
                grad[k] += d3;
            }
    }
    return {value, grad};
}

EquilibriumResult solve_equilibrium(const EquilibriumProblem& problem,
                                    const std::vector<std::vector<Complex>>& deflate) {
    const unsigned bits = problem.precision_bits;
    PrecisionGuard guard(bits + 64);
    EquilibriumResult result;
    result.seed = problem.seed;
    result.precision_bits = bits;
    result.config = problem.initial;
    const size_t n = result.config.size();
    if (n == 0) return result;

    Real target = boost::multiprecision::pow(Real(2), -static_cast<int>(bits / 2));
    Real collision = boost::multiprecision::pow(Real(2), -static_cast<int>(bits / 4));

    std::vector<Complex> r = residual(problem, result.config);
    Real rnorm = max_norm(r);
    std::mt19937_64 jitter_rng(problem.seed ^ 0x9e3779b97f4a7c15ull);
    unsigned restarts = 0;

    for (unsigned iter = 0; iter < problem.max_iterations; ++iter) {
        result.iterations = iter;
        if (rnorm < target) {
            result.converged = true;
            break;
        }
        // steer away from known equilibria: Newton on r/phi with
        // phi = prod (z_k - w_j); the common 1/phi factor drops out,
        // leaving a rank-one Jacobian correction
        std::vector<Complex> s(n);
        bool rediscovered = false;
        for (const auto& known : deflate) {
            for (size_t k = 0; k < n && !rediscovered; ++k)
                for (const Complex& wj : known) {
                    if (abs(result.config[k] - wj) < collision) {
                        rediscovered = true;
                        break;
                    }
                }
            if (rediscovered) break;
            for (size_t k = 0; k < n; ++k)
                for (const Complex& wj : known) s[k] += inverse(result.config[k] - wj);
        }
        if (rediscovered) break;

        std::vector<std::vector<Complex>> J = jacobian(problem, result.config);
        if (!deflate.empty())
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) J[k][l] -= r[k] * s[l];
        std::vector<Complex> rhs(n);
        for (size_t k = 0; k < n; ++k) rhs[k] = -r[k];
        std::vector<Complex> step;
        if (!solve_linear(J, rhs, step)) {
            if (++restarts > 3) break;
            for (auto& z : result.config) {
                z.re += Real(unit_double(jitter_rng) - 0.5) / 64;
                z.im += Real(unit_double(jitter_rng) - 0.5) / 64;
            }
            r = residual(problem, result.config);
            rnorm = max_norm(r);
            continue;
        }

        bool accepted = false;
        Real lambda(1);
        for (unsigned bt = 0; bt < problem.max_backtracks; ++bt) {
            std::vector<Complex> trial(n);
            for (size_t k = 0; k < n; ++k)
                trial[k] = result.config[k] + Complex(lambda, Real(0)) * step[k];
            if (trial.size() > 1 && min_pairwise(trial) < collision) {
                lambda /= 2;
                continue;
            }
            std::vector<Complex> rt = residual(problem, trial);
            Real tnorm = max_norm(rt);
            if (tnorm < rnorm * (1 - lambda / 4) || tnorm < target) {
                result.config = std::move(trial);
                r = std::move(rt);
                rnorm = tnorm;
                accepted = true;
                break;
            }
            lambda /= 2;
        }
        if (!accepted) break;
    }
    if (!result.converged && rnorm < target) result.converged = true;
    result.residual_max = rnorm;
    return result;
}

MatchResult match_to_roots(const std::vector<Complex>& config, const Poly& p, const Real& tol,
                           unsigned bits) {
    PrecisionGuard guard(bits + 64);
    std::vector<Complex> zeros = roots::all_roots(p, bits).flatten();
    if (zeros.size() != config.size())
        throw std::domain_error("degree does not match configuration size");
    MatchResult m;
    const size_t n = config.size();
    m.permutation.assign(n, 0);
    std::vector<bool> used(n, false);
    for (size_t k = 0; k < n; ++k) {
        size_t best = n;
        Real best_d(0);
        for (size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            Real d = abs(config[k] - zeros[j]);
            if (best == n || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        used[best] = true;
        m.permutation[k] = best;
    }
    // pair-swap refinement on the bottleneck distance
    bool improved = true;
    while (improved) {
        improved = false;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                Real cur = std::max(abs(config[i] - zeros[m.permutation[i]]),
                                    abs(config[j] - zeros[m.permutation[j]]));
                Real swapped = std::max(abs(config[i] - zeros[m.permutation[j]]),
                                        abs(config[j] - zeros[m.permutation[i]]));
                if (swapped < cur) {
                    std::swap(m.permutation[i], m.permutation[j]);
                    improved = true;
                }
            }
    }
    m.max_distance = 0;
    for (size_t k = 0; k < n; ++k) {
        Real d = abs(config[k] - zeros[m.permutation[k]]);
        m.distances.push_back(d);
        m.max_distance = std::max(m.max_distance, d);
    }
    m.matched = m.max_distance < tol;
    return m;
}

std::vector<Complex> default_start(size_t n, uint64_t seed, unsigned bits) {
    PrecisionGuard guard(bits + 64);
    std::mt19937_64 rng(seed);
    std::vector<Complex> start(n);
    Real pi = 4 * boost::multiprecision::atan(Real(1));
    Real radius = 1 + Real(static_cast<long>(n)) / 4;
    for (size_t k = 0; k < n; ++k) {
        Real theta = 2 * pi * Real(static_cast<long>(k)) / Real(static_cast<long>(std::max<size_t>(n, 1))) +
                     Real(unit_double(rng));
        Real rho = radius * (Real("0.4") + Real(unit_double(rng)));
        start[k] = {rho * boost::multiprecision::cos(theta),
                    rho * boost::multiprecision::sin(theta)};
    }
    return start;
}

std::vector<EquilibriumResult> solve_multistart(const EquilibriumProblem& base, unsigned starts,
                                                uint64_t seed) {
    std::vector<EquilibriumResult> results;
    for (unsigned s = 0; s < starts; ++s) {
        EquilibriumProblem problem = base;
        problem.seed = seed + s;
        problem.initial = default_start(base.dimension(), problem.seed, base.precision_bits);
        results.push_back(solve_equilibrium(problem));
    }
    return results;
}

}  // namespace equilibria
}  // namespace pivlab
