#pragma once

#include <string>
#include <vector>

#include "pivlab/poly.hpp"
#include "pivlab/ratfunc.hpp"

namespace pivlab {
namespace relations {

struct ChargeConfig {
    std::vector<Complex> points;
    std::vector<long> charges;
    Real nu{0}, mu{1};
};

// Unit charges at the roots of p, external field nu - mu*z.
ChargeConfig config_from_zeros(const Poly& p, unsigned bits, const Rational& nu = Rational(0),
                               const Rational& mu = Rational(1));

// component k: sum_{j != k} m_j/(z_k - z_j) + nu - mu z_k
std::vector<Complex> stieltjes_residual(const ChargeConfig& cfg);

// component k: 2 sum_{j != k} (z_k - z_j)^{-3} - z_k   (unit charges only)
std::vector<Complex> calogero_residual(const ChargeConfig& cfg);

struct RelationReport {
    std::string relation;
    std::vector<Real> residuals;
    bool pass = false;
    unsigned precision_bits = 0;
    std::string detail;
};

// Exact test that every residue of f^2 vanishes for
// f = A'/A - B'/B + nu - mu z with A, B squarefree and coprime: encodes the
// vanishing of the Laurent constant term at each simple pole as two
// divisibility conditions.
bool stieltjes_exact_simple(const Poly& A, const Poly& B, const Rational& nu, const Rational& mu);

// Res f^{2k} = 0 for k = 1..|m| at every pole of residue m.
RelationReport generalized_stieltjes_check(const RatFunc& f, unsigned bits);

// Res (z + w)^2 = 0 at every pole of w.
RelationReport theorem1_check(const RatFunc& w, unsigned bits);

}  // namespace relations
}  // namespace pivlab
