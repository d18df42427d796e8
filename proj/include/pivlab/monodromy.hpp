#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pivlab/ratfunc.hpp"

namespace pivlab {
namespace monodromy {

struct PoleDatum {
    PoleLocation location;
    int order = 1;
    // Laurent coefficients once windowed; exact map filled only for
    // rational locations.
    std::map<int, Complex> laurent;
    std::map<int, Rational> laurent_exact;
    std::optional<long> residue_m;

    bool is_exact() const { return std::holds_alternative<Rational>(location); }
};

// Laurent coefficients c_lo..c_hi of f at one pole.  Exponents below the
// pole order are present and zero.
struct LaurentWindow {
    int lo = 0, hi = -1;
    bool exact = false;
    std::map<int, Rational> exact_coeffs;
    std::map<int, Complex> coeffs;

    Complex at(int k) const;
    Rational exact_at(int k) const;
};

// Denominator roots with multiplicities, sorted (rationals first).
std::vector<PoleDatum> find_poles(const RatFunc& f, unsigned bits);

LaurentWindow laurent_window(const RatFunc& f, const PoleDatum& pole, int lo, int hi,
                             unsigned bits);

struct PoleMonodromy {
    PoleLocation location;
    int order = 0;
    Complex c_minus2;
    std::optional<long> m;
    std::pair<long, long> indicial{0, 0};  // (-m, m+1)
    std::vector<Real> odd_coeff_magnitudes;  // |c_{2k-1}|, k = 0..m
    bool pass = false;
    std::string reason;
};

struct MonodromyReport {
    std::vector<PoleMonodromy> poles;
    bool pass = false;
    unsigned precision_bits = 0;
};

// Pole-by-pole test that the Schrodinger operator -d^2/dz^2 + u has
// trivial monodromy: every pole of order <= 2 with c_{-2} = m(m+1) for a
// nonnegative integer m and c_{2k-1} = 0 for k = 0..m.
MonodromyReport trivial_monodromy_report(const RatFunc& u, unsigned bits);

Real pass_tolerance(unsigned bits);  // 10^-(bits/4)

}  // namespace monodromy
}  // namespace pivlab
