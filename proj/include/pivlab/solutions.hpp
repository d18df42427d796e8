#pragma once

#include <variant>
#include <vector>

#include "pivlab/families.hpp"

namespace pivlab {
namespace solutions {

// f outside the integer-residue affine-tail class.
struct NotInClassError : std::domain_error {
    explicit NotInClassError(const std::string& what) : std::domain_error(what) {}
};

// f = (log(W_{n+dir}/W_n))'
struct AdlerMoserStep {
    unsigned n = 1;
    int direction = 1;  // +1 or -1
    families::TauVector taus;  // length max(n, n+direction) - 1
};

// f = (log(What_n/W_n))' with What_n = W(P_1..P_n, e^{nu z})
struct ExpMode {
    unsigned n = 1;
    Rational nu;
    families::TauVector taus;  // length n - 1
};

// f = (log(W(ks + k_extra)/W(ks)))' - z
struct HermiteMode {
    families::HermiteSequence ks;
    unsigned k_extra = 1;
};

using SolutionSpec = std::variant<AdlerMoserStep, ExpMode, HermiteMode>;

RatFunc build_f(const SolutionSpec& spec);

// w = -(z + f)
RatFunc piv_w_from_f(const RatFunc& f);

// u = f' + f^2
RatFunc potential_from_f(const RatFunc& f);

struct PoleResidue {
    PoleLocation location;
    long residue = 0;
};

struct PartialFractionData {
    std::vector<PoleResidue> poles;
    Rational nu, mu;  // affine tail nu - mu*z
    unsigned precision_bits = 0;
};

// Decompose f = sum m_i/(z - z_i) + nu - mu*z; throws NotInClassError when f
// is not of that shape (non-affine tail, multiple poles, or a residue more
// than 1e-10 away from an integer).
PartialFractionData partial_fractions(const RatFunc& f, unsigned bits = 256);

// Exact rebuild; requires every pole location rational.
RatFunc rebuild(const PartialFractionData& data);

}  // namespace solutions
}  // namespace pivlab
