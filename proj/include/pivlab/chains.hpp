#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pivlab/families.hpp"
#include "pivlab/relations.hpp"

namespace pivlab {
namespace chains {

// Closed dressing chain (f_i + f_{i+1})' = f_i^2 - f_{i+1}^2 + alpha_i of
// odd period N, indices cyclic.
struct DressingChain {
    std::vector<RatFunc> fs;
    std::vector<Rational> alphas;

    size_t period() const { return fs.size(); }
    Rational alpha_sum() const;
};

struct ChainVerification {
    bool pass = false;
    std::vector<Rational> alphas;          // valid when pass
    std::optional<size_t> failed_index;    // 0-based, first non-constant g_i
};

ChainVerification verify_chain(const std::vector<RatFunc>& fs);

// Assemble a closed chain from a strictly nested tower of Hermite index
// sets (each step adds one index).  Candidate step functions are
// eps*mu*z + (log ratio)' walked down and back up the tower with the
// trivial step -mu*z inserted; the 2^N sign assignments and both slot
// orderings are searched and certified by verify_chain.  Assignments with
// alpha sum -2 are preferred.
DressingChain build_chain(const std::vector<families::HermiteSequence>& flag, const Rational& mu);

// f_i -> beta f_i(beta z) with s = beta^2; defined for parity-definite
// chain functions, multiplies every alpha_i by s.
DressingChain rescale_chain(const DressingChain& chain, const Rational& s);

struct PIVSolution {
    RatFunc w;
    Rational a, b;
};

// exact identity 2ww'' = w'^2 + 3w^4 + 8zw^3 + 4(z^2-a)w^2 + 2b
bool verify_piv(const PIVSolution& sol);

// Determine (a, b) from the affine structure of the PIV defect; none when
// the exact linear system is inconsistent.
std::optional<std::pair<Rational, Rational>> solve_piv_params(const RatFunc& w);

struct ChainToPIV {
    PIVSolution sol;
    bool a_free = false;     // w = 0 leaves a undetermined
    Rational alpha_sum;
    std::optional<std::pair<Rational, Rational>> stated_map;  // (1/2(a3-a1), -1/2 a2^2)
    bool map_matches = false;
    bool normalized = false;  // alpha_sum == -2
    std::string note;
};

ChainToPIV chain_to_piv(const DressingChain& chain);

struct PoleExpansionEntry {
    PoleLocation location;
    int order = 1;
    Complex residue;
    Complex constant_term;
    bool pass = false;
    std::string reason;
};

struct PoleExpansionReport {
    std::vector<PoleExpansionEntry> poles;
    bool pass = false;
    unsigned precision_bits = 0;
};

// At every pole z0 of w: residue in {+1, -1} and Laurent constant term
// equal to -z0.
PoleExpansionReport piv_pole_expansion_check(const RatFunc& w, unsigned bits = 256);

enum class BranchStep { Neg, Inc };  // y = -x | y = x + 1

struct ResidueCycle {
    std::vector<long> values;
    std::vector<BranchStep> branch_word;
};

// All integer periodic trajectories of the correspondence
// (x + y)(x - y + 1) = 0 of odd period N, deduplicated up to rotation.
std::vector<ResidueCycle> enumerate_residue_cycles(int N, int bound);

}  // namespace chains
}  // namespace pivlab
