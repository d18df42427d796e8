#pragma once

#include <string>
#include <vector>

namespace pivlab {
namespace acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

CriterionResult hermite_ode();                  // exact ODE identity, n <= 64
CriterionResult stieltjes_at_hermite_zeros();   // residual floor + falsification
CriterionResult exact_divisibility();           // divisibility form of the relations
CriterionResult residue_square_vanishing();     // Res (z+w)^2 = 0 over built chains
CriterionResult equivalence_paths();            // relations vs monodromy, two routes
CriterionResult classified_family_monodromy();  // ladder + weighted families
CriterionResult third_order_relations();        // weaker system and its non-converse
CriterionResult equilibrium_recovery();         // multistart solves land on zeros
CriterionResult chain_closure();                // build_chain / chain_to_piv exactness
CriterionResult cycle_enumeration();            // residue cycles, small odd periods
CriterionResult pole_expansion();               // residue +-1, constant term -z0

std::vector<CriterionResult> run_all();

}  // namespace acceptance
}  // namespace pivlab
