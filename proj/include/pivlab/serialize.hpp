#pragma once

#include <nlohmann/json.hpp>

#include "pivlab/chains.hpp"
#include "pivlab/equilibria.hpp"
#include "pivlab/monodromy.hpp"
#include "pivlab/poly.hpp"
#include "pivlab/ratfunc.hpp"
#include "pivlab/relations.hpp"
#include "pivlab/scalars.hpp"
#include "pivlab/solutions.hpp"

namespace pivlab {

using Json = nlohmann::ordered_json;

// Exact data round-trips losslessly.  A polynomial is an array of
// coefficient strings "p/q" in lowest terms (positive denominator), the
// index being the power of z; the zero polynomial is [].
Json to_json(const Rational& q);
Json to_json(const Poly& p);
Json to_json(const RatFunc& f);   // {"num": [...], "den": [...]}
Json to_json(const ExpPoly& e);   // {"rate": "p/q", "poly": [...]}
Json to_json(const chains::DressingChain& chain);  // {"N", "fs", "alphas"}
Json to_json(const chains::ResidueCycle& cycle);
Json to_json(const chains::PIVSolution& sol);
Json to_json(const solutions::SolutionSpec& spec);

Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
ExpPoly exp_poly_from_json(const Json& j);
chains::DressingChain chain_from_json(const Json& j);
solutions::SolutionSpec solution_spec_from_json(const Json& j);
chains::PIVSolution piv_solution_from_json(const Json& j);

// Numeric data is printed as decimal strings sized to the working precision.
Json to_json(const Real& x, unsigned bits);
Json to_json(const Complex& z, unsigned bits);
Json to_json(const PoleLocation& loc, unsigned bits);

// Reports carry their own precision tag.
Json to_json(const relations::RelationReport& report);
Json to_json(const monodromy::MonodromyReport& report);
Json to_json(const solutions::PartialFractionData& data);
Json to_json(const equilibria::EquilibriumResult& result);
Json to_json(const chains::ChainVerification& verification);
Json to_json(const chains::ChainToPIV& map);
Json to_json(const chains::PoleExpansionReport& report);

}  // namespace pivlab
