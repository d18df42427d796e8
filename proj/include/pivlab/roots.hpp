#pragma once

#include <optional>
#include <vector>

#include "pivlab/poly.hpp"

namespace pivlab {
namespace roots {

// All roots of an exact polynomial, rational ones recognized exactly.
// Multiplicities come from the squarefree decomposition, never from
// numerical clustering.
struct RootSet {
    std::vector<Rational> rational_roots;
    std::vector<int> rational_mults;
    std::vector<Complex> numeric_roots;
    std::vector<int> numeric_mults;

    size_t count_with_multiplicity() const;
    // every root, rational ones converted, repeated per multiplicity
    std::vector<Complex> flatten() const;
};

RootSet all_roots(const Poly& p, unsigned bits);

// Roots of a squarefree polynomial by Aberth-Ehrlich iteration with a
// Newton polish; accurate to roughly 2^-(bits+30).  Throws PrecisionError
// if certification fails.
std::vector<Complex> simple_roots(const Poly& squarefree, unsigned bits);

Complex horner(const std::vector<Complex>& coeffs, const Complex& x);

// Nearest rational with denominator below the cap, by continued fractions.
std::optional<Rational> rationalize(const Real& x, const Integer& den_cap);

}  // namespace roots
}  // namespace pivlab
