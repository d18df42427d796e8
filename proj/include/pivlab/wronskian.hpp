#pragma once

#include <variant>
#include <vector>

#include "pivlab/ratfunc.hpp"

namespace pivlab {

// Determinant by fraction-free Bareiss elimination with column pivoting.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

// Wronskian determinant W(f_1, ..., f_n); W() of an empty list is 1.
Poly wronskian(const std::vector<Poly>& fs);

// Wronskian of (f_1, ..., f_n, e^{rate z} p).  The exponential column is
// peeled off exactly: the result is e^{rate z} times a polynomial.
ExpPoly wronskian(const std::vector<Poly>& fs, const ExpPoly& tail);

using WronskianEntry = std::variant<Poly, ExpPoly>;

// Mixed-entry convenience front end.  At most one entry may carry a nonzero
// exponential rate; more than one throws std::invalid_argument.
std::variant<Poly, ExpPoly> wronskian(const std::vector<WronskianEntry>& entries);

}  // namespace pivlab
