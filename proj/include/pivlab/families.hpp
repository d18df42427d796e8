#pragma once

#include <vector>

#include "pivlab/wronskian.hpp"

namespace pivlab {
namespace families {

// Strictly ascending positive degrees; an empty sequence is allowed and its
// Wronskian is 1.
struct HermiteSequence {
    std::vector<unsigned> ks;
};

void validate(const HermiteSequence& seq);

// Free parameters tau_1, ..., tau_{n-1} of the polynomial ladder.
struct TauVector {
    std::vector<Rational> taus;
};

// Physicists' Hermite polynomial H_n.
Poly hermite(unsigned n);

// Ladder polynomials P_k with P_k'' = P_{k-1}, P_1 = z, each step fixing the
// two integration constants so the z-coefficient is 0 and the constant term
// is tau_{k-1}.
Poly adler_moser(unsigned n, const TauVector& taus);
std::vector<Poly> adler_moser_ladder(unsigned n, const TauVector& taus);

// W(P_1, ..., P_n).
Poly adler_moser_wronskian(unsigned n, const TauVector& taus);

// W(H_{k_1}, ..., H_{k_r}).
Poly hermite_wronskian(const HermiteSequence& seq);

// W(P_1, ..., P_n, e^{nu z}).
ExpPoly exp_augmented_wronskian(unsigned n, const TauVector& taus, const Rational& nu);

}  // namespace families
}  // namespace pivlab
