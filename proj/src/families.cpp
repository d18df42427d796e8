#include "pivlab/families.hpp"

#include <stdexcept>

namespace pivlab {
namespace families {

void validate(const HermiteSequence& seq) {
    for (size_t i = 0; i < seq.ks.size(); ++i) {
        if (seq.ks[i] == 0) throw std::invalid_argument("hermite sequence entries must be positive");
        if (i > 0 && seq.ks[i] <= seq.ks[i - 1])
            throw std::invalid_argument("hermite sequence must be strictly ascending");
    }
}

Poly hermite(unsigned n) {
    Poly prev = Poly::one();  // H_0
    if (n == 0) return prev;
    Poly cur = Poly::monomial(Rational(2), 1);  // H_1
    for (unsigned k = 1; k < n; ++k) {
        // H_{k+1} = 2 z H_k - 2 k H_{k-1}
        Poly next = Poly::monomial(Rational(2), 1) * cur - Rational(2L * k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Poly> adler_moser_ladder(unsigned n, const TauVector& taus) {
    if (n == 0) return {};
    if (taus.taus.size() != n - 1)
        throw std::invalid_argument("tau vector must have length n-1");
    std::vector<Poly> ladder;
    ladder.reserve(n);
    ladder.push_back(Poly::variable());
    for (unsigned k = 2; k <= n; ++k) {
        Poly p = ladder.back().antiderivative().antiderivative();
        // double antiderivative already has zero z-coefficient and zero
        // constant term; install tau_{k-1}
        p += Poly(taus.taus[k - 2]);
        ladder.push_back(std::move(p));
    }
    return ladder;
}

Poly adler_moser(unsigned n, const TauVector& taus) {
    if (n == 0) throw std::invalid_argument("adler_moser index must be positive");
    return adler_moser_ladder(n, taus).back();
}

Poly adler_moser_wronskian(unsigned n, const TauVector& taus) {
    return wronskian(adler_moser_ladder(n, taus));
}

Poly hermite_wronskian(const HermiteSequence& seq) {
    validate(seq);
    std::vector<Poly> fs;
    fs.reserve(seq.ks.size());
    for (unsigned k : seq.ks) fs.push_back(hermite(k));
    return wronskian(fs);
}

ExpPoly exp_augmented_wronskian(unsigned n, const TauVector& taus, const Rational& nu) {
    if (nu == 0)
        throw std::domain_error("exp_augmented_wronskian: nu = 0 makes the columns dependent");
    return wronskian(adler_moser_ladder(n, taus), ExpPoly(nu, Poly::one()));
}

}  // namespace families
}  // namespace pivlab
