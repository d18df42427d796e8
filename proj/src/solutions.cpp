#include "pivlab/solutions.hpp"

#include <algorithm>

#include "pivlab/errors.hpp"
#include "pivlab/monodromy.hpp"
#include "pivlab/roots.hpp"

namespace pivlab {
namespace solutions {

namespace {

RatFunc log_ratio_derivative(const Poly& top, const Poly& bottom) {
    if (top.is_zero() || bottom.is_zero())
        throw ConstructionError("degenerate family: vanishing Wronskian");
    return log_derivative(top) - log_derivative(bottom);
}

struct BuildVisitor {
    RatFunc operator()(const AdlerMoserStep& s) const {
        if (s.direction != 1 && s.direction != -1)
            throw std::invalid_argument("direction must be +1 or -1");
        if (s.n == 0) throw std::invalid_argument("adler_moser_step needs n >= 1");
        unsigned m = static_cast<unsigned>(static_cast<int>(s.n) + s.direction);
        unsigned top_n = std::max(s.n, m);
        if (s.taus.taus.size() + 1 != top_n)
            throw std::invalid_argument("tau vector must have length max(n, n+dir) - 1");
        auto take = [&](unsigned count) {
            families::TauVector t;
            if (count >= 1)
                t.taus.assign(s.taus.taus.begin(), s.taus.taus.begin() + (count - 1));
            return t;
        };
        Poly wn = s.n == 0 ? Poly::one() : families::adler_moser_wronskian(s.n, take(s.n));
        Poly wm = m == 0 ? Poly::one() : families::adler_moser_wronskian(m, take(m));
        return log_ratio_derivative(wm, wn);
    }

    RatFunc operator()(const ExpMode& s) const {
        if (s.n == 0) throw std::invalid_argument("exp_mode needs n >= 1");
        ExpPoly top = families::exp_augmented_wronskian(s.n, s.taus, s.nu);
        Poly wn = families::adler_moser_wronskian(s.n, s.taus);
        if (top.poly.is_zero() || wn.is_zero())
            throw ConstructionError("degenerate family: vanishing Wronskian");
        // (log(e^{nu z} Q / W_n))' = nu + Q'/Q - W_n'/W_n
        return RatFunc(Poly(s.nu)) + log_derivative(top.poly) - log_derivative(wn);
    }

    RatFunc operator()(const HermiteMode& s) const {
        families::validate(s.ks);
        if (s.k_extra == 0) throw std::invalid_argument("k_extra must be positive");
        families::HermiteSequence merged = s.ks;
        auto it = std::lower_bound(merged.ks.begin(), merged.ks.end(), s.k_extra);
        if (it != merged.ks.end() && *it == s.k_extra)
            throw std::invalid_argument("k_extra already in ks");
        merged.ks.insert(it, s.k_extra);
        Poly top = families::hermite_wronskian(merged);
        Poly bottom = families::hermite_wronskian(s.ks);
        return log_ratio_derivative(top, bottom) - RatFunc(Poly::variable());
    }
};

}  // namespace

RatFunc build_f(const SolutionSpec& spec) { return std::visit(BuildVisitor{}, spec); }

RatFunc piv_w_from_f(const RatFunc& f) { return -(RatFunc(Poly::variable()) + f); }

RatFunc potential_from_f(const RatFunc& f) { return f.derivative() + f * f; }

PartialFractionData partial_fractions(const RatFunc& f, unsigned bits) {
    PrecisionGuard guard(bits + 64);
    PartialFractionData out;
    out.precision_bits = bits;

    auto [quot, rem] = divmod(f.num(), f.den());
    if (quot.degree() > 1)
        throw NotInClassError("polynomial part has degree > 1");
    out.nu = quot.coeff(0);
    out.mu = -quot.coeff(1);

    RatFunc proper(rem, f.den());
    if (proper.is_zero()) return out;

    // class shape demands simple poles with integer residues
    const Real integer_tol("1e-10");
    for (const auto& pole : monodromy::find_poles(proper, bits)) {
        if (pole.order != 1) throw NotInClassError("pole of order > 1");
        Complex res;
        if (pole.is_exact()) {
            const Rational& z0 = std::get<Rational>(pole.location);
            Rational r = proper.num()(z0) / proper.den().derivative()(z0);
            if (boost::multiprecision::denominator(r) != 1)
                throw NotInClassError("non-integer residue " + r.str());
            out.poles.push_back({pole.location, r.convert_to<long>()});
            res = Complex(Real(r), Real(0));
        } else {
            const Complex& z0 = std::get<Complex>(pole.location);
            Complex r = proper.num()(z0) / proper.den().derivative()(z0);
            Real rounded = boost::multiprecision::round(r.re);
            if (abs(r - Complex(rounded, Real(0))) > integer_tol)
                throw NotInClassError("residue not within 1e-10 of an integer");
            out.poles.push_back({pole.location, rounded.convert_to<long>()});
            res = r;
        }
        (void)res;
    }

    // round-trip self-check at a few sample points away from the poles
    for (long sample : {7L, 13L, 29L}) {
        Complex x(Real(sample) / 3, Real(1) / 7);
        Complex rebuilt = Complex(Real(out.nu)) - Complex(Real(out.mu)) * x;
        for (const auto& p : out.poles)
            rebuilt += Complex(Real(p.residue)) / (x - location_value(p.location));
        Complex direct = f(x);
        Real scale = std::max(Real(1), abs(direct));
        if (abs(direct - rebuilt) > monodromy::pass_tolerance(bits) * scale)
            throw PrecisionError("partial fraction round-trip mismatch");
    }
    return out;
}

RatFunc rebuild(const PartialFractionData& data) {
    RatFunc f(Poly::from_coeffs({data.nu, -data.mu}));
    for (const auto& p : data.poles) {
        if (!std::holds_alternative<Rational>(p.location))
            throw std::domain_error("rebuild requires rational pole locations");
        Poly den = Poly::variable() - Poly(std::get<Rational>(p.location));
        f += RatFunc(Poly(Rational(p.residue)), den);
    }
    return f;
}

}  // namespace solutions
}  // namespace pivlab
