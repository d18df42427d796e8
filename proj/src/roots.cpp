#include "pivlab/roots.hpp"

#include <algorithm>

#include "pivlab/errors.hpp"

namespace pivlab {
namespace roots {

namespace {

std::vector<Complex> to_complex(const Poly& p) {
    std::vector<Complex> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.emplace_back(q);
    return c;
}

Complex horner_derivative(const std::vector<Complex>& c, const Complex& x, Complex& value) {
    Complex p, d;
    for (size_t i = c.size(); i-- > 0;) {
        d = d * x + p;
        p = p * x + c[i];
    }
    value = p;
    return d;
}

Real pow_real(const Real& b, unsigned e) {
    Real acc(1), base = b;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// magnitude scale of the evaluation of p at x, for residual certification
Real eval_scale(const std::vector<Complex>& c, const Complex& x) {
    Real ax = abs(x), acc(0), p(1);
    for (const auto& coef : c) {
        acc += abs(coef) * p;
        p *= ax;
    }
    return acc;
}

std::vector<Complex> aberth(const std::vector<Complex>& coeffs, unsigned bits) {
    const size_t n = coeffs.size() - 1;
    const Complex& lead = coeffs.back();

    // Cauchy bound for the root radius
    Real radius(0);
    Real alead = abs(lead);
    for (size_t i = 0; i < n; ++i) radius = std::max(radius, abs(coeffs[i]) / alead);
    radius += 1;

    // initial points on a circle; the global phase keeps the start set away
    // from the real axis and from conjugation symmetry
    std::vector<Complex> z(n);
    Real pi = 4 * boost::multiprecision::atan(Real(1));
    for (size_t k = 0; k < n; ++k) {
        Real theta = 2 * pi * Real(static_cast<long>(k)) / Real(static_cast<long>(n)) +
                     Real("0.7") + Real(static_cast<long>(k)) / Real(100);
        Real rho = radius * (Real("0.5") + Real(static_cast<long>(k % 5)) / Real(20));
        z[k] = {rho * boost::multiprecision::cos(theta), rho * boost::multiprecision::sin(theta)};
    }

    Real eps = pow_real(Real("0.5"), bits + 20);
    std::vector<bool> done(n, false);
    const unsigned max_sweeps = 600 + 20 * static_cast<unsigned>(n);
    for (unsigned sweep = 0; sweep < max_sweeps; ++sweep) {
        bool all_done = true;
        for (size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            Complex pv;
            Complex dv = horner_derivative(coeffs, z[k], pv);
            if (pv.is_zero()) {
                done[k] = true;
                continue;
            }
            if (dv.is_zero()) {
                z[k].re += eps + Real(1) / 512;
                all_done = false;
                continue;
            }
            Complex newton = pv / dv;
            Complex repulse;
            for (size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                repulse += inverse(z[k] - z[j]);
            }
            Complex denom = Complex(Real(1), Real(0)) - newton * repulse;
            Complex w = denom.is_zero() ? newton : newton / denom;
            z[k] -= w;
            if (abs(w) <= eps * (1 + abs(z[k])))
                done[k] = true;
            else
                all_done = false;
        }
        if (all_done) break;
    }
    return z;
}

void newton_polish(const std::vector<Complex>& coeffs, Complex& x, unsigned rounds) {
    for (unsigned i = 0; i < rounds; ++i) {
        Complex pv;
        Complex dv = horner_derivative(coeffs, x, pv);
        if (pv.is_zero() || dv.is_zero()) return;
        x -= pv / dv;
    }
}

}  // namespace

Complex horner(const std::vector<Complex>& coeffs, const Complex& x) {
    Complex acc;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

std::vector<Complex> simple_roots(const Poly& squarefree, unsigned bits) {
    if (squarefree.degree() <= 0) return {};
    PrecisionGuard guard(bits + 64);
    std::vector<Complex> coeffs = to_complex(squarefree);
    if (squarefree.degree() == 1) {
        return {-(coeffs[0] / coeffs[1])};
    }
    std::vector<Complex> z = aberth(coeffs, bits);
    for (auto& x : z) newton_polish(coeffs, x, 6);

    // certification: residual small relative to the evaluation scale, and
    // roots of a squarefree input pairwise separated at working accuracy
    Real tol = pow_real(Real("0.5"), bits / 2);
    Real res_tol = pow_real(Real("0.5"), bits + 8);
    for (const auto& x : z) {
        Real scale = eval_scale(coeffs, x);
        if (abs(horner(coeffs, x)) > res_tol * scale)
            throw PrecisionError("root residual not certified at " + std::to_string(bits) +
                                 " bits");
    }
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j)
            if (abs(z[i] - z[j]) < tol * (1 + abs(z[i])))
                throw PrecisionError("root cluster below separation threshold; raise precision");
    return z;
}

std::optional<Rational> rationalize(const Real& x, const Integer& den_cap) {
    using boost::multiprecision::floor;
    Real v = x;
    Integer p0(1), q0(0);
    Integer p1, q1(1);
    {
        Real f = floor(v);
        p1 = f.convert_to<Integer>();
        v -= f;
    }
    for (int step = 0; step < 200; ++step) {
        if (v < Real(1) / Real(1e30)) break;
        v = 1 / v;
        Real f = floor(v);
        if (f > Real(1e30)) break;
        Integer a = f.convert_to<Integer>();
        v -= f;
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        if (q2 > den_cap) break;
        p0 = std::move(p1);
        q0 = std::move(q1);
        p1 = std::move(p2);
        q1 = std::move(q2);
    }
    if (q1 == 0) return std::nullopt;
    return Rational(p1, q1);
}

size_t RootSet::count_with_multiplicity() const {
    size_t n = 0;
    for (int m : rational_mults) n += static_cast<size_t>(m);
    for (int m : numeric_mults) n += static_cast<size_t>(m);
    return n;
}

std::vector<Complex> RootSet::flatten() const {
    std::vector<Complex> out;
    for (size_t i = 0; i < rational_roots.size(); ++i)
        for (int m = 0; m < rational_mults[i]; ++m)
            out.push_back(Complex(Real(rational_roots[i]), Real(0)));
    for (size_t i = 0; i < numeric_roots.size(); ++i)
        for (int m = 0; m < numeric_mults[i]; ++m) out.push_back(numeric_roots[i]);
    return out;
}

RootSet all_roots(const Poly& p, unsigned bits) {
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    PrecisionGuard guard(bits + 64);
    RootSet out;
    Real imag_tol = pow_real(Real("0.5"), bits / 2);
    Integer den_cap = Integer(1) << (bits / 3);
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        Poly s = factor;
        if (s.coeff(0) == 0) {
            out.rational_roots.emplace_back(0);
            out.rational_mults.push_back(mult);
            s = divexact(s, Poly::variable());
        }
        for (const auto& root : simple_roots(s, bits)) {
            bool exact = false;
            if (abs(root.im) <= imag_tol * (1 + abs(root.re))) {
                if (auto cand = rationalize(root.re, den_cap)) {
                    if (s(*cand) == 0) {
                        out.rational_roots.push_back(*cand);
                        out.rational_mults.push_back(mult);
                        exact = true;
                    }
                }
            }
            if (!exact) {
                out.numeric_roots.push_back(root);
                out.numeric_mults.push_back(mult);
            }
        }
    }
    return out;
}

}  // namespace roots
}  // namespace pivlab
