#include "pivlab/relations.hpp"

#include <algorithm>
#include <sstream>

#include "pivlab/errors.hpp"
#include "pivlab/monodromy.hpp"
#include "pivlab/roots.hpp"
#include "pivlab/solutions.hpp"

namespace pivlab {
namespace relations {

namespace {

void check_config(const ChargeConfig& cfg) {
    if (cfg.points.size() != cfg.charges.size())
        throw std::invalid_argument("points/charges length mismatch");
    for (long m : cfg.charges)
        if (m == 0) throw std::invalid_argument("zero charge");
    for (size_t i = 0; i < cfg.points.size(); ++i)
        for (size_t j = i + 1; j < cfg.points.size(); ++j)
            if (cfg.points[i] == cfg.points[j])
                throw std::domain_error("coincident points in configuration");
}

}  // namespace

ChargeConfig config_from_zeros(const Poly& p, unsigned bits, const Rational& nu,
                               const Rational& mu) {
    PrecisionGuard guard(bits + 64);
    ChargeConfig cfg;
    cfg.nu = Real(nu);
    cfg.mu = Real(mu);
    cfg.points = roots::all_roots(p, bits).flatten();
    std::sort(cfg.points.begin(), cfg.points.end(), [](const Complex& a, const Complex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    cfg.charges.assign(cfg.points.size(), 1);
    return cfg;
}

std::vector<Complex> stieltjes_residual(const ChargeConfig& cfg) {
    check_config(cfg);
    std::vector<Complex> r(cfg.points.size());
    for (size_t k = 0; k < cfg.points.size(); ++k) {
        Complex acc(cfg.nu, Real(0));
        acc -= Complex(cfg.mu, Real(0)) * cfg.points[k];
        for (size_t j = 0; j < cfg.points.size(); ++j) {
            if (j == k) continue;
            acc += Complex(Real(cfg.charges[j]), Real(0)) * inverse(cfg.points[k] - cfg.points[j]);
        }
        r[k] = acc;
    }
    return r;
}

std::vector<Complex> calogero_residual(const ChargeConfig& cfg) {
    check_config(cfg);
    for (long m : cfg.charges)
        if (m != cfg.charges[0])
            throw std::invalid_argument("calogero relations require equal charges");
    std::vector<Complex> r(cfg.points.size());
    for (size_t k = 0; k < cfg.points.size(); ++k) {
        Complex acc = -cfg.points[k];
        for (size_t j = 0; j < cfg.points.size(); ++j) {
            if (j == k) continue;
            Complex d = inverse(cfg.points[k] - cfg.points[j]);
            acc += Complex(Real(2), Real(0)) * d * d * d;
        }
        r[k] = acc;
    }
    return r;
}

bool stieltjes_exact_simple(const Poly& A, const Poly& B, const Rational& nu,
                            const Rational& mu) {
    if (A.is_zero() || B.is_zero()) throw std::invalid_argument("zero polynomial");
    if (gcd(A, A.derivative()).degree() > 0 || gcd(B, B.derivative()).degree() > 0)
        throw std::invalid_argument(
            "stieltjes_exact_simple needs squarefree inputs; use generalized_stieltjes_check");
    if (gcd(A, B).degree() > 0)
        throw std::invalid_argument("stieltjes_exact_simple needs coprime inputs");
    Poly tail = Poly::from_coeffs({nu, -mu});  // nu - mu z
    // constant Laurent term of f at each simple root of A:
    //   A''/(2A') - B'/B + (nu - mu z) = 0  =>  A | A''B - 2A'B' + 2(nu - mu z)A'B
    Poly condA =
        A.derivative(2) * B - Rational(2) * (A.derivative() * B.derivative()) +
        Rational(2) * (tail * A.derivative() * B);
    if (!divides(A, condA)) return false;
    // and at each simple root of B:
    //   A'/A - B''/(2B') + (nu - mu z) = 0  =>  B | 2A'B' - AB'' + 2(nu - mu z)AB'
    Poly condB =
        Rational(2) * (A.derivative() * B.derivative()) - A * B.derivative(2) +
        Rational(2) * (tail * A * B.derivative());
    return divides(B, condB);
}

namespace {

// residue of f^power from the Laurent window of f, window[i] holding the
// coefficient of exponent lo + i
Complex residue_of_power(const std::vector<Complex>& window, int lo, unsigned power) {
    int hi = lo + static_cast<int>(window.size()) - 1;
    std::map<int, Complex> acc;
    acc[0] = Complex(Real(1), Real(0));
    for (unsigned step = 0; step < power; ++step) {
        int remaining = static_cast<int>(power) - 1 - static_cast<int>(step);
        std::map<int, Complex> next;
        for (const auto& [ea, ca] : acc) {
            for (int i = 0; i < static_cast<int>(window.size()); ++i) {
                int e = ea + lo + i;
                // keep only exponents that can still be completed to -1
                if (e + remaining * lo > -1 || e + remaining * hi < -1) continue;
                auto& slot = next[e];
                slot += ca * window[static_cast<size_t>(i)];
            }
        }
        acc = std::move(next);
    }
    auto it = acc.find(-1);
    return it == acc.end() ? Complex() : it->second;
}

}  // namespace

RelationReport generalized_stieltjes_check(const RatFunc& f, unsigned bits) {
    PrecisionGuard guard(bits + 64);
    RelationReport report;
    report.relation = "generalized_stieltjes";
    report.precision_bits = bits;
    report.pass = true;
    Real tol = monodromy::pass_tolerance(bits);

    solutions::PartialFractionData pf = solutions::partial_fractions(f, bits);
    for (const auto& pole : pf.poles) {
        long m = std::abs(pole.residue);
        monodromy::PoleDatum datum;
        datum.location = pole.location;
        datum.order = 1;
        int hi = static_cast<int>(2 * m - 2);
        monodromy::LaurentWindow win = monodromy::laurent_window(f, datum, -1, hi, bits);
        std::vector<Complex> coeffs;
        for (int e = -1; e <= hi; ++e) coeffs.push_back(win.at(e));
        Real worst(0);
        for (long k = 1; k <= m; ++k) {
            Complex res = residue_of_power(coeffs, -1, static_cast<unsigned>(2 * k));
            worst = std::max(worst, abs(res));
        }
        report.residuals.push_back(worst);
        if (worst >= tol) report.pass = false;
    }
    if (!report.pass) report.detail = "a residue of an even power exceeds tolerance";
    return report;
}

RelationReport theorem1_check(const RatFunc& w, unsigned bits) {
    PrecisionGuard guard(bits + 64);
    RelationReport report;
    report.relation = "theorem1";
    report.precision_bits = bits;
    report.pass = true;
    Real tol = monodromy::pass_tolerance(bits);

    RatFunc g = RatFunc(Poly::variable()) + w;
    for (const auto& pole : monodromy::find_poles(w, bits)) {
        int p = pole.order;
        monodromy::LaurentWindow win = monodromy::laurent_window(g, pole, -p, p - 1, bits);
        Complex res;
        for (int i = -p; i <= p - 1; ++i) res += win.at(i) * win.at(-1 - i);
        report.residuals.push_back(abs(res));
        if (abs(res) >= tol) {
            report.pass = false;
            std::ostringstream why;
            why << "Res (z+w)^2 = " << to_decimal(res.re, 64) << " + " << to_decimal(res.im, 64)
                << "i";
            report.detail = why.str();
        }
    }
    return report;
}

}  // namespace relations
}  // namespace pivlab
