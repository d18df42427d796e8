#include "pivlab/monodromy.hpp"

#include <algorithm>
#include <sstream>

#include "pivlab/errors.hpp"
#include "pivlab/roots.hpp"

namespace pivlab {
namespace monodromy {

Real pass_tolerance(unsigned bits) {
    return boost::multiprecision::pow(Real(10), -static_cast<int>(bits / 4));
}

Complex LaurentWindow::at(int k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Complex() : it->second;
}

Rational LaurentWindow::exact_at(int k) const {
    if (!exact) throw std::domain_error("window is numeric");
    auto it = exact_coeffs.find(k);
    return it == exact_coeffs.end() ? Rational(0) : it->second;
}

std::vector<PoleDatum> find_poles(const RatFunc& f, unsigned bits) {
    std::vector<PoleDatum> out;
    if (f.den().degree() < 1) return out;
    roots::RootSet rs = roots::all_roots(f.den(), bits);
    for (size_t i = 0; i < rs.rational_roots.size(); ++i) {
        PoleDatum d;
        d.location = rs.rational_roots[i];
        d.order = rs.rational_mults[i];
        out.push_back(std::move(d));
    }
    for (size_t i = 0; i < rs.numeric_roots.size(); ++i) {
        PoleDatum d;
        d.location = rs.numeric_roots[i];
        d.order = rs.numeric_mults[i];
        out.push_back(std::move(d));
    }
    PrecisionGuard guard(bits);
    std::sort(out.begin(), out.end(), [](const PoleDatum& a, const PoleDatum& b) {
        bool ea = a.is_exact(), eb = b.is_exact();
        if (ea != eb) return ea;
        if (ea)
            return std::get<Rational>(a.location) < std::get<Rational>(b.location);
        const Complex &x = std::get<Complex>(a.location), &y = std::get<Complex>(b.location);
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    return out;
}

namespace {

// series quotient n(t) / e(t) with e(0) != 0, coefficients 0..terms-1
std::vector<Rational> series_divide(const std::vector<Rational>& n, const std::vector<Rational>& e,
                                    size_t terms) {
    std::vector<Rational> q(terms, Rational(0));
    const Rational& e0 = e[0];
    for (size_t i = 0; i < terms; ++i) {
        Rational acc = i < n.size() ? n[i] : Rational(0);
        for (size_t j = 1; j <= i && j < e.size(); ++j) acc -= e[j] * q[i - j];
        q[i] = acc / e0;
    }
    return q;
}

std::vector<Complex> series_divide(const std::vector<Complex>& n, const std::vector<Complex>& e,
                                   size_t terms) {
    std::vector<Complex> q(terms);
    const Complex& e0 = e[0];
    for (size_t i = 0; i < terms; ++i) {
        Complex acc = i < n.size() ? n[i] : Complex();
        for (size_t j = 1; j <= i && j < e.size(); ++j) acc -= e[j] * q[i - j];
        q[i] = acc / e0;
    }
    return q;
}

}  // namespace

LaurentWindow laurent_window(const RatFunc& f, const PoleDatum& pole, int lo, int hi,
                             unsigned bits) {
    if (lo > hi) throw std::invalid_argument("empty laurent window");
    LaurentWindow w;
    w.lo = lo;
    w.hi = hi;
    const int d = pole.order;
    if (pole.is_exact()) {
        const Rational& z0 = std::get<Rational>(pole.location);
        std::vector<Rational> ns = taylor_shift(f.num(), z0);
        std::vector<Rational> ds = taylor_shift(f.den(), z0);
        for (int j = 0; j < d; ++j) {
            if (j >= static_cast<int>(ds.size()) || ds[j] != 0)
                throw std::domain_error("pole order does not match denominator");
        }
        ds.erase(ds.begin(), ds.begin() + d);
        size_t terms = static_cast<size_t>(std::max(hi + d + 1, 1));
        std::vector<Rational> q = series_divide(ns, ds, terms);
        w.exact = true;
        PrecisionGuard guard(bits);
        for (int k = lo; k <= hi; ++k) {
            Rational c = (k + d >= 0 && k + d < static_cast<int>(q.size())) ? q[k + d]
                                                                            : Rational(0);
            w.exact_coeffs[k] = c;
            w.coeffs[k] = Complex(Real(c), Real(0));
        }
        return w;
    }
    PrecisionGuard guard(bits + 64);
    const Complex& z0 = std::get<Complex>(pole.location);
    std::vector<Complex> ns = taylor_shift(f.num(), z0, bits);
    std::vector<Complex> ds = taylor_shift(f.den(), z0, bits);
    // the first d shifted coefficients vanish up to root error; anything
    // larger means the pole data is stale
    Real scale(0);
    for (const auto& c : ds) scale = std::max(scale, abs(c));
    Real drop_tol = scale * boost::multiprecision::pow(Real(2), -static_cast<int>(bits / 2));
    for (int j = 0; j < d; ++j) {
        if (j >= static_cast<int>(ds.size())) throw std::domain_error("pole order exceeds degree");
        if (abs(ds[j]) > drop_tol)
            throw PrecisionError("denominator does not vanish to the stated order at the pole");
    }
    ds.erase(ds.begin(), ds.begin() + d);
    if (ds.empty() || abs(ds[0]) <= drop_tol)
        throw PrecisionError("deflated denominator too small; raise precision");
    size_t terms = static_cast<size_t>(std::max(hi + d + 1, 1));
    std::vector<Complex> q = series_divide(ns, ds, terms);
    for (int k = lo; k <= hi; ++k)
        w.coeffs[k] = (k + d >= 0 && k + d < static_cast<int>(q.size())) ? q[k + d] : Complex();
    return w;
}

namespace {

std::string location_text(const PoleLocation& loc, unsigned bits) {
    if (std::holds_alternative<Rational>(loc)) return std::get<Rational>(loc).str();
    const Complex& z = std::get<Complex>(loc);
    return to_decimal(z.re, std::min(bits, 64u)) + " + " + to_decimal(z.im, std::min(bits, 64u)) +
           "i";
}

}  // namespace

MonodromyReport trivial_monodromy_report(const RatFunc& u, unsigned bits) {
    MonodromyReport report;
    report.precision_bits = bits;
    report.pass = true;
    PrecisionGuard guard(bits + 64);
    Real tol = pass_tolerance(bits);
    for (const PoleDatum& pole : find_poles(u, bits)) {
        PoleMonodromy pm;
        pm.location = pole.location;
        pm.order = pole.order;
        if (pole.order > 2) {
            pm.pass = false;
            pm.reason = "pole order " + std::to_string(pole.order) + " > 2";
            report.pass = false;
            report.poles.push_back(std::move(pm));
            continue;
        }
        LaurentWindow head = laurent_window(u, pole, -2, -1, bits);
        pm.c_minus2 = head.at(-2);
        // c_{-2} = m(m+1) for a nonnegative integer m
        long m = 0;
        Real disc = Real(1) + 4 * pm.c_minus2.re;
        if (disc > 0) {
            Real mr = (boost::multiprecision::sqrt(disc) - 1) / 2;
            m = boost::multiprecision::round(mr).convert_to<long>();
            if (m < 0) m = 0;
        }
        Real defect = abs(pm.c_minus2 - Complex(Real(static_cast<long>(m * (m + 1))), Real(0)));
        if (defect > tol) {
            pm.pass = false;
            std::ostringstream why;
            why << "c_-2 = " << to_decimal(pm.c_minus2.re, 64) << " + "
                << to_decimal(pm.c_minus2.im, 64) << "i not of the form m(m+1)";
            pm.reason = why.str();
            report.pass = false;
            report.poles.push_back(std::move(pm));
            continue;
        }
        pm.m = m;
        pm.indicial = {-m, m + 1};
        LaurentWindow window = laurent_window(u, pole, -2, static_cast<int>(2 * m - 1), bits);
        pm.pass = true;
        for (long k = 0; k <= m; ++k) {
            Real mag = abs(window.at(static_cast<int>(2 * k - 1)));
            pm.odd_coeff_magnitudes.push_back(mag);
            if (mag > tol && pm.pass) {
                pm.pass = false;
                pm.reason = "c_" + std::to_string(2 * k - 1) + " nonzero at pole " +
                            location_text(pole.location, bits);
            }
        }
        if (!pm.pass) report.pass = false;
        report.poles.push_back(std::move(pm));
    }
    return report;
}

}  // namespace monodromy
}  // namespace pivlab
