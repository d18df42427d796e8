#include "pivlab/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace pivlab {

Poly::Poly(Rational constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly Poly::one() { return Poly(Rational(1)); }

Poly Poly::variable() {
    Poly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

Poly Poly::monomial(Rational c, size_t k) {
    Poly p;
    if (c != 0) {
        p.c_.assign(k + 1, Rational(0));
        p.c_[k] = std::move(c);
    }
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Rational Poly::coeff(size_t k) const {
    if (k >= c_.size()) return Rational(0);
    return c_[k];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(prod);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
    r.trim();
    return r;
}

Poly Poly::derivative(unsigned k) const {
    Poly r = *this;
    for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = r.derivative();
    return r;
}

Poly Poly::antiderivative() const {
    Poly r;
    if (is_zero()) return r;
    r.c_.resize(c_.size() + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return r;
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Complex Poly::operator()(const Complex& x) const {
    Complex acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += Complex(c_[i]);
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    Rational lc = c_.back();
    for (auto& c : r.c_) c /= lc;
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) out << a.str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(const Poly& a, const Poly& b) {
    Poly r = a;
    return r *= b;
}
Poly operator*(Poly a, const Rational& s) { return a *= s; }
Poly operator*(const Rational& s, Poly a) { return a *= s; }

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (p.degree() < d.degree()) return {Poly(), p};
    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> quot(p.degree() - d.degree() + 1, Rational(0));
    const auto& dc = d.coeffs();
    const Rational& lead = dc.back();
    for (size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + dc.size() - 1] / lead;
        if (q == 0) continue;
        quot[k] = q;
        for (size_t i = 0; i < dc.size(); ++i) rem[k + i] -= q * dc[i];
    }
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

bool divides(const Poly& d, const Poly& p) {
    if (d.is_zero()) return p.is_zero();
    return divmod(p, d).second.is_zero();
}

Poly divexact(const Poly& p, const Poly& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw std::domain_error("divexact: nonzero remainder");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return Poly::one();
    return divexact(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    // Yun's algorithm.
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() <= 0) return out;
    Poly g = gcd(p, p.derivative());
    Poly w = divexact(p, g);
    Poly y = divexact(p.derivative(), g);
    int mult = 1;
    while (w.degree() > 0) {
        Poly z = y - w.derivative();
        Poly f = gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, mult);
        w = divexact(w, f);
        y = divexact(z, f);
        ++mult;
    }
    return out;
}

std::vector<Rational> taylor_shift(const Poly& p, const Rational& a) {
    // repeated synthetic division by (z - a)
    std::vector<Rational> c = p.coeffs();
    if (c.empty()) return c;
    for (size_t k = 0; k + 1 < c.size(); ++k)
        for (size_t i = c.size() - 1; i-- > k;) c[i] += a * c[i + 1];
    return c;
}

std::vector<Complex> taylor_shift(const Poly& p, const Complex& a, unsigned bits) {
    PrecisionGuard guard(bits + 64);
    std::vector<Complex> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.emplace_back(q);
    if (c.empty()) return c;
    for (size_t k = 0; k + 1 < c.size(); ++k)
        for (size_t i = c.size() - 1; i-- > k;) c[i] += a * c[i + 1];
    return c;
}

Poly pow(const Poly& p, unsigned e) {
    Poly acc = Poly::one();
    Poly base = p;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace pivlab
