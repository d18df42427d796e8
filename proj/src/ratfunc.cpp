#include "pivlab/ratfunc.hpp"

#include <stdexcept>

namespace pivlab {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return;
    }
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = divexact(num, g);
        den = divexact(den, g);
    }
    Rational lc = den.leading();
    num_ = num * (Rational(1) / lc);
    den_ = den * (Rational(1) / lc);
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a constant rational function");
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("rational function division by zero");
    *this = RatFunc(num_ * o.den_, den_ * o.num_);
    return *this;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Complex RatFunc::operator()(const Complex& x) const {
    Complex d = den_(x);
    if (d.is_zero()) throw std::domain_error("evaluation at a pole");
    return num_(x) / d;
}

Rational RatFunc::operator()(const Rational& x) const {
    Rational d = den_(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_(x) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

RatFunc ratfunc_normalize(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

RatFunc pow(const RatFunc& f, unsigned e) {
    RatFunc acc{Poly::one()};
    RatFunc base = f;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

RatFunc log_derivative(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("log derivative of zero");
    return RatFunc(p.derivative(), p);
}

RatFunc log_derivative(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("log derivative of zero");
    return f.derivative() / f;
}

}  // namespace pivlab
