#include "pivlab/scalars.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pivlab {

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 4;
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits10_(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() {
    Real::default_precision(saved_digits10_);
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    if (d.is_zero()) throw std::domain_error("complex division by zero");
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(const Complex& a, const Complex& b) {
    Complex r = a;
    return r *= b;
}
Complex operator/(const Complex& a, const Complex& b) {
    Complex r = a;
    return r /= b;
}
bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real norm_sq(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) {
    if (z.im.is_zero()) return boost::multiprecision::abs(z.re);
    if (z.re.is_zero()) return boost::multiprecision::abs(z.im);
    return boost::multiprecision::hypot(z.re, z.im);
}

Complex inverse(const Complex& z) {
    Real d = norm_sq(z);
    if (d.is_zero()) throw std::domain_error("complex inverse of zero");
    return {z.re / d, -z.im / d};
}

Complex sqrt(const Complex& z) {
    using boost::multiprecision::sqrt;
    if (z.im.is_zero()) {
        if (z.re >= 0) return {sqrt(z.re), Real(0)};
        return {Real(0), sqrt(-z.re)};
    }
    // principal branch via half-angle identities
    Real r = abs(z);
    Real u = sqrt((r + z.re) / 2);
    Real v = sqrt((r - z.re) / 2);
    if (z.im < 0) v = -v;
    return {u, v};
}

std::string to_decimal(const Real& x, unsigned bits) {
    unsigned digits = static_cast<unsigned>(bits * 0.30103) + 2;
    return x.str(digits, std::ios_base::scientific);
}

Real real_from_decimal(const std::string& text) {
    return Real(text);
}

std::string rational_to_string(const Rational& q) {
    return q.str();
}

Rational rational_from_string(const std::string& text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("empty rational literal");
    std::string body = text.substr(begin, end - begin + 1);
    size_t slash = body.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(body));
        Integer num(body.substr(0, slash));
        Integer den(body.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);  // canonicalizes
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + body + "'");
    }
}

Complex location_value(const PoleLocation& loc) {
    if (std::holds_alternative<Rational>(loc)) return Complex(Real(std::get<Rational>(loc)), Real(0));
    return std::get<Complex>(loc);
}

}  // namespace pivlab
