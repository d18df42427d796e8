#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <variant>

namespace pivlab {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Arbitrary-precision binary float.  Precision is a thread-local default set
// in decimal digits; use PrecisionGuard to scope a change to a binary budget.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

unsigned bits_to_digits10(unsigned bits);

class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_digits10_;
};

struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}
    explicit Complex(const Rational& q) : re(q), im(0) {}

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
bool operator==(const Complex& a, const Complex& b);

Complex conj(const Complex& z);
Real norm_sq(const Complex& z);
Real abs(const Complex& z);
Complex inverse(const Complex& z);
Complex sqrt(const Complex& z);

// Deterministic decimal rendering at a number of significant digits matching
// the binary budget.
std::string to_decimal(const Real& x, unsigned bits);
Real real_from_decimal(const std::string& text);

// "p/q" or "p"; canonicalized on read.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

// Poles and similar anchors are kept exact whenever they are rational.
using PoleLocation = std::variant<Rational, Complex>;

Complex location_value(const PoleLocation& loc);

}  // namespace pivlab
