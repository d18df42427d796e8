#pragma once

#include <string>

#include "pivlab/poly.hpp"

namespace pivlab {

// Quotient of polynomials, always reduced: gcd(num, den) = 1 and den monic.
// Zero is represented as 0/1.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);
    RatFunc(const Rational& q) : num_(Poly(q)), den_(Poly::one()) {}

    static RatFunc variable() { return RatFunc(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    Rational constant_value() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    RatFunc derivative() const;
    Complex operator()(const Complex& x) const;  // throws on evaluation at a pole
    Rational operator()(const Rational& x) const;

    std::string str() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  private:
    Poly num_, den_;
};

RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);

RatFunc ratfunc_normalize(Poly num, Poly den);
RatFunc pow(const RatFunc& f, unsigned e);
RatFunc log_derivative(const Poly& p);     // p'/p
RatFunc log_derivative(const RatFunc& f);  // f'/f

// e^{rate*z} * poly, the exponential-polynomial carrier used by the
// augmented Wronskians.
struct ExpPoly {
    Rational rate;
    Poly poly;

    ExpPoly() : rate(0) {}
    ExpPoly(Rational r, Poly p) : rate(std::move(r)), poly(std::move(p)) {}

    ExpPoly derivative() const { return {rate, poly.derivative() + rate * poly}; }
    bool operator==(const ExpPoly& o) const { return rate == o.rate && poly == o.poly; }
};

}  // namespace pivlab
