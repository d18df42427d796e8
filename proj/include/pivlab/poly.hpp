#pragma once

#include <utility>
#include <vector>

#include "pivlab/scalars.hpp"

namespace pivlab {

// Dense univariate polynomial over the rationals, coefficients ascending.
// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rational constant);
    explicit Poly(long constant);

    static Poly zero() { return Poly(); }
    static Poly one();
    static Poly variable();
    static Poly monomial(Rational c, size_t k);
    static Poly from_coeffs(std::vector<Rational> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t k) const;
    const Rational& leading() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    Poly derivative() const;
    Poly derivative(unsigned k) const;
    Poly antiderivative() const;  // constant of integration 0

    Rational operator()(const Rational& x) const;
    Complex operator()(const Complex& x) const;

    Poly monic() const;
    std::string str() const;  // human-readable, for diagnostics

    bool operator==(const Poly& o) const { return c_ == o.c_; }

  private:
    void trim();
    std::vector<Rational> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rational& s);
Poly operator*(const Rational& s, Poly a);

// Euclidean division: p = q*d + r with deg r < deg d.  Throws on d == 0.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d);
bool divides(const Poly& d, const Poly& p);
Poly divexact(const Poly& p, const Poly& d);  // throws std::domain_error on nonzero remainder
Poly gcd(const Poly& a, const Poly& b);       // monic (or zero)

Poly squarefree_part(const Poly& p);
// Yun decomposition: list of (factor, multiplicity) with factors monic,
// squarefree, pairwise coprime, and p = lc * prod factor^mult.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Coefficients of p(z + a), ascending.
std::vector<Rational> taylor_shift(const Poly& p, const Rational& a);
std::vector<Complex> taylor_shift(const Poly& p, const Complex& a, unsigned bits);

Poly pow(const Poly& p, unsigned e);

}  // namespace pivlab
