#pragma once

#include <string>
#include <vector>

#include "fusionkit/polynomial.hpp"

namespace fusionkit {

// Reduced fraction of polynomials: gcd(num, den) = 1 and den is monic.
// Zero is 0/1.  Construction normalizes, so equality is coefficient equality.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial(Rational(1))) {}
    RationalFunction(const Rational& c) : num_(Polynomial(c)), den_(Polynomial(Rational(1))) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial(Rational(1))) {}

    static RationalFunction u();                       // the variable itself
    // (a0 + a1*u) as a function, handy for building products of linear factors
    static RationalFunction linear(const Rational& a0, const Rational& a1);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Rational evaluate(const Rational& x) const;        // throws on a pole
    bool has_pole_at(const Rational& x) const { return den_.evaluate(x).is_zero(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { a += b; return a; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { a -= b; return a; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { a *= b; return a; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { a /= b; return a; }
    RationalFunction operator-() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str(const std::string& var = "u") const;

private:
    Polynomial num_, den_;
    void normalize();
};

// Reduce num/den to the normal form described above.
RationalFunction ratfun_normalize(Polynomial num, Polynomial den);

// Leading Laurent datum of f at the point a: f(u) = coeff * (u-a)^order + ...
// The zero function carries the distinguished flag instead of an order.
struct LaurentLeading {
    bool is_zero = true;
    int order = 0;
    Rational coefficient;
};

LaurentLeading laurent_leading_at(const RationalFunction& f, const Rational& a);

// f(a + b*u) as a rational function of u; b must be nonzero or the result
// would not be a substitution but an evaluation
RationalFunction substitute_linear(const RationalFunction& f, const Rational& a, const Rational& b);

// First k_max+1 coefficients of the expansion f(u) = sum c_s u^{-s} at infinity;
// requires deg num <= deg den.
std::vector<Rational> series_coefficients_at_infinity(const RationalFunction& f, int k_max);

} // namespace fusionkit
