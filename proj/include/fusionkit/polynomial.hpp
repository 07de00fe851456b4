#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fusionkit/rational.hpp"

namespace fusionkit {

// Dense univariate polynomial over Rational.  Coefficients are stored low
// degree first with no trailing zeros; the zero polynomial has an empty
// coefficient vector and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Polynomial(const Rational& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }

    static Polynomial x();                       // the variable
    static Polynomial linear(const Rational& a0, const Rational& a1); // a0 + a1*x
    static Polynomial monomial(int degree, const Rational& coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rational& coeff(int k) const;          // 0 outside the stored range
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;             // throws on zero polynomial
    // lowest k with nonzero coefficient; -1 for the zero polynomial
    int valuation() const;

    Rational evaluate(const Rational& x) const;
    Polynomial shifted(const Rational& a) const; // p(x + a)
    Polynomial reversed() const;                 // x^deg * p(1/x)
    Polynomial monic() const;                    // throws on zero polynomial
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
    Polynomial operator-() const;
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // quotient and remainder, deg(rem) < deg(divisor); divisor must be nonzero
    static std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

    std::string str(const std::string& var = "u") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial polynomial_gcd(Polynomial a, Polynomial b);

// Truncated power series helpers (coefficient vectors of fixed length).
std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, int len);
// multiplicative inverse of a series with a[0] != 0
std::vector<Rational> series_inv(const std::vector<Rational>& a, int len);

} // namespace fusionkit
