#include "fusionkit/rational_function.hpp"

#include <stdexcept>

namespace fusionkit {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = polynomial_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divrem(num_, g).first;
        den_ = Polynomial::divrem(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::u() { return RationalFunction(Polynomial::x()); }

RationalFunction RationalFunction::linear(const Rational& a0, const Rational& a1) {
    return RationalFunction(Polynomial::linear(a0, a1));
}

Rational RationalFunction::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_.evaluate(x) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    // cross-reduce first; keeps the gcds small
    Polynomial g1 = polynomial_gcd(num_, o.den_);
    Polynomial g2 = polynomial_gcd(o.num_, den_);
    Polynomial n1 = g1.degree() > 0 ? Polynomial::divrem(num_, g1).first : num_;
    Polynomial d2 = g1.degree() > 0 ? Polynomial::divrem(o.den_, g1).first : o.den_;
    Polynomial n2 = g2.degree() > 0 ? Polynomial::divrem(o.num_, g2).first : o.num_;
    Polynomial d1 = g2.degree() > 0 ? Polynomial::divrem(den_, g2).first : den_;
    *this = RationalFunction(n1 * n2, d1 * d2);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("rational function division by zero");
    *this *= RationalFunction(o.den_, o.num_);
    return *this;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_.is_constant()) return num_.str(var);
    std::string n = num_.str(var);
    if (num_.degree() > 0) n = "(" + n + ")";
    return n + "/(" + den_.str(var) + ")";
}

RationalFunction ratfun_normalize(Polynomial num, Polynomial den) {
    return RationalFunction(std::move(num), std::move(den));
}

LaurentLeading laurent_leading_at(const RationalFunction& f, const Rational& a) {
    LaurentLeading out;
    if (f.is_zero()) return out;
    Polynomial n = f.num().shifted(a);
    Polynomial d = f.den().shifted(a);
    int vn = n.valuation();
    int vd = d.valuation();
    out.is_zero = false;
    out.order = vn - vd;
    out.coefficient = n.coeff(vn) / d.coeff(vd);
    return out;
}

RationalFunction substitute_linear(const RationalFunction& f, const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("substitution must keep the variable");
    auto subst = [&](const Polynomial& p) {
        // Horner on p(a + b*u)
        Polynomial arg = Polynomial::linear(a, b);
        Polynomial out;
        for (int k = p.degree(); k >= 0; --k) out = out * arg + Polynomial(p.coeff(k));
        return out;
    };
    return RationalFunction(subst(f.num()), subst(f.den()));
}

std::vector<Rational> series_coefficients_at_infinity(const RationalFunction& f, int k_max) {
    if (k_max < 0) throw std::invalid_argument("negative series length");
    if (f.is_zero()) return std::vector<Rational>(k_max + 1);
    if (f.num().degree() > f.den().degree())
        throw std::domain_error("function has a pole at infinity");
    // substitute u = 1/t: f = t^gap * rev(num)(t) / rev(den)(t) with rev(den)(0) != 0
    const int gap = f.den().degree() - f.num().degree();
    std::vector<Rational> num_rev = f.num().reversed().coeffs();
    std::vector<Rational> den_rev = f.den().reversed().coeffs();
    const int len = k_max + 1;
    std::vector<Rational> inv = series_inv(den_rev, len);
    std::vector<Rational> low = series_mul(num_rev, inv, len);
    std::vector<Rational> out(len);
    for (int s = gap; s < len; ++s) out[s] = low[s - gap];
    return out;
}

} // namespace fusionkit
