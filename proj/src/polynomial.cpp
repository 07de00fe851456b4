#include "fusionkit/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fusionkit {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::x() { return Polynomial{Rational(0), Rational(1)}; }

Polynomial Polynomial::linear(const Rational& a0, const Rational& a1) {
    return Polynomial{a0, a1};
}

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    if (coeff.is_zero()) return Polynomial();
    std::vector<Rational> c(degree + 1);
    c.back() = coeff;
    return Polynomial(std::move(c));
}

const Rational& Polynomial::coeff(int k) const {
    static const Rational zero;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

int Polynomial::valuation() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::shifted(const Rational& a) const {
    // Horner on p, rebuilding in the shifted variable: acc <- acc*(x+a) + c_k
    Polynomial acc;
    const Polynomial lin = Polynomial::linear(a, Rational(1));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * lin;
        acc += Polynomial(*it);
    }
    return acc;
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
    const Rational& lead = leading();
    if (lead.is_one()) return *this;
    return lead.inverse() * *this;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero()) return Polynomial();
    std::vector<Rational> c(p.c_.size());
    for (size_t k = 0; k < p.c_.size(); ++k) c[k] = s * p.c_[k];
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quot(a.degree() - b.degree() + 1);
    const Rational lead_inv = b.leading().inverse();
    for (int k = a.degree(); k >= b.degree(); --k) {
        Rational q = rem[k] * lead_inv;
        if (q.is_zero()) continue;
        quot[k - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j) rem[k - b.degree() + j] -= q * b.c_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = c_[k];
        if (a.is_zero()) continue;
        if (!first) os << (a.sign() > 0 ? " + " : " - ");
        else if (a.sign() < 0) os << "-";
        first = false;
        Rational mag = a.sign() < 0 ? -a : a;
        if (k == 0 || !mag.is_one()) os << mag.str();
        if (k > 0) {
            if (!mag.is_one()) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Polynomial polynomial_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = Polynomial::divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, int len) {
    std::vector<Rational> c(len);
    for (int i = 0; i < len && i < static_cast<int>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < len && j < static_cast<int>(b.size()); ++j)
            if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
    }
    return c;
}

std::vector<Rational> series_inv(const std::vector<Rational>& a, int len) {
    if (a.empty() || a[0].is_zero())
        throw std::domain_error("series inverse needs a unit constant term");
    std::vector<Rational> inv(len);
    const Rational a0_inv = a[0].inverse();
    inv[0] = a0_inv;
    for (int k = 1; k < len; ++k) {
        Rational s;
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) s += a[j] * inv[k - j];
        inv[k] = -(a0_inv * s);
    }
    return inv;
}

} // namespace fusionkit
