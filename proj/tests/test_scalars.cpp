#include <doctest.h>

#include <random>

#include "fusionkit/rational.hpp"
#include "fusionkit/polynomial.hpp"
#include "fusionkit/rational_function.hpp"

using namespace fusionkit;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.push_back(Rational(v));
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(3, 7).inverse() == Rational(7, 3));
    CHECK(Rational(-3, 7).inverse() == Rational(-7, 3));
}

TEST_CASE("polynomial arithmetic basics") {
    Polynomial p = poly({-1, 0, 1}); // u^2 - 1
    Polynomial q = poly({1, -2, 1}); // (u-1)^2
    CHECK(p.degree() == 2);
    CHECK((p + (-p)).is_zero());
    CHECK((p * q).degree() == 4);
    CHECK(p.evaluate(Rational(3)) == Rational(8));
    CHECK(p.str() == "u^2 - 1");

    auto [quot, rem] = Polynomial::divrem(p * q + poly({5}), q);
    CHECK(quot == p);
    CHECK(rem == poly({5}));
}

TEST_CASE("polynomial gcd is monic") {
    Polynomial p = poly({-1, 0, 1});
    Polynomial q = poly({1, -2, 1});
    CHECK(polynomial_gcd(p, q) == poly({-1, 1})); // u - 1
    CHECK(polynomial_gcd(Polynomial(), Polynomial()).is_zero());
    CHECK(polynomial_gcd(poly({0, 3}), Polynomial()) == poly({0, 1}));
    // gcd of coprime polynomials is 1
    CHECK(polynomial_gcd(poly({1, 1}), poly({2, 1})) == poly({1}));
}

TEST_CASE("taylor shift and reversal") {
    Polynomial p = poly({1, 2, 3});
    // p(x+a) evaluated at x equals p(x+a)
    for (long a : {-3, -1, 0, 2, 5}) {
        Polynomial s = p.shifted(Rational(a));
        for (long x : {-2, 0, 1, 7})
            CHECK(s.evaluate(Rational(x)) == p.evaluate(Rational(x + a)));
    }
    CHECK(poly({1, 2, 3}).reversed() == poly({3, 2, 1}));
}

TEST_CASE("rational function normal form") {
    // (u^2-1)/(2u-2) reduces to (u+1)/2
    RationalFunction f(poly({-1, 0, 1}), poly({-2, 2}));
    CHECK(f.num() == Polynomial{Rational(1, 2), Rational(1, 2)});
    CHECK(f.den() == poly({1}));

    RationalFunction g(poly({0, 1}), poly({0, 0, 2})); // u / 2u^2 = (1/2)/u
    CHECK(g.num() == Polynomial(Rational(1, 2)));
    CHECK(g.den() == poly({0, 1}));
    CHECK(g.den().leading().is_one());

    // field ops keep the invariant
    RationalFunction h = f / g;
    Polynomial common = polynomial_gcd(h.num(), h.den());
    CHECK(common.degree() <= 0);
    CHECK(h.den().leading().is_one());
    CHECK((g - g).is_zero());
    CHECK((g - g).den() == poly({1}));
}

TEST_CASE("laurent leading at a point, pinned examples") {
    // (u+2)/(u(u+1)^2) at 0: simple pole, residue 2
    RationalFunction f(poly({2, 1}), poly({0, 1}) * poly({1, 1}) * poly({1, 1}));
    auto l0 = laurent_leading_at(f, Rational(0));
    CHECK_FALSE(l0.is_zero);
    CHECK(l0.order == -1);
    CHECK(l0.coefficient == Rational(2));
    // same function at -1: double pole with coefficient (-1+2)/(-1) = -1
    auto lm1 = laurent_leading_at(f, Rational(-1));
    CHECK(lm1.order == -2);
    CHECK(lm1.coefficient == Rational(-1));
    // at -2: a zero of order 1, slope = 1/((-2)(-1)^2) = -1/2
    auto lm2 = laurent_leading_at(f, Rational(-2));
    CHECK(lm2.order == 1);
    CHECK(lm2.coefficient == Rational(-1, 2));

    CHECK(laurent_leading_at(RationalFunction(), Rational(5)).is_zero);
}

TEST_CASE("laurent leading against factored-form oracle") {
    // Build f = c * prod (u - r_i)^{e_i} with known data; the leading term at a
    // root r is read off the factorization directly.
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<long> roots;
        std::vector<int> exps; // negative exponent = denominator factor
        int nf = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < nf; ++i) {
            long r = static_cast<long>(rng() % 7) - 3;
            if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
            roots.push_back(r);
            exps.push_back(static_cast<int>(rng() % 5) - 2);
        }
        Rational c(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 4) + 1);
        Polynomial num(c), den{Rational(1)};
        for (size_t i = 0; i < roots.size(); ++i) {
            Polynomial lin = Polynomial::linear(Rational(-roots[i]), Rational(1));
            for (int k = 0; k < std::abs(exps[i]); ++k)
                (exps[i] > 0 ? num : den) *= lin;
        }
        RationalFunction f(num, den);
        const Rational a(roots[0]);
        auto lead = laurent_leading_at(f, a);
        REQUIRE_FALSE(lead.is_zero);
        CHECK(lead.order == exps[0]);
        Rational expect = c;
        for (size_t i = 1; i < roots.size(); ++i) {
            Rational base = a - Rational(roots[i]);
            for (int k = 0; k < std::abs(exps[i]); ++k)
                expect = exps[i] > 0 ? expect * base : expect / base;
        }
        CHECK(lead.coefficient == expect);
    }
}

TEST_CASE("laurent leading is multiplicative") {
    RationalFunction f(poly({2, 1}), poly({0, 1}) * poly({1, 1}));
    RationalFunction g(poly({0, 0, 3}), poly({-1, 1}));
    for (long a : {-1, 0, 1, 2}) {
        auto lf = laurent_leading_at(f, Rational(a));
        auto lg = laurent_leading_at(g, Rational(a));
        auto lfg = laurent_leading_at(f * g, Rational(a));
        REQUIRE_FALSE(lfg.is_zero);
        CHECK(lfg.order == lf.order + lg.order);
        CHECK(lfg.coefficient == lf.coefficient * lg.coefficient);
    }
}

TEST_CASE("series at infinity, pinned example") {
    // 1/(u-3) = u^{-1} + 3u^{-2} + 9u^{-3} + ...
    RationalFunction f(poly({1}), poly({-3, 1}));
    auto c = series_coefficients_at_infinity(f, 3);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == Rational(0));
    CHECK(c[1] == Rational(1));
    CHECK(c[2] == Rational(3));
    CHECK(c[3] == Rational(9));
}

TEST_CASE("series at infinity: residual tail vanishes") {
    // Exact oracle: g = f - sum_{s<=k} c_s u^{-s} must vanish at infinity to
    // order > k, i.e. u^k * g still tends to 0.
    std::mt19937 rng(77001);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> nc(1 + rng() % 3), dc(nc.size() + 1 + rng() % 2);
        for (auto& v : nc) v = Rational(static_cast<long>(rng() % 11) - 5);
        for (auto& v : dc) v = Rational(static_cast<long>(rng() % 11) - 5);
        dc.back() = Rational(static_cast<long>(rng() % 4) + 1);
        RationalFunction f{Polynomial(nc), Polynomial(dc)};
        const int k = 4;
        auto c = series_coefficients_at_infinity(f, k);
        // assemble sum c_s u^{-s} = (sum c_s u^{k-s}) / u^k
        Polynomial num_tail;
        for (int s = 0; s <= k; ++s) num_tail += Polynomial::monomial(k - s, c[s]);
        RationalFunction partial(num_tail, Polynomial::monomial(k, Rational(1)));
        RationalFunction g = f - partial;
        RationalFunction scaled = g * RationalFunction(Polynomial::monomial(k, Rational(1)));
        if (!scaled.is_zero())
            CHECK(scaled.num().degree() < scaled.den().degree());
    }
    // constant term shows up only for deg num == deg den
    RationalFunction h(poly({1, 2}), poly({-3, 1}));
    auto c = series_coefficients_at_infinity(h, 2);
    CHECK(c[0] == Rational(2));
    CHECK(c[1] == Rational(7));  // (2u+1)/(u-3) = 2 + 7/(u-3)
    CHECK(c[2] == Rational(21));
    CHECK_THROWS_AS(series_coefficients_at_infinity(
                        RationalFunction(poly({0, 0, 1}), poly({1, 1})), 2),
                    std::domain_error);
}

TEST_CASE("truncated series helpers") {
    std::vector<Rational> a{Rational(1), Rational(2), Rational(3)};
    std::vector<Rational> inv = series_inv(a, 5);
    auto prod = series_mul(a, inv, 5);
    CHECK(prod[0] == Rational(1));
    for (int k = 1; k < 5; ++k) CHECK(prod[k] == Rational(0));
    CHECK_THROWS_AS(series_inv({Rational(0), Rational(1)}, 3), std::domain_error);
}
