#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "fusionkit/permutation.hpp"

namespace fusionkit {

// Element of the group algebra of S_n with coefficients in F (Rational or
// RationalFunction).  Sparse map keyed by one-line notation; zero coefficients
// are dropped so equality is structural.  std::map keeps iteration order
// deterministic, which serialization and the divisibility tests rely on.
template <class F>
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(int degree) : degree_(degree) {}
    static GroupRingElement one(int degree) {
        GroupRingElement e(degree);
        e.terms_[Permutation::identity(degree)] = F(1);
        return e;
    }
    static GroupRingElement single(int degree, const Permutation& g, const F& coeff) {
        GroupRingElement e(degree);
        e.add_term(g, coeff);
        return e;
    }

    int degree() const { return degree_; }
    int support_size() const { return static_cast<int>(terms_.size()); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, F>& terms() const { return terms_; }

    F coefficient(const Permutation& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? F(0) : it->second;
    }

    void add_term(const Permutation& g, const F& coeff) {
        if (g.degree() != degree_) throw std::invalid_argument("permutation degree mismatch");
        auto [it, fresh] = terms_.try_emplace(g, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == F(0)) terms_.erase(it);
        } else if (coeff == F(0)) {
            terms_.erase(it);
        }
    }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        require_same_degree(o);
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }
    GroupRingElement& operator-=(const GroupRingElement& o) {
        require_same_degree(o);
        for (const auto& [g, c] : o.terms_) add_term(g, -c);
        return *this;
    }
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { a += b; return a; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { a -= b; return a; }

    GroupRingElement operator-() const {
        GroupRingElement r(degree_);
        for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
        return r;
    }

    friend GroupRingElement operator*(const F& s, const GroupRingElement& e) {
        GroupRingElement r(e.degree_);
        if (s == F(0)) return r;
        for (const auto& [g, c] : e.terms_) r.terms_.emplace(g, s * c);
        return r;
    }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        a.require_same_degree(b);
        GroupRingElement r(a.degree_);
        for (const auto& [g, cg] : a.terms_)
            for (const auto& [h, ch] : b.terms_) r.add_term(g * h, cg * ch);
        return r;
    }

    // this <- this * (1 - (p q)/denom), the workhorse of every ordered product
    void mul_transposition_factor(int p, int q, const F& denom) {
        if (denom == F(0)) throw std::domain_error("transposition factor with zero denominator");
        const F scale = -(F(1) / denom);
        GroupRingElement shifted(degree_);
        for (const auto& [g, c] : terms_) {
            Permutation gp = g;
            gp.swap_preimages(p, q);
            shifted.terms_.emplace(std::move(gp), c * scale);
        }
        *this += shifted;
    }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }

    // coefficient-wise map into another field (e.g. Rational -> RationalFunction)
    template <class G, class Fn>
    GroupRingElement<G> map_coefficients(Fn&& fn) const {
        GroupRingElement<G> r(degree_);
        for (const auto& [g, c] : terms_) r.add_term(g, fn(c));
        return r;
    }

private:
    int degree_ = 0;
    std::map<Permutation, F> terms_;
    void require_same_degree(const GroupRingElement& o) const {
        if (degree_ != o.degree_) throw std::invalid_argument("group ring degree mismatch");
    }
};

template <class F>
GroupRingElement<F> group_ring_multiply(const GroupRingElement<F>& a, const GroupRingElement<F>& b) {
    return a * b;
}

// 1 - (p q)/denom in the group ring of S_n
template <class F>
GroupRingElement<F> transposition_factor(int n, int p, int q, const F& denom) {
    GroupRingElement<F> e = GroupRingElement<F>::one(n);
    e.mul_transposition_factor(p, q, denom);
    return e;
}

// the involutive anti-automorphism g -> g^{-1}
template <class F>
GroupRingElement<F> alpha_involution(const GroupRingElement<F>& x) {
    GroupRingElement<F> r(x.degree());
    for (const auto& [g, c] : x.terms()) r.add_term(g.inverse(), c);
    return r;
}

// embed through S_m -> S_n acting on {shift+1, ..., shift+m}
template <class F>
GroupRingElement<F> embed_shifted(const GroupRingElement<F>& x, int shift, int n) {
    if (shift + x.degree() > n || shift < 0)
        throw std::invalid_argument("shifted embedding does not fit");
    std::vector<int> m(x.degree());
    for (int i = 0; i < x.degree(); ++i) m[i] = shift + i + 1;
    GroupRingElement<F> r(n);
    for (const auto& [g, c] : x.terms()) r.add_term(g.relabel(m, n), c);
    return r;
}

// conjugation x -> g x g^{-1} given as a position relabeling
template <class F>
GroupRingElement<F> relabel_positions(const GroupRingElement<F>& x, const std::vector<int>& m, int n) {
    GroupRingElement<F> r(n);
    for (const auto& [g, c] : x.terms()) r.add_term(g.relabel(m, n), c);
    return r;
}

} // namespace fusionkit
