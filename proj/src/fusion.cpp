#include "fusionkit/fusion.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "fusionkit/matrix.hpp"

namespace fusionkit {

namespace {

using PolyGR = GroupRingElement<Polynomial>;

Polynomial truncated(const Polynomial& p, int cap) {
    if (p.degree() <= cap) return p;
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().begin() + cap + 1);
    return Polynomial(std::move(c));
}

// acc <- acc * (denom - (p q)); with cap >= 0 the coefficient polynomials are
// truncated above degree cap, which is sound when only the low part of the
// numerators is ever read off
void mul_shared_factor(PolyGR& acc, int p, int q, const Polynomial& denom, int cap) {
    PolyGR next(acc.degree());
    for (const auto& [g, c] : acc.terms()) {
        Polynomial scaled = c * denom;
        if (cap >= 0) scaled = truncated(scaled, cap);
        next.add_term(g, scaled);
        Permutation gp = g;
        gp.swap_preimages(p, q);
        next.add_term(gp, -c);
    }
    acc = std::move(next);
}

PolyGR to_poly_coeffs(const GroupRingQ& x) {
    return x.map_coefficients<Polynomial>([](const Rational& r) { return Polynomial(r); });
}

Polynomial expand_roots(const std::map<long, int>& roots) {
    Polynomial p{Rational(1)};
    for (const auto& [r, m] : roots)
        for (int k = 0; k < m; ++k) p *= Polynomial::linear(Rational(-r), Rational(1));
    return p;
}

void cancel_common_roots(std::map<long, int>& a, std::map<long, int>& b) {
    for (auto it = a.begin(); it != a.end();) {
        auto jt = b.find(it->first);
        if (jt == b.end()) { ++it; continue; }
        const int m = std::min(it->second, jt->second);
        it->second -= m;
        jt->second -= m;
        if (jt->second == 0) b.erase(jt);
        if (it->second == 0) it = a.erase(it);
        else ++it;
    }
}

Rational pow_int(const Rational& base, int e) {
    Rational r(1);
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

// numerator polynomials of the double product over p (outer) and q (inner) of
// 1 - (p, q+n)/(u + c_p - c2_q), against the common denominator D
struct SharedPair {
    PolyGR num;
    Polynomial den;
};

SharedPair shared_pair_product(const std::vector<int>& c, const std::vector<int>& c2,
                               bool p_descending, bool q_descending) {
    const int n = static_cast<int>(c.size());
    const int n2 = static_cast<int>(c2.size());
    SharedPair out{PolyGR::one(n + n2), Polynomial{Rational(1)}};
    for (int i = 0; i < n; ++i) {
        const int p = p_descending ? n - i : i + 1;
        for (int j = 0; j < n2; ++j) {
            const int q = q_descending ? n2 - j : j + 1;
            Polynomial denom = Polynomial::linear(Rational(c[p - 1] - c2[q - 1]), Rational(1));
            out.den *= denom;
            mul_shared_factor(out.num, p, q + n, denom, -1);
        }
    }
    return out;
}

} // namespace

FusionContext FusionContext::standard(const SkewShape& shape) {
    FusionContext ctx;
    ctx.shape = shape;
    ctx.contents = contents_column_order(shape);
    for (const Box& b : shape.boxes_column_order()) {
        ctx.column_of.push_back(b.col);
        ctx.direction.push_back(b.col);
    }
    return ctx;
}

FusionContext FusionContext::with_direction(const SkewShape& shape,
                                            const std::vector<long>& a_per_column) {
    FusionContext ctx;
    ctx.shape = shape;
    ctx.contents = contents_column_order(shape);
    std::vector<int> nonempty_cols;
    for (const Box& b : shape.boxes_column_order()) {
        ctx.column_of.push_back(b.col);
        if (nonempty_cols.empty() || nonempty_cols.back() != b.col) nonempty_cols.push_back(b.col);
    }
    if (a_per_column.size() != nonempty_cols.size())
        throw std::invalid_argument("need one direction value per nonempty column");
    if (std::set<long>(a_per_column.begin(), a_per_column.end()).size() != a_per_column.size())
        throw std::invalid_argument("direction values must be distinct across columns");
    std::map<int, long> by_col;
    for (size_t j = 0; j < nonempty_cols.size(); ++j) by_col[nonempty_cols[j]] = a_per_column[j];
    for (int col : ctx.column_of) ctx.direction.push_back(by_col.at(col));
    return ctx;
}

SingularPairError::SingularPairError(int p_, int q_)
    : std::domain_error("singular pair (" + std::to_string(p_) + ", " + std::to_string(q_) +
                        "): the denominator c_p - c_q + z_p - z_q vanishes"),
      p(p_), q(q_) {}

GroupRingQ fusion_element(const FusionContext& ctx, const Guards& guards) {
    const int n = ctx.shape.box_count();
    if (n == 0) throw std::invalid_argument("empty diagram");
    guard_fusion_boxes(guards, n);
    const std::vector<int>& c = ctx.contents;

    // on the line z = a*t every denominator is (c_p - c_q) + t(a_p - a_q);
    // v counts the denominators vanishing at t = 0
    int v = 0;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            if (c[p - 1] == c[q - 1]) ++v;

    PolyGR acc = PolyGR::one(n);
    Rational den_regular(1); // product of the denominators with the t-power split off
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) {
            const long d0 = c[p - 1] - c[q - 1];
            const long d1 = ctx.direction[p - 1] - ctx.direction[q - 1];
            if (d0 == 0 && d1 == 0)
                throw InternalError("direction fails to separate a singular pair");
            den_regular *= Rational(d0 == 0 ? d1 : d0);
            mul_shared_factor(acc, p, q, Polynomial::linear(Rational(d0), Rational(d1)), v);
        }

    GroupRingQ out(n);
    for (const auto& [g, num] : acc.terms()) {
        const int val = num.valuation();
        if (val < v)
            throw InternalError("fusion limit has a pole at the origin in the group ring");
        if (val == v) out.add_term(g, num.coeff(v) / den_regular);
    }
    return out;
}

GroupRingQ fusion_element(const SkewShape& shape, const Guards& guards) {
    return fusion_element(FusionContext::standard(shape), guards);
}

GroupRingQ fusion_product_at(const SkewShape& shape, const std::vector<Rational>& z,
                             const Guards& guards) {
    const int n = shape.box_count();
    if (n == 0) throw std::invalid_argument("empty diagram");
    guard_fusion_boxes(guards, n);
    if (static_cast<int>(z.size()) != n)
        throw std::invalid_argument("need one z value per box");
    const std::vector<int> c = contents_column_order(shape);
    GroupRingQ acc = GroupRingQ::one(n);
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) {
            Rational denom = Rational(c[p - 1] - c[q - 1]) + z[p - 1] - z[q - 1];
            if (denom.is_zero()) throw SingularPairError(p, q);
            acc.mul_transposition_factor(p, q, denom);
        }
    return acc;
}

GroupRingRF pair_function_G(const SkewShape& w, const SkewShape& w2, const Guards& guards) {
    if (w.empty() || w2.empty()) throw std::invalid_argument("empty diagram");
    guard_pair_boxes(guards, w.box_count() + w2.box_count());
    SharedPair sp = shared_pair_product(contents_column_order(w), contents_column_order(w2),
                                        /*p_descending=*/true, /*q_descending=*/false);
    GroupRingRF out(w.box_count() + w2.box_count());
    for (const auto& [g, num] : sp.num.terms()) out.add_term(g, RationalFunction(num, sp.den));
    return out;
}

GroupRingRF pair_function_F(const SkewShape& w, const SkewShape& w2, PairOrdering ordering,
                            const Guards& guards) {
    if (w.empty() || w2.empty()) throw std::invalid_argument("empty diagram");
    const int n = w.box_count(), n2 = w2.box_count();
    guard_pair_boxes(guards, n + n2);
    PolyGR f1 = to_poly_coeffs(embed_shifted(fusion_element(w, guards), 0, n + n2));
    PolyGR f2 = to_poly_coeffs(embed_shifted(fusion_element(w2, guards), n, n + n2));
    const std::vector<int> c = contents_column_order(w);
    const std::vector<int> c2 = contents_column_order(w2);

    SharedPair sp;
    PolyGR total(n + n2);
    switch (ordering) {
    case PairOrdering::product_first:
        sp = shared_pair_product(c, c2, true, false);
        total = sp.num * f1 * f2;
        break;
    case PairOrdering::product_between:
        sp = shared_pair_product(c, c2, false, false);
        total = f1 * sp.num * f2;
        break;
    case PairOrdering::product_last:
        sp = shared_pair_product(c, c2, false, true);
        total = f1 * f2 * sp.num;
        break;
    }
    GroupRingRF out(n + n2);
    for (const auto& [g, num] : total.terms()) out.add_term(g, RationalFunction(num, sp.den));
    return out;
}

RationalFunction h_function(const SkewShape& shape) {
    if (shape.empty()) throw std::invalid_argument("empty diagram");
    const std::vector<int> c = contents_column_order(shape);
    const int n = static_cast<int>(c.size());
    std::map<long, int> num_roots, den_roots;
    den_roots[0] += n;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const long delta = c[p] - c[q];
            ++num_roots[delta - 1];
            ++num_roots[delta + 1];
            den_roots[delta] += 2;
        }
    cancel_common_roots(num_roots, den_roots);
    Polynomial num = expand_roots(num_roots);
    if (n % 2 == 1) num = -num;
    return RationalFunction(num, expand_roots(den_roots));
}

HPoleData c_and_order(const SkewShape& shape) {
    if (shape.empty()) throw std::invalid_argument("empty diagram");
    const std::vector<int> c = contents_column_order(shape);
    const int n = static_cast<int>(c.size());
    std::map<long, int> num_roots, den_roots;
    den_roots[0] += n;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const long delta = c[p] - c[q];
            ++num_roots[delta - 1];
            ++num_roots[delta + 1];
            den_roots[delta] += 2;
        }
    cancel_common_roots(num_roots, den_roots);

    HPoleData out;
    auto exponent_of_zero = [](const std::map<long, int>& roots) {
        auto it = roots.find(0);
        return it == roots.end() ? 0 : it->second;
    };
    out.order = exponent_of_zero(den_roots) - exponent_of_zero(num_roots);
    out.c = Rational(n % 2 == 1 ? -1 : 1);
    for (const auto& [r, m] : num_roots)
        if (r != 0) out.c *= pow_int(Rational(-r), m);
    for (const auto& [r, m] : den_roots)
        if (r != 0) out.c /= pow_int(Rational(-r), m);

    if (out.order != durfee_rank_definition(shape).rank)
        throw InternalError("pole order of h at the origin differs from the Durfee rank");
    return out;
}

RationalFunction h_partition_product(const SkewShape& shape) {
    if (shape.empty()) throw std::invalid_argument("empty diagram");
    const Partition& lam = shape.lambda();
    const Partition& mu = shape.mu();
    const int L = lam.length();
    std::map<long, int> num_roots, den_roots;
    for (int i = 1; i <= L; ++i) {
        if (lam.part(i) == mu.part(i)) continue; // factor is 1 on empty rows
        ++num_roots[lam.part(i) - mu.part(i)];
        ++den_roots[0];
    }
    for (int i = 1; i <= L; ++i) {
        if (lam.part(i) == mu.part(i)) continue;
        for (int j = i + 1; j <= L; ++j) {
            if (lam.part(j) == mu.part(j)) continue;
            ++num_roots[-(lam.part(i) - mu.part(j) - i + j)];
            ++num_roots[-(mu.part(i) - lam.part(j) - i + j)];
            ++den_roots[-(lam.part(i) - lam.part(j) - i + j)];
            ++den_roots[-(mu.part(i) - mu.part(j) - i + j)];
        }
    }
    cancel_common_roots(num_roots, den_roots);
    return RationalFunction(expand_roots(num_roots), expand_roots(den_roots));
}

RationalFunction pair_scalar_product(const SkewShape& w, const SkewShape& w2) {
    if (w.empty() || w2.empty()) throw std::invalid_argument("empty diagram");
    std::map<long, int> num_roots, den_roots;
    for (int cp : contents_column_order(w))
        for (int cq : contents_column_order(w2)) {
            const long e = cp - cq; // factor 1 - 1/(u+e)^2
            ++num_roots[-(e - 1)];
            ++num_roots[-(e + 1)];
            den_roots[-e] += 2;
        }
    cancel_common_roots(num_roots, den_roots);
    return RationalFunction(expand_roots(num_roots), expand_roots(den_roots));
}

GroupRingRF swap_blocks(const GroupRingRF& x, int n, int n2) {
    if (x.degree() != n + n2) throw std::invalid_argument("block sizes do not sum to the degree");
    std::vector<int> m(n + n2);
    for (int i = 1; i <= n2; ++i) m[i - 1] = n + i;
    for (int j = 1; j <= n; ++j) m[n2 + j - 1] = j;
    return relabel_positions(x, m, n + n2);
}

PairLeadingAtZero pair_leading_at_zero(const SkewShape& shape, const Guards& guards) {
    if (shape.empty()) throw std::invalid_argument("empty diagram");
    const int n = shape.box_count();
    guard_pair_boxes(guards, 2 * n);
    const std::vector<int> c = contents_column_order(shape);
    const GroupRingQ f = fusion_element(shape, guards);
    SharedPair sp = shared_pair_product(c, c, true, false);
    PolyGR total = sp.num * to_poly_coeffs(embed_shifted(f, 0, 2 * n)) *
                   to_poly_coeffs(embed_shifted(f, n, 2 * n));

    // common denominator is u^m0 times a factor not vanishing at 0
    int m0 = 0;
    Rational den_regular(1);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (c[p] == c[q]) ++m0;
            else den_regular *= Rational(c[p] - c[q]);
        }

    PairLeadingAtZero out;
    std::optional<int> kmin;
    for (const auto& [g, num] : total.terms()) {
        const int order = num.valuation() - m0;
        if (!kmin || order < *kmin) kmin = order;
    }
    if (!kmin) return out;
    out.is_zero = false;
    out.order = *kmin;
    out.leading = GroupRingQ(2 * n);
    for (const auto& [g, num] : total.terms())
        if (num.valuation() - m0 == *kmin) out.leading.add_term(g, num.coeff(num.valuation()) / den_regular);
    return out;
}

bool verify_pair_leading_term(const SkewShape& shape, const Guards& guards) {
    const PairLeadingAtZero lead = pair_leading_at_zero(shape, guards);
    const HPoleData hd = c_and_order(shape);
    if (lead.is_zero || lead.order != -hd.order) return false;
    const int n = shape.box_count();
    std::vector<int> img(2 * n);
    for (int i = 1; i <= n; ++i) {
        img[i - 1] = n + i;
        img[n + i - 1] = i;
    }
    const GroupRingQ f = fusion_element(shape, guards);
    GroupRingQ expected = GroupRingQ::single(2 * n, Permutation(img), hd.c) *
                          embed_shifted(f, 0, 2 * n) * embed_shifted(f, n, 2 * n);
    return lead.leading == expected;
}

bool left_divisibility_test(const GroupRingQ& x, const GroupRingQ& d, const Guards& guards) {
    if (x.degree() != d.degree()) throw std::invalid_argument("group ring degree mismatch");
    const int n = x.degree();
    guard_pair_boxes(guards, n);
    if (d.is_zero()) return x.is_zero();

    const std::vector<Permutation> perms = symmetric_group(n);
    std::map<Permutation, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<int>(i));
    const int dim = static_cast<int>(perms.size());

    auto as_vector = [&](const GroupRingQ& y) {
        std::vector<Rational> v(dim);
        for (const auto& [g, coeff] : y.terms()) v[index.at(g)] = coeff;
        return v;
    };

    Echelon<Rational> ech(dim);
    for (const Permutation& e : perms) {
        std::vector<Rational> v(dim);
        for (const auto& [g, coeff] : d.terms()) v[index.at(g * e)] += coeff;
        ech.insert(std::move(v));
        if (ech.rank() == dim) return true; // the ideal is everything
    }
    return ech.contains(as_vector(x));
}

bool right_divisibility_test(const GroupRingQ& x, const GroupRingQ& d, const Guards& guards) {
    return left_divisibility_test(alpha_involution(x), alpha_involution(d), guards);
}

GroupRingQ row_neighbor_divisor(const SkewShape& shape, int p, int q) {
    const auto boxes = shape.boxes_column_order();
    const int n = static_cast<int>(boxes.size());
    if (p < 1 || q < 1 || p > n || q > n || p >= q)
        throw std::invalid_argument("need box numbers 1 <= p < q <= n");
    const Box bp = boxes[p - 1], bq = boxes[q - 1];
    if (bq.row != bp.row || bq.col != bp.col + 1)
        throw std::invalid_argument("boxes are not row neighbors");
    int r = p;
    while (r < n && boxes[r].col == bp.col) ++r; // bottom of p's column
    const std::vector<int> c = contents_column_order(shape);
    GroupRingQ acc = GroupRingQ::one(n);
    for (int s = r; s >= p; --s)
        for (int t = r + 1; t <= q; ++t)
            acc.mul_transposition_factor(s, t, Rational(c[s - 1] - c[t - 1]));
    return acc;
}

} // namespace fusionkit
