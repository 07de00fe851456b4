#include <doctest.h>

#include <vector>

#include "fusionkit/fusion.hpp"

using namespace fusionkit;

namespace {

SkewShape sh(const std::string& s) { return SkewShape::parse(s); }

GroupRingQ t12(const Rational& denom) { return transposition_factor(2, 1, 2, denom); }

RationalFunction rf_u() { return RationalFunction(Polynomial::x()); }

// f(-u), coefficient-wise on a group ring element
GroupRingRF negate_argument(const GroupRingRF& x) {
    return x.map_coefficients<RationalFunction>(
        [](const RationalFunction& f) { return substitute_linear(f, Rational(0), Rational(-1)); });
}

} // namespace

TEST_CASE("fusion elements of the smallest diagrams") {
    CHECK(fusion_element(sh("1")) == GroupRingQ::one(1));
    CHECK(fusion_element(sh("2")) == t12(Rational(-1)));   // 1 + (12)
    CHECK(fusion_element(sh("1,1")) == t12(Rational(1)));  // 1 - (12)
    // antidiagonal pair: contents -1 and 1, no limit needed
    CHECK(fusion_element(sh("2,1/1")) == t12(Rational(-2)));
}

TEST_CASE("fusion limit does not depend on the direction of approach") {
    for (const char* name : {"2,2", "3,1", "2,2/1", "3,2,1/1,1"}) {
        const SkewShape w = sh(name);
        const int cols = static_cast<int>(w.column_lengths().size());
        std::vector<long> a1, a2;
        for (int j = 0; j < cols; ++j) {
            a1.push_back(j + 1);
            a2.push_back(5 * j + 3);
        }
        const auto f1 = fusion_element(FusionContext::with_direction(w, a1));
        const auto f2 = fusion_element(FusionContext::with_direction(w, a2));
        CHECK(f1 == f2);
        CHECK(f1 == fusion_element(w));
    }
}

TEST_CASE("ordered product at a singular point reports the failing pair") {
    const std::vector<Rational> z(4, Rational(0));
    CHECK_THROWS_AS(fusion_product_at(sh("2,2"), z), SingularPairError);
    try {
        fusion_product_at(sh("2,2"), z);
    } catch (const SingularPairError& e) {
        CHECK(e.p == 1);
        CHECK(e.q == 4);
    }
    // generic points evaluate to the plain ordered product
    const SkewShape row2 = sh("2");
    const auto at = fusion_product_at(row2, {Rational(0), Rational(1, 2)});
    CHECK(at == t12(Rational(-3, 2))); // 1 + (2/3)(12)
}

TEST_CASE("column-adjacent neighbors divide the fusion element on both sides") {
    for (const SkewShape& w : enumerate_skew_shapes(5, 4, 4)) {
        const int n = w.box_count();
        const auto boxes = w.boxes_column_order();
        const auto cs = contents_column_order(w);
        const GroupRingQ F = fusion_element(w);
        for (int r = 1; r < n; ++r) {
            if (boxes[r - 1].col != boxes[r].col) continue;
            const auto f =
                transposition_factor(n, r, r + 1, Rational(cs[r - 1] - cs[r]));
            CHECK(left_divisibility_test(F, f));
            CHECK(right_divisibility_test(F, f));
        }
    }
}

TEST_CASE("column order prefixes and suffixes divide the fusion element") {
    for (const SkewShape& w : enumerate_skew_shapes(5, 4, 4)) {
        const int n = w.box_count();
        const GroupRingQ F = fusion_element(w);
        for (int m = 1; m < n; ++m) {
            const GroupRingQ head = fusion_element(column_order_prefix_shape(w, m));
            const GroupRingQ embedded_head = embed_shifted(head, 0, n);
            CHECK(left_divisibility_test(F, embedded_head));
            CHECK(right_divisibility_test(F, embedded_head));

            const GroupRingQ tail = fusion_element(column_order_suffix_shape(w, m));
            const GroupRingQ embedded_tail = embed_shifted(tail, m, n);
            CHECK(left_divisibility_test(F, embedded_tail));
            CHECK(right_divisibility_test(F, embedded_tail));
        }
    }
}

TEST_CASE("row neighbors give a left divisor of the fusion element") {
    for (const SkewShape& w : enumerate_skew_shapes(5, 4, 4)) {
        const auto boxes = w.boxes_column_order();
        const int n = w.box_count();
        const GroupRingQ F = fusion_element(w);
        for (int p = 1; p <= n; ++p)
            for (int q = p + 1; q <= n; ++q) {
                if (boxes[q - 1].row != boxes[p - 1].row ||
                    boxes[q - 1].col != boxes[p - 1].col + 1)
                    continue;
                CHECK(left_divisibility_test(F, row_neighbor_divisor(w, p, q)));
            }
    }
}

TEST_CASE("divisibility test rejects a non-multiple") {
    // 1 + (12) is not a left multiple of 1 - (12): any product x(1-(12)) has
    // opposite coefficients on the two group elements
    CHECK(!left_divisibility_test(t12(Rational(-1)), t12(Rational(1))));
    CHECK(!right_divisibility_test(t12(Rational(-1)), t12(Rational(1))));
    CHECK(left_divisibility_test(t12(Rational(1)), t12(Rational(1))));
}

TEST_CASE("inversion anti-automorphism") {
    const Permutation g(std::vector<int>{2, 3, 1});
    const auto x = GroupRingQ::single(3, g, Rational(5));
    CHECK(alpha_involution(x) == GroupRingQ::single(3, g.inverse(), Rational(5)));
    const auto a = fusion_element(sh("2,1"));
    const auto b = fusion_element(sh("3,1/1"));
    CHECK(alpha_involution(alpha_involution(a)) == a);
    CHECK(alpha_involution(a * b) == alpha_involution(b) * alpha_involution(a));
    // fusion elements of two-box diagrams are symmetric under inversion
    CHECK(alpha_involution(fusion_element(sh("1,1"))) == fusion_element(sh("1,1")));
}

TEST_CASE("pair function of two single boxes") {
    const GroupRingRF G = pair_function_G(sh("1"), sh("1"));
    GroupRingRF expected = GroupRingRF::one(2);
    expected.add_term(Permutation::transposition(2, 1, 2),
                      RationalFunction(Rational(-1)) / rf_u());
    CHECK(G == expected);
}

TEST_CASE("pair product against the swapped pair collapses to a scalar") {
    const std::vector<std::pair<SkewShape, SkewShape>> pairs = {
        {sh("1"), sh("1")},   {sh("1"), sh("2")},     {sh("1"), sh("1,1")},
        {sh("2"), sh("1,1")}, {sh("1,1"), sh("1,1")}, {sh("2,1/1"), sh("2")},
    };
    for (const auto& [w, w2] : pairs) {
        const int n = w.box_count(), n2 = w2.box_count();
        const GroupRingRF left = pair_function_G(w, w2);
        const GroupRingRF right = swap_blocks(negate_argument(pair_function_G(w2, w)), n, n2);
        const GroupRingRF expected =
            pair_scalar_product(w, w2) * GroupRingRF::one(n + n2);
        CHECK(left * right == expected);
    }
}

TEST_CASE("three factorizations of the pair function agree") {
    const std::vector<std::pair<SkewShape, SkewShape>> pairs = {
        {sh("1"), sh("1")}, {sh("1"), sh("1,1")}, {sh("2"), sh("2")},
        {sh("2"), sh("1,1")}, {sh("2,1"), sh("2")},
    };
    for (const auto& [w, w2] : pairs) {
        const auto first = pair_function_F(w, w2, PairOrdering::product_first);
        const auto between = pair_function_F(w, w2, PairOrdering::product_between);
        const auto last = pair_function_F(w, w2, PairOrdering::product_last);
        CHECK(first == between);
        CHECK(first == last);
    }
}

TEST_CASE("scalar h for the smallest diagrams") {
    const RationalFunction u = rf_u();
    CHECK(h_function(sh("1")) == RationalFunction(Rational(-1)) / u);
    CHECK(h_function(sh("2")) ==
          (u + RationalFunction(Rational(2))) / (u * (u + RationalFunction(Rational(1))) *
                                                 (u + RationalFunction(Rational(1)))));
    CHECK(h_function(sh("1,1")) ==
          (u - RationalFunction(Rational(2))) / (u * (u - RationalFunction(Rational(1))) *
                                                 (u - RationalFunction(Rational(1)))));
}

TEST_CASE("pole data of h at the origin") {
    auto d = c_and_order(sh("1"));
    CHECK(d.order == 1);
    CHECK(d.c == Rational(-1));
    d = c_and_order(sh("2"));
    CHECK(d.order == 1);
    CHECK(d.c == Rational(2));
    d = c_and_order(sh("1,1"));
    CHECK(d.order == 1);
    CHECK(d.c == Rational(-2));
    // pole order equals the Durfee rank on every small shape
    for (const SkewShape& w : enumerate_skew_shapes(6, 4, 4))
        CHECK(c_and_order(w).order == durfee_rank_formula(w));
}

TEST_CASE("row pair product form of h") {
    const RationalFunction u = rf_u();
    CHECK(h_partition_product(sh("1")) == (u - RationalFunction(Rational(1))) / u);
    CHECK(h_partition_product(sh("2")) == (u - RationalFunction(Rational(2))) / u);
    // equals h of the conjugate shape times (1-u)^n
    for (const SkewShape& w : enumerate_skew_shapes(5, 4, 4)) {
        RationalFunction factor(Rational(1));
        const RationalFunction one_minus_u = RationalFunction(Rational(1)) - u;
        for (int i = 0; i < w.box_count(); ++i) factor = factor * one_minus_u;
        CHECK(h_partition_product(w) == h_function(conjugate(w)) * factor);
    }
}

TEST_CASE("leading term of the diagonal pair function") {
    const auto lead = pair_leading_at_zero(sh("1"));
    CHECK(!lead.is_zero);
    CHECK(lead.order == -1);
    CHECK(lead.leading ==
          GroupRingQ::single(2, Permutation::transposition(2, 1, 2), Rational(-1)));

    for (const SkewShape& w : enumerate_skew_shapes(3, 3, 3))
        CHECK(verify_pair_leading_term(w));
}

TEST_CASE("size guards fire before expensive products") {
    CHECK_THROWS_AS(fusion_element(sh("8")), GuardError);
    CHECK_THROWS_AS(pair_function_G(sh("4"), sh("3")), GuardError);
    Guards loose;
    loose.fusion_max_boxes = 8;
    CHECK(fusion_element(sh("4,4"), loose).support_size() > 1);
}
