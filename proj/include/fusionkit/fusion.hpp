#pragma once

#include <stdexcept>
#include <vector>

#include "fusionkit/group_ring.hpp"
#include "fusionkit/guards.hpp"
#include "fusionkit/rational_function.hpp"
#include "fusionkit/skew_shape.hpp"

namespace fusionkit {

using GroupRingQ = GroupRingElement<Rational>;
using GroupRingRF = GroupRingElement<RationalFunction>;

// Direction data for the limit that defines the fusion element: the product
// is evaluated on the line z_p = a_p * t and t is sent to 0.  The a's must be
// constant on columns of the diagram and distinct across columns; any such
// line is generic enough, and independence of the choice is covered by tests.
struct FusionContext {
    SkewShape shape;
    std::vector<int> contents;   // column order
    std::vector<int> column_of;  // box p (1-based) -> column number of the diagram
    std::vector<long> direction; // a_p per box

    // a = column number
    static FusionContext standard(const SkewShape& shape);
    // explicit a values, one per nonempty column, left to right
    static FusionContext with_direction(const SkewShape& shape,
                                        const std::vector<long>& a_per_column);
};

// A denominator c_p - c_q + z_p - z_q vanished at the requested point.
class SingularPairError : public std::domain_error {
public:
    SingularPairError(int p_, int q_);
    int p, q;
};

// F_omega: the value at the origin of the ordered product of the factors
// 1 - (p q)/(c_p - c_q + z_p - z_q) over pairs p < q in lexicographic order,
// restricted to the line of the context.  Coefficients are exact rationals.
GroupRingQ fusion_element(const FusionContext& ctx, const Guards& guards = Guards::defaults());
GroupRingQ fusion_element(const SkewShape& shape, const Guards& guards = Guards::defaults());

// The same ordered product evaluated at an explicit point z, no limit taken.
GroupRingQ fusion_product_at(const SkewShape& shape, const std::vector<Rational>& z,
                             const Guards& guards = Guards::defaults());

// G(u) for an ordered pair of diagrams: the product over p = n..1 of the
// row subproducts over q = 1..n' of 1 - (p, q+n)/(u + c_p - c'_q), an element
// of the group ring of S_{n+n'} with rational-function coefficients.
GroupRingRF pair_function_G(const SkewShape& w, const SkewShape& w2,
                            const Guards& guards = Guards::defaults());

// The pair function F(u) = G(u) * F_w * F_w2-shifted admits two more
// factorizations with the double product moved past the fusion elements;
// all three expand to the same element and tests rely on that.
enum class PairOrdering {
    product_first, // [double product, p descending] * F_w * F_w2^
    product_between, // F_w * [double product, p ascending] * F_w2^
    product_last, // F_w * F_w2^ * [double product, q descending inside rows]
};

GroupRingRF pair_function_F(const SkewShape& w, const SkewShape& w2,
                            PairOrdering ordering = PairOrdering::product_first,
                            const Guards& guards = Guards::defaults());

// Scalar function h(u) = (-1/u)^n * prod_{p<q} (1 - 1/(u - c_p + c_q)^2),
// reduced.  Its pole order at u = 0 is the Durfee rank of the diagram.
RationalFunction h_function(const SkewShape& shape);

struct HPoleData {
    int order = 0;  // pole order of h at u = 0, equal to the Durfee rank
    Rational c;     // coefficient of u^{-order}
};
// Pole data of h at the origin; raises InternalError if the order disagrees
// with the Durfee rank computed combinatorially.
HPoleData c_and_order(const SkewShape& shape);

// The row-pair product form of h: prod_i (u - lambda_i + mu_i)/u times the
// product over i < j of
//   (u + lambda_i - mu_j - i + j)(u + mu_i - lambda_j - i + j)
//   / ((u + lambda_i - lambda_j - i + j)(u + mu_i - mu_j - i + j)).
// Equals h of the conjugate diagram times (1-u)^n.
RationalFunction h_partition_product(const SkewShape& shape);

// The scalar prod_{p,q} (1 - 1/(u + c_p - c'_q)^2) over all box pairs of the
// two diagrams; this is what G_{w,w2}(u) * G_{w2,w}-vee(-u) collapses to.
RationalFunction pair_scalar_product(const SkewShape& w, const SkewShape& w2);

// Conjugate an element of the group ring of S_{n+n2} by the permutation
// sending (1..n2, n2+1..n2+n) to (n+1..n+n2, 1..n); this swaps the roles of
// the two embedded blocks.
GroupRingRF swap_blocks(const GroupRingRF& x, int n, int n2);

// Laurent data at u = 0 of the diagonal pair function F(u) for (w, w),
// taken coefficient-wise at the common minimal order.
struct PairLeadingAtZero {
    bool is_zero = true;
    int order = 0;       // minimal order over the support
    GroupRingQ leading;  // in the group ring of S_{2n}
};
PairLeadingAtZero pair_leading_at_zero(const SkewShape& shape,
                                       const Guards& guards = Guards::defaults());

// Checks that the leading term of the diagonal pair function at u = 0 is
// exactly c * (1,n+1)(2,n+2)...(n,2n) * F * F-shifted * u^{-rank} with (rank, c)
// the pole data of h.
bool verify_pair_leading_term(const SkewShape& shape, const Guards& guards = Guards::defaults());

// Membership of x in the left ideal d * (group ring), by exact linear algebra
// in the regular representation.  Right divisibility reduces to this through
// alpha_involution.
bool left_divisibility_test(const GroupRingQ& x, const GroupRingQ& d,
                            const Guards& guards = Guards::defaults());
bool right_divisibility_test(const GroupRingQ& x, const GroupRingQ& d,
                             const Guards& guards = Guards::defaults());

// For p, q adjacent in the same row of the column tableau (q directly right
// of p), the ordered product of 1 - (s t)/(c_s - c_t) over s running down
// p's column segment (outer, bottom segment first) and t running down the
// next column to q (inner); the fusion element is left divisible by it.
GroupRingQ row_neighbor_divisor(const SkewShape& shape, int p, int q);

} // namespace fusionkit
