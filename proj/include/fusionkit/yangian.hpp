#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fusionkit/fusion.hpp"
#include "fusionkit/matrix.hpp"

namespace fusionkit {

// Everything in this header works in coordinates on tensor powers of C^N.
// Basis vectors of the n-fold power are indexed big-endian: e_{i_1} x ... x
// e_{i_n} has index sum_p (i_p - 1) N^{n-p}.  A permutation g moves tensor
// slot p to slot g(p), which makes g -> matrix a homomorphism for our
// composition convention (g h)(x) = g(h(x)).

long tensor_power_dim(int N, int n);

MatrixQ perm_action_matrix(const Permutation& g, int N);

// linear extension, a sum of scaled permutation matrices
MatrixQ group_ring_action_matrix(const GroupRingQ& x, int N);

// The action matrix of the fusion element computed without the group ring:
// the ordered product of the factor matrices with line denominators in t,
// evaluated at t = 0 column by column.  Agrees with applying
// group_ring_action_matrix to fusion_element; module_space picks whichever
// route the guards allow.
MatrixQ fusion_action_matrix(const SkewShape& shape, int N,
                             const Guards& guards = Guards::defaults());

// The subspace V of the tensor power spanned by the columns of the fusion
// action matrix.  The basis is the set of pivot columns in index order, so it
// is canonical; dim is cross-checked against the tableau count on
// construction.  The coordinate solver is cached on first use, which is the
// one concession to laziness here: not thread-safe until warmed up.
class ModuleSpace {
public:
    ModuleSpace() = default;

    const SkewShape& shape() const { return shape_; }
    int N() const { return N_; }
    int box_count() const { return n_; }
    long ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }

    // basis columns, dense, each of ambient length
    const std::vector<std::vector<Rational>>& basis() const { return basis_; }
    const std::vector<int>& pivot_indices() const { return pivots_; }
    MatrixQ basis_matrix() const;

    // coordinates of an ambient vector in the basis columns; nullopt when the
    // vector lies outside the subspace
    template <class T>
    std::optional<std::vector<T>> coordinates(const std::vector<T>& v) const {
        ensure_solver();
        return solver_->coordinates(v);
    }

private:
    friend ModuleSpace module_space(const SkewShape&, int, const Guards&);
    SkewShape shape_;
    int N_ = 0, n_ = 0, dim_ = 0;
    long ambient_ = 0;
    std::vector<int> pivots_;
    std::vector<std::vector<Rational>> basis_;
    mutable std::optional<SpanSolver> solver_;
    void ensure_solver() const;
};

ModuleSpace module_space(const SkewShape& shape, int N,
                         const Guards& guards = Guards::defaults());

// rank of the fusion action alone, computed blockwise over letter-count
// classes without materializing a basis; much faster than module_space on
// large sweeps
long module_dimension(const SkewShape& shape, int N,
                      const Guards& guards = Guards::defaults());

// the flip V1 (x) V2 -> V2 (x) V1 in kron index convention, a 0/1 matrix
MatrixQ kron_swap_matrix(int d1, int d2);

// Restriction of the matrix pair product G(u) to V (x) V', expressed on the
// kron basis b_i (x) b'_j ordered by (i, j).  Entries are rational functions
// of u; both module spaces must be nonzero.
MatrixRF r_matrix(const SkewShape& w, const SkewShape& w2, int N,
                  const Guards& guards = Guards::defaults());

// Same restriction evaluated at the point u0; throws domain_error when u0
// hits a factor pole (u0 + c_p - c'_q = 0).
MatrixQ r_matrix_at(const SkewShape& w, const SkewShape& w2, int N,
                    const Rational& u0, const Guards& guards = Guards::defaults());

// Laurent data of the restricted pair product at u = z: R(u) behaves like
// (u - z)^{-a} I + higher order.  For non-integer z no factor is singular and
// a = 0 with I the plain value.
struct IntertwinerData {
    int a = 0;
    MatrixQ I;
    bool invertible = false;
};

IntertwinerData intertwiner_leading(const SkewShape& w, const SkewShape& w2, int N,
                                    const Rational& z,
                                    const Guards& guards = Guards::defaults());

// Module structure on V carried by u -> the restricted pair product with a
// single extra box, expanded at infinity.  generator_matrices[s] holds the
// u^{-s} coefficient blocks, flattened (i-1)*N + (j-1); the s = 0 layer is
// checked to be the identity and kept for reference.
struct ElementaryModule {
    ModuleSpace space;
    Rational z;
    int s_max = 0;
    std::vector<std::vector<MatrixQ>> generator_matrices;

    const MatrixQ& generator(int s, int i, int j) const;
};

ElementaryModule elementary_generators(const SkewShape& shape, int N, const Rational& z,
                                       int s_max, const Guards& guards = Guards::defaults());

// Generator action matrices on the tensor product of the listed evaluation
// modules, one (shape, z) per factor.  The aux-space product follows the
// coproduct convention with the last factor leftmost; opposite_order reverses
// it.  Returned flat: s = 1..s_max outer, then i, then j.
std::vector<MatrixQ> tensor_module_generators(
    const std::vector<std::pair<SkewShape, Rational>>& parts, int N, int s_max,
    bool opposite_order = false, const Guards& guards = Guards::defaults());

struct PairEvidence {
    int first = 0, second = 0; // 1-based positions in the input list
    Rational z_difference;
    IntertwinerData data;
};

struct IrreducibilityReport {
    bool irreducible = true;
    std::vector<PairEvidence> pairs; // every pair first < second, in order

    std::vector<std::pair<int, int>> failing_pairs() const;
};

// The pairwise-intertwiner criterion: the tensor product is irreducible iff
// the leading operator is invertible for every pair of factors.
IrreducibilityReport irreducibility_criterion(
    const std::vector<std::pair<SkewShape, Rational>>& parts, int N,
    const Guards& guards = Guards::defaults());

// Independent cross-check: the module is irreducible iff its generator
// matrices generate the full matrix algebra.  Generator order grows until the
// closure dimension is unchanged for two consecutive steps; s_max caps the
// growth (0 picks a cap from dim W) and exhausting it throws.
bool burnside_irreducible(const std::vector<std::pair<SkewShape, Rational>>& parts, int N,
                          int s_max = 0, const Guards& guards = Guards::defaults());

// Exact identity suite over the triple (w, w2, w3): Yang-Baxter, the
// unitarity product, the defining quadratic relation on elementary modules,
// the single-box chain restriction, the scalar property of the two-sided
// leading product, and the flip-proportionality of the two-copy matrix train.
// Sample points are seeded and avoid integer differences by construction.
bool verify_identities(const SkewShape& w, const SkewShape& w2, const SkewShape& w3,
                       int N, int samples, const Guards& guards = Guards::defaults(),
                       unsigned seed = 1797);

// Lift an operator on slots a < b (1-based) of a tensor product with the
// given slot dimensions to the whole product.
template <class T>
Matrix<T> lift_two_slots(const Matrix<T>& m, const std::vector<int>& dims, int a, int b) {
    const int k = static_cast<int>(dims.size());
    if (a < 1 || b <= a || b > k) throw std::invalid_argument("bad slot pair");
    long total = 1;
    for (int d : dims) total *= d;
    std::vector<long> stride(k, 1);
    for (int r = k - 2; r >= 0; --r) stride[r] = stride[r + 1] * dims[r + 1];
    const int da = dims[a - 1], db = dims[b - 1];
    if (m.rows() != da * db || m.cols() != da * db)
        throw std::invalid_argument("operator size does not match the slot pair");
    Matrix<T> out(static_cast<int>(total), static_cast<int>(total));
    for (long col = 0; col < total; ++col) {
        const int ya = static_cast<int>(col / stride[a - 1]) % da;
        const int yb = static_cast<int>(col / stride[b - 1]) % db;
        const long base = col - ya * stride[a - 1] - yb * stride[b - 1];
        for (int xa = 0; xa < da; ++xa)
            for (int xb = 0; xb < db; ++xb) {
                const T& val = m.at(xa * db + xb, ya * db + yb);
                if (val == T(0)) continue;
                out.at(static_cast<int>(base + xa * stride[a - 1] + xb * stride[b - 1]),
                       static_cast<int>(col)) = val;
            }
    }
    return out;
}

} // namespace fusionkit
