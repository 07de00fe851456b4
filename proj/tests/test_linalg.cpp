#include <doctest.h>

#include <random>

#include "fusionkit/matrix.hpp"
#include "fusionkit/yangian.hpp"

using namespace fusionkit;

namespace {

MatrixQ mat(int rows, int cols, std::initializer_list<long> vals) {
    MatrixQ m(rows, cols);
    auto it = vals.begin();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(*it++);
    return m;
}

MatrixQ random_matrix(std::mt19937& rng, int rows, int cols) {
    MatrixQ m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
    return m;
}

MatrixQ random_invertible(std::mt19937& rng, int n) {
    for (;;) {
        MatrixQ m = random_matrix(rng, n, n);
        if (!determinant(m).is_zero()) return m;
    }
}

MatrixQ unit(int n, int i, int j) {
    MatrixQ m(n, n);
    m.at(i, j) = Rational(1);
    return m;
}

MatrixQ inverse_of(const MatrixQ& p) {
    const int n = p.rows();
    MatrixQ aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = p.at(r, c);
        aug.at(r, n + r) = Rational(1);
    }
    const auto res = rref_rank(aug);
    MatrixQ inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = res.rref.at(r, n + c);
    return inv;
}

} // namespace

TEST_CASE("row reduction and rank") {
    const MatrixQ m = mat(3, 3, {1, 2, 3, 2, 4, 6, 1, 1, 1});
    const auto res = rref_rank(m);
    CHECK(res.rank == 2);
    CHECK(res.pivot_cols == std::vector<int>{0, 1});
    CHECK(res.rref.at(0, 0) == Rational(1));
    CHECK(res.rref.at(1, 1) == Rational(1));
    CHECK(res.rref.at(2, 2) == Rational(0));
    CHECK(rref_rank(MatrixQ::identity(4)).rank == 4);
    CHECK(rref_rank(MatrixQ(3, 5)).rank == 0);
}

TEST_CASE("determinant") {
    CHECK(determinant(mat(2, 2, {1, 2, 3, 4})) == Rational(-2));
    CHECK(determinant(mat(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5})) == Rational(30));
    CHECK(determinant(mat(2, 2, {1, 2, 2, 4})) == Rational(0));
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        const MatrixQ a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("image basis keeps the original pivot columns") {
    const MatrixQ m = mat(3, 4, {1, 2, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0});
    const auto im = image_basis(m);
    CHECK(im.pivot_cols == std::vector<int>{0, 2});
    CHECK(im.basis.cols() == 2);
    CHECK(im.basis.at(0, 0) == Rational(1));
    CHECK(im.basis.at(1, 1) == Rational(1));
}

TEST_CASE("coordinates in a basis") {
    const MatrixQ basis = mat(3, 2, {1, 0, 0, 1, 1, 1});
    const auto c = coordinates_in_basis(basis, {Rational(2), Rational(3), Rational(5)});
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<Rational>{Rational(2), Rational(3)});
    CHECK(!coordinates_in_basis(basis, {Rational(1), Rational(0), Rational(0)}).has_value());
}

TEST_CASE("echelon insert detects dependence of dense vectors") {
    // regression: the reduction coefficient must not alias the entry it zeroes
    Echelon<Rational> ech(3);
    CHECK(ech.insert({Rational(1), Rational(2), Rational(3)}) == 0);
    CHECK(ech.insert({Rational(2), Rational(4), Rational(6)}) == -1);
    CHECK(ech.insert({Rational(0), Rational(1), Rational(1)}) == 1);
    CHECK(ech.insert({Rational(1), Rational(3), Rational(4)}) == -1);
    CHECK(ech.rank() == 2);
    CHECK(ech.contains({Rational(3), Rational(7), Rational(10)}));
    CHECK(!ech.contains({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("span solver returns coordinates against the inserted columns") {
    SpanSolver s(3);
    CHECK(s.add_column({Rational(1), Rational(0), Rational(1)}));
    CHECK(s.add_column({Rational(0), Rational(1), Rational(1)}));
    CHECK(!s.add_column({Rational(1), Rational(1), Rational(2)}));
    CHECK(s.rank() == 2);

    const auto c = s.coordinates<Rational>({Rational(2), Rational(-1), Rational(1)});
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<Rational>{Rational(2), Rational(-1)});
    CHECK(!s.coordinates<Rational>({Rational(1), Rational(0), Rational(0)}).has_value());

    // the query field may be bigger than the column field
    const RationalFunction u{Polynomial::x()};
    const RationalFunction one{Rational(1)};
    const auto f = s.coordinates<RationalFunction>({u, one - u, one});
    REQUIRE(f.has_value());
    CHECK((*f)[0] == u);
    CHECK((*f)[1] == one - u);
}

TEST_CASE("matrix laurent leading picks the global order") {
    const RationalFunction u{Polynomial::x()};
    MatrixRF m(2, 2);
    m.at(0, 0) = RationalFunction(Rational(1)) / (u * u);
    m.at(0, 1) = RationalFunction(Rational(3)) / u;
    m.at(1, 0) = RationalFunction(Rational(5));
    const auto lead = matrix_laurent_leading(m, Rational(0));
    CHECK(!lead.is_zero);
    CHECK(lead.order == -2);
    CHECK(lead.coefficient == mat(2, 2, {1, 0, 0, 0}));
    CHECK(matrix_laurent_leading(MatrixRF(2, 2), Rational(0)).is_zero);

    // at a regular point the leading is just the value
    const auto at1 = matrix_laurent_leading(m, Rational(1));
    CHECK(at1.order == 0);
    CHECK(at1.coefficient == mat(2, 2, {1, 3, 5, 0}));
}

TEST_CASE("algebra closure dimensions") {
    CHECK(algebra_closure_dimension({unit(2, 0, 1)}) == 2);
    CHECK(algebra_closure_dimension({unit(2, 0, 1), unit(2, 1, 0)}) == 4);
    // diagonal algebra
    CHECK(algebra_closure_dimension({mat(2, 2, {1, 0, 0, 2})}) == 2);

    // two copies of the natural action: End(sym) + End(alt) = 9 + 1
    std::vector<MatrixQ> diag;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            diag.push_back(kronecker(unit(2, i, j), MatrixQ::identity(2)) +
                           kronecker(MatrixQ::identity(2), unit(2, i, j)));
    CHECK(algebra_closure_dimension(diag) == 10);

    // invariance under simultaneous conjugation
    std::mt19937 rng(11);
    for (int t = 0; t < 5; ++t) {
        const MatrixQ p = random_invertible(rng, 3);
        const MatrixQ pinv = inverse_of(p);
        const std::vector<MatrixQ> gens{random_matrix(rng, 3, 3), random_matrix(rng, 3, 3)};
        std::vector<MatrixQ> conj;
        for (const auto& g : gens) conj.push_back(p * g * pinv);
        CHECK(algebra_closure_dimension(gens) == algebra_closure_dimension(conj));
    }
}

TEST_CASE("kronecker product is multiplicative") {
    std::mt19937 rng(3);
    const MatrixQ a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3);
    const MatrixQ c = random_matrix(rng, 2, 2), d = random_matrix(rng, 3, 3);
    CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
    CHECK(kronecker(MatrixQ::identity(2), MatrixQ::identity(3)) == MatrixQ::identity(6));
}

TEST_CASE("two-slot lift matches explicit kronecker products") {
    std::mt19937 rng(5);
    const MatrixQ a = random_matrix(rng, 2, 2);
    const MatrixQ b = random_matrix(rng, 3, 3);
    const std::vector<int> dims{2, 3, 2};
    const MatrixQ id2 = MatrixQ::identity(2), id3 = MatrixQ::identity(3);

    CHECK(lift_two_slots(kronecker(a, b), dims, 1, 2) == kronecker(kronecker(a, b), id2));
    CHECK(lift_two_slots(kronecker(b, a), dims, 2, 3) == kronecker(id2, kronecker(b, a)));
    CHECK(lift_two_slots(kronecker(a, a), dims, 1, 3) == kronecker(kronecker(a, id3), a));

    // a pure swap lifted to the outer slots
    const MatrixQ swap = kron_swap_matrix(2, 2);
    const MatrixQ lifted = lift_two_slots(swap, dims, 1, 3);
    // check on a factored vector e_i (x) e_j (x) e_k -> e_k (x) e_j (x) e_i
    std::vector<Rational> v(12);
    v[1 * 6 + 2 * 2 + 0] = Rational(1); // (i,j,k) = (1,2,0)
    std::vector<Rational> got(12);
    for (int r = 0; r < 12; ++r)
        for (int c = 0; c < 12; ++c)
            if (!lifted.at(r, c).is_zero()) got[r] += lifted.at(r, c) * v[c];
    std::vector<Rational> want(12);
    want[0 * 6 + 2 * 2 + 1] = Rational(1); // (0,2,1)
    CHECK(got == want);
}
