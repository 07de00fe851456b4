#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "fusionkit/rational.hpp"
#include "fusionkit/rational_function.hpp"

namespace fusionkit {

// Dense row-major matrix over an exact field (Rational or RationalFunction).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
    }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const std::vector<T>& data() const { return a_; }

    std::vector<T> column(int c) const {
        std::vector<T> v(rows_);
        for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }
    void set_column(int c, const std::vector<T>& v) {
        for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
    }

    bool is_zero() const {
        for (const T& x : a_)
            if (!(x == T(0))) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const T& bkj = b.at(k, j);
                    if (!(bkj == T(0))) m.at(i, j) += aik * bkj;
                }
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.require_same_shape(b);
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.require_same_shape(b);
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply size mismatch");
        std::vector<T> out(rows_);
        for (int r = 0; r < rows_; ++r) {
            T acc(0);
            for (int c = 0; c < cols_; ++c)
                if (!(v[c] == T(0))) acc += at(r, c) * v[c];
            out[r] = acc;
        }
        return out;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }
};

using MatrixQ = Matrix<Rational>;
using MatrixRF = Matrix<RationalFunction>;

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == T(0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

// Incrementally maintained reduced row echelon basis of a growing set of
// vectors.  Insertion order is the only source of pivot choice, so results
// are deterministic.
template <class T>
class Echelon {
public:
    explicit Echelon(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }

    // reduce v against the basis in place; returns the pivot position if a
    // nonzero remainder was added to the basis, -1 if v was in the span
    int insert(std::vector<T> v) {
        reduce(v);
        int p = first_nonzero(v);
        if (p < 0) return -1;
        T inv = T(1) / v[p];
        for (T& x : v) x = inv * x;
        // keep earlier basis vectors reduced against the new pivot; copy the
        // coefficient since axpy overwrites the entry it was read from
        for (size_t b = 0; b < basis_.size(); ++b) {
            const T c = basis_[b][p];
            if (!(c == T(0))) axpy(basis_[b], v, c);
        }
        basis_.push_back(std::move(v));
        pivots_.push_back(p);
        return p;
    }

    bool contains(std::vector<T> v) const {
        reduce(v);
        return first_nonzero(v) < 0;
    }

private:
    int dim_;
    std::vector<std::vector<T>> basis_; // each scaled to unit pivot
    std::vector<int> pivots_;

    void reduce(std::vector<T>& v) const {
        for (size_t b = 0; b < basis_.size(); ++b) {
            const T c = v[pivots_[b]];
            if (!(c == T(0))) axpy(v, basis_[b], c);
        }
    }
    static void axpy(std::vector<T>& v, const std::vector<T>& w, const T& c) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!(w[i] == T(0))) v[i] -= c * w[i];
    }
    static int first_nonzero(const std::vector<T>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!(v[i] == T(0))) return static_cast<int>(i);
        return -1;
    }
};

// Coordinates with respect to a fixed independent family of rational columns,
// as opposed to Echelon, whose basis is the reduced one.  Columns enter one at
// a time and dependent ones are rejected, so after feeding a whole matrix the
// accepted set is exactly its pivot columns.  Rows store, sparsely, the
// reduced vectors together with their expression over the accepted columns;
// queries are forward elimination and may carry entries in any field with a
// Rational embedding (rational functions, polynomials), while the columns
// themselves stay rational.
class SpanSolver {
public:
    explicit SpanSolver(int ambient) : ambient_(ambient) {
        if (ambient < 0) throw std::invalid_argument("negative ambient dimension");
    }

    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // false: the column is in the current span and was not added
    bool add_column(const std::vector<Rational>& col);

    template <class T>
    std::optional<std::vector<T>> coordinates(std::vector<T> v) const {
        if (static_cast<int>(v.size()) != ambient_)
            throw std::invalid_argument("solver dimension mismatch");
        std::vector<T> x(rows_.size(), T(0));
        for (size_t r = 0; r < rows_.size(); ++r) {
            const T f = v[rows_[r].pivot];
            if (f == T(0)) continue;
            for (const auto& [i, a] : rows_[r].vec) v[i] -= f * T(a);
            for (const auto& [i, a] : rows_[r].coords) x[i] += f * T(a);
        }
        for (const T& e : v)
            if (!(e == T(0))) return std::nullopt;
        return x;
    }

private:
    struct Row {
        int pivot = 0;
        std::vector<std::pair<int, Rational>> vec;    // normalized reduced column
        std::vector<std::pair<int, Rational>> coords; // its expansion over accepted columns
    };
    int ambient_;
    std::vector<Row> rows_;
};

template <class T>
struct RrefResult {
    Matrix<T> rref;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Gauss-Jordan with first-nonzero pivoting (deterministic over exact fields).
template <class T>
RrefResult<T> rref_rank(Matrix<T> m) {
    RrefResult<T> res;
    int lead = 0;
    for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
        int piv = -1;
        for (int r = lead; r < m.rows(); ++r)
            if (!(m.at(r, c) == T(0))) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(lead, j));
        T inv = T(1) / m.at(lead, c);
        for (int j = 0; j < m.cols(); ++j) m.at(lead, j) = inv * m.at(lead, j);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            T f = m.at(r, c);
            if (f == T(0)) continue;
            for (int j = 0; j < m.cols(); ++j) m.at(r, j) -= f * m.at(lead, j);
        }
        res.pivot_cols.push_back(c);
        ++lead;
    }
    res.rank = static_cast<int>(res.pivot_cols.size());
    res.rref = std::move(m);
    return res;
}

template <class T>
struct ImageBasis {
    Matrix<T> basis; // the pivot columns of the input, unreduced
    std::vector<int> pivot_cols;
};

// Basis of the column space: the original columns at the rref pivot positions.
template <class T>
ImageBasis<T> image_basis(const Matrix<T>& m) {
    Echelon<T> ech(m.rows());
    std::vector<int> pivots;
    for (int c = 0; c < m.cols(); ++c)
        if (ech.insert(m.column(c)) >= 0) pivots.push_back(c);
    Matrix<T> basis(m.rows(), static_cast<int>(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int r = 0; r < m.rows(); ++r) basis.at(r, static_cast<int>(k)) = m.at(r, pivots[k]);
    return ImageBasis<T>{std::move(basis), std::move(pivots)};
}

template <class T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    T det(1);
    const int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!(m.at(r, c) == T(0))) { piv = r; break; }
        if (piv < 0) return T(0);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = T(0) - det;
        }
        det = det * m.at(c, c);
        T inv = T(1) / m.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            T f = inv * m.at(r, c);
            if (f == T(0)) continue;
            for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return det;
}

// Solve basis * x = v for a full-column-rank basis; nullopt when v is outside
// the column span.
template <class T>
std::optional<std::vector<T>> coordinates_in_basis(const Matrix<T>& basis, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != basis.rows())
        throw std::invalid_argument("vector length does not match basis");
    Matrix<T> aug(basis.rows(), basis.cols() + 1);
    for (int r = 0; r < basis.rows(); ++r) {
        for (int c = 0; c < basis.cols(); ++c) aug.at(r, c) = basis.at(r, c);
        aug.at(r, basis.cols()) = v[r];
    }
    auto res = rref_rank(std::move(aug));
    std::vector<T> x(basis.cols(), T(0));
    for (int k = 0; k < res.rank; ++k) {
        int pc = res.pivot_cols[k];
        if (pc == basis.cols()) return std::nullopt; // inconsistent row
        x[pc] = res.rref.at(k, basis.cols());
    }
    // full column rank expected; a free basis column would mean the caller
    // passed a dependent set
    if (res.rank < basis.cols()) throw std::invalid_argument("basis columns are dependent");
    return x;
}

struct MatrixLaurentLeading {
    bool is_zero = true;
    int order = 0;
    MatrixQ coefficient;
};

// Entrywise Laurent data at the point a; the order is the minimum over
// entries and the coefficient matrix picks out exactly the entries attaining it.
MatrixLaurentLeading matrix_laurent_leading(const MatrixRF& m, const Rational& a);

// Dimension of the unital matrix algebra generated by gens (all d x d).
int algebra_closure_dimension(const std::vector<MatrixQ>& gens);

} // namespace fusionkit
