#include "fusionkit/matrix.hpp"

#include <deque>

namespace fusionkit {

MatrixLaurentLeading matrix_laurent_leading(const MatrixRF& m, const Rational& a) {
    MatrixLaurentLeading out;
    std::vector<LaurentLeading> entries(static_cast<size_t>(m.rows()) * m.cols());
    bool any = false;
    int best = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            LaurentLeading l = laurent_leading_at(m.at(r, c), a);
            if (!l.is_zero && (!any || l.order < best)) {
                any = true;
                best = l.order;
            }
            entries[static_cast<size_t>(r) * m.cols() + c] = std::move(l);
        }
    if (!any) return out;
    out.is_zero = false;
    out.order = best;
    out.coefficient = MatrixQ(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const LaurentLeading& l = entries[static_cast<size_t>(r) * m.cols() + c];
            if (!l.is_zero && l.order == best) out.coefficient.at(r, c) = l.coefficient;
        }
    return out;
}

bool SpanSolver::add_column(const std::vector<Rational>& col) {
    if (static_cast<int>(col.size()) != ambient_)
        throw std::invalid_argument("solver dimension mismatch");
    std::vector<Rational> w = col;
    std::vector<Rational> c(rows_.size() + 1);
    c[rows_.size()] = Rational(1);
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = w[rows_[r].pivot];
        if (f.is_zero()) continue;
        for (const auto& [i, a] : rows_[r].vec) w[i] -= f * a;
        for (const auto& [i, a] : rows_[r].coords) c[i] -= f * a;
    }
    int pivot = -1;
    for (int i = 0; i < ambient_; ++i)
        if (!w[i].is_zero()) { pivot = i; break; }
    if (pivot < 0) return false;

    const Rational inv = Rational(1) / w[pivot];
    Row row;
    row.pivot = pivot;
    for (int i = 0; i < ambient_; ++i)
        if (!w[i].is_zero()) row.vec.emplace_back(i, inv * w[i]);
    for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) row.coords.emplace_back(static_cast<int>(i), inv * c[i]);
    rows_.push_back(std::move(row));
    return true;
}

int algebra_closure_dimension(const std::vector<MatrixQ>& gens) {
    if (gens.empty()) throw std::invalid_argument("algebra closure needs at least one generator");
    const int d = gens[0].rows();
    for (const auto& g : gens)
        if (g.rows() != d || g.cols() != d)
            throw std::invalid_argument("algebra closure generators must be square of equal size");

    Echelon<Rational> ech(d * d);
    std::deque<MatrixQ> work;
    auto offer = [&](const MatrixQ& m) {
        if (ech.insert(m.data()) >= 0) work.push_back(m);
    };
    offer(MatrixQ::identity(d));
    for (const auto& g : gens) offer(g);
    while (!work.empty()) {
        MatrixQ m = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            offer(m * g);
            offer(g * m);
        }
    }
    return ech.rank();
}

} // namespace fusionkit
