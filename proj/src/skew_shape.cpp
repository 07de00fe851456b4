#include "fusionkit/skew_shape.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fusionkit {

SkewShape::SkewShape(Partition lambda, Partition mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    if (!lambda_.contains(mu_))
        throw std::invalid_argument("mu does not fit inside lambda");
    normalize();
}

void SkewShape::normalize() {
    // trim leading empty rows, shift left so the first occupied column is 1
    int first_row = 0, last_row = 0;
    int col_shift = -1;
    for (int i = 1; i <= lambda_.length(); ++i) {
        if (lambda_.part(i) > mu_.part(i)) {
            if (!first_row) first_row = i;
            last_row = i;
            col_shift = col_shift < 0 ? mu_.part(i) : std::min(col_shift, mu_.part(i));
        }
    }
    if (!first_row) {
        lambda_ = Partition();
        mu_ = Partition();
        return;
    }
    std::vector<int> nl, nm;
    for (int i = first_row; i <= last_row; ++i) {
        nl.push_back(lambda_.part(i) - col_shift);
        nm.push_back(mu_.part(i) - col_shift);
    }
    // an interior empty row leaves lambda_i = mu_i underdetermined; pin it to
    // the lambda of the row below so equal box sets get equal encodings
    for (int i = static_cast<int>(nl.size()) - 2; i >= 0; --i)
        if (nl[i] == nm[i]) nl[i] = nm[i] = nl[i + 1];
    lambda_ = Partition(std::move(nl));
    mu_ = Partition(std::move(nm));
}

SkewShape SkewShape::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return SkewShape(Partition::parse(s), Partition());
    return SkewShape(Partition::parse(s.substr(0, slash)),
                     Partition::parse(s.substr(slash + 1)));
}

SkewShape SkewShape::from_boxes(const std::vector<Box>& boxes) {
    if (boxes.empty()) return SkewShape();
    std::map<int, std::set<int>> rows; // row -> columns
    for (const Box& b : boxes) {
        if (b.row < 1 || b.col < 1)
            throw std::invalid_argument("box coordinates must be positive");
        if (!rows[b.row].insert(b.col).second)
            throw std::invalid_argument("duplicate box");
    }
    const int max_row = rows.rbegin()->first;
    // per-row intervals; interpolate empty rows bottom-up
    std::vector<int> lam(max_row), mu(max_row);
    int fill = 0;
    for (int i = max_row; i >= 1; --i) {
        auto it = rows.find(i);
        if (it == rows.end()) {
            lam[i - 1] = mu[i - 1] = fill;
            continue;
        }
        const auto& cols = it->second;
        int lo = *cols.begin(), hi = *cols.rbegin();
        if (static_cast<int>(cols.size()) != hi - lo + 1)
            throw std::invalid_argument("row of boxes is not contiguous");
        lam[i - 1] = hi;
        mu[i - 1] = lo - 1;
        fill = hi;
    }
    SkewShape shape((Partition(lam)), Partition(mu)); // ctor validates monotonicity
    if (shape.box_count() != static_cast<int>(boxes.size()))
        throw std::invalid_argument("box set is not a skew diagram");
    return shape;
}

bool SkewShape::contains(int row, int col) const {
    if (row < 1 || row > lambda_.length()) return false;
    return col > mu_.part(row) && col <= lambda_.part(row);
}

std::vector<Box> SkewShape::boxes_column_order() const {
    std::vector<Box> out;
    out.reserve(box_count());
    for (int col = 1; col <= col_extent(); ++col)
        for (int row = 1; row <= row_extent(); ++row)
            if (contains(row, col)) out.push_back(Box{row, col});
    return out;
}

std::vector<int> SkewShape::column_lengths() const {
    std::vector<int> out;
    for (int col = 1; col <= col_extent(); ++col) {
        int len = 0;
        for (int row = 1; row <= row_extent(); ++row)
            if (contains(row, col)) ++len;
        if (len > 0) out.push_back(len);
    }
    return out;
}

std::string SkewShape::str() const {
    if (mu_.empty()) return lambda_.str();
    return lambda_.str() + "/" + mu_.str();
}

std::vector<int> contents_column_order(const SkewShape& shape) {
    std::vector<int> out;
    out.reserve(shape.box_count());
    for (const Box& b : shape.boxes_column_order()) out.push_back(b.col - b.row);
    return out;
}

DurfeeReport durfee_rank_definition(const SkewShape& shape) {
    DurfeeReport rep;
    if (shape.empty()) return rep;
    std::map<int, int> diag_boxes; // content -> box count
    std::set<int> convex, concave;
    for (const Box& b : shape.boxes_column_order()) {
        const int c = b.col - b.row;
        ++diag_boxes[c];
        const bool up = shape.contains(b.row - 1, b.col);
        const bool left = shape.contains(b.row, b.col - 1);
        if (!up && !left) convex.insert(c);
        if (up && left && !shape.contains(b.row - 1, b.col - 1)) concave.insert(c);
    }
    for (int c : convex) rep.d_plus += diag_boxes[c];
    for (int c : concave) rep.d_minus += diag_boxes[c];
    rep.rank = rep.d_plus - rep.d_minus;
    return rep;
}

int durfee_rank_formula(const SkewShape& shape) {
    const Partition& lam = shape.lambda();
    const Partition& mu = shape.mu();
    int pairs = 0;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = i + 1; j <= lam.length(); ++j)
            if (lam.part(j) - j == mu.part(i) - i) ++pairs;
    return nonempty_rows(shape) - pairs;
}

int nonempty_rows(const SkewShape& shape) {
    int count = 0;
    for (int i = 1; i <= shape.lambda().length(); ++i)
        if (shape.lambda().part(i) > shape.mu().part(i)) ++count;
    return count;
}

SkewShape conjugate(const SkewShape& shape) {
    return SkewShape(shape.lambda().conjugate(), shape.mu().conjugate());
}

SkewShape rotate180(const SkewShape& shape) {
    if (shape.empty()) return shape;
    const int R = shape.row_extent(), C = shape.col_extent();
    std::vector<Box> flipped;
    for (const Box& b : shape.boxes_column_order())
        flipped.push_back(Box{R + 1 - b.row, C + 1 - b.col});
    return SkewShape::from_boxes(flipped);
}

SkewShape column_order_prefix_shape(const SkewShape& shape, int m) {
    const auto boxes = shape.boxes_column_order();
    if (m < 0 || m > static_cast<int>(boxes.size()))
        throw std::invalid_argument("prefix length out of range");
    return SkewShape::from_boxes({boxes.begin(), boxes.begin() + m});
}

SkewShape column_order_suffix_shape(const SkewShape& shape, int l) {
    const auto boxes = shape.boxes_column_order();
    if (l < 0 || l > static_cast<int>(boxes.size()))
        throw std::invalid_argument("suffix start out of range");
    return SkewShape::from_boxes({boxes.begin() + l, boxes.end()});
}

namespace {

// Shapes are generated column by column through their conjugate data: column j
// spans rows (m_j, l_j] with both sequences weakly decreasing.  Normal form
// pins l_1 > m_1, a box in row 1 somewhere, and no trailing empty columns.
// Disconnected shapes can still arrive through several interior-empty-column
// encodings, so the caller dedupes after sorting.
void enumerate_columns(int col, int prev_l, int prev_m, int boxes_left, bool row1_hit,
                       int max_cols, std::vector<std::pair<int, int>>& cols,
                       std::vector<SkewShape>& out) {
    if (row1_hit && !cols.empty() && cols.back().first > cols.back().second) {
        // convert (l_j, m_j) back to (lambda, mu) via conjugation
        std::vector<int> lstar, mstar;
        for (auto [l, m] : cols) {
            lstar.push_back(l);
            mstar.push_back(m);
        }
        out.push_back(conjugate(SkewShape(Partition(lstar), Partition(mstar))));
    }
    if (col > max_cols || boxes_left == 0) return;
    for (int l = prev_l; l >= 1; --l) {
        for (int m = std::min(l, prev_m); m >= 0; --m) {
            const int sz = l - m;
            if (sz > boxes_left) continue;
            if (col == 1 && sz == 0) continue; // first column must be occupied
            cols.emplace_back(l, m);
            enumerate_columns(col + 1, l, m, boxes_left - sz, row1_hit || (sz > 0 && m == 0),
                              max_cols, cols, out);
            cols.pop_back();
        }
    }
}

} // namespace

std::vector<SkewShape> enumerate_skew_shapes(int max_boxes, int max_rows, int max_cols) {
    if (max_boxes < 1 || max_rows < 1 || max_cols < 1)
        throw std::invalid_argument("enumeration bounds must be >= 1");
    std::vector<SkewShape> out;
    std::vector<std::pair<int, int>> cols;
    enumerate_columns(1, max_rows, max_rows, max_boxes, false, max_cols, cols, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

long ssyt_count_rec(const SkewShape& shape, const std::vector<Box>& boxes, size_t k,
                    std::map<std::pair<int, int>, int>& fill, int N) {
    if (k == boxes.size()) return 1;
    const Box& b = boxes[k];
    int lo = 1, hi = N;
    // row-major order fills the left neighbor and the box above before box k
    auto above = fill.find({b.row - 1, b.col});
    if (above != fill.end()) lo = std::max(lo, above->second + 1);
    auto left = fill.find({b.row, b.col - 1});
    if (left != fill.end()) lo = std::max(lo, left->second);
    long total = 0;
    for (int v = lo; v <= hi; ++v) {
        fill[{b.row, b.col}] = v;
        total += ssyt_count_rec(shape, boxes, k + 1, fill, N);
    }
    fill.erase({b.row, b.col});
    return total;
}

} // namespace

long ssyt_count(const SkewShape& shape, int N) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (shape.empty()) return 1;
    // row-major order so the left and upper neighbors are already filled
    std::vector<Box> boxes;
    for (int row = 1; row <= shape.row_extent(); ++row)
        for (int col = 1; col <= shape.col_extent(); ++col)
            if (shape.contains(row, col)) boxes.push_back(Box{row, col});
    std::map<std::pair<int, int>, int> fill;
    return ssyt_count_rec(shape, boxes, 0, fill, N);
}

} // namespace fusionkit
