#pragma once

#include <string>
#include <vector>

#include "fusionkit/partition.hpp"

namespace fusionkit {

struct Box {
    int row = 0; // 1-based
    int col = 0;
    friend bool operator==(const Box& a, const Box& b) { return a.row == b.row && a.col == b.col; }
};

// Skew diagram lambda/mu, kept in translation normal form: if nonempty, the
// first row and the first column each contain a box.  Two diagrams that differ
// by translation therefore compare equal.
class SkewShape {
public:
    SkewShape() = default;                     // empty diagram
    SkewShape(Partition lambda, Partition mu); // requires mu inside lambda
    // "9,9,7/5,5" or just "9,9,7" when mu is empty
    static SkewShape parse(const std::string& s);
    // rebuilds (lambda, mu) from an arbitrary box set; throws if the set is
    // not a skew diagram
    static SkewShape from_boxes(const std::vector<Box>& boxes);

    const Partition& lambda() const { return lambda_; }
    const Partition& mu() const { return mu_; }

    int box_count() const { return static_cast<int>(lambda_.sum() - mu_.sum()); }
    bool empty() const { return box_count() == 0; }
    bool contains(int row, int col) const;

    int row_extent() const { return lambda_.length(); } // bounding box height
    int col_extent() const { return lambda_.part(1); }  // bounding box width

    // columns left to right, top to bottom inside a column; this is the order
    // the boxes are numbered everywhere in the library
    std::vector<Box> boxes_column_order() const;
    std::vector<int> column_lengths() const; // per nonempty column, same order

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.lambda_ == b.lambda_ && a.mu_ == b.mu_;
    }
    friend bool operator!=(const SkewShape& a, const SkewShape& b) { return !(a == b); }
    friend bool operator<(const SkewShape& a, const SkewShape& b) {
        if (a.lambda_ != b.lambda_) return a.lambda_ < b.lambda_;
        return a.mu_ < b.mu_;
    }

    std::string str() const;

private:
    Partition lambda_, mu_;
    void normalize();
};

// contents c = col - row in column order
std::vector<int> contents_column_order(const SkewShape& shape);

struct DurfeeReport {
    int rank = 0;      // d_plus - d_minus
    int d_plus = 0;    // boxes on diagonals through a left-convex box
    int d_minus = 0;   // boxes on diagonals through a left-concave box
};

// rank straight from the convex/concave diagonal definition
DurfeeReport durfee_rank_definition(const SkewShape& shape);
// rank via the row-count formula: nonempty rows minus the number of pairs
// i < j with lambda_j - j == mu_i - i
int durfee_rank_formula(const SkewShape& shape);

int nonempty_rows(const SkewShape& shape);
SkewShape conjugate(const SkewShape& shape);
SkewShape rotate180(const SkewShape& shape);

// The first m boxes in column order form a skew diagram again; so do the
// boxes left after dropping the first l.  Both come back in normal form.
SkewShape column_order_prefix_shape(const SkewShape& shape, int m);
SkewShape column_order_suffix_shape(const SkewShape& shape, int l);

// all distinct (up to translation) nonempty skew diagrams with at most
// max_boxes boxes fitting in a max_rows x max_cols bounding box, sorted
std::vector<SkewShape> enumerate_skew_shapes(int max_boxes, int max_rows, int max_cols);

// number of semistandard tableaux with entries in 1..N (rows weakly increase,
// columns strictly increase); empty shape counts 1
long ssyt_count(const SkewShape& shape, int N);

} // namespace fusionkit
