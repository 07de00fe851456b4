#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fusionkit/skew_shape.hpp"

using namespace fusionkit;

namespace {

SkewShape sh(const std::string& s) { return SkewShape::parse(s); }

// brute-force semistandard tableau count: assign 1..N to the boxes in column
// order and test the row/column constraints directly
long ssyt_brute(const SkewShape& shape, int N) {
    const auto boxes = shape.boxes_column_order();
    const int n = static_cast<int>(boxes.size());
    std::map<std::pair<int, int>, int> value;
    std::vector<int> fill(n, 1);
    long count = 0;
    for (;;) {
        value.clear();
        for (int i = 0; i < n; ++i) value[{boxes[i].row, boxes[i].col}] = fill[i];
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            const auto left = value.find({boxes[i].row, boxes[i].col - 1});
            if (left != value.end() && left->second > fill[i]) ok = false;
            const auto up = value.find({boxes[i].row - 1, boxes[i].col});
            if (up != value.end() && up->second >= fill[i]) ok = false;
        }
        if (ok) ++count;
        int k = n - 1;
        while (k >= 0 && fill[k] == N) fill[k--] = 1;
        if (k < 0) break;
        ++fill[k];
    }
    return count;
}

} // namespace

TEST_CASE("partition parsing and containment") {
    const Partition p = Partition::parse("9,9,7,3");
    CHECK(p.length() == 4);
    CHECK(p.part(1) == 9);
    CHECK(p.part(5) == 0);
    CHECK(p.sum() == 28);
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition(std::vector<int>{3, 2, 0, 0}) == Partition::parse("3,2"));
    CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,-1"), std::invalid_argument);
    CHECK(Partition::parse("5,3,1").contains(Partition::parse("3,3")));
    CHECK(!Partition::parse("5,3,1").contains(Partition::parse("4,4")));
    CHECK(Partition::parse("4,2,1").conjugate() == Partition::parse("3,2,1,1"));
    CHECK(Partition::parse("4,2,1").conjugate().conjugate() == Partition::parse("4,2,1"));
}

TEST_CASE("skew shape normal form and translation invariance") {
    const SkewShape w = sh("3,3,2/2,1");
    CHECK(w.box_count() == 5);
    CHECK(w.str() == "3,3,2/2,1");
    CHECK(sh("3,3,2") == SkewShape(Partition::parse("3,3,2"), Partition()));

    // from_boxes rebuilds the same diagram from any translate
    std::vector<Box> moved;
    for (const Box& b : w.boxes_column_order()) moved.push_back(Box{b.row + 2, b.col + 5});
    CHECK(SkewShape::from_boxes(moved) == w);

    // normal form strips common full rows and columns of mu
    CHECK(sh("5,4/4,2") == sh("5,4/4,2"));
    CHECK(SkewShape(Partition::parse("4,3"), Partition::parse("3")).str() == "4,3/3");

    CHECK(SkewShape().empty());
    CHECK(SkewShape::from_boxes({}).empty());
    CHECK_THROWS_AS(sh("2/3"), std::invalid_argument);
    CHECK_THROWS_AS(SkewShape::from_boxes({Box{1, 1}, Box{1, 1}}), std::invalid_argument);
    // a diagonal pair of boxes is not a skew diagram
    CHECK_THROWS_AS(SkewShape::from_boxes({Box{1, 1}, Box{2, 2}}), std::invalid_argument);
    // an antidiagonal pair is
    CHECK(SkewShape::from_boxes({Box{1, 2}, Box{2, 1}}) == sh("2,1/1"));
}

TEST_CASE("column order numbering and contents") {
    const SkewShape w = sh("5,3,3,3,3/3,3,2");
    const auto boxes = w.boxes_column_order();
    REQUIRE(boxes.size() == 9);
    CHECK(boxes[0] == Box{4, 1});
    CHECK(boxes[1] == Box{5, 1});
    CHECK(boxes[4] == Box{3, 3});
    CHECK(boxes[7] == Box{1, 4});
    CHECK(contents_column_order(w) == std::vector<int>{-3, -4, -2, -3, 0, -1, -2, 3, 4});
    CHECK(w.column_lengths() == std::vector<int>{2, 2, 3, 1, 1});
}

TEST_CASE("durfee rank of a large disconnected diagram") {
    // two marked clusters, one empty row in between
    const SkewShape w = sh("9,9,9,7,7,3,3,3,3/5,5,3,3,3,3,2");
    CHECK(w.box_count() == 29);
    const DurfeeReport rep = durfee_rank_definition(w);
    CHECK(rep.d_plus == 9);
    CHECK(rep.d_minus == 3);
    CHECK(rep.rank == 6);
    CHECK(durfee_rank_formula(w) == 6);
    CHECK(nonempty_rows(w) == 8);
}

TEST_CASE("durfee rank: definition equals row formula on all small shapes") {
    for (const SkewShape& w : enumerate_skew_shapes(6, 5, 5)) {
        const DurfeeReport rep = durfee_rank_definition(w);
        CHECK(rep.rank == durfee_rank_formula(w));
        CHECK(rep.rank > 0); // nonempty diagrams have positive rank
        CHECK(rep.rank <= nonempty_rows(w));
    }
}

TEST_CASE("conjugation and rotation") {
    const SkewShape w = sh("4,3,1/2");
    CHECK(conjugate(conjugate(w)) == w);
    CHECK(rotate180(rotate180(w)) == w);
    CHECK(conjugate(w).box_count() == w.box_count());
    CHECK(rotate180(w).box_count() == w.box_count());
    CHECK(conjugate(sh("3,3")) == sh("2,2,2"));
    CHECK(rotate180(sh("3,1")) == sh("3,3/2"));

    // conjugation negates the content multiset
    for (const SkewShape& v : enumerate_skew_shapes(5, 4, 4)) {
        auto a = contents_column_order(v);
        auto b = contents_column_order(conjugate(v));
        for (int& x : b) x = -x;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("column order prefixes and suffixes are skew diagrams") {
    for (const SkewShape& w : enumerate_skew_shapes(5, 4, 4)) {
        const auto boxes = w.boxes_column_order();
        const int n = w.box_count();
        for (int m = 0; m <= n; ++m) {
            const std::vector<Box> head(boxes.begin(), boxes.begin() + m);
            const std::vector<Box> tail(boxes.begin() + m, boxes.end());
            CHECK(column_order_prefix_shape(w, m) == SkewShape::from_boxes(head));
            CHECK(column_order_suffix_shape(w, m) == SkewShape::from_boxes(tail));
        }
        CHECK(column_order_prefix_shape(w, n) == w);
        CHECK(column_order_suffix_shape(w, 0) == w);
    }
}

TEST_CASE("skew shape enumeration against direct search") {
    const auto two = enumerate_skew_shapes(2, 2, 2);
    CHECK(two.size() == 4);
    CHECK(std::count(two.begin(), two.end(), sh("1")) == 1);
    CHECK(std::count(two.begin(), two.end(), sh("2")) == 1);
    CHECK(std::count(two.begin(), two.end(), sh("1,1")) == 1);
    CHECK(std::count(two.begin(), two.end(), sh("2,1/1")) == 1);

    // oracle: try every subset of the 3x3 grid with at most 3 cells
    std::set<SkewShape> expected;
    std::vector<Box> cells;
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c) cells.push_back(Box{r, c});
    for (int mask = 1; mask < (1 << 9); ++mask) {
        if (__builtin_popcount(mask) > 3) continue;
        std::vector<Box> subset;
        for (int i = 0; i < 9; ++i)
            if (mask & (1 << i)) subset.push_back(cells[i]);
        try {
            expected.insert(SkewShape::from_boxes(subset));
        } catch (const std::invalid_argument&) {
        }
    }
    const auto got = enumerate_skew_shapes(3, 3, 3);
    CHECK(got.size() == expected.size());
    CHECK(std::set<SkewShape>(got.begin(), got.end()) == expected);
    CHECK(std::is_sorted(got.begin(), got.end()));
}

TEST_CASE("semistandard tableau counts") {
    CHECK(ssyt_count(sh("1"), 2) == 2);
    CHECK(ssyt_count(sh("1"), 5) == 5);
    CHECK(ssyt_count(sh("2"), 2) == 3);
    CHECK(ssyt_count(sh("1,1"), 2) == 1);
    CHECK(ssyt_count(sh("1,1,1"), 2) == 0);
    CHECK(ssyt_count(sh("2,2"), 2) == 1);
    CHECK(ssyt_count(sh("2,1"), 3) == 8);
    CHECK(ssyt_count(sh("2,2/1"), 2) == 2);
    CHECK(ssyt_count(SkewShape(), 3) == 1);

    for (const SkewShape& w : enumerate_skew_shapes(5, 4, 4))
        for (int N = 1; N <= 3; ++N) CHECK(ssyt_count(w, N) == ssyt_brute(w, N));
}
