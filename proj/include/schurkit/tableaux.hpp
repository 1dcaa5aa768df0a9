#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schurkit/partition.hpp"

namespace schurkit {

// Standard Young tableau: rows strictly increase left to right, columns
// strictly increase top to bottom, entries are exactly 1..n.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    Partition shape() const;
    int size() const;  // number of boxes
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int r, int c) const { return rows_[r][c]; }  // 0-based box
    // 1-based (row, column) of the box holding value k.
    std::pair<int, int> position_of(int k) const;

    bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }
    std::string to_string() const;  // e.g. "[[1,3],[2]]"

private:
    std::vector<std::vector<int>> rows_;
};

// Semistandard Young tableau: rows weakly increase, columns strictly
// increase, entries positive.
class SemistandardTableau {
public:
    SemistandardTableau() = default;
    explicit SemistandardTableau(std::vector<std::vector<int>> rows);

    Partition shape() const;
    int size() const;
    int max_entry() const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int r, int c) const { return rows_[r][c]; }
    // Multiplicity vector of entries 1..d.
    Composition content(int d) const;

    bool operator==(const SemistandardTableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const SemistandardTableau& o) const { return rows_ != o.rows_; }
    std::string to_string() const;

private:
    std::vector<std::vector<int>> rows_;
};

// Skew shape outer/inner with inner contained in outer.
struct SkewStrip {
    Partition outer;
    Partition inner;
};

// No two boxes of outer/inner share a column.
bool is_horizontal_strip(const SkewStrip& s);

// All standard tableaux of the shape in last-letter order: tableaux are
// grouped by the box holding n, groups ordered by ascending row of that box,
// recursively within each group. This makes the restriction to n-1
// block-contiguous, which the Fourier recursion relies on.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

// All semistandard tableaux of the shape with the given content
// (content.count(v) copies of v). Order: lexicographic in the row-reading
// word (top row first, left to right).
std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape,
                                                const Composition& content);

// All semistandard tableaux with entries <= d, any content; same reading-word
// order. This indexes the GL(d) irrep basis.
std::vector<SemistandardTableau> enumerate_ssyt_bounded(const Partition& shape, int d);

// Kostka number: count of SSYT of the shape and content.
long long kostka(const Partition& shape, const Composition& content);

// The sub-shape of boxes holding values <= value, and the skew strip of boxes
// holding exactly `value` (always a horizontal strip for an SSYT).
Partition subshape_le(const SemistandardTableau& t, int value);
SkewStrip horizontal_strip_positions(const SemistandardTableau& t, int value);

// Shapes mu obtained from `shape` by removing a horizontal strip (at most one
// box per column, any number >= 0 of boxes). Descending lex order.
std::vector<Partition> strip_removals(const Partition& shape);

// The standard tableau obtained by filling, for each occurring value v in
// ascending order, the boxes of v's strip in ascending column order with the
// letters of v's block of 1..n (blocks are the consecutive intervals of sizes
// type.count(v)). The canonical standardization used to seed highest-weight
// vectors.
StandardTableau canonical_standardization(const SemistandardTableau& t,
                                          const Composition& type);

}  // namespace schurkit
