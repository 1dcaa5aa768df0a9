#pragma once

#include <string>
#include <vector>

#include "schurkit/partition.hpp"
#include "schurkit/tableaux.hpp"

namespace schurkit {

// Gelfand-Tsetlin pattern: triangular array m_{k,l} for 1 <= k <= l <= d,
// rows weakly decreasing, interleaving between consecutive rows
// (m_{k,l+1} >= m_{k,l} >= m_{k+1,l+1}). Stored top row (length d) first.
class GTPattern {
public:
    GTPattern() = default;
    // rows[0] has length d (the top row), rows[d-1] has length 1.
    explicit GTPattern(std::vector<std::vector<int>> rows);

    int depth() const { return (int)rows_.size(); }  // = d
    // m_{k,l}: entry k of the length-l row, both 1-based.
    int entry(int k, int l) const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // Weight: w_l = (row-l sum) - (row-(l-1) sum); equals the tableau content.
    std::vector<int> weight() const;

    bool operator==(const GTPattern& o) const { return rows_ == o.rows_; }
    std::string to_string() const;  // e.g. "[[3,3,1],[3,1],[2]]"

private:
    std::vector<std::vector<int>> rows_;
};

// Bijection with SSYT over alphabet 1..d: m_{k,l} = number of entries <= l in
// row k of the tableau.
GTPattern ssyt_to_gt(const SemistandardTableau& t, int d);
SemistandardTableau gt_to_ssyt(const GTPattern& p);

}  // namespace schurkit
