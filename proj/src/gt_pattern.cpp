#include "schurkit/gt_pattern.hpp"

#include <numeric>
#include <stdexcept>

namespace schurkit {

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    const int d = (int)rows_.size();
    for (int i = 0; i < d; ++i)
        if ((int)rows_[i].size() != d - i)
            throw std::invalid_argument("GTPattern: row lengths must be d, d-1, ..., 1");
    for (int l = 1; l <= d; ++l)
        for (int k = 1; k <= l; ++k) {
            if (entry(k, l) < 0) throw std::invalid_argument("GTPattern: negative entry");
            if (k < l && entry(k, l) < entry(k + 1, l))
                throw std::invalid_argument("GTPattern: row not weakly decreasing");
            if (l < d) {
                if (entry(k, l + 1) < entry(k, l) || entry(k, l) < entry(k + 1, l + 1))
                    throw std::invalid_argument("GTPattern: interleaving violated");
            }
        }
}

int GTPattern::entry(int k, int l) const {
    const int d = depth();
    if (l < 1 || l > d || k < 1 || k > l) throw std::out_of_range("GTPattern::entry");
    return rows_[d - l][k - 1];
}

std::vector<int> GTPattern::weight() const {
    const int d = depth();
    std::vector<int> w(d, 0);
    int prev = 0;
    for (int l = 1; l <= d; ++l) {
        int s = 0;
        for (int k = 1; k <= l; ++k) s += entry(k, l);
        w[l - 1] = s - prev;
        prev = s;
    }
    return w;
}

std::string GTPattern::to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += ',';
        s += '[';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) s += ',';
            s += std::to_string(rows_[r][c]);
        }
        s += ']';
    }
    s += ']';
    return s;
}

GTPattern ssyt_to_gt(const SemistandardTableau& t, int d) {
    if (t.max_entry() > d) throw std::invalid_argument("ssyt_to_gt: entry exceeds alphabet");
    std::vector<std::vector<int>> rows(d);
    for (int l = d; l >= 1; --l) {
        const Partition sub = subshape_le(t, l);
        std::vector<int> row(l, 0);
        for (int k = 1; k <= l; ++k) row[k - 1] = sub.part(k - 1);
        if (sub.num_parts() > l) throw std::invalid_argument("ssyt_to_gt: too many rows");
        rows[d - l] = std::move(row);
    }
    return GTPattern(std::move(rows));
}

SemistandardTableau gt_to_ssyt(const GTPattern& p) {
    const int d = p.depth();
    // Row k of the tableau gains boxes of value l on columns
    // (m_{k,l-1}, m_{k,l}].
    std::vector<std::vector<int>> grid;
    for (int k = 1; k <= d; ++k) {
        const int len = p.entry(k, d);
        if (len == 0) continue;
        std::vector<int> row(len, 0);
        int prev = 0;
        for (int l = k; l <= d; ++l) {
            const int cur = p.entry(k, l);
            for (int c = prev; c < cur; ++c) row[c] = l;
            prev = cur;
        }
        grid.push_back(std::move(row));
    }
    return SemistandardTableau(std::move(grid));
}

}  // namespace schurkit
