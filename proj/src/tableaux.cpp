#include "schurkit/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurkit {

namespace {

std::string rows_to_string(const std::vector<std::vector<int>>& rows) {
    std::string s = "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += ',';
        s += '[';
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) s += ',';
            s += std::to_string(rows[r][c]);
        }
        s += ']';
    }
    s += ']';
    return s;
}

Partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back((int)r.size());
    return Partition(std::move(parts));
}

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    shape_of_rows(rows_);  // validates weakly decreasing row lengths
    int n = 0;
    for (const auto& r : rows_) n += (int)r.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            const int v = rows_[r][c];
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("StandardTableau: entries must be a bijection to 1..n");
            seen[v] = true;
            if (c > 0 && rows_[r][c - 1] >= v)
                throw std::invalid_argument("StandardTableau: row not strictly increasing");
            if (r > 0 && rows_[r - 1][c] >= v)
                throw std::invalid_argument("StandardTableau: column not strictly increasing");
        }
}

Partition StandardTableau::shape() const { return shape_of_rows(rows_); }

int StandardTableau::size() const {
    int n = 0;
    for (const auto& r : rows_) n += (int)r.size();
    return n;
}

std::pair<int, int> StandardTableau::position_of(int k) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r][c] == k) return {(int)r + 1, (int)c + 1};
    throw std::invalid_argument("position_of: value not present");
}

std::string StandardTableau::to_string() const { return rows_to_string(rows_); }

SemistandardTableau::SemistandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
    shape_of_rows(rows_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            const int v = rows_[r][c];
            if (v < 1) throw std::invalid_argument("SemistandardTableau: nonpositive entry");
            if (c > 0 && rows_[r][c - 1] > v)
                throw std::invalid_argument("SemistandardTableau: row not weakly increasing");
            if (r > 0 && rows_[r - 1][c] >= v)
                throw std::invalid_argument("SemistandardTableau: column not strictly increasing");
        }
}

Partition SemistandardTableau::shape() const { return shape_of_rows(rows_); }

int SemistandardTableau::size() const {
    int n = 0;
    for (const auto& r : rows_) n += (int)r.size();
    return n;
}

int SemistandardTableau::max_entry() const {
    int m = 0;
    for (const auto& r : rows_)
        for (int v : r) m = std::max(m, v);
    return m;
}

Composition SemistandardTableau::content(int d) const {
    if (max_entry() > d) throw std::invalid_argument("content: entry exceeds alphabet");
    std::vector<int> counts(d, 0);
    for (const auto& r : rows_)
        for (int v : r) ++counts[v - 1];
    return Composition(std::move(counts));
}

std::string SemistandardTableau::to_string() const { return rows_to_string(rows_); }

bool is_horizontal_strip(const SkewStrip& s) {
    const int k = s.outer.num_parts();
    for (int i = 0; i < k; ++i) {
        if (s.inner.part(i) > s.outer.part(i))
            throw std::invalid_argument("is_horizontal_strip: inner not contained in outer");
        // Column overlap happens iff row i+1's strip reaches past row i's inner edge.
        if (s.outer.part(i + 1) > s.inner.part(i)) return false;
    }
    return true;
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    const int n = shape.sum();
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> grid(shape.num_parts());
    for (int r = 0; r < shape.num_parts(); ++r) grid[r].assign(shape.part(r), 0);
    std::vector<int> rowlen(shape.num_parts(), 0);  // boxes filled per row
    // Place n, n-1, ... 1 on removable corners; corners visited in ascending
    // row order, which yields last-letter order overall.
    auto rec = [&](auto&& self, int k, std::vector<int>& cur) -> void {
        if (k == 0) {
            std::vector<std::vector<int>> rows(grid.size());
            for (std::size_t r = 0; r < grid.size(); ++r)
                rows[r] = std::vector<int>(grid[r].begin(), grid[r].end());
            out.emplace_back(std::move(rows));
            return;
        }
        for (int r = 0; r < (int)cur.size(); ++r) {
            const bool corner = cur[r] > 0 && (r + 1 == (int)cur.size() || cur[r + 1] < cur[r]);
            if (!corner) continue;
            --cur[r];
            grid[r][cur[r]] = k;
            self(self, k - 1, cur);
            ++cur[r];
        }
    };
    std::vector<int> cur(shape.parts());
    if (n == 0) {
        out.emplace_back(std::vector<std::vector<int>>{});
        return out;
    }
    rec(rec, n, cur);
    return out;
}

namespace {

// Backtracking fill in reading order; minimum legal entry at each box is
// max(left neighbor, above neighbor + 1), which makes emission order equal
// lexicographic order of reading words.
void ssyt_rec(const Partition& shape, int d, std::vector<int>* remaining,
              std::vector<std::vector<int>>& grid, int r, int c,
              std::vector<SemistandardTableau>& out) {
    if (r == shape.num_parts()) {
        out.emplace_back(grid);
        return;
    }
    if (c == shape.part(r)) {
        ssyt_rec(shape, d, remaining, grid, r + 1, 0, out);
        return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
    for (int v = lo; v <= d; ++v) {
        if (remaining && (*remaining)[v - 1] == 0) continue;
        if (remaining) --(*remaining)[v - 1];
        grid[r][c] = v;
        ssyt_rec(shape, d, remaining, grid, r, c + 1, out);
        if (remaining) ++(*remaining)[v - 1];
    }
}

}  // namespace

std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape,
                                                const Composition& content) {
    std::vector<SemistandardTableau> out;
    if (shape.sum() != content.sum()) return out;
    std::vector<int> remaining(content.counts());
    std::vector<std::vector<int>> grid(shape.num_parts());
    for (int r = 0; r < shape.num_parts(); ++r) grid[r].assign(shape.part(r), 0);
    if (shape.sum() == 0) {
        out.emplace_back(std::vector<std::vector<int>>{});
        return out;
    }
    ssyt_rec(shape, content.length(), &remaining, grid, 0, 0, out);
    return out;
}

std::vector<SemistandardTableau> enumerate_ssyt_bounded(const Partition& shape, int d) {
    std::vector<SemistandardTableau> out;
    std::vector<std::vector<int>> grid(shape.num_parts());
    for (int r = 0; r < shape.num_parts(); ++r) grid[r].assign(shape.part(r), 0);
    if (shape.sum() == 0) {
        out.emplace_back(std::vector<std::vector<int>>{});
        return out;
    }
    ssyt_rec(shape, d, nullptr, grid, 0, 0, out);
    return out;
}

long long kostka(const Partition& shape, const Composition& content) {
    return (long long)enumerate_ssyt(shape, content).size();
}

Partition subshape_le(const SemistandardTableau& t, int value) {
    std::vector<int> parts;
    for (const auto& row : t.rows()) {
        int len = 0;
        for (int v : row)
            if (v <= value) ++len;
        if (len) parts.push_back(len);
    }
    return Partition(std::move(parts));
}

SkewStrip horizontal_strip_positions(const SemistandardTableau& t, int value) {
    return SkewStrip{subshape_le(t, value), subshape_le(t, value - 1)};
}

std::vector<Partition> strip_removals(const Partition& shape) {
    const int k = shape.num_parts();
    std::vector<Partition> out;
    std::vector<int> mu(k);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            out.emplace_back(mu);
            return;
        }
        // mu_i in [shape_{i+1}, shape_i] keeps mu a partition and the removed
        // skew a horizontal strip.
        for (int v = shape.part(i); v >= shape.part(i + 1); --v) {
            mu[i] = v;
            self(self, i + 1);
        }
    };
    if (k == 0)
        out.emplace_back(std::vector<int>{});
    else
        rec(rec, 0);
    return out;
}

StandardTableau canonical_standardization(const SemistandardTableau& t,
                                          const Composition& type) {
    // Consecutive blocks of 1..n sized by the type counts; value v's strip is
    // filled with v's block, boxes taken in ascending column order.
    const int n = type.sum();
    if (t.size() != n)
        throw std::invalid_argument("canonical_standardization: size/type mismatch");
    std::vector<std::vector<int>> grid(t.rows().size());
    for (std::size_t r = 0; r < grid.size(); ++r) grid[r].assign(t.rows()[r].size(), 0);
    int next_letter = 1;
    for (int v = 1; v <= type.length(); ++v) {
        const int cnt = type.count(v);
        if (cnt == 0) continue;
        // Boxes holding v, sorted by column then row; a horizontal strip has
        // one box per column so column order is total.
        std::vector<std::pair<int, int>> boxes;  // (col, row)
        for (std::size_t r = 0; r < t.rows().size(); ++r)
            for (std::size_t c = 0; c < t.rows()[r].size(); ++c)
                if (t.rows()[r][c] == v) boxes.push_back({(int)c, (int)r});
        if ((int)boxes.size() != cnt)
            throw std::invalid_argument("canonical_standardization: content/type mismatch");
        std::sort(boxes.begin(), boxes.end());
        for (const auto& [c, r] : boxes) grid[r][c] = next_letter++;
    }
    return StandardTableau(std::move(grid));
}

}  // namespace schurkit
