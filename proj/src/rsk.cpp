#include "schurkit/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurkit {

Biword::Biword(std::vector<int> u, std::vector<int> v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_.size() != v_.size()) throw std::invalid_argument("Biword: length mismatch");
    for (std::size_t i = 0; i < u_.size(); ++i) {
        if (u_[i] < 1 || v_[i] < 1) throw std::invalid_argument("Biword: entries must be >= 1");
        if (i > 0) {
            if (u_[i - 1] > u_[i]) throw std::invalid_argument("Biword: u not weakly increasing");
            if (u_[i - 1] == u_[i] && v_[i - 1] > v_[i])
                throw std::invalid_argument("Biword: v not weakly increasing within a u-run");
        }
    }
}

InsertResult row_insert(const SemistandardTableau& t, int x) {
    if (x < 1) throw std::invalid_argument("row_insert: x must be >= 1");
    std::vector<std::vector<int>> grid = t.rows();
    int incoming = x;
    for (std::size_t r = 0;; ++r) {
        if (r == grid.size()) {
            grid.push_back({incoming});
            return {SemistandardTableau(std::move(grid)), (int)r + 1, 1};
        }
        auto& row = grid[r];
        // First entry strictly greater than the incoming value gets bumped.
        auto it = std::upper_bound(row.begin(), row.end(), incoming);
        if (it == row.end()) {
            row.push_back(incoming);
            return {SemistandardTableau(std::move(grid)), (int)r + 1, (int)row.size()};
        }
        std::swap(*it, incoming);
    }
}

std::pair<SemistandardTableau, SemistandardTableau> rsk(const Biword& w) {
    SemistandardTableau p;
    std::vector<std::vector<int>> qgrid;
    for (int i = 0; i < w.length(); ++i) {
        InsertResult res = row_insert(p, w.v()[i]);
        p = std::move(res.tableau);
        if ((int)qgrid.size() < res.row) qgrid.push_back({});
        qgrid[res.row - 1].push_back(w.u()[i]);
    }
    return {std::move(p), SemistandardTableau(std::move(qgrid))};
}

std::vector<int> reading_word(const SemistandardTableau& t) {
    std::vector<int> w;
    const auto& rows = t.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

SemistandardTableau tableau_product(const SemistandardTableau& s, const SemistandardTableau& t) {
    SemistandardTableau acc = s;
    for (int x : reading_word(t)) acc = row_insert(acc, x).tableau;
    return acc;
}

SemistandardTableau swap_content(const SemistandardTableau& t, int k) {
    if (k < 1) throw std::invalid_argument("swap_content: k must be >= 1");
    std::vector<std::vector<int>> grid = t.rows();
    auto cell = [&](int r, int c) -> int {
        if (r < 0 || r >= (int)grid.size() || c < 0 || c >= (int)grid[r].size()) return 0;
        return grid[r][c];
    };
    for (int r = 0; r < (int)grid.size(); ++r) {
        // Free = no vertical partner from the other letter.
        int free_k = 0, free_k1 = 0, first = -1;
        for (int c = 0; c < (int)grid[r].size(); ++c) {
            const int v = grid[r][c];
            if (v == k && cell(r + 1, c) != k + 1) {
                ++free_k;
                if (first < 0) first = c;
            } else if (v == k + 1 && cell(r - 1, c) != k) {
                ++free_k1;
                if (first < 0) first = c;
            }
        }
        // The free cells are contiguous: bound k's sit left of free k's (their
        // k+1 partners push them left), bound k+1's right of free k+1's.
        for (int i = 0; i < free_k + free_k1; ++i)
            grid[r][first + i] = (i < free_k1) ? k : k + 1;
    }
    return SemistandardTableau(std::move(grid));
}

std::optional<SemistandardTableau> swap_content_via_product(const SemistandardTableau& t,
                                                            int k) {
    if (k < 1) throw std::invalid_argument("swap_content_via_product: k must be >= 1");
    const std::vector<int> word = reading_word(t);
    auto piece = [&](int lo, int hi) {
        SemistandardTableau acc;
        for (int x : word)
            if (x >= lo && x <= hi) acc = row_insert(acc, x).tableau;
        return acc;
    };
    const SemistandardTableau a = piece(1, k - 1);
    const SemistandardTableau b = piece(k, k + 1);
    const SemistandardTableau c = piece(k + 2, t.max_entry());
    if (tableau_product(tableau_product(a, b), c) != t) return std::nullopt;
    return tableau_product(tableau_product(a, swap_content(b, k)), c);
}

}  // namespace schurkit
