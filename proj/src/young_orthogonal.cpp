#include "schurkit/young_orthogonal.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace schurkit {

namespace {

std::vector<Mat> build_adjacent_images(const Partition& shape) {
    const int n = shape.sum();
    const std::vector<StandardTableau> tabs = enumerate_syt(shape);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < tabs.size(); ++i) index[tabs[i].to_string()] = i;
    std::vector<Mat> images;
    for (int k = 1; k < n; ++k) {
        Mat m(tabs.size(), tabs.size());
        for (std::size_t i = 0; i < tabs.size(); ++i) {
            const StandardTableau& t = tabs[i];
            const auto [r1, c1] = t.position_of(k);
            const auto [r2, c2] = t.position_of(k + 1);
            if (r1 == r2) {
                m(i, i) = 1.0;
                continue;
            }
            if (c1 == c2) {
                m(i, i) = -1.0;
                continue;
            }
            // Signed axial distance from the box of k to the box of k+1.
            const int dist = (c2 - r2) - (c1 - r1);
            const double a = 1.0 / (double)dist;
            const double b = std::sqrt(1.0 - a * a);
            // Exchanging k and k+1 keeps the tableau standard in this case.
            std::vector<std::vector<int>> grid = t.rows();
            grid[r1 - 1][c1 - 1] = k + 1;
            grid[r2 - 1][c2 - 1] = k;
            const StandardTableau swapped(std::move(grid));
            const std::size_t j = index.at(swapped.to_string());
            m(i, i) = a;
            m(j, i) = b;
        }
        images.push_back(std::move(m));
    }
    return images;
}

// Transform assembly evaluates the same shapes repeatedly; memoize the
// per-shape generator images.
const std::vector<Mat>& cached_adjacent_images(const Partition& shape) {
    static std::map<std::string, std::vector<Mat>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace(shape.to_string());
    if (inserted) it->second = build_adjacent_images(shape);
    return it->second;
}

}  // namespace

Mat young_orthogonal_transposition(const Partition& shape, int k) {
    const int n = shape.sum();
    if (k < 1 || k >= n)
        throw std::invalid_argument("young_orthogonal_transposition: k out of range");
    return cached_adjacent_images(shape)[(std::size_t)k - 1];
}

Mat irrep_matrix(const Partition& shape, const Permutation& g) {
    if (g.n() != shape.sum()) throw std::invalid_argument("irrep_matrix: size mismatch");
    const long long dim = hook_dimension(shape);
    const std::vector<Mat>& adj = cached_adjacent_images(shape);
    Mat m = Mat::identity((std::size_t)dim);
    // g = s_{k1} o ... o s_{km}; a homomorphism maps it to the matrix product
    // in the same order.
    for (int k : factor_adjacent(g)) m = matmul(m, adj[(std::size_t)k - 1]);
    return m;
}

Mat group_average(const Partition& shape, const YoungSubgroup& y) {
    if (y.n() != shape.sum()) throw std::invalid_argument("group_average: size mismatch");
    static std::map<std::string, Mat> cache;
    static std::mutex mu;
    const std::string key = shape.to_string() + "|" + y.type().to_string();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const long long dim = hook_dimension(shape);
    const std::vector<Mat>& adj = cached_adjacent_images(shape);
    Mat acc((std::size_t)dim, (std::size_t)dim);
    for (const Permutation& g : y.elements()) {
        Mat m = Mat::identity((std::size_t)dim);
        for (int k : factor_adjacent(g)) m = matmul(m, adj[(std::size_t)k - 1]);
        acc = add(acc, m);
    }
    acc = scale(acc, cplx(1.0 / (double)y.order(), 0.0));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(acc)).first->second;
}

double irrep_character(const Partition& shape, const Permutation& g) {
    const Mat m = irrep_matrix(shape, g);
    double tr = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) tr += m(i, i).real();
    return tr;
}

}  // namespace schurkit
