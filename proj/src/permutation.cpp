#include "schurkit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schurkit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = (int)images_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("Permutation: not a bijection on [n]");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::adjacent(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("adjacent: k out of range");
    Permutation g = identity(n);
    std::swap(g.images_[k - 1], g.images_[k]);
    return g;
}

Permutation Permutation::compose(const Permutation& b) const {
    if (n() != b.n()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(n());
    for (int x = 1; x <= n(); ++x) img[x - 1] = images_[b.images_[x - 1] - 1];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(n());
    for (int x = 1; x <= n(); ++x) img[images_[x - 1] - 1] = x;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= n(); ++x)
        if (images_[x - 1] != x) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (int i = 0; i < n(); ++i) {
        if (i) s += ',';
        s += std::to_string(images_[i]);
    }
    s += ']';
    return s;
}

std::vector<int> factor_adjacent(const Permutation& g) {
    // Bubble toward the identity by right multiplication: if w has descent at
    // j then w s_j is shorter. Collecting the swaps and reversing yields
    // g = s_{k1} o ... o s_{km} with m = inversion count.
    std::vector<int> img = g.images();
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 0; j + 1 < (int)img.size(); ++j) {
            if (img[j] > img[j + 1]) {
                std::swap(img[j], img[j + 1]);
                word.push_back(j + 1);
                changed = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<Permutation> enumerate_sn(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    out.reserve((std::size_t)factorial(n));
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

long long factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative");
    if (n > 20) throw std::invalid_argument("factorial: exceeds 64 bits");
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

long long lex_rank(const Permutation& g) {
    const int n = g.n();
    long long r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (g.images()[j] < g.images()[i]) ++smaller;
        r += smaller * factorial(n - 1 - i);
    }
    return r;
}

Permutation lex_unrank(int n, long long r) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> img;
    img.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        const long long f = factorial(i);
        const long long q = r / f;
        r %= f;
        img.push_back(pool[(std::size_t)q]);
        pool.erase(pool.begin() + (std::ptrdiff_t)q);
    }
    return Permutation(std::move(img));
}

YoungSubgroup::YoungSubgroup(Composition type, int n) : type_(std::move(type)), n_(n) {
    if (type_.sum() != n) throw std::invalid_argument("YoungSubgroup: type must sum to n");
    int next = 1;
    for (int v = 1; v <= type_.length(); ++v) {
        std::vector<int> block;
        for (int i = 0; i < type_.count(v); ++i) block.push_back(next++);
        blocks_.push_back(std::move(block));
    }
}

long long YoungSubgroup::order() const {
    long long o = 1;
    for (const auto& b : blocks_) o *= factorial((int)b.size());
    return o;
}

std::vector<Permutation> YoungSubgroup::elements() const {
    // Cartesian product over blocks, leftmost block slowest; each block factor
    // runs through the permutations of its elements in lex order.
    std::vector<std::vector<std::vector<int>>> arrangements;  // per block
    for (const auto& b : blocks_) {
        std::vector<int> arr = b;
        std::vector<std::vector<int>> list;
        if (arr.empty()) {
            list.push_back({});
        } else {
            std::sort(arr.begin(), arr.end());
            do list.push_back(arr);
            while (std::next_permutation(arr.begin(), arr.end()));
        }
        arrangements.push_back(std::move(list));
    }
    std::vector<Permutation> out;
    out.reserve((std::size_t)order());
    std::vector<std::size_t> idx(arrangements.size(), 0);
    while (true) {
        std::vector<int> img(n_);
        for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
            for (std::size_t j = 0; j < blocks_[bi].size(); ++j)
                img[blocks_[bi][j] - 1] = arrangements[bi][idx[bi]][j];
        out.emplace_back(std::move(img));
        // odometer increment, last block fastest
        std::size_t b = arrangements.size();
        while (b > 0) {
            --b;
            if (++idx[b] < arrangements[b].size()) break;
            idx[b] = 0;
            if (b == 0) return out;
        }
        if (arrangements.empty()) return out;
    }
}

Composition tuple_type(const std::vector<int>& e, int d) {
    std::vector<int> counts(d, 0);
    for (int v : e) {
        if (v < 1 || v > d) throw std::invalid_argument("tuple_type: entry outside [d]");
        ++counts[v - 1];
    }
    return Composition(std::move(counts));
}

CosetDecomposition tuple_to_coset(const std::vector<int>& e, int d) {
    const int n = (int)e.size();
    Composition type = tuple_type(e, d);
    // Stable bubble sort ascending; swap at j means multiplying the running
    // transversal by s_j on the right, so the first recorded swap acts last
    // on positions (leftmost factor).
    std::vector<int> work = e;
    Permutation t = Permutation::identity(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 1; j < n; ++j) {
            if (work[j - 1] > work[j]) {
                std::swap(work[j - 1], work[j]);
                t = t.compose(Permutation::adjacent(n, j));
                changed = true;
            }
        }
    }
    return {std::move(type), std::move(t)};
}

std::vector<int> coset_to_tuple(const Composition& type, const Permutation& t) {
    std::vector<int> e0;
    for (int v = 1; v <= type.length(); ++v)
        for (int i = 0; i < type.count(v); ++i) e0.push_back(v);
    if ((int)e0.size() != t.n()) throw std::invalid_argument("coset_to_tuple: size mismatch");
    return t.act_on_positions(e0);
}

namespace {

Relabeling relabel_with_order(const std::vector<int>& e, int n,
                              const std::vector<int>& large_in_order) {
    std::vector<bool> used(n + 1, false);
    for (int v : e)
        if (v <= n) used[v] = true;
    std::vector<int> free_slots;
    for (int v = 1; v <= n; ++v)
        if (!used[v]) free_slots.push_back(v);
    Relabeling out;
    std::size_t next = 0;
    for (int v : large_in_order) {
        if (next >= free_slots.size())
            throw std::invalid_argument("relabel_large_entries: not enough free slots");
        out.forward[v] = free_slots[next++];
    }
    out.relabeled = e;
    for (int& v : out.relabeled)
        if (v > n) v = out.forward.at(v);
    return out;
}

}  // namespace

Relabeling relabel_large_entries(const std::vector<int>& e, int n) {
    std::vector<int> order;
    for (int v : e)
        if (v > n && std::find(order.begin(), order.end(), v) == order.end())
            order.push_back(v);
    return relabel_with_order(e, n, order);
}

Relabeling relabel_large_entries_canonical(const std::vector<int>& e, int n) {
    std::vector<int> order;
    for (int v : e)
        if (v > n && std::find(order.begin(), order.end(), v) == order.end())
            order.push_back(v);
    std::sort(order.rbegin(), order.rend());  // descending values -> ascending slots
    return relabel_with_order(e, n, order);
}

std::vector<std::vector<int>> enumerate_tuples(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(n, 1);
    while (true) {
        out.push_back(e);
        int i = n - 1;
        while (i >= 0 && e[i] == d) e[i--] = 1;
        if (i < 0) break;
        ++e[i];
    }
    return out;
}

long long tuple_index(const std::vector<int>& e, int d) {
    long long idx = 0;
    for (int v : e) idx = idx * d + (v - 1);
    return idx;
}

std::vector<std::vector<int>> module_tuples(const Composition& type, int n) {
    std::vector<int> e0;
    for (int v = 1; v <= type.length(); ++v)
        for (int i = 0; i < type.count(v); ++i) e0.push_back(v);
    if ((int)e0.size() != n) throw std::invalid_argument("module_tuples: type must sum to n");
    std::sort(e0.begin(), e0.end());
    std::vector<std::vector<int>> out;
    do out.push_back(e0);
    while (std::next_permutation(e0.begin(), e0.end()));
    return out;
}

}  // namespace schurkit
