#include "schurkit/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace schurkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: nonpositive part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts not weakly decreasing");
    }
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

Composition::Composition(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
        if (c < 0) throw std::invalid_argument("Composition: negative count");
}

int Composition::sum() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int Composition::prefix_sum(int l) const {
    if (l < 0 || l > (int)counts_.size()) throw std::out_of_range("Composition::prefix_sum");
    return std::accumulate(counts_.begin(), counts_.begin() + l, 0);
}

Partition Composition::sorted() const {
    std::vector<int> v;
    for (int c : counts_)
        if (c > 0) v.push_back(c);
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
}

std::string Composition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(counts_[i]);
    }
    s += ']';
    return s;
}

std::vector<Partition> enumerate_partitions(int n, int max_parts) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending lex: at each level try the largest feasible part first.
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_parts >= 0 && (int)cur.size() == max_parts) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

long long hook_dimension(const Partition& shape) {
    const int n = shape.sum();
    if (n == 0) return 1;
    if (n > 20) throw std::invalid_argument("hook_dimension: n! exceeds 64 bits");
    const Partition conj = shape.conjugate();
    long long hooks = 1;  // prod(hooks) divides n!, so both fit in 64 bits
    for (int r = 0; r < shape.num_parts(); ++r)
        for (int c = 0; c < shape.part(r); ++c)
            hooks *= (long long)(shape.part(r) - c) + (conj.part(c) - r) - 1;
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    if (fact % hooks != 0) throw std::logic_error("hook_dimension: non-integral");
    return fact / hooks;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.sum() != b.sum()) throw std::invalid_argument("dominates: unequal sums");
    int pa = 0, pb = 0;
    const int k = std::max(a.num_parts(), b.num_parts());
    for (int i = 0; i < k; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

namespace {

// Shapes mu <= lambda with lambda/mu a horizontal strip (at most one removed
// box per column), i.e. the shapes reachable by deleting one alphabet letter.
void horizontal_strip_predecessors(const Partition& lam, std::vector<Partition>& out) {
    const int k = lam.num_parts();
    std::vector<int> mu(k);
    // Row i of mu may range in [lam_{i+1}, lam_i]; that interval condition is
    // exactly the horizontal-strip condition.
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            out.emplace_back(mu);
            return;
        }
        const int lo = lam.part(i + 1), hi = lam.part(i);
        for (int v = hi; v >= lo; --v) {
            mu[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

long long unitary_dimension(const Partition& shape, int d) {
    if (d < 0) throw std::invalid_argument("unitary_dimension: negative d");
    if (shape.num_parts() > d) return 0;
    if (d == 0) return shape.sum() == 0 ? 1 : 0;
    if (d == 1) return 1;  // single row only (num_parts <= 1 here)
    static std::map<std::pair<std::string, int>, long long> cache;
    static std::mutex mtx;
    const auto key = std::make_pair(shape.to_string(), d);
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<Partition> preds;
    horizontal_strip_predecessors(shape, preds);
    long long total = 0;
    for (const auto& mu : preds) total += unitary_dimension(mu, d - 1);
    std::lock_guard<std::mutex> lk(mtx);
    cache.emplace(key, total);
    return total;
}

}  // namespace schurkit
