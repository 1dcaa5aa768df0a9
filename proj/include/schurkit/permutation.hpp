#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schurkit/partition.hpp"

namespace schurkit {

// Permutation of [n] in one-line notation: images_[i] = image of i+1.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    // Adjacent transposition (k, k+1) inside S_n, 1 <= k < n.
    static Permutation adjacent(int n, int k);

    int n() const { return (int)images_.size(); }
    int operator()(int x) const { return images_[x - 1]; }
    const std::vector<int>& images() const { return images_; }

    // (a.compose(b))(x) = a(b(x)): b first, then a.
    Permutation compose(const Permutation& b) const;
    Permutation inverse() const;
    bool is_identity() const;

    // Position action on tuples: entry at position i moves to position g(i),
    // i.e. (g.e)_i = e_{g^{-1}(i)}.
    template <typename T>
    std::vector<T> act_on_positions(const std::vector<T>& e) const {
        std::vector<T> out(e.size());
        for (int i = 1; i <= n(); ++i) out[images_[i - 1] - 1] = e[i - 1];
        return out;
    }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return images_ != o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }
    std::string to_string() const;  // e.g. "[2,1,3]"

private:
    std::vector<int> images_;
};

// Adjacent-transposition word: g = s_{k1} o s_{k2} o ... o s_{km} (rightmost
// factor acts first). Minimal length (= inversion count).
std::vector<int> factor_adjacent(const Permutation& g);

// All elements of S_n in lexicographic one-line order, and the rank of a
// permutation in that order.
std::vector<Permutation> enumerate_sn(int n);
long long lex_rank(const Permutation& g);
Permutation lex_unrank(int n, long long r);

long long factorial(int n);

// Young subgroup S_type = S_{t1} x S_{t2} x ... embedded on consecutive
// blocks of [n]; zero counts give empty blocks.
class YoungSubgroup {
public:
    YoungSubgroup(Composition type, int n);

    const Composition& type() const { return type_; }
    int n() const { return n_; }
    // Consecutive blocks; block v (1-based value) lists its elements of [n]
    // in increasing order, empty when type.count(v) == 0.
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    long long order() const;
    // Elements in block-major order: the leftmost nonempty block's factor
    // varies slowest; each factor runs through its permutations in lex order.
    std::vector<Permutation> elements() const;

private:
    Composition type_;
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// Content type of a tuple over alphabet [d]: count of each value.
Composition tuple_type(const std::vector<int>& e, int d);

// Minimal coset representative t with t . e0 = e, where e0 is the sorted
// (weakly increasing) tuple of e's type: t is obtained by stably bubble
// sorting e ascending and composing the recorded adjacent swaps left to
// right. The pair (type, t) identifies the coset t S_type.
struct CosetDecomposition {
    Composition type;       // over the tuple's alphabet
    Permutation transversal;
};
CosetDecomposition tuple_to_coset(const std::vector<int>& e, int d);

// Inverse direction: the tuple t . e0 for the sorted base tuple e0 of `type`.
std::vector<int> coset_to_tuple(const Composition& type, const Permutation& t);

// Rename the entries of e that exceed n onto the unused values of [n].
// forward maps old value -> new value; entries <= n are untouched.
struct Relabeling {
    std::map<int, int> forward;
    std::vector<int> relabeled;
};

// First-appearance order: large values get free slots in the order the
// values are first met scanning e left to right.
Relabeling relabel_large_entries(const std::vector<int>& e, int n);

// Class-canonical order: the distinct large values, taken in DESCENDING
// value order, get the free slots of [n] in ascending order. Depends only on
// the multiset of entries, so all tuples in one content class share the map;
// the full-transform assembly requires that consistency.
Relabeling relabel_large_entries_canonical(const std::vector<int>& e, int n);

// All tuples over [d]^n in lexicographic order with the first factor most
// significant: index = sum (e_i - 1) d^{n-i}.
std::vector<std::vector<int>> enumerate_tuples(int n, int d);
long long tuple_index(const std::vector<int>& e, int d);

// All tuples of [n]^n with the given content type, lexicographic order.
std::vector<std::vector<int>> module_tuples(const Composition& type, int n);

}  // namespace schurkit
