#pragma once

#include <string>
#include <vector>

namespace schurkit {

// Integer partition: weakly decreasing positive parts. Trailing zeros in the
// constructor argument are stripped; the empty partition (of 0) is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int num_parts() const { return (int)parts_.size(); }
    int sum() const;
    // 0-based part access; rows beyond the last part read as 0.
    int part(int i) const { return (i >= 0 && i < (int)parts_.size()) ? parts_[i] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Descending lexicographic on parts: [3] < [2,1] is false ([3] sorts first).
    bool lex_before(const Partition& o) const { return parts_ > o.parts_; }

    std::string to_string() const;  // e.g. "[3,1]"; "[]" for the empty partition

private:
    std::vector<int> parts_;
};

// Composition of n: fixed-length vector of nonnegative counts (zeros allowed,
// order significant). Used as the content/type alphabet-count vector.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> counts);

    int length() const { return (int)counts_.size(); }
    int sum() const;
    int count(int value) const { return counts_[value - 1]; }  // 1-based value
    const std::vector<int>& counts() const { return counts_; }
    // Number of letters with value <= l (prefix sum; l in [0, length]).
    int prefix_sum(int l) const;

    // Parts sorted into a partition (zeros dropped).
    Partition sorted() const;

    bool operator==(const Composition& o) const { return counts_ == o.counts_; }
    std::string to_string() const;  // e.g. "[1,0,2]"

private:
    std::vector<int> counts_;
};

// All partitions of n (optionally with at most max_parts parts), in
// descending lexicographic order: [n] first, [1,1,...,1] last.
std::vector<Partition> enumerate_partitions(int n, int max_parts = -1);

// Number of standard tableaux of the shape, by the hook length formula.
long long hook_dimension(const Partition& shape);

// Dominance order: a >= b iff all prefix sums of a weakly exceed those of b.
// Requires equal sums.
bool dominates(const Partition& a, const Partition& b);

// Dimension of the GL(d) (equivalently U(d)) irrep with highest weight
// `shape`, zero when shape has more than d rows. Computed by the branching
// recursion over horizontal strips, so it doubles as a consistency oracle
// for the strip enumeration.
long long unitary_dimension(const Partition& shape, int d);

}  // namespace schurkit
