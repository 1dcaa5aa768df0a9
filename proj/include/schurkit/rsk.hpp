#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schurkit/tableaux.hpp"

namespace schurkit {

// Two-line array (u over v): u weakly increasing, and v weakly increasing
// within each constant-u run. Validated on construction.
class Biword {
public:
    Biword(std::vector<int> u, std::vector<int> v);
    const std::vector<int>& u() const { return u_; }
    const std::vector<int>& v() const { return v_; }
    int length() const { return (int)u_.size(); }

private:
    std::vector<int> u_, v_;
};

struct InsertResult {
    SemistandardTableau tableau;
    int row = 0, col = 0;  // 1-based position of the new box
};

// Bump-insert x into t: in each row the smallest entry strictly greater than
// the incoming value is displaced downward; appended at the row end when
// nothing is greater. Rejects x < 1.
InsertResult row_insert(const SemistandardTableau& t, int x);

// RSK of a biword: P is the iterated row insertion of v; Q records u_k at
// the box created by step k. shape(P) = shape(Q).
std::pair<SemistandardTableau, SemistandardTableau> rsk(const Biword& w);

// Plactic product s*t: insert t's entries bottom row first, each row left to
// right, moving upward.
SemistandardTableau tableau_product(const SemistandardTableau& s, const SemistandardTableau& t);

// Exchange the multiplicities of k and k+1 while preserving the shape:
// the classical Bender-Knuth involution. In every row, the k's with no k+1
// directly below and the k+1's with no k directly above form a contiguous run
// k^s (k+1)^t, rewritten as k^t (k+1)^s. Total and involutive.
SemistandardTableau swap_content(const SemistandardTableau& t, int k);

// Alternative route via plactic factorization: split the reading word into
// letters < k, letters in {k,k+1}, letters > k+1; build each piece by
// insertion; swap the two-letter piece; recompose with tableau_product.
// Returns nullopt when the factor product fails to reproduce t (the
// factorization is not always faithful), so this is a partial map kept for
// cross-checking swap_content, not a replacement.
std::optional<SemistandardTableau> swap_content_via_product(const SemistandardTableau& t, int k);

// Reading word: rows bottom to top, each left to right.
std::vector<int> reading_word(const SemistandardTableau& t);

}  // namespace schurkit
