#pragma once

#include "schurkit/matrix.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/permutation.hpp"
#include "schurkit/tableaux.hpp"

namespace schurkit {

// Young's orthogonal (real, unitary) irrep of S_n for the given shape, on the
// standard-tableau basis in last-letter order.

// Image of the adjacent transposition (k, k+1). Basis tableau T maps by:
//   +T            when k, k+1 share a row of T,
//   -T            when they share a column,
//   a T + b T'    otherwise, with T' = T with k and k+1 exchanged,
// where 1/a is the signed axial distance from k to k+1 and b = sqrt(1 - a^2).
Mat young_orthogonal_transposition(const Partition& shape, int k);

// Image of an arbitrary permutation, via an adjacent-transposition word.
Mat irrep_matrix(const Partition& shape, const Permutation& g);

// (1/|Y|) sum over the Young subgroup of irrep matrices: the orthogonal
// projector onto the Y-invariant subspace. Rank = Kostka(shape, type).
Mat group_average(const Partition& shape, const YoungSubgroup& y);

// Irrep character at g (trace), exact up to roundoff.
double irrep_character(const Partition& shape, const Permutation& g);

}  // namespace schurkit
