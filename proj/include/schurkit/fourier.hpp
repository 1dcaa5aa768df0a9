#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurkit/matrix.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/permutation.hpp"
#include "schurkit/tableaux.hpp"

namespace schurkit {

// Direct-sum layout of a transformed space: ordered irrep blocks, each the
// tensor product of a multiplicity register and an irrep register.
// Within a block the flat index is row-major over (mult, irrep) when
// mult_major is true, over (irrep, mult) otherwise.
struct IrrepBlock {
    Partition lambda;
    std::vector<std::string> mult_labels;
    std::vector<std::string> irrep_labels;
    bool mult_major = true;
};

struct BlockStructure {
    std::vector<IrrepBlock> blocks;
    long long total_dim = 0;

    // Flat index of (block b, mult index m, irrep index i).
    long long offset_of(std::size_t b, std::size_t m, std::size_t i) const;
    // Flat index range [begin, end) of block b.
    std::pair<long long, long long> block_range(std::size_t b) const;
    // Smallest power of two holding total_dim: the padded register size a
    // qubit encoding would use. The flat index itself is unchanged.
    long long padded_dimension() const;
};

// A dense matrix with named row/column bases. Square for the full
// transforms; the label strings use the canonical text serializations.
struct LabeledUnitary {
    Mat mat;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
};

// Fourier transform over S_n on the group-element basis (columns in
// lexicographic one-line order). Rows are (lambda, T_row, T_col) with
// partitions in descending lex order, T_row major; the entry at (row, g) is
// sqrt(d_lambda/n!) [lambda(g)]_{T_row,T_col}. Built recursively along the
// subgroup tower S_1 < S_2 < ... < S_n: factor g = t_i h with h fixing n,
// Fourier-transform h over S_{n-1}, then lift each mu-isotype into the
// lambda >= mu blocks through the coset representatives t_i.
LabeledUnitary qft_sn(int n);
BlockStructure qft_sn_blocks(int n);

// Tensor product of qft_sn over the blocks of a Young subgroup. Columns are
// the subgroup elements in block-major enumeration order; rows are tuples of
// per-block Fourier labels joined with '*'.
LabeledUnitary qft_young(const YoungSubgroup& y);

// Induction of the trivial representation of y up to S_n, as the composite
// (inverse qft_young on the subgroup register) -> merge |t,h> to |t o h| ->
// qft_sn. Columns are (transversal element; subgroup Fourier label); the
// column at (t, trivial label) lands in the Fourier basis with amplitudes
// sqrt(d_lambda |Y| / n!) [lambda(t) P_Y]_{T1,T2}.
LabeledUnitary induced_qft(const YoungSubgroup& y, int n);

// Generalized phase estimation as a unitary on C[S_n] (x) C[Y]: conjugate
// controlled right multiplication |g,h> -> |g o h, h> by qft_young on the
// control register. The control basis on both sides is the Y-Fourier basis;
// feeding control index 0 (the all-trivial label) prepares the uniform
// superposition over Y internally. Measurement is left to the caller.
LabeledUnitary gpe_unitary(const YoungSubgroup& y, int n);

// Streaming application of gpe_unitary to a statevector of dimension
// n! * |Y| (control index minor), without materializing the matrix.
std::vector<cplx> gpe_apply(const std::vector<cplx>& state, const YoungSubgroup& y, int n);

// Normalized projection of the standard-tableau basis vector |T> onto the
// Y-invariant subspace of irrep shape(T): group_average(shape, y) |T>,
// normalized with the first nonzero coordinate positive. Returns nullopt
// when the projection vanishes, which happens exactly when some block of y
// fails to occupy a horizontal strip of T.
std::optional<std::vector<double>> trivial_vector(const Partition& shape,
                                                  const StandardTableau& t,
                                                  const YoungSubgroup& y);

// Block diagonalization of the permutation module of the given type: a
// square unitary from the module basis (tuples of that type over [n], lex
// order) onto the direct sum over lambda dominating the sorted type of
// (multiplicity register labeled by SSYTs of shape lambda and content type)
// (x) (irrep register labeled by SYTs). Column e maps through the coset
// representative of e; multiplicity vectors are trivial_vector outputs at
// the canonical standardization of each SSYT.
struct PermModTransform {
    LabeledUnitary unitary;                    // rows: lambda|S|T, cols: tuples
    BlockStructure structure;                  // mult-major blocks
    std::vector<std::vector<int>> tuples;      // column order
};
PermModTransform qft_permmod(const Composition& type, int n);

}  // namespace schurkit
