#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schurkit/fourier.hpp"
#include "schurkit/gt_pattern.hpp"
#include "schurkit/matrix.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/permutation.hpp"
#include "schurkit/tableaux.hpp"

namespace schurkit {

// One basis vector of the decomposition of (C^d)^(x)n: a shape, a
// semistandard tableau (unitary-group side) and a standard tableau
// (symmetric-group side).
struct SchurBasisLabel {
    Partition lambda;
    SemistandardTableau q;
    StandardTableau p;
    std::string to_string() const;  // "lambda|q|p"
};

// Full ordered basis: shapes of n with at most d rows in descending lex
// order; within a shape q runs over enumerate_ssyt_bounded(shape, d) (major)
// and p over enumerate_syt(shape) (minor).
std::vector<SchurBasisLabel> schur_basis(int n, int d);
BlockStructure schur_block_structure(int n, int d);

enum class GtOp { J0, Jplus, Jminus };

// gl(d) generator on the irrep with highest weight `shape`, in the bounded
// semistandard-tableau basis. l in [1, d-1]: J0 = (N_l - N_{l+1})/2 diagonal,
// Jplus moves one entry l+1 -> l, Jminus moves one entry l -> l+1.
Mat gt_generator(const Partition& shape, int d, GtOp op, int l);

// The same irrep evaluated at a concrete d x d unitary (rejects non-unitary
// input). Near-identity inputs go through the matrix logarithm and the
// generator images; general inputs are factored into adjacent Givens
// rotations and a diagonal phase, each factor exponentiated from the level
// generators.
Mat unitary_irrep(const Partition& shape, int d, const Mat& u);

struct DualSchurTransform {
    LabeledUnitary unitary;    // rows: lambda|q|p; cols: tuples of [d]^n
    BlockStructure structure;  // mult axis = q (major), irrep axis = p
    int n = 0;
    int d = 0;
};

// The d^n x d^n change of basis from the computational tuple basis to the
// Schur basis, assembled class by class through the symmetric-group
// transform of each permutation module.
DualSchurTransform dual_schur(int n, int d);

// Schur-basis amplitudes of a state, computed one shape block at a time
// without materializing the full d^n x d^n matrix.
std::vector<cplx> dual_schur_apply(const std::vector<cplx>& state, int n, int d);

// max-norm residual of U P(pi) U^dagger - blockdiag(I_mult (x) pi_lambda),
// where P permutes tuple positions.
double verify_schur_weyl_perm(const DualSchurTransform& t, const Permutation& pi);
double verify_schur_weyl_perm(int n, int d, const Permutation& pi);

// max-norm residual of U u^(x)n U^dagger - blockdiag(rho_lambda(u) (x) I).
double verify_schur_weyl_unitary(const DualSchurTransform& t, const Mat& u);
double verify_schur_weyl_unitary(int n, int d, const Mat& u);

// max-norm residual of the intertwining relations certifying the unitary-side
// basis: for every level l, conjugating the embedded raising/lowering/weight
// operators matches the tableau-basis generator images on every block.
double gt_basis_residual(const DualSchurTransform& t);

// Probability of each shape for a normalized state (throws invalid_argument
// when | ||state|| - 1 | > norm_tol). The (n, d) overload streams block at a
// time instead of building the transform.
std::vector<std::pair<Partition, double>> weak_schur_distribution(
    const std::vector<cplx>& state, const DualSchurTransform& t, double norm_tol = 1e-9);
std::vector<std::pair<Partition, double>> weak_schur_distribution(
    const std::vector<cplx>& state, int n, int d, double norm_tol = 1e-9);

}  // namespace schurkit
