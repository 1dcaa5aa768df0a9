#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "schurkit/matrix.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/permutation.hpp"
#include "schurkit/schur.hpp"
#include "schurkit/tableaux.hpp"
#include "schurkit/young_orthogonal.hpp"

using namespace schurkit;

namespace {

std::vector<cplx> random_state(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<cplx> v(dim);
    double nrm = 0.0;
    for (auto& c : v) {
        c = cplx(dist(gen), dist(gen));
        nrm += std::norm(c);
    }
    nrm = std::sqrt(nrm);
    for (auto& c : v) c /= nrm;
    return v;
}

// Position-permutation matrix on (C^d)^(x)n.
Mat perm_matrix(const Permutation& pi, int n, int d) {
    auto tuples = enumerate_tuples(n, d);
    Mat p(tuples.size(), tuples.size());
    for (const auto& e : tuples)
        p((std::size_t)tuple_index(pi.act_on_positions(e), d),
          (std::size_t)tuple_index(e, d)) = 1.0;
    return p;
}

}  // namespace

TEST_CASE("schur_basis layout") {
    auto b22 = schur_basis(2, 2);
    REQUIRE(b22.size() == 4);
    CHECK(b22[0].to_string() == "[2]|[[1,1]]|[[1,2]]");
    CHECK(b22[1].to_string() == "[2]|[[1,2]]|[[1,2]]");
    CHECK(b22[2].to_string() == "[2]|[[2,2]]|[[1,2]]");
    CHECK(b22[3].to_string() == "[1,1]|[[1],[2]]|[[1],[2]]");

    auto b32 = schur_basis(3, 2);
    CHECK(b32.size() == 8);  // 4 from (3), 2*2 from (2,1); (1,1,1) needs 3 rows

    // Counting identity: sum over shapes of K * d equals d^n.
    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= 3; ++d) {
            long long dim = 1;
            for (int i = 0; i < n; ++i) dim *= d;
            CHECK((long long)schur_basis(n, d).size() == dim);
            BlockStructure bs = schur_block_structure(n, d);
            CHECK(bs.total_dim == dim);
            long long acc = 0;
            for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
                const auto& blk = bs.blocks[b];
                CHECK(blk.mult_major);
                CHECK((long long)blk.mult_labels.size() ==
                      unitary_dimension(blk.lambda, d));
                CHECK((long long)blk.irrep_labels.size() == hook_dimension(blk.lambda));
                acc += (long long)blk.mult_labels.size() *
                       (long long)blk.irrep_labels.size();
            }
            CHECK(acc == dim);
            CHECK(bs.padded_dimension() >= dim);
            CHECK((bs.padded_dimension() & (bs.padded_dimension() - 1)) == 0);
        }
}

TEST_CASE("dual_schur n=2 d=2 exact") {
    DualSchurTransform t = dual_schur(2, 2);
    const Mat& u = t.unitary.mat;
    REQUIRE(u.rows == 4);
    CHECK(t.unitary.col_labels[0] == "[1,1]");
    CHECK(t.unitary.col_labels[1] == "[1,2]");
    CHECK(t.unitary.col_labels[2] == "[2,1]");
    CHECK(t.unitary.col_labels[3] == "[2,2]");
    const double r = 1.0 / std::sqrt(2.0);
    const cplx want[4][4] = {
        {1, 0, 0, 0},
        {0, r, r, 0},
        {0, 0, 0, 1},
        {0, r, -r, 0},
    };
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(u(i, j) - want[i][j]) < 1e-12);
}

TEST_CASE("dual_schur is unitary on small cases") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2},
                                                        {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
        DualSchurTransform t = dual_schur(n, d);
        CHECK(unitarity_residual(t.unitary.mat) < 1e-9);
    }
}

TEST_CASE("swap eigenvalues split the two-qubit blocks") {
    DualSchurTransform t = dual_schur(2, 2);
    Mat p = perm_matrix(Permutation({2, 1}), 2, 2);
    Mat m = matmul(t.unitary.mat, matmul(p, adjoint(t.unitary.mat)));
    // Symmetric block eigenvalue +1, antisymmetric -1.
    const double diag[4] = {1.0, 1.0, 1.0, -1.0};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx want = (i == j) ? cplx(diag[i], 0.0) : cplx(0.0, 0.0);
            CHECK(std::abs(m(i, j) - want) < 1e-12);
        }
}

TEST_CASE("permutation action is block-diagonalized") {
    std::mt19937_64 gen(515);
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
        DualSchurTransform t = dual_schur(n, d);
        auto group = enumerate_sn(n);
        for (int k = 0; k < 3; ++k) {
            Permutation pi = group[(std::size_t)(gen() % group.size())];
            CHECK(verify_schur_weyl_perm(t, pi) < 1e-9);
        }
        // Adjacent generators cover the group.
        for (int k = 1; k < n; ++k)
            CHECK(verify_schur_weyl_perm(t, Permutation::adjacent(n, k)) < 1e-9);
    }
    // Convenience overload builds the same transform.
    CHECK(verify_schur_weyl_perm(3, 2, Permutation({2, 1, 3})) < 1e-9);
}

TEST_CASE("tensor-power unitaries are block-diagonalized") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
        DualSchurTransform t = dual_schur(n, d);
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            Mat u = haar_unitary((std::size_t)d, 900 + seed);
            CHECK(verify_schur_weyl_unitary(t, u) < 1e-6);
        }
    }
    CHECK(verify_schur_weyl_unitary(2, 2, haar_unitary(2, 5)) < 1e-6);
}

TEST_CASE("diagonal unitaries act by content monomials") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}, {2, 3}}) {
        DualSchurTransform t = dual_schur(n, d);
        std::mt19937_64 gen(77 + (std::uint64_t)(n * d));
        std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
        std::vector<cplx> z(d);
        for (auto& zi : z) zi = std::exp(cplx(0.0, ang(gen)));
        auto basis = schur_basis(n, d);
        auto tuples = enumerate_tuples(n, d);
        const Mat& u = t.unitary.mat;
        double worst = 0.0;
        for (std::size_t r = 0; r < u.rows; ++r) {
            Composition content = basis[r].q.content(d);
            cplx expect(1.0, 0.0);
            for (int v = 1; v <= d; ++v)
                for (int k = 0; k < content.count(v); ++k) expect *= z[(std::size_t)v - 1];
            for (std::size_t c = 0; c < u.cols; ++c) {
                cplx dc(1.0, 0.0);
                for (int x : tuples[c]) dc *= z[(std::size_t)x - 1];
                worst = std::max(worst, std::abs(u(r, c)) * std::abs(dc - expect));
            }
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("rows vanish off their content class") {
    DualSchurTransform t = dual_schur(4, 3);
    auto basis = schur_basis(4, 3);
    auto tuples = enumerate_tuples(4, 3);
    const Mat& u = t.unitary.mat;
    for (std::size_t r = 0; r < u.rows; ++r) {
        Composition qc = basis[r].q.content(3);
        for (std::size_t c = 0; c < u.cols; ++c)
            if (std::abs(u(r, c)) > 1e-12) CHECK(tuple_type(tuples[c], 3) == qc);
    }

    // Fixed-content block dimension: rows of block lambda with content ty
    // number Kostka(lambda, ty) * hook_dimension(lambda).
    std::map<std::string, long long> rows_of;
    for (const auto& lbl : basis)
        rows_of[lbl.lambda.to_string() + "#" + lbl.q.content(3).to_string()] += 1;
    for (const auto& lam : enumerate_partitions(4)) {
        for (const auto& mu : enumerate_partitions(4)) {
            if (mu.num_parts() > 3) continue;
            std::vector<int> cvec(3, 0);
            for (int i = 0; i < mu.num_parts(); ++i) cvec[(std::size_t)i] = mu.part(i);
            Composition ty(cvec);
            auto it = rows_of.find(lam.to_string() + "#" + ty.to_string());
            long long got = (it == rows_of.end()) ? 0 : it->second;
            CHECK(got == kostka(lam, ty) * hook_dimension(lam));
        }
    }
}

TEST_CASE("sl2 triples at every level") {
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n)
        for (int d = 2; d <= 4; ++d)
            for (const auto& lam : enumerate_partitions(n)) {
                if (lam.num_parts() > d) continue;
                for (int l = 1; l < d; ++l) {
                    Mat j0 = gt_generator(lam, d, GtOp::J0, l);
                    Mat jp = gt_generator(lam, d, GtOp::Jplus, l);
                    Mat jm = gt_generator(lam, d, GtOp::Jminus, l);
                    Mat c1 = add(matmul(jp, jm), scale(matmul(jm, jp), cplx(-1, 0)));
                    worst = std::max(worst, max_abs_diff(c1, scale(j0, cplx(2, 0))));
                    Mat c2 = add(matmul(j0, jp), scale(matmul(jp, j0), cplx(-1, 0)));
                    worst = std::max(worst, max_abs_diff(c2, jp));
                    Mat c3 = add(matmul(j0, jm), scale(matmul(jm, j0), cplx(-1, 0)));
                    worst = std::max(worst, max_abs_diff(c3, scale(jm, cplx(-1, 0))));
                }
            }
    CHECK(worst < 1e-10);
}

TEST_CASE("raising operators preserve the subgroup-adapted strips") {
    // J+ at level l exchanges one l+1 for an l: the tableaux it connects have
    // identical sub-shapes below l and identical strips above l+1.
    for (int d = 2; d <= 4; ++d)
        for (int n = 2; n <= 5; ++n)
            for (const auto& lam : enumerate_partitions(n)) {
                if (lam.num_parts() > d) continue;
                auto ssyts = enumerate_ssyt_bounded(lam, d);
                for (int l = 1; l < d; ++l) {
                    Mat jp = gt_generator(lam, d, GtOp::Jplus, l);
                    for (std::size_t i = 0; i < jp.rows; ++i)
                        for (std::size_t j = 0; j < jp.cols; ++j) {
                            if (std::abs(jp(i, j)) < 1e-14) continue;
                            for (int v = 1; v <= d; ++v) {
                                if (v == l) continue;  // only the l-boundary moves
                                CHECK(subshape_le(ssyts[i], v).to_string() ==
                                      subshape_le(ssyts[j], v).to_string());
                            }
                        }
                }
            }
}

TEST_CASE("gt_basis_residual certifies the assembled transforms") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 2}, {3, 2}}) {
        DualSchurTransform t = dual_schur(n, d);
        CHECK(gt_basis_residual(t) < 1e-9);
    }
}

TEST_CASE("streaming apply equals the dense transform") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 3}, {4, 2}, {2, 4}}) {
        DualSchurTransform t = dual_schur(n, d);
        auto psi = random_state(t.unitary.mat.cols, 31 + (std::uint64_t)(n + d));
        auto dense = schurkit::apply(t.unitary.mat, psi);
        auto stream = dual_schur_apply(psi, n, d);
        REQUIRE(dense.size() == stream.size());
        double worst = 0.0;
        for (std::size_t i = 0; i < dense.size(); ++i)
            worst = std::max(worst, std::abs(dense[i] - stream[i]));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("weak_schur_distribution worked examples") {
    DualSchurTransform t = dual_schur(2, 2);
    std::vector<cplx> e00 = {1, 0, 0, 0};
    auto p00 = weak_schur_distribution(e00, t);
    REQUIRE(p00.size() == 2);
    CHECK(p00[0].first.to_string() == "[2]");
    CHECK(std::abs(p00[0].second - 1.0) < 1e-12);
    CHECK(std::abs(p00[1].second) < 1e-12);

    std::vector<cplx> e01 = {0, 1, 0, 0};
    auto p01 = weak_schur_distribution(e01, t);
    CHECK(std::abs(p01[0].second - 0.5) < 1e-12);
    CHECK(std::abs(p01[1].second - 0.5) < 1e-12);

    // The two overloads agree and probabilities sum to one.
    auto psi = random_state(4, 99);
    auto pa = weak_schur_distribution(psi, t);
    auto pb = weak_schur_distribution(psi, 2, 2);
    REQUIRE(pa.size() == pb.size());
    double total = 0.0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        CHECK(std::abs(pa[i].second - pb[i].second) < 1e-12);
        total += pa[i].second;
    }
    CHECK(std::abs(total - 1.0) < 1e-10);

    // Unnormalized input is rejected.
    std::vector<cplx> bad = {1, 1, 0, 0};
    CHECK_THROWS_AS(weak_schur_distribution(bad, t), std::invalid_argument);
    CHECK_THROWS_AS(weak_schur_distribution(bad, 2, 2), std::invalid_argument);
}

TEST_CASE("weak_schur_distribution matches the character projectors") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}, {4, 3}}) {
        auto tuples = enumerate_tuples(n, d);
        auto psi = random_state(tuples.size(), 1234 + (std::uint64_t)(10 * n + d));
        auto dist = weak_schur_distribution(psi, n, d);
        auto group = enumerate_sn(n);
        // <psi| P(g) |psi> for every g, then project by characters.
        std::vector<cplx> overlap(group.size());
        for (std::size_t gi = 0; gi < group.size(); ++gi) {
            cplx acc(0.0, 0.0);
            for (std::size_t c = 0; c < tuples.size(); ++c) {
                long long dst = tuple_index(group[gi].act_on_positions(tuples[c]), d);
                acc += std::conj(psi[(std::size_t)dst]) * psi[c];
            }
            overlap[gi] = acc;
        }
        for (const auto& [lam, p] : dist) {
            cplx proj(0.0, 0.0);
            for (std::size_t gi = 0; gi < group.size(); ++gi)
                proj += irrep_character(lam, group[gi]) * overlap[gi];
            double oracle =
                (double)hook_dimension(lam) / (double)factorial(n) * proj.real();
            CHECK(std::abs(p - oracle) < 1e-10);
        }
    }
}

TEST_CASE("unitary_irrep basics") {
    // Defining representation: shape (1) is the input matrix itself.
    Mat u = haar_unitary(3, 17);
    CHECK(max_abs_diff(unitary_irrep(Partition({1}), 3, u), u) < 1e-9);

    // Output sizes follow the weight-space dimension.
    Mat r = unitary_irrep(Partition({2, 1}), 3, u);
    CHECK((long long)r.rows == unitary_dimension(Partition({2, 1}), 3));
    CHECK(unitarity_residual(r) < 1e-8);

    // Non-unitary input is rejected.
    Mat bad = u;
    bad(0, 0) += cplx(0.2, 0.0);
    CHECK_THROWS_AS(unitary_irrep(Partition({2, 1}), 3, bad), std::invalid_argument);
}

TEST_CASE("unitary_irrep is a homomorphism across both evaluation paths") {
    Partition lam({2, 1});
    const int d = 3;
    Mat a = haar_unitary(d, 41);      // generic: Givens factorization path
    Mat x(d, d);
    x(0, 1) = cplx(0.02, 0.01);
    x(1, 0) = cplx(-0.02, 0.01);
    x(1, 2) = cplx(0.0, -0.03);
    x(2, 1) = cplx(0.0, -0.03);
    x(0, 0) = cplx(0.0, 0.015);
    Mat nudge = expm(x);              // near identity: logarithm path
    CHECK(max_abs_dist_identity(nudge) < 0.1);

    Mat lhs = unitary_irrep(lam, d, matmul(a, nudge));
    Mat rhs = matmul(unitary_irrep(lam, d, a), unitary_irrep(lam, d, nudge));
    CHECK(max_abs_diff(lhs, rhs) < 1e-8);

    Mat b = haar_unitary(d, 42);
    Mat hom = matmul(unitary_irrep(lam, d, a), unitary_irrep(lam, d, b));
    CHECK(max_abs_diff(unitary_irrep(lam, d, matmul(a, b)), hom) < 1e-8);
}

TEST_CASE("unitary_irrep diagonal inputs give content monomials") {
    const int d = 3;
    std::vector<cplx> z = {std::exp(cplx(0, 0.4)), std::exp(cplx(0, -1.1)),
                           std::exp(cplx(0, 2.2))};
    Mat u(d, d);
    for (int i = 0; i < d; ++i) u((std::size_t)i, (std::size_t)i) = z[(std::size_t)i];
    Partition lam({2, 1});
    Mat r = unitary_irrep(lam, d, u);
    auto ssyts = enumerate_ssyt_bounded(lam, d);
    REQUIRE((std::size_t)r.rows == ssyts.size());
    for (std::size_t i = 0; i < ssyts.size(); ++i) {
        Composition c = ssyts[i].content(d);
        cplx expect(1.0, 0.0);
        for (int v = 1; v <= d; ++v)
            for (int k = 0; k < c.count(v); ++k) expect *= z[(std::size_t)v - 1];
        CHECK(std::abs(r(i, i) - expect) < 1e-9);
        for (std::size_t j = 0; j < ssyts.size(); ++j)
            if (j != i) CHECK(std::abs(r(i, j)) < 1e-9);
    }
}
