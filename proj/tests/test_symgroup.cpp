#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "schurkit/matrix.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/permutation.hpp"
#include "schurkit/tableaux.hpp"
#include "schurkit/young_orthogonal.hpp"

using namespace schurkit;

TEST_CASE("permutation basics") {
    Permutation g({2, 3, 1});
    CHECK(g(1) == 2);
    CHECK(g(3) == 1);
    CHECK(g.to_string() == "[2,3,1]");
    CHECK(g.inverse().to_string() == "[3,1,2]");
    CHECK(g.compose(g.inverse()).is_identity());
    CHECK(Permutation::identity(4).to_string() == "[1,2,3,4]");
    CHECK(Permutation::adjacent(4, 2).to_string() == "[1,3,2,4]");
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);

    // (a.compose(b))(x) = a(b(x)).
    Permutation a({2, 1, 3}), b({1, 3, 2});
    for (int x = 1; x <= 3; ++x) CHECK(a.compose(b)(x) == a(b(x)));
}

TEST_CASE("position action moves entry i to position g(i)") {
    Permutation g({2, 3, 1});
    std::vector<int> e = {10, 20, 30};
    auto out = g.act_on_positions(e);
    CHECK(out == std::vector<int>({30, 10, 20}));
    for (int i = 1; i <= 3; ++i) CHECK(out[g(i) - 1] == e[i - 1]);

    // Group action: (gh).e = g.(h.e).
    Permutation h({3, 2, 1});
    CHECK(g.compose(h).act_on_positions(e) == g.act_on_positions(h.act_on_positions(e)));
}

TEST_CASE("lex enumeration and ranking") {
    auto s3 = enumerate_sn(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3[0].to_string() == "[1,2,3]");
    CHECK(s3[5].to_string() == "[3,2,1]");
    for (std::size_t i = 0; i + 1 < s3.size(); ++i) CHECK(s3[i] < s3[i + 1]);
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_sn(n);
        CHECK((long long)all.size() == factorial(n));
        for (long long r = 0; r < (long long)all.size(); ++r) {
            CHECK(lex_rank(all[r]) == r);
            CHECK(lex_unrank(n, r) == all[r]);
        }
    }
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
}

TEST_CASE("factor_adjacent recomposes minimally") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_sn(n)) {
            auto word = factor_adjacent(g);
            Permutation acc = Permutation::identity(n);
            for (int k : word) acc = acc.compose(Permutation::adjacent(n, k));
            CHECK(acc == g);
            // Minimal length = inversion count.
            int inv = 0;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (g(i) > g(j)) ++inv;
            CHECK((int)word.size() == inv);
        }
}

TEST_CASE("young subgroup structure") {
    YoungSubgroup y(Composition({2, 0, 3}), 5);
    REQUIRE(y.blocks().size() == 3);
    CHECK(y.blocks()[0] == std::vector<int>({1, 2}));
    CHECK(y.blocks()[1].empty());
    CHECK(y.blocks()[2] == std::vector<int>({3, 4, 5}));
    CHECK(y.order() == 12);
    auto els = y.elements();
    CHECK((long long)els.size() == y.order());
    std::set<std::string> distinct;
    for (const auto& g : els) {
        distinct.insert(g.to_string());
        // Every element preserves each block.
        for (const auto& blk : y.blocks())
            for (int x : blk) CHECK(std::find(blk.begin(), blk.end(), g(x)) != blk.end());
    }
    CHECK((long long)distinct.size() == y.order());
    // Identity first (block-major with lex factors).
    CHECK(els[0].is_identity());

    YoungSubgroup full(Composition({4}), 4);
    CHECK(full.order() == 24);
    YoungSubgroup trivial(Composition({1, 1, 1}), 3);
    CHECK(trivial.order() == 1);
}

TEST_CASE("tuple type, coset decomposition, relabeling") {
    CHECK(tuple_type({1, 3, 1}, 3).to_string() == "[2,0,1]");

    // Round trip over all small tuples.
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d)
            for (const auto& e : enumerate_tuples(n, d)) {
                CosetDecomposition cd = tuple_to_coset(e, d);
                CHECK(coset_to_tuple(cd.type, cd.transversal) == e);
                // The transversal maps the sorted tuple onto e.
                std::vector<int> e0 = e;
                std::sort(e0.begin(), e0.end());
                CHECK(cd.transversal.act_on_positions(e0) == e);
            }

    // First-appearance relabeling depends on entry order.
    Relabeling fa1 = relabel_large_entries({8, 9}, 2);
    CHECK(fa1.forward.at(8) == 1);
    CHECK(fa1.forward.at(9) == 2);
    Relabeling fa2 = relabel_large_entries({9, 8}, 2);
    CHECK(fa2.forward.at(9) == 1);
    CHECK(fa2.forward.at(8) == 2);

    // Canonical relabeling depends only on the multiset.
    Relabeling ca1 = relabel_large_entries_canonical({8, 9}, 2);
    Relabeling ca2 = relabel_large_entries_canonical({9, 8}, 2);
    CHECK(ca1.forward == ca2.forward);
    CHECK(ca1.relabeled == std::vector<int>({2, 1}));
    CHECK(ca2.relabeled == std::vector<int>({1, 2}));

    // Worked interior pipeline: large alphabet tuple down to [n].
    std::vector<int> e = {5, 5, 10, 3, 9};
    Relabeling r = relabel_large_entries_canonical(e, 5);
    CHECK(r.forward.size() == 2);
    CHECK(r.forward.at(10) == 1);
    CHECK(r.forward.at(9) == 2);
    CHECK(r.relabeled == std::vector<int>({5, 5, 1, 3, 2}));
    Composition ty = tuple_type(r.relabeled, 5);
    CHECK(ty.to_string() == "[1,1,1,0,2]");
    CosetDecomposition cd = tuple_to_coset(r.relabeled, 5);
    CHECK(coset_to_tuple(cd.type, cd.transversal) == r.relabeled);
}

TEST_CASE("tuple enumeration and module tuples") {
    auto ts = enumerate_tuples(2, 3);
    REQUIRE(ts.size() == 9);
    CHECK(ts[0] == std::vector<int>({1, 1}));
    CHECK(ts[1] == std::vector<int>({1, 2}));
    CHECK(ts[8] == std::vector<int>({3, 3}));
    for (long long i = 0; i < (long long)ts.size(); ++i) CHECK(tuple_index(ts[i], 3) == i);

    auto mt = module_tuples(Composition({2, 1}), 3);
    REQUIRE(mt.size() == 3);
    CHECK(mt[0] == std::vector<int>({1, 1, 2}));
    CHECK(mt[1] == std::vector<int>({1, 2, 1}));
    CHECK(mt[2] == std::vector<int>({2, 1, 1}));

    // Count = multinomial coefficient.
    auto mt2 = module_tuples(Composition({2, 2}), 4);
    CHECK(mt2.size() == 6);
    auto mt3 = module_tuples(Composition({1, 1, 1, 1}), 4);
    CHECK(mt3.size() == 24);
}

TEST_CASE("young orthogonal transposition worked example") {
    // Shape (2,1), k = 2, basis { [[1,3],[2]], [[1,2],[3]] } in last-letter order.
    Mat m = young_orthogonal_transposition(Partition({2, 1}), 2);
    REQUIRE(m.rows == 2);
    const double h = 0.5, s = std::sqrt(3.0) / 2.0;
    CHECK(std::abs(m(0, 0) - cplx(h, 0)) < 1e-15);
    CHECK(std::abs(m(0, 1) - cplx(s, 0)) < 1e-15);
    CHECK(std::abs(m(1, 0) - cplx(s, 0)) < 1e-15);
    CHECK(std::abs(m(1, 1) - cplx(-h, 0)) < 1e-15);

    // k = 1 fixes both tableaux up to sign: 1,2 share a row or column.
    Mat m1 = young_orthogonal_transposition(Partition({2, 1}), 1);
    CHECK(std::abs(m1(0, 0) - cplx(-1, 0)) < 1e-15);  // [[1,3],[2]]: 1,2 in a column
    CHECK(std::abs(m1(1, 1) - cplx(1, 0)) < 1e-15);   // [[1,2],[3]]: 1,2 in a row
    CHECK(std::abs(m1(0, 1)) == 0.0);
}

TEST_CASE("coxeter relations hold for every shape") {
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            std::vector<Mat> s;
            for (int k = 1; k < n; ++k) s.push_back(young_orthogonal_transposition(lam, k));
            for (int k = 0; k < n - 1; ++k) {
                worst = std::max(worst, max_abs_dist_identity(matmul(s[k], s[k])));
                if (k + 1 < n - 1) {
                    Mat lhs = matmul(s[k], matmul(s[k + 1], s[k]));
                    Mat rhs = matmul(s[k + 1], matmul(s[k], s[k + 1]));
                    worst = std::max(worst, max_abs_diff(lhs, rhs));
                }
                for (int j = k + 2; j < n - 1; ++j)
                    worst = std::max(worst,
                                     max_abs_diff(matmul(s[k], s[j]), matmul(s[j], s[k])));
            }
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("irrep_matrix is a homomorphism") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (const auto& g : enumerate_sn(n)) {
                for (const auto& h : enumerate_sn(n)) {
                    Mat lhs = irrep_matrix(lam, g.compose(h));
                    Mat rhs = matmul(irrep_matrix(lam, g), irrep_matrix(lam, h));
                    CHECK(max_abs_diff(lhs, rhs) < 1e-13);
                }
                CHECK(unitarity_residual(irrep_matrix(lam, g)) < 1e-13);
            }
    CHECK(max_abs_dist_identity(irrep_matrix(Partition({3, 1}), Permutation::identity(4))) ==
          0.0);
}

TEST_CASE("characters match the permutation-module counting oracle") {
    // The module with content mu decomposes with Kostka multiplicities, and its
    // character at g counts the tuples g fixes. Solving the triangular system
    // in descending lex order isolates each irreducible character without
    // touching the irrep matrices, which are then compared entry-wise.
    for (int n = 1; n <= 5; ++n) {
        auto lams = enumerate_partitions(n);
        auto group = enumerate_sn(n);
        // chars[i][r] = chi_{lams[i]}(group[r])
        std::vector<std::vector<double>> chars(lams.size(),
                                               std::vector<double>(group.size(), 0.0));
        for (std::size_t mi = 0; mi < lams.size(); ++mi) {
            const auto& mu = lams[mi];
            Composition ty(mu.parts());
            auto tuples = module_tuples(ty, n);
            for (std::size_t r = 0; r < group.size(); ++r) {
                double xi = 0.0;
                for (const auto& e : tuples)
                    if (group[r].act_on_positions(e) == e) xi += 1.0;
                double corr = 0.0;
                for (std::size_t li = 0; li < mi; ++li)
                    if (dominates(lams[li], mu))
                        corr += (double)kostka(lams[li], ty) * chars[li][r];
                chars[mi][r] = xi - corr;
            }
        }
        for (std::size_t mi = 0; mi < lams.size(); ++mi)
            for (std::size_t r = 0; r < group.size(); ++r)
                CHECK(std::abs(irrep_character(lams[mi], group[r]) - chars[mi][r]) < 1e-10);
    }
}

TEST_CASE("group_average projects with Kostka rank") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (const auto& mu : enumerate_partitions(n)) {
                YoungSubgroup y(Composition(mu.parts()), n);
                Mat p = group_average(lam, y);
                // Projector: p^2 = p, symmetric.
                CHECK(max_abs_diff(matmul(p, p), p) < 1e-12);
                CHECK(max_abs_diff(p, adjoint(p)) < 1e-12);
                double tr = 0.0;
                for (std::size_t i = 0; i < p.rows; ++i) tr += p(i, i).real();
                CHECK(std::abs(tr - (double)kostka(lam, Composition(mu.parts()))) < 1e-9);
            }
}
