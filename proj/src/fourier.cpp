#include "schurkit/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "schurkit/young_orthogonal.hpp"

namespace schurkit {

long long BlockStructure::offset_of(std::size_t b, std::size_t m, std::size_t i) const {
    long long off = 0;
    for (std::size_t k = 0; k < b; ++k)
        off += (long long)blocks[k].mult_labels.size() * (long long)blocks[k].irrep_labels.size();
    const auto& blk = blocks[b];
    if (m >= blk.mult_labels.size() || i >= blk.irrep_labels.size())
        throw std::out_of_range("BlockStructure::offset_of");
    if (blk.mult_major) return off + (long long)(m * blk.irrep_labels.size() + i);
    return off + (long long)(i * blk.mult_labels.size() + m);
}

std::pair<long long, long long> BlockStructure::block_range(std::size_t b) const {
    long long off = 0;
    for (std::size_t k = 0; k < b; ++k)
        off += (long long)blocks[k].mult_labels.size() * (long long)blocks[k].irrep_labels.size();
    const long long len =
        (long long)blocks[b].mult_labels.size() * (long long)blocks[b].irrep_labels.size();
    return {off, off + len};
}

long long BlockStructure::padded_dimension() const {
    long long p = 1;
    while (p < total_dim) p <<= 1;
    return p;
}

namespace {

std::string fourier_row_label(const Partition& lam, const std::string& a, const std::string& b) {
    return lam.to_string() + "|" + a + "|" + b;
}

// One-line word of the coset representative t_i = [1..i-1, i+1..n, i];
// t_i maps n to i and is increasing on [n-1].
Permutation coset_rep(int n, int i) {
    std::vector<int> img;
    img.reserve((std::size_t)n);
    for (int v = 1; v <= n; ++v)
        if (v != i) img.push_back(v);
    img.push_back(i);
    return Permutation(std::move(img));
}

}  // namespace

BlockStructure qft_sn_blocks(int n) {
    BlockStructure bs;
    for (const Partition& lam : enumerate_partitions(n)) {
        IrrepBlock blk;
        blk.lambda = lam;
        std::vector<std::string> syt_labels;
        for (const StandardTableau& t : enumerate_syt(lam)) syt_labels.push_back(t.to_string());
        // Layout is T_row major: the group acts on T_row, so the irrep axis
        // is the major one and the multiplicity axis (T_col) minor.
        blk.irrep_labels = syt_labels;
        blk.mult_labels = syt_labels;
        blk.mult_major = false;
        bs.blocks.push_back(std::move(blk));
    }
    bs.total_dim = factorial(n);
    return bs;
}

LabeledUnitary qft_sn(int n) {
    if (n < 1) throw std::invalid_argument("qft_sn: n must be >= 1");
    LabeledUnitary out;
    // Row labels: (lambda, T_row, T_col), partitions descending lex,
    // T_row major within each block.
    for (const Partition& lam : enumerate_partitions(n)) {
        const auto syts = enumerate_syt(lam);
        for (const auto& tr : syts)
            for (const auto& tc : syts)
                out.row_labels.push_back(fourier_row_label(lam, tr.to_string(), tc.to_string()));
    }
    for (const Permutation& g : enumerate_sn(n)) out.col_labels.push_back(g.to_string());

    if (n == 1) {
        out.mat = Mat::identity(1);
        return out;
    }

    const LabeledUnitary prev = qft_sn(n - 1);
    const long long fn = factorial(n), fn1 = factorial(n - 1);

    // Stage 1+2: split g = t_i h (h fixes n), send h through the S_{n-1}
    // transform; column g of X holds prev's h-column in coset slot i.
    Mat x((std::size_t)fn, (std::size_t)fn);
    {
        const auto elems = enumerate_sn(n);
        for (std::size_t c = 0; c < elems.size(); ++c) {
            const Permutation& g = elems[c];
            const int i = g(n);
            // h = t_i^{-1} o g; t_i^{-1} sends v < i to v, v > i to v-1.
            std::vector<int> him((std::size_t)(n - 1));
            for (int xx = 1; xx < n; ++xx) {
                const int v = g(xx);
                him[(std::size_t)xx - 1] = (v < i) ? v : v - 1;
            }
            const long long hr = lex_rank(Permutation(std::move(him)));
            const std::size_t base = (std::size_t)((i - 1) * fn1);
            for (std::size_t r = 0; r < (std::size_t)fn1; ++r)
                x(base + r, c) = prev.mat(r, (std::size_t)hr);
        }
    }

    // Stage 3: lift each mu-isotype of S_{n-1} into every lambda covering mu,
    // weighting with lambda(t_i) restricted to the mu-group of SYT(lambda).
    Mat b((std::size_t)fn, (std::size_t)fn);
    {
        const auto lams = enumerate_partitions(n);
        const auto mus = enumerate_partitions(n - 1);
        std::vector<long long> mu_off(mus.size()), mu_dim(mus.size());
        long long off = 0;
        for (std::size_t mi = 0; mi < mus.size(); ++mi) {
            mu_dim[mi] = hook_dimension(mus[mi]);
            mu_off[mi] = off;
            off += mu_dim[mi] * mu_dim[mi];
        }
        auto mu_index = [&](const Partition& p) -> std::size_t {
            for (std::size_t mi = 0; mi < mus.size(); ++mi)
                if (mus[mi] == p) return mi;
            throw std::logic_error("qft_sn: missing subshape");
        };
        long long lam_off = 0;
        for (const Partition& lam : lams) {
            const long long dl = hook_dimension(lam);
            // Corners in ascending row order: the same order enumerate_syt
            // groups tableaux by the box holding n.
            std::vector<std::pair<std::size_t, long long>> groups;  // (mu idx, group offset)
            long long goff = 0;
            for (int r = 0; r < lam.num_parts(); ++r) {
                if (r + 1 < lam.num_parts() && lam.part(r) == lam.part(r + 1)) continue;
                std::vector<int> parts = lam.parts();
                parts[(std::size_t)r] -= 1;
                const Partition mu(std::move(parts));
                const std::size_t mi = mu_index(mu);
                groups.push_back({mi, goff});
                goff += mu_dim[mi];
            }
            if (goff != dl) throw std::logic_error("qft_sn: branching dims");
            for (int i = 1; i <= n; ++i) {
                const Mat lti = irrep_matrix(lam, coset_rep(n, i));
                for (const auto& [mi, gof] : groups) {
                    const long long dm = mu_dim[mi];
                    const double coef =
                        std::sqrt((double)dl * (double)fn1 / ((double)fn * (double)dm));
                    for (long long ip = 0; ip < dm; ++ip)
                        for (long long jp = 0; jp < dm; ++jp) {
                            const std::size_t col = (std::size_t)((i - 1) * fn1 + mu_off[mi] +
                                                                  ip * dm + jp);
                            for (long long t = 0; t < dl; ++t) {
                                const std::size_t row =
                                    (std::size_t)(lam_off + t * dl + (gof + jp));
                                b(row, col) += coef * lti((std::size_t)t, (std::size_t)(gof + ip));
                            }
                        }
                }
            }
            lam_off += dl * dl;
        }
    }

    out.mat = matmul(b, x);
    return out;
}

LabeledUnitary qft_young(const YoungSubgroup& y) {
    LabeledUnitary out;
    out.mat = Mat::identity(1);
    std::vector<std::string> labels = {""};
    for (const auto& block : y.blocks()) {
        if (block.empty()) continue;
        const LabeledUnitary q = qft_sn((int)block.size());
        out.mat = kron(out.mat, q.mat);
        std::vector<std::string> next;
        next.reserve(labels.size() * q.row_labels.size());
        for (const auto& a : labels)
            for (const auto& r : q.row_labels) next.push_back(a.empty() ? r : a + "*" + r);
        labels = std::move(next);
    }
    if (labels.size() == 1 && labels[0].empty()) labels[0] = "trivial";
    out.row_labels = std::move(labels);
    for (const Permutation& g : y.elements()) out.col_labels.push_back(g.to_string());
    if (out.col_labels.size() != out.mat.cols) throw std::logic_error("qft_young: dim mismatch");
    return out;
}

LabeledUnitary induced_qft(const YoungSubgroup& y, int n) {
    if (y.n() != n) throw std::invalid_argument("induced_qft: subgroup size mismatch");
    const LabeledUnitary qn = qft_sn(n);
    const LabeledUnitary qy = qft_young(y);
    const long long fn = factorial(n);
    const long long sy = y.order();
    const long long m = fn / sy;

    const auto tuples = module_tuples(y.type(), n);
    if ((long long)tuples.size() != m) throw std::logic_error("induced_qft: transversal count");
    std::vector<Permutation> reps;
    reps.reserve(tuples.size());
    for (const auto& e : tuples) reps.push_back(tuple_to_coset(e, y.type().length()).transversal);

    const auto yels = y.elements();
    // M1 = Merge . (I_m (x) QY^dagger): column (a, f) spreads the conjugated
    // f-row of QY over the coset t_a Y.
    Mat m1((std::size_t)fn, (std::size_t)fn);
    for (long long a = 0; a < m; ++a)
        for (std::size_t j = 0; j < yels.size(); ++j) {
            const long long row = lex_rank(reps[(std::size_t)a].compose(yels[j]));
            for (long long f = 0; f < sy; ++f)
                m1((std::size_t)row, (std::size_t)(a * sy + f)) =
                    std::conj(qy.mat((std::size_t)f, j));
        }

    LabeledUnitary out;
    out.mat = matmul(qn.mat, m1);
    out.row_labels = qn.row_labels;
    for (long long a = 0; a < m; ++a)
        for (long long f = 0; f < sy; ++f)
            out.col_labels.push_back(reps[(std::size_t)a].to_string() + ";" +
                                     qy.row_labels[(std::size_t)f]);
    return out;
}

LabeledUnitary gpe_unitary(const YoungSubgroup& y, int n) {
    if (y.n() != n) throw std::invalid_argument("gpe_unitary: subgroup size mismatch");
    const LabeledUnitary qy = qft_young(y);
    const long long fn = factorial(n);
    const long long sy = y.order();
    const auto elems = enumerate_sn(n);
    const auto yels = y.elements();

    // (I (x) QY) . CR . (I (x) QY^dagger) assembled columnwise; CR is
    // controlled right multiplication |g,h> -> |g o h, h>.
    Mat gmat((std::size_t)(fn * sy), (std::size_t)(fn * sy));
    for (long long g = 0; g < fn; ++g) {
        for (std::size_t j = 0; j < yels.size(); ++j) {
            const long long gh = lex_rank(elems[(std::size_t)g].compose(yels[j]));
            for (long long f = 0; f < sy; ++f) {
                const cplx win = std::conj(qy.mat((std::size_t)f, j));
                if (win == cplx(0.0, 0.0)) continue;
                for (long long fp = 0; fp < sy; ++fp)
                    gmat((std::size_t)(gh * sy + fp), (std::size_t)(g * sy + f)) +=
                        qy.mat((std::size_t)fp, j) * win;
            }
        }
    }
    LabeledUnitary out;
    out.mat = std::move(gmat);
    for (long long g = 0; g < fn; ++g)
        for (long long f = 0; f < sy; ++f)
            out.row_labels.push_back(elems[(std::size_t)g].to_string() + ";" +
                                     qy.row_labels[(std::size_t)f]);
    out.col_labels = out.row_labels;
    return out;
}

std::vector<cplx> gpe_apply(const std::vector<cplx>& state, const YoungSubgroup& y, int n) {
    const long long fn = factorial(n);
    const long long sy = y.order();
    if ((long long)state.size() != fn * sy)
        throw std::invalid_argument("gpe_apply: state dimension must be n! * |Y|");
    const LabeledUnitary qy = qft_young(y);
    const auto elems = enumerate_sn(n);
    const auto yels = y.elements();
    // Precompute right-multiplication targets g -> g o h_j.
    std::vector<long long> rmul((std::size_t)(fn * (long long)yels.size()));
    for (long long g = 0; g < fn; ++g)
        for (std::size_t j = 0; j < yels.size(); ++j)
            rmul[(std::size_t)(g * sy) + j] = lex_rank(elems[(std::size_t)g].compose(yels[j]));

    // Stage 1: control register back to the group basis (QY^dagger).
    std::vector<cplx> a((std::size_t)(fn * sy));
    for (long long g = 0; g < fn; ++g)
        for (long long j = 0; j < sy; ++j) {
            cplx acc(0.0, 0.0);
            for (long long f = 0; f < sy; ++f)
                acc += std::conj(qy.mat((std::size_t)f, (std::size_t)j)) *
                       state[(std::size_t)(g * sy + f)];
            a[(std::size_t)(g * sy + j)] = acc;
        }
    // Stage 2: controlled right multiplication.
    std::vector<cplx> b((std::size_t)(fn * sy));
    for (long long g = 0; g < fn; ++g)
        for (long long j = 0; j < sy; ++j)
            b[(std::size_t)(rmul[(std::size_t)(g * sy + j)] * sy + j)] +=
                a[(std::size_t)(g * sy + j)];
    // Stage 3: control register forward to the Fourier basis.
    std::vector<cplx> c((std::size_t)(fn * sy));
    for (long long g = 0; g < fn; ++g)
        for (long long f = 0; f < sy; ++f) {
            cplx acc(0.0, 0.0);
            for (long long j = 0; j < sy; ++j)
                acc += qy.mat((std::size_t)f, (std::size_t)j) * b[(std::size_t)(g * sy + j)];
            c[(std::size_t)(g * sy + f)] = acc;
        }
    return c;
}

std::optional<std::vector<double>> trivial_vector(const Partition& shape,
                                                  const StandardTableau& t,
                                                  const YoungSubgroup& y) {
    if (t.shape() != shape) throw std::invalid_argument("trivial_vector: shape mismatch");
    const auto syts = enumerate_syt(shape);
    std::size_t ti = syts.size();
    for (std::size_t i = 0; i < syts.size(); ++i)
        if (syts[i] == t) {
            ti = i;
            break;
        }
    if (ti == syts.size()) throw std::invalid_argument("trivial_vector: tableau not of shape");
    const Mat p = group_average(shape, y);
    std::vector<double> v(syts.size());
    double norm2 = 0.0;
    for (std::size_t i = 0; i < syts.size(); ++i) {
        v[i] = p(i, ti).real();
        norm2 += v[i] * v[i];
    }
    const double norm = std::sqrt(norm2);
    if (norm < 1e-9) return std::nullopt;
    double sign = 1.0;
    for (double x : v)
        if (std::abs(x) > 1e-9 * norm) {
            sign = (x < 0.0) ? -1.0 : 1.0;
            break;
        }
    for (double& x : v) x *= sign / norm;
    return v;
}

PermModTransform qft_permmod(const Composition& type, int n) {
    if (type.sum() != n) throw std::invalid_argument("qft_permmod: type must sum to n");
    const YoungSubgroup y(type, n);
    const long long fn = factorial(n);
    const long long sy = y.order();
    const auto tuples = module_tuples(type, n);
    const long long m = (long long)tuples.size();
    const Partition mu = type.sorted();

    struct Block {
        Partition lambda;
        std::vector<SemistandardTableau> ssyts;
        std::vector<StandardTableau> syts;
        std::vector<std::vector<double>> mult_vectors;
    };
    std::vector<Block> blocks;
    long long dim = 0;
    for (const Partition& lam : enumerate_partitions(n)) {
        if (!dominates(lam, mu)) continue;
        auto ssyts = enumerate_ssyt(lam, type);
        if (ssyts.empty()) continue;
        Block blk;
        blk.lambda = lam;
        blk.syts = enumerate_syt(lam);
        for (const auto& s : ssyts) {
            const StandardTableau canon = canonical_standardization(s, type);
            auto v = trivial_vector(lam, canon, y);
            if (!v) throw std::logic_error("qft_permmod: canonical projection vanished");
            blk.mult_vectors.push_back(std::move(*v));
        }
        blk.ssyts = std::move(ssyts);
        dim += (long long)(blk.ssyts.size() * blk.syts.size());
        blocks.push_back(std::move(blk));
    }
    if (dim != m) throw std::logic_error("qft_permmod: module dimension mismatch");

    PermModTransform out;
    out.unitary.mat = Mat((std::size_t)dim, (std::size_t)m);
    for (std::size_t col = 0; col < tuples.size(); ++col) {
        const Permutation t = tuple_to_coset(tuples[col], type.length()).transversal;
        long long r = 0;
        for (const Block& blk : blocks) {
            const Mat l = irrep_matrix(blk.lambda, t);
            const long long dl = (long long)blk.syts.size();
            const double coef =
                std::sqrt((double)hook_dimension(blk.lambda) * (double)sy / (double)fn);
            for (const auto& v : blk.mult_vectors) {
                for (long long i = 0; i < dl; ++i) {
                    cplx acc(0.0, 0.0);
                    for (long long j = 0; j < dl; ++j)
                        acc += l((std::size_t)i, (std::size_t)j) * v[(std::size_t)j];
                    out.unitary.mat((std::size_t)(r + i), col) = coef * acc;
                }
                r += dl;
            }
        }
    }

    for (const Block& blk : blocks) {
        IrrepBlock ib;
        ib.lambda = blk.lambda;
        for (const auto& s : blk.ssyts) ib.mult_labels.push_back(s.to_string());
        for (const auto& t : blk.syts) ib.irrep_labels.push_back(t.to_string());
        ib.mult_major = true;
        for (const auto& ml : ib.mult_labels)
            for (const auto& il : ib.irrep_labels)
                out.unitary.row_labels.push_back(blk.lambda.to_string() + "|" + ml + "|" + il);
        out.structure.blocks.push_back(std::move(ib));
    }
    out.structure.total_dim = dim;
    for (const auto& e : tuples) {
        std::string s = "[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(e[i]);
        }
        s += ']';
        out.unitary.col_labels.push_back(std::move(s));
    }
    out.tuples = tuples;
    return out;
}

}  // namespace schurkit
