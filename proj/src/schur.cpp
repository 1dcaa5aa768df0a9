#include "schurkit/schur.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "schurkit/rsk.hpp"
#include "schurkit/young_orthogonal.hpp"

namespace schurkit {

std::string SchurBasisLabel::to_string() const {
    return lambda.to_string() + "|" + q.to_string() + "|" + p.to_string();
}

std::vector<SchurBasisLabel> schur_basis(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("schur_basis: n, d must be positive");
    std::vector<SchurBasisLabel> out;
    for (const Partition& lam : enumerate_partitions(n, d)) {
        const auto ssyts = enumerate_ssyt_bounded(lam, d);
        const auto syts = enumerate_syt(lam);
        for (const auto& q : ssyts)
            for (const auto& p : syts) out.push_back({lam, q, p});
    }
    return out;
}

BlockStructure schur_block_structure(int n, int d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("schur_block_structure: n, d must be positive");
    BlockStructure bs;
    long long total = 0;
    for (const Partition& lam : enumerate_partitions(n, d)) {
        IrrepBlock blk;
        blk.lambda = lam;
        for (const auto& q : enumerate_ssyt_bounded(lam, d)) blk.mult_labels.push_back(q.to_string());
        for (const auto& p : enumerate_syt(lam)) blk.irrep_labels.push_back(p.to_string());
        blk.mult_major = true;
        total += (long long)blk.mult_labels.size() * (long long)blk.irrep_labels.size();
        bs.blocks.push_back(std::move(blk));
    }
    long long dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    if (total != dim) throw std::logic_error("schur_block_structure: dimension mismatch");
    bs.total_dim = total;
    return bs;
}

namespace {

// Whether entry m_{k,l} can change by delta without breaking the pattern
// constraints; only rows l-1, l, l+1 are affected. Never used on the top row.
bool shift_valid(const GTPattern& m, int k, int l, int delta) {
    const int d = m.depth();
    const int v = m.entry(k, l) + delta;
    if (k > 1 && m.entry(k - 1, l) < v) return false;
    if (k < l && v < m.entry(k + 1, l)) return false;
    if (l + 1 <= d) {
        if (m.entry(k, l + 1) < v) return false;
        if (v < m.entry(k + 1, l + 1)) return false;
    }
    if (l >= 2) {
        if (k <= l - 1 && v < m.entry(k, l - 1)) return false;
        if (k >= 2 && m.entry(k - 1, l - 1) < v) return false;
    }
    return v >= 0;
}

GTPattern shifted_pattern(const GTPattern& m, int k, int l, int delta) {
    std::vector<std::vector<int>> rows = m.rows();
    rows[(std::size_t)(m.depth() - l)][(std::size_t)k - 1] += delta;
    return GTPattern(std::move(rows));
}

// sqrt(-num/den) over integer factor lists, accumulated in log space: the
// raw products reach factorial scale in the row length and overflow double
// once l is in the hundreds, while the ratio itself stays modest.
struct FactorRatio {
    double logmag = 0.0;
    int negs = 0;
    bool zero = false;

    void mul(int f) {
        if (f == 0) {
            zero = true;
            return;
        }
        if (f < 0) {
            ++negs;
            f = -f;
        }
        logmag += std::log((double)f);
    }
    void div(int f) {
        if (f == 0) throw std::logic_error("gt coefficient: zero denominator factor");
        if (f < 0) {
            ++negs;
            f = -f;
        }
        logmag -= std::log((double)f);
    }
    // The ratio is a product of integer factors, so its sign is exact: a
    // positive ratio here is a structural error, not roundoff.
    double sqrt_of_negated() const {
        if (zero) return 0.0;
        if (negs % 2 == 0) throw std::logic_error("gt coefficient: negative radicand");
        return std::exp(0.5 * logmag);
    }
};

// Coefficient of the raising move m_{k,l} -> m_{k,l} + 1 (one entry l+1 -> l).
double jp_coeff(const GTPattern& m, int k, int l) {
    FactorRatio r;
    const int mkl = m.entry(k, l);
    for (int kp = 1; kp <= l + 1; ++kp) r.mul(m.entry(kp, l + 1) - mkl + k - kp);
    for (int kp = 1; kp <= l - 1; ++kp) r.mul(m.entry(kp, l - 1) - mkl + k - kp - 1);
    for (int kp = 1; kp <= l; ++kp) {
        if (kp == k) continue;
        r.div(m.entry(kp, l) - mkl + k - kp);
        r.div(m.entry(kp, l) - mkl + k - kp - 1);
    }
    return r.sqrt_of_negated();
}

// Coefficient of the lowering move m_{k,l} -> m_{k,l} - 1 (one entry l -> l+1).
double jm_coeff(const GTPattern& m, int k, int l) {
    FactorRatio r;
    const int mkl = m.entry(k, l);
    for (int kp = 1; kp <= l + 1; ++kp) r.mul(m.entry(kp, l + 1) - mkl + k - kp + 1);
    for (int kp = 1; kp <= l - 1; ++kp) r.mul(m.entry(kp, l - 1) - mkl + k - kp);
    for (int kp = 1; kp <= l; ++kp) {
        if (kp == k) continue;
        r.div(m.entry(kp, l) - mkl + k - kp + 1);
        r.div(m.entry(kp, l) - mkl + k - kp);
    }
    return r.sqrt_of_negated();
}

}  // namespace

Mat gt_generator(const Partition& shape, int d, GtOp op, int l) {
    if (d < 1) throw std::invalid_argument("gt_generator: d must be positive");
    if (l < 1 || l >= d) throw std::invalid_argument("gt_generator: l out of [1, d-1]");
    static std::map<std::string, Mat> cache;
    static std::mutex mu;
    const std::string key = shape.to_string() + "|" + std::to_string(d) + "|" +
                            std::to_string((int)op) + "|" + std::to_string(l);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const auto ssyts = enumerate_ssyt_bounded(shape, d);
    const std::size_t kk = ssyts.size();
    Mat m(kk, kk);
    if (op == GtOp::J0) {
        for (std::size_t i = 0; i < kk; ++i) {
            const Composition c = ssyts[i].content(d);
            m(i, i) = 0.5 * (double)(c.count(l) - c.count(l + 1));
        }
    } else {
        std::vector<GTPattern> pats;
        pats.reserve(kk);
        std::unordered_map<std::string, std::size_t> pidx;
        for (std::size_t i = 0; i < kk; ++i) {
            pats.push_back(ssyt_to_gt(ssyts[i], d));
            pidx[pats.back().to_string()] = i;
        }
        const int delta = (op == GtOp::Jplus) ? 1 : -1;
        for (std::size_t i = 0; i < kk; ++i) {
            for (int k = 1; k <= l; ++k) {
                if (!shift_valid(pats[i], k, l, delta)) continue;
                const double c = (op == GtOp::Jplus) ? jp_coeff(pats[i], k, l)
                                                     : jm_coeff(pats[i], k, l);
                const std::size_t j = pidx.at(shifted_pattern(pats[i], k, l, delta).to_string());
                m(j, i) += c;
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(m)).first->second;
}

namespace {

Mat commutator(const Mat& a, const Mat& b) {
    return add(matmul(a, b), scale(matmul(b, a), cplx(-1.0, 0.0)));
}

// d rho(X) for X in gl(d), on the bounded-tableau basis: diagonal units act
// by content counts, adjacent units by the tableau-basis ladder operators,
// the rest by nested commutators E_{a,c} = [E_{a,b}, E_{b,c}].
Mat differential_image(const Partition& shape, int d, const Mat& x) {
    const auto ssyts = enumerate_ssyt_bounded(shape, d);
    const std::size_t kk = ssyts.size();
    std::vector<std::vector<Mat>> de((std::size_t)d, std::vector<Mat>((std::size_t)d));
    for (int a = 0; a < d; ++a) {
        Mat diag(kk, kk);
        for (std::size_t i = 0; i < kk; ++i) diag(i, i) = (double)ssyts[i].content(d).count(a + 1);
        de[(std::size_t)a][(std::size_t)a] = std::move(diag);
    }
    for (int a = 0; a + 1 < d; ++a) {
        de[(std::size_t)a][(std::size_t)a + 1] = gt_generator(shape, d, GtOp::Jplus, a + 1);
        de[(std::size_t)a + 1][(std::size_t)a] = gt_generator(shape, d, GtOp::Jminus, a + 1);
    }
    for (int dist = 2; dist < d; ++dist)
        for (int a = 0; a + dist < d; ++a) {
            const int b = a + dist;
            de[(std::size_t)a][(std::size_t)b] =
                commutator(de[(std::size_t)a][(std::size_t)a + 1], de[(std::size_t)a + 1][(std::size_t)b]);
            de[(std::size_t)b][(std::size_t)a] =
                commutator(de[(std::size_t)b][(std::size_t)b - 1], de[(std::size_t)b - 1][(std::size_t)a]);
        }
    Mat acc(kk, kk);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const cplx v = x((std::size_t)a, (std::size_t)b);
            if (std::abs(v) < 1e-16) continue;
            acc = add(acc, scale(de[(std::size_t)a][(std::size_t)b], v));
        }
    return acc;
}

double inf_norm_dist_identity(const Mat& u) {
    double norm = 0.0;
    for (std::size_t i = 0; i < u.rows; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < u.cols; ++j) {
            const cplx e = u(i, j) - (i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0));
            row += std::abs(e);
        }
        norm = std::max(norm, row);
    }
    return norm;
}

}  // namespace

Mat unitary_irrep(const Partition& shape, int d, const Mat& u) {
    if (u.rows != (std::size_t)d || !u.is_square())
        throw std::invalid_argument("unitary_irrep: u must be d x d");
    if (shape.num_parts() > d) throw std::invalid_argument("unitary_irrep: shape has > d rows");
    if (unitarity_residual(u) > 1e-8)
        throw std::invalid_argument("unitary_irrep: u is not unitary");
    const auto ssyts = enumerate_ssyt_bounded(shape, d);
    const std::size_t kk = ssyts.size();

    if (max_abs_dist_identity(u) < 0.1 && inf_norm_dist_identity(u) < 0.4) {
        const Mat x = logm_near_identity(u);
        return expm(differential_image(shape, d, x));
    }

    // Factor u into adjacent Givens rotations times a diagonal phase:
    // u = G_1^dagger ... G_m^dagger D with each G acting on rows (i, i+1).
    Mat w = u;
    struct Factor {
        int l;       // level: rows l-1, l (0-based) = values l, l+1
        cplx g[2][2];
    };
    std::vector<Factor> facs;
    for (int j = 0; j < d - 1; ++j)
        for (int i = d - 2; i >= j; --i) {
            const cplx a = w((std::size_t)i, (std::size_t)j);
            const cplx b = w((std::size_t)i + 1, (std::size_t)j);
            if (std::abs(b) < 1e-14) continue;
            const double r = std::hypot(std::abs(a), std::abs(b));
            const cplx al = std::conj(a) / r, be = std::conj(b) / r;
            for (std::size_t c = 0; c < (std::size_t)d; ++c) {
                const cplx wi = w((std::size_t)i, c), wi1 = w((std::size_t)i + 1, c);
                w((std::size_t)i, c) = al * wi + be * wi1;
                w((std::size_t)i + 1, c) = -std::conj(be) * wi + std::conj(al) * wi1;
            }
            Factor f;
            f.l = i + 1;
            f.g[0][0] = al;
            f.g[0][1] = be;
            f.g[1][0] = -std::conj(be);
            f.g[1][1] = std::conj(al);
            facs.push_back(f);
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j && std::abs(w((std::size_t)i, (std::size_t)j)) > 1e-8)
                throw std::logic_error("unitary_irrep: Givens elimination left off-diagonal mass");

    // Image of the diagonal phase: product of per-value phases to the content.
    Mat result(kk, kk);
    for (std::size_t i = 0; i < kk; ++i) {
        const Composition c = ssyts[i].content(d);
        cplx val(1.0, 0.0);
        for (int v = 1; v <= d; ++v)
            for (int rep = 0; rep < c.count(v); ++rep) val *= w((std::size_t)v - 1, (std::size_t)v - 1);
        result(i, i) = val;
    }

    for (auto it = facs.rbegin(); it != facs.rend(); ++it) {
        // gd = G^dagger in SU(2); its log theta*K feeds the level-l generators.
        const cplx gd00 = std::conj(it->g[0][0]), gd01 = std::conj(it->g[1][0]);
        const cplx gd10 = std::conj(it->g[0][1]), gd11 = std::conj(it->g[1][1]);
        const cplx c = 0.5 * (gd00 + gd11);
        const double ct = std::clamp(c.real(), -1.0, 1.0);
        const double theta = std::acos(ct);
        const double st = std::sin(theta);
        cplx x00(0.0, 0.0), x01(0.0, 0.0), x10(0.0, 0.0);
        if (std::abs(st) < 1e-12) {
            if (ct < 0.0)
                throw std::logic_error("unitary_irrep: rotation at angle pi is not factorable");
            // G^dagger = I: nothing to apply.
        } else {
            x00 = theta * (gd00 - c) / st;
            x01 = theta * gd01 / st;
            x10 = theta * gd10 / st;
        }
        if (x00 == cplx(0.0, 0.0) && x01 == cplx(0.0, 0.0) && x10 == cplx(0.0, 0.0)) continue;
        const int l = it->l;
        Mat xq = scale(gt_generator(shape, d, GtOp::J0, l), 2.0 * x00);
        xq = add(xq, scale(gt_generator(shape, d, GtOp::Jplus, l), x01));
        xq = add(xq, scale(gt_generator(shape, d, GtOp::Jminus, l), x10));
        result = matmul(expm(xq), result);
    }
    return result;
}

namespace {

std::string tuple_label(const std::vector<int>& e) {
    std::string s = "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    s += ']';
    return s;
}

// Rewrite a tableau over the compressed alphabet of `ty` back onto the
// original letters listed in `orig_of`: repeatedly exchange adjacent value
// multiplicities until the letter sequence is sorted, then substitute.
SemistandardTableau restore_alphabet(const SemistandardTableau& s, const Composition& ty,
                                     const std::vector<int>& orig_of) {
    std::vector<int> occ;
    for (int v = 1; v <= ty.length(); ++v)
        if (ty.count(v) > 0) occ.push_back(v);
    std::vector<int> comp((std::size_t)ty.length() + 1, 0);
    for (std::size_t i = 0; i < occ.size(); ++i) comp[(std::size_t)occ[i]] = (int)i + 1;

    std::vector<std::vector<int>> grid = s.rows();
    for (auto& row : grid)
        for (int& v : row) v = comp[(std::size_t)v];
    SemistandardTableau sc(std::move(grid));

    std::vector<int> letters;
    letters.reserve(occ.size());
    for (int v : occ) letters.push_back(orig_of[(std::size_t)v]);
    while (true) {
        int j = -1;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i)
            if (letters[i] > letters[i + 1]) {
                j = (int)i;
                break;
            }
        if (j < 0) break;
        sc = swap_content(sc, j + 1);
        std::swap(letters[(std::size_t)j], letters[(std::size_t)j + 1]);
    }

    std::vector<std::vector<int>> out = sc.rows();
    for (auto& row : out)
        for (int& v : row) v = letters[(std::size_t)v - 1];
    return SemistandardTableau(std::move(out));
}

struct AlignShapeData {
    long long base = 0;   // first row of the block in the full matrix
    long long dlam = 0;   // standard-tableau count
    std::vector<SemistandardTableau> ssyts;
    std::vector<GTPattern> pats;
    std::unordered_map<std::string, std::size_t> pat_index;
};

struct PmEntry {
    PermModTransform pm;
    std::unordered_map<std::string, std::size_t> col_of;
};

// One content class of tuples: where each row of its permutation-module
// transform lands in the full matrix, and which full-matrix column each
// transform column feeds.
struct ClassPlan {
    const PermModTransform* pm = nullptr;
    std::vector<long long> rowmap;                        // pm row -> global row
    std::vector<std::pair<long long, std::size_t>> cols;  // (tuple index, pm column)
};

// Everything needed to materialize any row block of the transform: the class
// plans (sharing one permutation-module transform per type) and the lowering
// move tables used by the gauge alignment.
struct Assembly {
    int n = 0, d = 0;
    long long dim = 0;
    BlockStructure structure;
    std::vector<AlignShapeData> shapes;
    std::vector<std::vector<int>> tuples;
    std::map<std::string, PmEntry> pm_cache;  // node-based: plan pointers stay valid
    std::vector<ClassPlan> plans;
    // For level l (index l-1): all (src, dst) tuple-index pairs with dst = src
    // after one entry l -> l+1.
    std::vector<std::vector<std::pair<long long, long long>>> lower;
};

Assembly build_assembly(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("dual_schur: n, d must be positive");
    Assembly as;
    as.n = n;
    as.d = d;
    as.dim = 1;
    for (int i = 0; i < n; ++i) {
        if (as.dim > (1LL << 40) / d) throw std::invalid_argument("dual_schur: d^n too large");
        as.dim *= d;
    }
    as.structure = schur_block_structure(n, d);

    std::unordered_map<std::string, std::size_t> shape_of;
    {
        long long off = 0;
        for (const IrrepBlock& blk : as.structure.blocks) {
            AlignShapeData sd;
            sd.base = off;
            sd.dlam = (long long)blk.irrep_labels.size();
            sd.ssyts = enumerate_ssyt_bounded(blk.lambda, d);
            for (std::size_t i = 0; i < sd.ssyts.size(); ++i) {
                sd.pats.push_back(ssyt_to_gt(sd.ssyts[i], d));
                sd.pat_index[sd.pats.back().to_string()] = i;
            }
            off += (long long)sd.ssyts.size() * sd.dlam;
            shape_of[blk.lambda.to_string()] = as.shapes.size();
            as.shapes.push_back(std::move(sd));
        }
    }
    std::unordered_map<std::string, std::size_t> ssyt_row;  // "lambda|q" -> q index
    for (std::size_t si = 0; si < as.shapes.size(); ++si)
        for (std::size_t qi = 0; qi < as.shapes[si].ssyts.size(); ++qi)
            ssyt_row[as.structure.blocks[si].lambda.to_string() + "|" +
                     as.shapes[si].ssyts[qi].to_string()] = qi;

    as.tuples = enumerate_tuples(n, d);
    std::map<std::vector<int>, std::vector<long long>> classes;
    for (long long ti = 0; ti < as.dim; ++ti) {
        std::vector<int> key = as.tuples[(std::size_t)ti];
        std::sort(key.begin(), key.end());
        classes[std::move(key)].push_back(ti);
    }

    for (const auto& [key, members] : classes) {
        const Relabeling rl = relabel_large_entries_canonical(key, n);
        const Composition ty = tuple_type(rl.relabeled, n);
        PmEntry& pe = as.pm_cache[ty.to_string()];
        if (pe.pm.tuples.empty()) {
            pe.pm = qft_permmod(ty, n);
            for (std::size_t c = 0; c < pe.pm.tuples.size(); ++c)
                pe.col_of[tuple_label(pe.pm.tuples[c])] = c;
        }
        // Letters of the compressed alphabet back to the original values.
        std::vector<int> orig_of((std::size_t)n + 1);
        std::iota(orig_of.begin(), orig_of.end(), 0);
        for (const auto& [oldv, newv] : rl.forward) orig_of[(std::size_t)newv] = oldv;

        ClassPlan cp;
        cp.pm = &pe.pm;
        const long long pm_rows = (long long)pe.pm.unitary.mat.rows;
        cp.rowmap.resize((std::size_t)pm_rows);
        long long pr = 0;
        for (const IrrepBlock& blk : pe.pm.structure.blocks) {
            const AlignShapeData& sd = as.shapes[shape_of.at(blk.lambda.to_string())];
            const long long dl = sd.dlam;
            const auto ssyts_ty = enumerate_ssyt(blk.lambda, ty);
            if (ssyts_ty.size() != blk.mult_labels.size())
                throw std::logic_error("dual_schur: multiplicity mismatch");
            for (std::size_t si = 0; si < ssyts_ty.size(); ++si) {
                const SemistandardTableau sout = restore_alphabet(ssyts_ty[si], ty, orig_of);
                const std::size_t qi =
                    ssyt_row.at(blk.lambda.to_string() + "|" + sout.to_string());
                for (long long p = 0; p < dl; ++p)
                    cp.rowmap[(std::size_t)(pr + (long long)si * dl + p)] =
                        sd.base + (long long)qi * dl + p;
            }
            pr += (long long)ssyts_ty.size() * dl;
        }
        if (pr != pm_rows) throw std::logic_error("dual_schur: row count mismatch");

        cp.cols.reserve(members.size());
        for (const long long ti : members) {
            std::vector<int> re = as.tuples[(std::size_t)ti];
            for (int& v : re)
                if (v > n) v = rl.forward.at(v);
            cp.cols.push_back({ti, pe.col_of.at(tuple_label(re))});
        }
        as.plans.push_back(std::move(cp));
    }

    std::vector<long long> stride((std::size_t)n);
    stride[(std::size_t)n - 1] = 1;
    for (int i = n - 2; i >= 0; --i) stride[(std::size_t)i] = stride[(std::size_t)i + 1] * d;
    as.lower.resize((std::size_t)d);
    for (long long ti = 0; ti < as.dim; ++ti)
        for (int p = 0; p < n; ++p) {
            const int v = as.tuples[(std::size_t)ti][(std::size_t)p];
            if (v < d)
                as.lower[(std::size_t)v - 1].push_back({ti, ti + stride[(std::size_t)p]});
        }
    return as;
}

// Rotate each weight space of one block onto the Gelfand-Tsetlin gauge fixed
// by the lowering operators from already-aligned higher weight spaces. The
// class-by-class assembly is consistent only within one content class; this
// pass stitches the classes together. Rows of the block start at `row_base`
// inside `u` (0 when `u` holds just this block).
void gt_align_shape(Mat& u, long long row_base, const AlignShapeData& sd, int d,
                    const std::vector<std::vector<std::pair<long long, long long>>>& lower) {
    const long long dim = (long long)u.cols;
    const long long dl = sd.dlam;
    const std::size_t kk = sd.ssyts.size();
    // Weight spaces in descending lex content order.
    std::map<std::vector<int>, std::vector<std::size_t>, std::greater<std::vector<int>>> groups;
    std::vector<std::vector<int>> contents(kk);
    for (std::size_t i = 0; i < kk; ++i) {
        contents[i] = sd.ssyts[i].content(d).counts();
        groups[contents[i]].push_back(i);
    }
    bool first = true;
    for (const auto& [w, members] : groups) {
        if (first) {
            first = false;
            continue;
        }
        const std::size_t kw = members.size();
        std::unordered_map<std::size_t, std::size_t> mpos;
        for (std::size_t a = 0; a < kw; ++a) mpos[members[a]] = a;
        const std::size_t chunk = (std::size_t)(dl * dim);
        std::vector<double> gram(kw * kw, 0.0);
        std::vector<cplx> rhs(kw * chunk, cplx(0.0, 0.0));
        std::vector<cplx> xrow(chunk);
        std::size_t neq = 0;
        // Parents differ by moving one entry v -> v-1; only occurring values
        // can move.
        for (int v = 2; v <= d; ++v) {
            if (w[(std::size_t)v - 1] == 0) continue;
            const int l = v - 1;
            std::vector<int> wp = w;
            wp[(std::size_t)l - 1] += 1;
            wp[(std::size_t)l] -= 1;
            const auto git = groups.find(wp);
            if (git == groups.end()) continue;
            for (const std::size_t pi : git->second) {
                const GTPattern& pat = sd.pats[pi];
                std::vector<double> grow(kw, 0.0);
                bool any = false;
                for (int k = 1; k <= l; ++k) {
                    if (!shift_valid(pat, k, l, -1)) continue;
                    const double c = jm_coeff(pat, k, l);
                    if (std::abs(c) < 1e-12) continue;
                    const auto tit = sd.pat_index.find(shifted_pattern(pat, k, l, -1).to_string());
                    if (tit == sd.pat_index.end())
                        throw std::logic_error("gt_align: lowered pattern missing");
                    grow[mpos.at(tit->second)] += c;
                    any = true;
                }
                if (!any) continue;
                std::fill(xrow.begin(), xrow.end(), cplx(0.0, 0.0));
                const long long prow = row_base + (long long)pi * dl;
                for (const auto& [src, dst] : lower[(std::size_t)l - 1]) {
                    for (long long p = 0; p < dl; ++p) {
                        const cplx val = u((std::size_t)(prow + p), (std::size_t)src);
                        if (val != cplx(0.0, 0.0))
                            xrow[(std::size_t)(p * dim + dst)] += val;
                    }
                }
                for (std::size_t a = 0; a < kw; ++a) {
                    if (grow[a] == 0.0) continue;
                    for (std::size_t b = 0; b < kw; ++b) gram[a * kw + b] += grow[a] * grow[b];
                    cplx* ra = &rhs[a * chunk];
                    for (std::size_t c = 0; c < chunk; ++c) ra[c] += grow[a] * xrow[c];
                }
                ++neq;
            }
        }
        if (neq == 0) throw std::logic_error("gt_align: no equations for weight space");
        // Solve (G^T G) S = G^T X by Gaussian elimination with partial
        // pivoting; full rank certifies the weight space is determined.
        std::vector<std::size_t> perm(kw);
        std::iota(perm.begin(), perm.end(), (std::size_t)0);
        for (std::size_t col = 0; col < kw; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < kw; ++r)
                if (std::abs(gram[perm[r] * kw + col]) > std::abs(gram[perm[piv] * kw + col]))
                    piv = r;
            std::swap(perm[col], perm[piv]);
            const double pv = gram[perm[col] * kw + col];
            if (std::abs(pv) < 1e-10)
                throw std::logic_error("gt_align: weight space underdetermined");
            for (std::size_t r = col + 1; r < kw; ++r) {
                const double f = gram[perm[r] * kw + col] / pv;
                if (f == 0.0) continue;
                for (std::size_t cc = col; cc < kw; ++cc)
                    gram[perm[r] * kw + cc] -= f * gram[perm[col] * kw + cc];
                cplx* rr = &rhs[perm[r] * chunk];
                const cplx* rc = &rhs[perm[col] * chunk];
                for (std::size_t cc = 0; cc < chunk; ++cc) rr[cc] -= f * rc[cc];
            }
        }
        std::vector<std::vector<cplx>> sol(kw, std::vector<cplx>(chunk));
        for (std::size_t col = kw; col-- > 0;) {
            cplx* acc = &rhs[perm[col] * chunk];
            for (std::size_t cc = col + 1; cc < kw; ++cc) {
                const double f = gram[perm[col] * kw + cc];
                if (f == 0.0) continue;
                const cplx* sc = sol[cc].data();
                for (std::size_t c = 0; c < chunk; ++c) acc[c] -= f * sc[c];
            }
            const double pv = gram[perm[col] * kw + col];
            for (std::size_t c = 0; c < chunk; ++c) sol[col][c] = acc[c] / pv;
        }
        for (std::size_t a = 0; a < kw; ++a) {
            const long long row0 = row_base + (long long)members[a] * dl;
            for (long long p = 0; p < dl; ++p)
                for (long long c = 0; c < dim; ++c)
                    u((std::size_t)(row0 + p), (std::size_t)c) =
                        sol[a][(std::size_t)(p * dim + c)];
        }
    }
}

}  // namespace

DualSchurTransform dual_schur(int n, int d) {
    Assembly as = build_assembly(n, d);
    DualSchurTransform out;
    out.n = n;
    out.d = d;

    Mat u((std::size_t)as.dim, (std::size_t)as.dim);
    for (const ClassPlan& cp : as.plans) {
        const long long pm_rows = (long long)cp.rowmap.size();
        for (long long r = 0; r < pm_rows; ++r) {
            const long long gr = cp.rowmap[r];
            for (const auto& [ti, pc] : cp.cols)
                u((std::size_t)gr, (std::size_t)ti) = cp.pm->unitary.mat((std::size_t)r, pc);
        }
    }
    for (const AlignShapeData& sd : as.shapes) gt_align_shape(u, sd.base, sd, d, as.lower);

    out.unitary.mat = std::move(u);
    for (const SchurBasisLabel& lbl : schur_basis(n, d))
        out.unitary.row_labels.push_back(lbl.to_string());
    for (const auto& e : as.tuples) out.unitary.col_labels.push_back(tuple_label(e));
    out.structure = std::move(as.structure);
    return out;
}

std::vector<cplx> dual_schur_apply(const std::vector<cplx>& state, int n, int d) {
    Assembly as = build_assembly(n, d);
    if ((long long)state.size() != as.dim)
        throw std::invalid_argument("dual_schur_apply: state dimension mismatch");
    std::vector<cplx> out((std::size_t)state.size());
    for (const AlignShapeData& sd : as.shapes) {
        const long long len = (long long)sd.ssyts.size() * sd.dlam;
        Mat block((std::size_t)len, (std::size_t)as.dim);
        for (const ClassPlan& cp : as.plans) {
            const long long pm_rows = (long long)cp.rowmap.size();
            for (long long r = 0; r < pm_rows; ++r) {
                const long long lr = cp.rowmap[r] - sd.base;
                if (lr < 0 || lr >= len) continue;
                for (const auto& [ti, pc] : cp.cols)
                    block((std::size_t)lr, (std::size_t)ti) =
                        cp.pm->unitary.mat((std::size_t)r, pc);
            }
        }
        gt_align_shape(block, 0, sd, d, as.lower);
        const std::vector<cplx> seg = schurkit::apply(block, state);
        std::copy(seg.begin(), seg.end(), out.begin() + (std::size_t)sd.base);
    }
    return out;
}

double verify_schur_weyl_perm(const DualSchurTransform& t, const Permutation& pi) {
    const int n = t.n, d = t.d;
    if (pi.n() != n) throw std::invalid_argument("verify_schur_weyl_perm: size mismatch");
    const Mat& u = t.unitary.mat;
    const long long dim = (long long)u.rows;
    const auto tuples = enumerate_tuples(n, d);
    // Column c of U P is column (index of pi . tuple_c) of U.
    Mat a(u.rows, u.cols);
    for (long long c = 0; c < dim; ++c) {
        const long long src = tuple_index(pi.act_on_positions(tuples[(std::size_t)c]), d);
        for (long long r = 0; r < dim; ++r)
            a((std::size_t)r, (std::size_t)c) = u((std::size_t)r, (std::size_t)src);
    }
    Mat b = matmul(a, adjoint(u));
    long long off = 0;
    for (const IrrepBlock& blk : t.structure.blocks) {
        const long long km = (long long)blk.mult_labels.size();
        const long long dl = (long long)blk.irrep_labels.size();
        const Mat rep = irrep_matrix(blk.lambda, pi);
        for (long long q = 0; q < km; ++q)
            for (long long p1 = 0; p1 < dl; ++p1)
                for (long long p2 = 0; p2 < dl; ++p2)
                    b((std::size_t)(off + q * dl + p1), (std::size_t)(off + q * dl + p2)) -=
                        rep((std::size_t)p1, (std::size_t)p2);
        off += km * dl;
    }
    double res = 0.0;
    for (const cplx& v : b.a) res = std::max(res, std::abs(v));
    return res;
}

double verify_schur_weyl_perm(int n, int d, const Permutation& pi) {
    return verify_schur_weyl_perm(dual_schur(n, d), pi);
}

double verify_schur_weyl_unitary(const DualSchurTransform& t, const Mat& u) {
    const int n = t.n, d = t.d;
    if (u.rows != (std::size_t)d || !u.is_square())
        throw std::invalid_argument("verify_schur_weyl_unitary: u must be d x d");
    Mat w = u;
    for (int i = 1; i < n; ++i) w = kron(w, u);
    Mat b = matmul(matmul(t.unitary.mat, w), adjoint(t.unitary.mat));
    long long off = 0;
    for (const IrrepBlock& blk : t.structure.blocks) {
        const long long km = (long long)blk.mult_labels.size();
        const long long dl = (long long)blk.irrep_labels.size();
        const Mat rep = unitary_irrep(blk.lambda, d, u);
        for (long long q1 = 0; q1 < km; ++q1)
            for (long long q2 = 0; q2 < km; ++q2) {
                const cplx rv = rep((std::size_t)q1, (std::size_t)q2);
                for (long long p = 0; p < dl; ++p)
                    b((std::size_t)(off + q1 * dl + p), (std::size_t)(off + q2 * dl + p)) -= rv;
            }
        off += km * dl;
    }
    double res = 0.0;
    for (const cplx& v : b.a) res = std::max(res, std::abs(v));
    return res;
}

double verify_schur_weyl_unitary(int n, int d, const Mat& u) {
    return verify_schur_weyl_unitary(dual_schur(n, d), u);
}

double gt_basis_residual(const DualSchurTransform& t) {
    const int n = t.n, d = t.d;
    const Mat& u = t.unitary.mat;
    const long long dim = (long long)u.rows;
    const auto tuples = enumerate_tuples(n, d);
    std::vector<long long> stride((std::size_t)n);
    stride[(std::size_t)n - 1] = 1;
    for (int i = n - 2; i >= 0; --i) stride[(std::size_t)i] = stride[(std::size_t)i + 1] * d;

    // Contents per column.
    std::vector<std::vector<int>> col_content((std::size_t)dim, std::vector<int>((std::size_t)d, 0));
    for (long long c = 0; c < dim; ++c)
        for (int v : tuples[(std::size_t)c]) col_content[(std::size_t)c][(std::size_t)v - 1] += 1;

    double res = 0.0;
    for (int l = 1; l < d; ++l) {
        for (const GtOp op : {GtOp::Jplus, GtOp::Jminus}) {
            // lhs = U * embedded operator. Column c of U * op is the sum of
            // the U columns at the moved tuples: one entry l -> l+1 for
            // Jminus, l+1 -> l for Jplus.
            Mat lhs((std::size_t)dim, (std::size_t)dim);
            for (long long c = 0; c < dim; ++c) {
                for (int p = 0; p < n; ++p) {
                    const int v = tuples[(std::size_t)c][(std::size_t)p];
                    long long src = -1;
                    if (op == GtOp::Jminus && v == l) src = c + stride[(std::size_t)p];
                    if (op == GtOp::Jplus && v == l + 1) src = c - stride[(std::size_t)p];
                    if (src < 0) continue;
                    for (long long r = 0; r < dim; ++r)
                        lhs((std::size_t)r, (std::size_t)c) += u((std::size_t)r, (std::size_t)src);
                }
            }
            // rhs = blockdiag(op_gt (x) I) * U.
            Mat rhs((std::size_t)dim, (std::size_t)dim);
            long long off = 0;
            for (const IrrepBlock& blk : t.structure.blocks) {
                const long long km = (long long)blk.mult_labels.size();
                const long long dl = (long long)blk.irrep_labels.size();
                const Mat g = gt_generator(blk.lambda, d, op, l);
                for (long long q1 = 0; q1 < km; ++q1)
                    for (long long q2 = 0; q2 < km; ++q2) {
                        const cplx gv = g((std::size_t)q1, (std::size_t)q2);
                        if (gv == cplx(0.0, 0.0)) continue;
                        for (long long p = 0; p < dl; ++p) {
                            const cplx* urow = &u.a[(std::size_t)(off + q2 * dl + p) * u.cols];
                            cplx* rrow = &rhs.a[(std::size_t)(off + q1 * dl + p) * rhs.cols];
                            for (long long c = 0; c < dim; ++c) rrow[(std::size_t)c] += gv * urow[(std::size_t)c];
                        }
                    }
                off += km * dl;
            }
            res = std::max(res, max_abs_diff(lhs, rhs));
        }
        // Weight: diagonal on both sides, compared entrywise.
        long long off = 0;
        for (std::size_t bi = 0; bi < t.structure.blocks.size(); ++bi) {
            const IrrepBlock& blk = t.structure.blocks[bi];
            const long long km = (long long)blk.mult_labels.size();
            const long long dl = (long long)blk.irrep_labels.size();
            const Mat g = gt_generator(blk.lambda, d, GtOp::J0, l);
            for (long long q = 0; q < km; ++q) {
                const double wr = g((std::size_t)q, (std::size_t)q).real();
                for (long long p = 0; p < dl; ++p) {
                    const std::size_t r = (std::size_t)(off + q * dl + p);
                    for (long long c = 0; c < dim; ++c) {
                        const double wc =
                            0.5 * (double)(col_content[(std::size_t)c][(std::size_t)l - 1] -
                                           col_content[(std::size_t)c][(std::size_t)l]);
                        res = std::max(res,
                                       std::abs(u(r, (std::size_t)c)) * std::abs(wr - wc));
                    }
                }
            }
            off += km * dl;
        }
    }
    return res;
}

namespace {

double state_norm(const std::vector<cplx>& state) {
    double nrm = 0.0;
    for (const cplx& v : state) nrm += std::norm(v);
    return std::sqrt(nrm);
}

std::vector<std::pair<Partition, double>> block_probabilities(
    const std::vector<cplx>& w, const BlockStructure& bs) {
    std::vector<std::pair<Partition, double>> out;
    long long off = 0;
    for (const IrrepBlock& blk : bs.blocks) {
        const long long len =
            (long long)blk.mult_labels.size() * (long long)blk.irrep_labels.size();
        double p = 0.0;
        for (long long i = 0; i < len; ++i) p += std::norm(w[(std::size_t)(off + i)]);
        out.push_back({blk.lambda, p});
        off += len;
    }
    return out;
}

}  // namespace

std::vector<std::pair<Partition, double>> weak_schur_distribution(
    const std::vector<cplx>& state, const DualSchurTransform& t, double norm_tol) {
    if (state.size() != t.unitary.mat.cols)
        throw std::invalid_argument("weak_schur_distribution: state dimension mismatch");
    if (std::abs(state_norm(state) - 1.0) > norm_tol)
        throw std::invalid_argument("weak_schur_distribution: state is not normalized");
    return block_probabilities(schurkit::apply(t.unitary.mat, state), t.structure);
}

std::vector<std::pair<Partition, double>> weak_schur_distribution(
    const std::vector<cplx>& state, int n, int d, double norm_tol) {
    if (std::abs(state_norm(state) - 1.0) > norm_tol)
        throw std::invalid_argument("weak_schur_distribution: state is not normalized");
    return block_probabilities(dual_schur_apply(state, n, d), schur_block_structure(n, d));
}

}  // namespace schurkit
