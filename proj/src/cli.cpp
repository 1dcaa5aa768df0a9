#include "schurkit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "schurkit/fourier.hpp"
#include "schurkit/gt_pattern.hpp"
#include "schurkit/io.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/permutation.hpp"
#include "schurkit/schur.hpp"
#include "schurkit/tableaux.hpp"
#include "schurkit/young_orthogonal.hpp"

namespace schurkit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr long long kDefaultBudget = 4096;
// Above this, factorials and d^n leave the representable range; any budget
// rejects them first.
constexpr long long kSaturated = (1LL << 62);

long long resolve_budget(long long flag_value) {
    if (const char* env = std::getenv("SCHURKIT_BUDGET")) {
        const std::string text(env);
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(text, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != text.size() || v < 1)
            throw std::invalid_argument("SCHURKIT_BUDGET must be a positive integer");
        return v;
    }
    return flag_value;
}

void check_budget(long long dim, long long budget, const std::string& what) {
    if (dim > budget)
        throw std::invalid_argument(what + " needs a vector dimension of " +
                                    (dim >= kSaturated ? std::string(">2^62")
                                                       : std::to_string(dim)) +
                                    " amplitudes, exceeding the memory budget of " +
                                    std::to_string(budget) +
                                    " (raise with --budget or SCHURKIT_BUDGET)");
}

long long pow_dim(int n, int d) {
    long long dim = 1;
    for (int i = 0; i < n; ++i) {
        if (d > 1 && dim > kSaturated / d) return kSaturated;
        dim *= d;
    }
    return dim;
}

long long saturated_factorial(int n) {
    return n > 20 ? kSaturated : factorial(n);
}

long long multinomial_dim(const Composition& ty) {
    const int n = ty.sum();
    if (n > 20) return kSaturated;
    long long r = factorial(n);
    for (int v = 1; v <= ty.length(); ++v) r /= factorial(ty.count(v));
    return r;
}

template <typename T>
std::string serialize_list(const std::vector<T>& items) {
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ',';
        s += items[i].to_string();
    }
    s += ']';
    return s;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << text << "\n";
    else
        write_text_file(out_path, text + "\n");
}

std::string sidecar_path(const std::string& p) {
    if (p.size() >= 5 && p.compare(p.size() - 5, 5, ".json") == 0)
        return p.substr(0, p.size() - 5) + ".blocks.json";
    return p + ".blocks.json";
}

void write_transform(const LabeledUnitary& lu, const BlockStructure& bs,
                     const std::string& out_path, std::ostream& out) {
    const std::string side = sidecar_path(out_path);
    write_text_file(out_path, labeled_unitary_to_json(lu) + "\n");
    write_text_file(side, block_structure_to_json(bs) + "\n");
    out << "wrote " << out_path << " and " << side << " (dimension " << lu.mat.rows << ")\n";
}

Partition parse_shape(const std::string& text) {
    return Partition(parse_int_list(text));
}

// Type entries padded with zeros to alphabet [n], n = sum of entries.
Composition parse_type(const std::string& text) {
    std::vector<int> cnt = parse_int_list(text);
    long long total = 0;
    for (int c : cnt) {
        if (c < 0) throw std::invalid_argument("type entries must be nonnegative");
        total += c;
    }
    if (total < 1) throw std::invalid_argument("type must have positive total");
    if ((long long)cnt.size() > total)
        throw std::invalid_argument("type longer than its total");
    cnt.resize((std::size_t)total, 0);
    return Composition(std::move(cnt));
}

void push_rec(std::vector<ResidualRecord>& recs, std::string check, std::string params,
              double residual, double tolerance) {
    ResidualRecord r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;
    recs.push_back(std::move(r));
}

Permutation random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> img((std::size_t)n);
    std::iota(img.begin(), img.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        const int j = (int)(rng() % (unsigned long long)(i + 1));
        std::swap(img[(std::size_t)i], img[(std::size_t)j]);
    }
    return Permutation(std::move(img));
}

void suite_dims(int n, int d, std::vector<ResidualRecord>& recs) {
    if (n > 20) throw std::invalid_argument("dims suite: n too large for exact factorials");
    long long sq = 0;
    for (const Partition& lam : enumerate_partitions(n)) {
        const long long dl = hook_dimension(lam);
        sq += dl * dl;
    }
    const long long fact = factorial(n);
    push_rec(recs, "dims/sum_dim_squares_is_factorial", "n=" + std::to_string(n),
             (double)std::llabs(sq - fact), 0.0);
    long long mixed = 0;
    for (const Partition& lam : enumerate_partitions(n, d))
        mixed += hook_dimension(lam) * unitary_dimension(lam, d);
    const long long dim = pow_dim(n, d);
    push_rec(recs, "dims/schur_weyl_dimension_sum",
             "n=" + std::to_string(n) + ",d=" + std::to_string(d),
             (double)std::llabs(mixed - dim), 0.0);
}

void suite_coxeter(int n, double tol, std::vector<ResidualRecord>& recs) {
    for (const Partition& lam : enumerate_partitions(n)) {
        std::vector<Mat> m;
        for (int k = 1; k < n; ++k) m.push_back(young_orthogonal_transposition(lam, k));
        const Mat id = Mat::identity((std::size_t)hook_dimension(lam));
        double res = 0.0;
        for (std::size_t k = 0; k < m.size(); ++k) {
            res = std::max(res, max_abs_diff(matmul(m[k], m[k]), id));
            if (k + 1 < m.size())
                res = std::max(res, max_abs_diff(matmul(m[k], matmul(m[k + 1], m[k])),
                                                 matmul(m[k + 1], matmul(m[k], m[k + 1]))));
            for (std::size_t j = k + 2; j < m.size(); ++j)
                res = std::max(res,
                               max_abs_diff(matmul(m[k], m[j]), matmul(m[j], m[k])));
        }
        push_rec(recs, "coxeter/relations",
                 "n=" + std::to_string(n) + ",lambda=" + lam.to_string(), res, tol);
    }
}

void suite_permmod(int n, double tol, std::vector<ResidualRecord>& recs) {
    for (const Partition& lp : enumerate_partitions(n)) {
        std::vector<int> cnt = lp.parts();
        cnt.resize((std::size_t)n, 0);
        const Composition ty(std::move(cnt));
        const PermModTransform pm = qft_permmod(ty, n);
        const std::string params = "n=" + std::to_string(n) + ",type=" + ty.to_string();
        push_rec(recs, "permmod/unitarity", params, unitarity_residual(pm.unitary.mat), tol);

        std::vector<std::string> expect;
        for (const Partition& lam : enumerate_partitions(n))
            if (dominates(lam, lp)) expect.push_back(lam.to_string());
        long long mism = (long long)pm.structure.blocks.size() != (long long)expect.size();
        if (mism == 0)
            for (std::size_t i = 0; i < expect.size(); ++i)
                if (pm.structure.blocks[i].lambda.to_string() != expect[i]) mism += 1;
        push_rec(recs, "permmod/block_set_is_dominance_cone", params, (double)mism, 0.0);

        long long kmism = 0;
        for (const IrrepBlock& blk : pm.structure.blocks)
            if ((long long)blk.mult_labels.size() != kostka(blk.lambda, ty)) kmism += 1;
        push_rec(recs, "permmod/kostka_multiplicities", params, (double)kmism, 0.0);
    }
}

void suite_schur_weyl(const DualSchurTransform& t, double tol, long long seed,
                      const std::vector<std::string>& perm_texts,
                      std::vector<ResidualRecord>& recs) {
    const std::string params = "n=" + std::to_string(t.n) + ",d=" + std::to_string(t.d);
    push_rec(recs, "schur-weyl/unitarity", params, unitarity_residual(t.unitary.mat), tol);

    std::vector<Permutation> ps;
    std::string pparams = params;
    if (!perm_texts.empty()) {
        for (const std::string& s : perm_texts) ps.push_back(parse_permutation(s, t.n));
        pparams += ",perms=" + std::to_string(ps.size());
    } else {
        std::mt19937_64 rng((unsigned long long)seed);
        for (int i = 0; i < 10; ++i) ps.push_back(random_perm(t.n, rng));
        pparams += ",perms=10,seed=" + std::to_string(seed);
    }
    double rp = 0.0;
    for (const Permutation& p : ps) rp = std::max(rp, verify_schur_weyl_perm(t, p));
    push_rec(recs, "schur-weyl/perm_intertwining", pparams, rp, tol);

    double ru = 0.0;
    for (int i = 0; i < 3; ++i)
        ru = std::max(ru, verify_schur_weyl_unitary(
                              t, haar_unitary((std::size_t)t.d,
                                              (std::uint64_t)(seed + 101 + i))));
    // Error compounds through the n-fold tensor power and the exponentiated
    // factor images; 1e-6 is the pinned floor for Haar samples.
    push_rec(recs, "schur-weyl/unitary_intertwining",
             params + ",samples=3,seed=" + std::to_string(seed), ru, std::max(tol, 1e-6));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"schurkit: symmetric-group Fourier and dual Schur transforms"};
    app.require_subcommand(1);

    // enumerate
    auto* sc_en = app.add_subcommand("enumerate", "List combinatorial objects in canonical order");
    sc_en->require_subcommand(1);

    auto* en_part = sc_en->add_subcommand("partitions", "Partitions of n, descending lex order");
    int ep_n = 0;
    int ep_maxp = -1;
    std::string ep_out;
    en_part->add_option("--n", ep_n, "Integer to partition")->required()->check(CLI::NonNegativeNumber);
    en_part->add_option("--max-parts", ep_maxp, "Keep partitions with at most this many parts");
    en_part->add_option("--out", ep_out, "Write to this file instead of stdout");

    auto* en_syt = sc_en->add_subcommand("syt", "Standard tableaux of a shape, last-letter order");
    std::string es_shape, es_out;
    en_syt->add_option("--shape", es_shape, "Partition, e.g. 2,1")->required();
    en_syt->add_option("--out", es_out, "Write to this file instead of stdout");

    auto* en_ssyt = sc_en->add_subcommand("ssyt", "Semistandard tableaux of a shape");
    std::string ess_shape, ess_content, ess_out;
    int ess_d = 0;
    en_ssyt->add_option("--shape", ess_shape, "Partition, e.g. 2,2")->required();
    en_ssyt->add_option("--content", ess_content, "Fixed content counts, e.g. 2,2");
    en_ssyt->add_option("--d", ess_d, "Bound entries by d (all contents)");
    en_ssyt->add_option("--out", ess_out, "Write to this file instead of stdout");

    auto* en_gt = sc_en->add_subcommand("gt", "Gelfand-Tsetlin patterns of a shape with d rows");
    std::string eg_shape, eg_out;
    int eg_d = 0;
    en_gt->add_option("--shape", eg_shape, "Partition, e.g. 2,1")->required();
    en_gt->add_option("--d", eg_d, "Pattern depth")->required()->check(CLI::PositiveNumber);
    en_gt->add_option("--out", eg_out, "Write to this file instead of stdout");

    // transform
    auto* sc_tr = app.add_subcommand(
        "transform", "Build a transform; write LabeledUnitary JSON plus a BlockStructure sidecar");
    sc_tr->require_subcommand(1);

    auto* tr_qft = sc_tr->add_subcommand("qft-sn", "Fourier transform over S_n");
    int tq_n = 0;
    std::string tq_out;
    long long tq_budget = kDefaultBudget;
    tr_qft->add_option("--n", tq_n, "Group size")->required()->check(CLI::PositiveNumber);
    tr_qft->add_option("--out", tq_out, "Output JSON path")->required();
    tr_qft->add_option("--budget", tq_budget, "Max vector dimension (SCHURKIT_BUDGET overrides)");

    auto* tr_pm = sc_tr->add_subcommand("qft-permmod", "Permutation-module transform for a type");
    std::string tp_type, tp_out;
    long long tp_budget = kDefaultBudget;
    tr_pm->add_option("--type", tp_type, "Content counts, e.g. 2,1")->required();
    tr_pm->add_option("--out", tp_out, "Output JSON path")->required();
    tr_pm->add_option("--budget", tp_budget, "Max vector dimension (SCHURKIT_BUDGET overrides)");

    auto* tr_ds = sc_tr->add_subcommand("dual-schur", "Dual Schur transform on (C^d)^(x)n");
    int td_n = 0, td_d = 0;
    std::string td_out;
    long long td_budget = kDefaultBudget;
    tr_ds->add_option("--n", td_n, "Tensor factors")->required()->check(CLI::PositiveNumber);
    tr_ds->add_option("--d", td_d, "Local dimension")->required()->check(CLI::PositiveNumber);
    tr_ds->add_option("--out", td_out, "Output JSON path")->required();
    tr_ds->add_option("--budget", td_budget, "Max vector dimension (SCHURKIT_BUDGET overrides)");

    // apply
    auto* sc_ap = app.add_subcommand(
        "apply", "Apply the dual Schur transform to a statevector file (block streaming)");
    std::string ap_state, ap_out;
    int ap_n = 0, ap_d = 0;
    long long ap_budget = kDefaultBudget;
    sc_ap->add_option("--state", ap_state, "StateVector JSON path")->required();
    sc_ap->add_option("--n", ap_n, "Expected tensor factors (validated against the file)");
    sc_ap->add_option("--d", ap_d, "Expected local dimension (validated against the file)");
    sc_ap->add_option("--out", ap_out, "Write to this file instead of stdout");
    sc_ap->add_option("--budget", ap_budget, "Max vector dimension (SCHURKIT_BUDGET overrides)");

    // verify
    auto* sc_ve = app.add_subcommand("verify", "Run a verification suite; print a residual report");
    std::string ve_suite, ve_out;
    int ve_n = 0, ve_d = 1;
    double ve_tol = 1e-9;
    long long ve_seed = 1, ve_budget = kDefaultBudget;
    std::vector<std::string> ve_perms;
    sc_ve->add_option("--suite", ve_suite, "dims|coxeter|permmod|schur-weyl|gt-basis|all")
        ->required()
        ->check(CLI::IsMember({"dims", "coxeter", "permmod", "schur-weyl", "gt-basis", "all"}));
    sc_ve->add_option("--n", ve_n, "Tensor factors / group size")->required()->check(CLI::PositiveNumber);
    sc_ve->add_option("--d", ve_d, "Local dimension (suites on S_n alone ignore it)")
        ->check(CLI::PositiveNumber);
    sc_ve->add_option("--tolerance", ve_tol, "Residual tolerance")->check(CLI::PositiveNumber);
    sc_ve->add_option("--seed", ve_seed, "Seed for random permutations and Haar unitaries");
    sc_ve->add_option("--perm", ve_perms,
                      "Permutation for schur-weyl, one-line ([2,1,3]) or cycles ((1 2)); repeatable")
        ->allow_extra_args(false);
    sc_ve->add_option("--out", ve_out, "Also write the report to this file");
    sc_ve->add_option("--budget", ve_budget, "Max vector dimension (SCHURKIT_BUDGET overrides)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (en_part->parsed()) {
            emit(serialize_list(enumerate_partitions(ep_n, ep_maxp)), ep_out, out);
            return 0;
        }
        if (en_syt->parsed()) {
            emit(serialize_list(enumerate_syt(parse_shape(es_shape))), es_out, out);
            return 0;
        }
        if (en_ssyt->parsed()) {
            const bool has_content = !ess_content.empty();
            const bool has_d = en_ssyt->count("--d") > 0;
            if (has_content == has_d)
                throw std::invalid_argument("ssyt: give exactly one of --content and --d");
            const Partition shape = parse_shape(ess_shape);
            if (has_content)
                emit(serialize_list(enumerate_ssyt(shape, Composition(parse_int_list(ess_content)))),
                     ess_out, out);
            else
                emit(serialize_list(enumerate_ssyt_bounded(shape, ess_d)), ess_out, out);
            return 0;
        }
        if (en_gt->parsed()) {
            const Partition shape = parse_shape(eg_shape);
            std::vector<GTPattern> pats;
            for (const SemistandardTableau& t : enumerate_ssyt_bounded(shape, eg_d))
                pats.push_back(ssyt_to_gt(t, eg_d));
            emit(serialize_list(pats), eg_out, out);
            return 0;
        }

        if (tr_qft->parsed()) {
            check_budget(saturated_factorial(tq_n), resolve_budget(tq_budget),
                         "transform qft-sn --n " + std::to_string(tq_n));
            write_transform(qft_sn(tq_n), qft_sn_blocks(tq_n), tq_out, out);
            return 0;
        }
        if (tr_pm->parsed()) {
            const Composition ty = parse_type(tp_type);
            check_budget(multinomial_dim(ty), resolve_budget(tp_budget),
                         "transform qft-permmod --type " + ty.to_string());
            const PermModTransform pm = qft_permmod(ty, ty.sum());
            write_transform(pm.unitary, pm.structure, tp_out, out);
            return 0;
        }
        if (tr_ds->parsed()) {
            check_budget(pow_dim(td_n, td_d), resolve_budget(td_budget),
                         "transform dual-schur --n " + std::to_string(td_n) + " --d " +
                             std::to_string(td_d));
            const DualSchurTransform t = dual_schur(td_n, td_d);
            write_transform(t.unitary, t.structure, td_out, out);
            return 0;
        }

        if (sc_ap->parsed()) {
            const StateVector sv = state_vector_from_json(read_text_file(ap_state));
            if (sc_ap->count("--n") > 0 && ap_n != sv.n)
                throw std::invalid_argument("apply: --n disagrees with the state file");
            if (sc_ap->count("--d") > 0 && ap_d != sv.d)
                throw std::invalid_argument("apply: --d disagrees with the state file");
            check_budget(pow_dim(sv.n, sv.d), resolve_budget(ap_budget), "apply");
            double nrm = 0.0;
            for (const cplx& v : sv.amps) nrm += std::norm(v);
            nrm = std::sqrt(nrm);
            if (std::abs(nrm - 1.0) > 1e-9)
                throw std::invalid_argument("apply: state is not normalized (norm " +
                                            std::to_string(nrm) + ")");
            const std::vector<cplx> w = dual_schur_apply(sv.amps, sv.n, sv.d);
            const BlockStructure bs = schur_block_structure(sv.n, sv.d);
            ordered_json j;
            j["n"] = sv.n;
            j["d"] = sv.d;
            ordered_json labels = ordered_json::array();
            for (const SchurBasisLabel& lbl : schur_basis(sv.n, sv.d))
                labels.push_back(lbl.to_string());
            j["labels"] = std::move(labels);
            ordered_json amps = ordered_json::array();
            for (const cplx& z : w) amps.push_back({z.real(), z.imag()});
            j["amps"] = std::move(amps);
            ordered_json probs = ordered_json::array();
            for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
                const auto [lo, hi] = bs.block_range(b);
                double p = 0.0;
                for (long long i = lo; i < hi; ++i) p += std::norm(w[(std::size_t)i]);
                ordered_json e;
                e["lambda"] = bs.blocks[b].lambda.to_string();
                e["p"] = p;
                probs.push_back(std::move(e));
            }
            j["shape_probabilities"] = std::move(probs);
            emit(j.dump(), ap_out, out);
            return 0;
        }

        if (sc_ve->parsed()) {
            if (ve_n > 20)
                throw std::invalid_argument("verify: n too large for exact factorials");
            const long long budget = resolve_budget(ve_budget);
            const bool all = ve_suite == "all";
            std::vector<ResidualRecord> recs;
            std::optional<DualSchurTransform> cached;
            const auto transform_once = [&]() -> const DualSchurTransform& {
                if (!cached) {
                    check_budget(pow_dim(ve_n, ve_d), budget,
                                 "verify --n " + std::to_string(ve_n) + " --d " +
                                     std::to_string(ve_d));
                    cached = dual_schur(ve_n, ve_d);
                }
                return *cached;
            };
            if (all || ve_suite == "dims") suite_dims(ve_n, ve_d, recs);
            if (all || ve_suite == "coxeter") {
                long long dmax = 1;
                for (const Partition& lam : enumerate_partitions(ve_n))
                    dmax = std::max(dmax, hook_dimension(lam));
                check_budget(dmax, budget, "coxeter suite at n=" + std::to_string(ve_n));
                suite_coxeter(ve_n, ve_tol, recs);
            }
            if (all || ve_suite == "permmod") {
                check_budget(saturated_factorial(ve_n), budget,
                             "permmod suite at n=" + std::to_string(ve_n));
                suite_permmod(ve_n, ve_tol, recs);
            }
            if (all || ve_suite == "schur-weyl")
                suite_schur_weyl(transform_once(), ve_tol, ve_seed, ve_perms, recs);
            if (all || ve_suite == "gt-basis")
                push_rec(recs, "gt-basis/ladder_and_weight",
                         "n=" + std::to_string(ve_n) + ",d=" + std::to_string(ve_d),
                         gt_basis_residual(transform_once()), ve_tol);

            bool ok = true;
            for (const ResidualRecord& r : recs) ok = ok && r.pass;
            const std::string report = residual_records_to_json(recs);
            out << report << "\n";
            if (!ve_out.empty()) write_text_file(ve_out, report + "\n");
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command selected\n";
    return 2;
}

}  // namespace schurkit::cli
