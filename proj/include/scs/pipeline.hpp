#pragma once

#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "scs/baselines.hpp"
#include "scs/clustering.hpp"
#include "scs/diversity.hpp"
#include "scs/io.hpp"
#include "scs/selection.hpp"

namespace scs {

struct ScsParams {
    int sample_count = 1000;
    double delta = 0.1;
    double theta = 0.15;
    int min_clique = 5;
    int max_reps = 99;
    double lambda = 1.1;
    double beta = 2.0e-5;
    CriterionTag criterion = CriterionTag::Sp;
    std::optional<CriterionScope> scope_override;
    SppView spp_view = SppView::Indices;
    std::uint64_t seed = 0;
    long baseline_cap = 100000;

    ClusterParams cluster_params() const {
        return ClusterParams{delta, theta, min_clique, max_reps};
    }
};

inline SelectionCriterion make_criterion(CriterionTag tag, double beta,
                                         std::optional<CriterionScope> scope_override = {}) {
    SelectionCriterion crit;
    switch (tag) {
    case CriterionTag::Min: crit = SelectionCriterion::min_distance(); break;
    case CriterionTag::Avg: crit = SelectionCriterion::avg_distance(); break;
    case CriterionTag::Sp: crit = SelectionCriterion::solow_polasky(beta); break;
    }
    if (scope_override) crit.scope = *scope_override;
    return crit;
}

inline std::string criterion_name(CriterionTag tag) {
    switch (tag) {
    case CriterionTag::Min: return "min";
    case CriterionTag::Avg: return "avg";
    case CriterionTag::Sp: return "sp";
    }
    throw Error("unknown criterion");
}

inline CriterionTag parse_criterion(const std::string& name) {
    if (name == "min") return CriterionTag::Min;
    if (name == "avg") return CriterionTag::Avg;
    if (name == "sp") return CriterionTag::Sp;
    throw Error("unknown criterion: " + name);
}

// Immutable per-instance sampling context; each sample owns its rng stream,
// so run k is the same no matter how many runs happen or in what order.
class Sampler {
public:
    Sampler(const Instance& inst, double lambda) : inst_(&inst) {
        if (const auto* g = std::get_if<SpGridInstance>(&inst)) {
            sp_ = build_sp_context(g->graph, lambda);
        } else if (const auto* u = std::get_if<SpEudInstance>(&inst)) {
            sp_ = build_sp_context(u->graph, lambda);
        }
    }

    ProblemKind kind() const { return instance_kind(*inst_); }
    const SpContext* sp_context() const { return sp_ ? &*sp_ : nullptr; }

    std::vector<int> sample(std::uint64_t master_seed, std::uint64_t run_index) const {
        Rng rng(derive_seed(master_seed, run_index));
        if (sp_) return sp_local_search(*sp_, rng);
        if (const auto* t = std::get_if<TspInstance>(inst_)) return tsp_local_search(*t, rng);
        return spp_local_search(std::get<SppInstance>(*inst_), rng);
    }

private:
    const Instance* inst_;
    std::optional<SpContext> sp_;
};

struct StageTimings {
    double sampling_s = 0.0;
    double matrix_s = 0.0;
    double clustering_s = 0.0;
    double setup_s = 0.0;
    double select_s = 0.0;

    double shared_s() const { return sampling_s + matrix_s + clustering_s + setup_s; }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

// Everything up to the selection step; shared across selection criteria.
struct ScsShared {
    SolutionSet samples;
    std::vector<ElementSet> elements;
    DissimilarityMatrix matrix;
    ClusterSet clusters;
    DisjointClusters disjoint;
    StageTimings timings;

    int representative_count() const { return static_cast<int>(disjoint.clusters.size()); }
};

inline ScsShared run_scs_shared(const Instance& inst, const ScsParams& params) {
    ScsShared run;
    const Sampler sampler(inst, params.lambda);
    run.samples.problem = sampler.kind();

    detail::Stopwatch sampling;
    run.samples.records.reserve(params.sample_count);
    for (int i = 0; i < params.sample_count; ++i) {
        run.samples.records.push_back(sampler.sample(params.seed, static_cast<std::uint64_t>(i)));
    }
    run.timings.sampling_s = sampling.seconds();

    detail::Stopwatch matrix;
    const auto* spp = std::get_if<SppInstance>(&inst);
    run.elements = element_views(run.samples, params.spp_view, spp);
    run.matrix = pairwise_matrix(run.elements);
    run.timings.matrix_s = matrix.seconds();

    detail::Stopwatch clustering;
    run.clusters = micro_cluster(run.matrix, params.cluster_params());
    run.timings.clustering_s = clustering.seconds();

    detail::Stopwatch setup_watch;
    run.disjoint = setup(run.elements, run.clusters);
    run.timings.setup_s = setup_watch.seconds();
    return run;
}

// The selection step for one criterion. Ties are broken randomly, by a
// stream derived from the master seed.
inline std::vector<int> run_scs_select(const ScsShared& shared, const ScsParams& params,
                                       CriterionTag tag, StageTimings* timings = nullptr) {
    const detail::Stopwatch watch;
    Rng tie_rng(derive_seed(params.seed, 0x5e1ec7u ^ static_cast<std::uint64_t>(tag)));
    const auto crit = make_criterion(tag, params.beta, params.scope_override);
    auto selected = select(shared.disjoint, shared.matrix, crit, &tie_rng);
    if (timings) timings->select_s = watch.seconds();
    return selected;
}

struct ScsResult {
    ScsShared shared;
    std::vector<int> selected;
    StageTimings timings;
};

// The full pipeline with the params' criterion.
inline ScsResult run_scs(const Instance& inst, const ScsParams& params) {
    ScsResult res;
    res.shared = run_scs_shared(inst, params);
    res.timings = res.shared.timings;
    res.selected = run_scs_select(res.shared, params, params.criterion, &res.timings);
    return res;
}

// ---------------------------------------------------------------------------
// Diversity measures of a solution set
// ---------------------------------------------------------------------------

struct Measures {
    int count = 0;
    double dmin = std::numeric_limits<double>::quiet_NaN();
    double davg = std::numeric_limits<double>::quiet_NaN();
    double dsp = std::numeric_limits<double>::quiet_NaN();

    bool defined() const { return count >= 2; }
};

inline Measures measure_set(const std::vector<ElementSet>& elems, double beta) {
    Measures m;
    m.count = static_cast<int>(elems.size());
    if (m.count < 2) return m;
    const auto matrix = pairwise_matrix(elems);
    std::vector<int> all(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) all[i] = static_cast<int>(i);
    m.dmin = d_min(matrix, all);
    m.davg = d_avg(matrix, all);
    m.dsp = solow_polasky(matrix, all, {beta});
    return m;
}

// ---------------------------------------------------------------------------
// Benchmark harness
// ---------------------------------------------------------------------------

enum class Algo { ScsMin, ScsAvg, ScsSp, Msls, Yen, YenLs };

inline std::string algo_name(Algo a) {
    switch (a) {
    case Algo::ScsMin: return "SCS-MIN";
    case Algo::ScsAvg: return "SCS-AVG";
    case Algo::ScsSp: return "SCS-SP";
    case Algo::Msls: return "MSLS";
    case Algo::Yen: return "Yen";
    case Algo::YenLs: return "Yen-LS";
    }
    throw Error("unknown algorithm");
}

inline Algo parse_algo(const std::string& name) {
    if (name == "scs-min") return Algo::ScsMin;
    if (name == "scs-avg") return Algo::ScsAvg;
    if (name == "scs-sp") return Algo::ScsSp;
    if (name == "msls") return Algo::Msls;
    if (name == "yen") return Algo::Yen;
    if (name == "yen-ls") return Algo::YenLs;
    throw Error("unknown algorithm: " + name);
}

struct BenchRow {
    std::string instance;
    std::string algorithm;
    Measures measures;
    double seconds = 0.0;
    // Improvement over the same instance's MSLS row, in percent; NaN when
    // either side is undefined. Zero for MSLS itself.
    double impr_min = std::numeric_limits<double>::quiet_NaN();
    double impr_avg = std::numeric_limits<double>::quiet_NaN();
    double impr_sp = std::numeric_limits<double>::quiet_NaN();
    std::string note; // "" when the row is healthy
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

namespace detail {

inline double improvement_pct(double algo_value, double msls_value) {
    if (std::isnan(algo_value) || std::isnan(msls_value) || msls_value == 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return 100.0 * (algo_value - msls_value) / msls_value;
}

} // namespace detail

// Runs the requested algorithms on one instance. SCS variants share the
// sampling/clustering/setup stages; their representative count becomes the
// baselines' target n_s, so every row answers for the same output size.
inline std::vector<BenchRow> bench_instance(const std::string& name, const Instance& inst,
                                            const ScsParams& params, std::vector<Algo> algos) {
    const ProblemKind kind = instance_kind(inst);
    const bool is_sp = kind == ProblemKind::SpGrid || kind == ProblemKind::SpEud;
    for (Algo a : algos) {
        if ((a == Algo::Yen || a == Algo::YenLs) && !is_sp)
            throw Error("k-shortest-path baselines apply only to shortest-path instances");
    }
    // MSLS is the improvement baseline; run it even when not requested.
    if (std::find(algos.begin(), algos.end(), Algo::Msls) == algos.end())
        algos.insert(algos.begin(), Algo::Msls);

    const ScsShared shared = run_scs_shared(inst, params);
    const int n_s = shared.representative_count();
    const auto* spp = std::get_if<SppInstance>(&inst);
    const Sampler sampler(inst, params.lambda);

    std::vector<BenchRow> rows;
    Measures msls_measures;
    for (Algo a : algos) {
        BenchRow row;
        row.instance = name;
        row.algorithm = algo_name(a);
        if (n_s < 1) {
            row.note = "no clusters";
            rows.push_back(std::move(row));
            continue;
        }
        const BaselineBudget budget{n_s, params.baseline_cap};
        switch (a) {
        case Algo::ScsMin:
        case Algo::ScsAvg:
        case Algo::ScsSp: {
            const CriterionTag tag = a == Algo::ScsMin   ? CriterionTag::Min
                                     : a == Algo::ScsAvg ? CriterionTag::Avg
                                                         : CriterionTag::Sp;
            StageTimings t = shared.timings;
            const auto selected = run_scs_select(shared, params, tag, &t);
            std::vector<ElementSet> elems;
            for (int i : selected) elems.push_back(shared.elements[i]);
            row.measures = measure_set(elems, params.beta);
            row.seconds = t.shared_s() + t.select_s;
            break;
        }
        case Algo::Msls: {
            const detail::Stopwatch watch;
            const auto sols = msls<std::vector<int>>(
                [&](long iter) {
                    return sampler.sample(params.seed, static_cast<std::uint64_t>(iter));
                },
                [&](const std::vector<int>& rec) {
                    SolutionSet one;
                    one.problem = kind;
                    one.records = {rec};
                    return element_views(one, params.spp_view, spp)[0];
                },
                budget);
            SolutionSet out;
            out.problem = kind;
            out.records = sols;
            row.measures = measure_set(element_views(out, params.spp_view, spp), params.beta);
            row.seconds = watch.seconds();
            if (static_cast<int>(sols.size()) < n_s) row.note = "short";
            break;
        }
        case Algo::Yen:
        case Algo::YenLs: {
            const detail::Stopwatch watch;
            std::vector<Path> paths;
            if (a == Algo::Yen) {
                paths = yen_k_shortest(std::get_if<SpGridInstance>(&inst)
                                           ? std::get<SpGridInstance>(inst).graph
                                           : std::get<SpEudInstance>(inst).graph,
                                       budget);
            } else {
                paths = yen_ls(*sampler.sp_context(), budget);
            }
            std::vector<ElementSet> elems;
            for (const auto& p : paths) elems.push_back(path_edge_set(p));
            row.measures = measure_set(elems, params.beta);
            row.seconds = watch.seconds();
            if (static_cast<int>(paths.size()) < n_s) row.note = "short";
            break;
        }
        }
        if (!row.measures.defined() && row.note.empty()) row.note = "undefined";
        if (a == Algo::Msls) msls_measures = row.measures;
        rows.push_back(std::move(row));
    }

    for (auto& row : rows) {
        if (row.algorithm == "MSLS") {
            if (msls_measures.defined()) row.impr_min = row.impr_avg = row.impr_sp = 0.0;
            continue;
        }
        row.impr_min = detail::improvement_pct(row.measures.dmin, msls_measures.dmin);
        row.impr_avg = detail::improvement_pct(row.measures.davg, msls_measures.davg);
        row.impr_sp = detail::improvement_pct(row.measures.dsp, msls_measures.dsp);
    }
    return rows;
}

inline BenchReport bench(const std::vector<std::pair<std::string, Instance>>& instances,
                         const ScsParams& params, const std::vector<Algo>& algos) {
    BenchReport report;
    for (const auto& [name, inst] : instances) {
        auto rows = bench_instance(name, inst, params, algos);
        report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    }

    // Averages across instances, per algorithm, over defined rows.
    std::vector<std::string> order;
    for (const auto& row : report.rows) {
        if (std::find(order.begin(), order.end(), row.algorithm) == order.end())
            order.push_back(row.algorithm);
    }
    for (const auto& algo : order) {
        BenchRow avg;
        avg.instance = "AVG";
        avg.algorithm = algo;
        int defined = 0;
        double dmin = 0, davg = 0, dsp = 0, sec = 0, im = 0, ia = 0, is = 0, count = 0;
        for (const auto& row : report.rows) {
            if (row.algorithm != algo || row.instance == "AVG") continue;
            sec += row.seconds;
            if (!row.measures.defined() || std::isnan(row.impr_min)) continue;
            ++defined;
            dmin += row.measures.dmin;
            davg += row.measures.davg;
            dsp += row.measures.dsp;
            count += row.measures.count;
            im += row.impr_min;
            ia += row.impr_avg;
            is += row.impr_sp;
        }
        avg.seconds = sec;
        if (defined > 0) {
            avg.measures.count = static_cast<int>(count / defined);
            avg.measures.dmin = dmin / defined;
            avg.measures.davg = davg / defined;
            avg.measures.dsp = dsp / defined;
            avg.impr_min = im / defined;
            avg.impr_avg = ia / defined;
            avg.impr_sp = is / defined;
        } else {
            avg.note = "undefined";
        }
        report.rows.push_back(std::move(avg));
    }
    return report;
}

// ---------------------------------------------------------------------------
// CSV output
// ---------------------------------------------------------------------------

namespace detail {

inline std::string csv_real(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace detail

// Fixed column order; time_s is the one column exempt from byte-for-byte
// reproducibility (see README), so writers can opt out of it.
inline void write_bench_csv(const BenchReport& report, const std::string& path,
                            bool include_time = true) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "instance,algorithm,Dmin,Davg,Dsp,ns";
    if (include_time) out << ",time_s";
    out << ",Dmin_impr_pct,Davg_impr_pct,Dsp_impr_pct,note\n";
    for (const auto& row : report.rows) {
        out << row.instance << "," << row.algorithm << "," << detail::csv_real(row.measures.dmin)
            << "," << detail::csv_real(row.measures.davg) << ","
            << detail::csv_real(row.measures.dsp) << "," << row.measures.count;
        if (include_time) out << "," << detail::csv_real(row.seconds);
        out << "," << detail::csv_real(row.impr_min) << "," << detail::csv_real(row.impr_avg)
            << "," << detail::csv_real(row.impr_sp) << "," << row.note << "\n";
    }
    if (!out) throw Error("failed while writing " + path);
}

} // namespace scs
