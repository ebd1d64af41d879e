// Command-line front end: instance generation, sampling, clustering,
// selection, end-to-end runs, benchmarking, and SVG exports.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scs/scs.hpp"

namespace fs = std::filesystem;

namespace {

struct SizeSpec {
    int a = 0; // rows / vertex count
    int b = 0; // cols (grid problems)
    int m = 0; // family size (spp)
};

SizeSpec parse_size(const std::string& problem, const std::string& size) {
    SizeSpec s;
    char sep;
    std::istringstream ss(size);
    if (problem == "sp-grid") {
        if (size.find('x') != std::string::npos) {
            if (!(ss >> s.a >> sep >> s.b) || sep != 'x') throw scs::Error("size must look like 10x10");
        } else {
            if (!(ss >> s.a)) throw scs::Error("size must be like 10 or 10x10");
            s.b = s.a;
        }
    } else if (problem == "spp") {
        char comma;
        if (!(ss >> s.a >> sep >> s.b >> comma >> s.m) || sep != 'x' || comma != ',')
            throw scs::Error("size must look like 10x10,100");
    } else {
        if (!(ss >> s.a)) throw scs::Error("size must be a vertex count");
    }
    return s;
}

std::vector<scs::Algo> parse_algos(const std::string& list) {
    std::vector<scs::Algo> algos;
    std::istringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) algos.push_back(scs::parse_algo(item));
    }
    if (algos.empty()) throw scs::Error("no algorithms requested");
    return algos;
}

// Shared parameter block with SCS_* environment overrides.
void add_param_options(CLI::App* cmd, scs::ScsParams& p) {
    cmd->add_option("--n", p.sample_count, "sample count")->envname("SCS_N");
    cmd->add_option("--seed", p.seed, "master seed")->envname("SCS_SEED");
    cmd->add_option("--delta", p.delta, "adjacency quantile")->envname("SCS_DELTA");
    cmd->add_option("--theta", p.theta, "polishing resemblance threshold")->envname("SCS_THETA");
    cmd->add_option("--min-clique", p.min_clique, "minimum cluster size")->envname("SCS_MIN_CLIQUE");
    cmd->add_option("--max-reps", p.max_reps, "polishing sweep cap")->envname("SCS_MAX_REPS");
    cmd->add_option("--lambda", p.lambda, "relaxed-graph factor")->envname("SCS_LAMBDA");
    cmd->add_option("--beta", p.beta, "Solow-Polasky decay rate")->envname("SCS_BETA");
    cmd->add_option("--cap", p.baseline_cap, "baseline iteration cap")->envname("SCS_CAP");
}

void add_criterion_option(CLI::App* cmd, std::string& criterion, std::string& scope) {
    cmd->add_option("--criterion", criterion, "selection criterion: min, avg, sp")
        ->envname("SCS_CRITERION")
        ->check(CLI::IsMember({"min", "avg", "sp"}));
    cmd->add_option("--scope", scope, "criterion scope: all (remaining) or cluster")
        ->envname("SCS_SCOPE")
        ->check(CLI::IsMember({"", "all", "cluster"}));
}

scs::SppInstance require_spp(const std::string& instance_path) {
    if (instance_path.empty()) throw scs::Error("the cells view needs --instance");
    auto inst = scs::read_instance(instance_path);
    if (auto* s = std::get_if<scs::SppInstance>(&inst)) return std::move(*s);
    throw scs::Error("the cells view needs an spp instance");
}

std::vector<scs::ElementSet> file_element_views(const scs::SolutionSet& sols, scs::SppView view,
                                                const std::string& instance_path) {
    if (sols.problem == scs::ProblemKind::Spp && view == scs::SppView::Cells) {
        const auto spp = require_spp(instance_path);
        return scs::element_views(sols, view, &spp);
    }
    return scs::element_views(sols, view);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Sample-Cluster-Select: diverse solution sets for combinatorial problems"};
    app.require_subcommand(1);

    // gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::string gen_problem, gen_size, gen_out;
    std::uint64_t gen_seed = 0;
    gen->add_option("--problem", gen_problem, "sp-grid, sp-eud, tsp, spp")
        ->required()
        ->check(CLI::IsMember({"sp-grid", "sp-eud", "tsp", "spp"}));
    gen->add_option("--size", gen_size, "10x10 | 100 | 10x10,100")->required();
    gen->add_option("--seed", gen_seed, "instance seed")->envname("SCS_SEED");
    gen->add_option("--out", gen_out, "output instance file")->required();
    gen->callback([&] {
        const SizeSpec s = parse_size(gen_problem, gen_size);
        scs::Instance inst;
        if (gen_problem == "sp-grid") {
            inst = scs::gen_sp_grid(s.a, s.b, gen_seed);
        } else if (gen_problem == "sp-eud") {
            inst = scs::gen_sp_eud(s.a, gen_seed);
        } else if (gen_problem == "tsp") {
            inst = scs::gen_tsp(s.a, gen_seed);
        } else {
            inst = scs::gen_spp(s.a, s.b, s.m, gen_seed);
        }
        scs::write_instance(inst, gen_out);
    });

    // sample ------------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "run the local-search sampler n times");
    std::string sample_instance, sample_out;
    scs::ScsParams sample_params;
    sample->add_option("--instance", sample_instance, "instance file")->required();
    sample->add_option("--out", sample_out, "output solutions file")->required();
    add_param_options(sample, sample_params);
    sample->callback([&] {
        const auto inst = scs::read_instance(sample_instance);
        const scs::Sampler sampler(inst, sample_params.lambda);
        scs::SolutionSet sols;
        sols.problem = sampler.kind();
        for (int i = 0; i < sample_params.sample_count; ++i) {
            sols.records.push_back(sampler.sample(sample_params.seed, static_cast<std::uint64_t>(i)));
        }
        scs::write_solutions(sols, sample_out);
    });

    // cluster -------------------------------------------------------------
    auto* cluster = app.add_subcommand("cluster", "cluster sampled solutions");
    std::string cluster_solutions, cluster_out, cluster_view = "indices", cluster_instance;
    scs::ScsParams cluster_params;
    cluster->add_option("--solutions", cluster_solutions, "solutions file")->required();
    cluster->add_option("--out", cluster_out, "output clusters file")->required();
    cluster->add_option("--spp-elements", cluster_view, "spp element view: indices or cells")
        ->check(CLI::IsMember({"indices", "cells"}));
    cluster->add_option("--instance", cluster_instance, "instance file (cells view only)");
    add_param_options(cluster, cluster_params);
    cluster->callback([&] {
        const auto sols = scs::read_solutions(cluster_solutions);
        const auto view = scs::parse_view_tag(cluster_view);
        const auto elems = file_element_views(sols, view, cluster_instance);
        const auto matrix = scs::pairwise_matrix(elems);
        const auto clusters = scs::micro_cluster(matrix, cluster_params.cluster_params());
        scs::ClusterFile cf;
        cf.solutions = sols;
        cf.view = view;
        cf.clusters = clusters.clusters;
        scs::write_clusters(cf, cluster_out);
        std::cout << "clusters: " << cf.clusters.size() << "\n";
    });

    // select --------------------------------------------------------------
    auto* select_cmd = app.add_subcommand("select", "pick one representative per cluster");
    std::string select_clusters, select_out, select_instance;
    std::string select_criterion = "sp", select_scope;
    scs::ScsParams select_params;
    select_cmd->add_option("--clusters", select_clusters, "clusters file")->required();
    select_cmd->add_option("--out", select_out, "output solutions file")->required();
    select_cmd->add_option("--instance", select_instance, "instance file (cells view only)");
    add_criterion_option(select_cmd, select_criterion, select_scope);
    add_param_options(select_cmd, select_params);
    select_cmd->callback([&] {
        const auto cf = scs::read_clusters(select_clusters);
        const auto elems = file_element_views(cf.solutions, cf.view, select_instance);
        const auto matrix = scs::pairwise_matrix(elems);
        scs::ClusterSet cs;
        cs.clusters = cf.clusters;
        const auto disjoint = scs::setup(elems, cs);
        std::optional<scs::CriterionScope> scope;
        if (select_scope == "all") scope = scs::CriterionScope::AllRemaining;
        if (select_scope == "cluster") scope = scs::CriterionScope::ClusterOnly;
        const auto crit = scs::make_criterion(scs::parse_criterion(select_criterion),
                                              select_params.beta, scope);
        scs::Rng tie_rng(scs::derive_seed(select_params.seed, 0x5e1ec7u));
        const auto picked = scs::select(disjoint, matrix, crit, &tie_rng);
        scs::SolutionSet out;
        out.problem = cf.solutions.problem;
        for (int i : picked) out.records.push_back(cf.solutions.records[i]);
        scs::write_solutions(out, select_out);
        std::cout << "selected: " << out.records.size() << "\n";
    });

    // run -----------------------------------------------------------------
    auto* run = app.add_subcommand("run", "full pipeline: sample, cluster, select, export");
    std::string run_instance, run_out_dir;
    std::string run_criterion = "sp", run_scope;
    int run_viz_top = 3;
    scs::ScsParams run_params;
    run->add_option("--instance", run_instance, "instance file")->required();
    run->add_option("--out-dir", run_out_dir, "artifact directory")->required();
    run->add_option("--viz-top", run_viz_top, "how many top clusters to render");
    add_criterion_option(run, run_criterion, run_scope);
    add_param_options(run, run_params);
    run->callback([&] {
        const auto inst = scs::read_instance(run_instance);
        run_params.criterion = scs::parse_criterion(run_criterion);
        if (run_scope == "all") run_params.scope_override = scs::CriterionScope::AllRemaining;
        if (run_scope == "cluster") run_params.scope_override = scs::CriterionScope::ClusterOnly;
        const auto artifacts = scs::run_pipeline(inst, run_params, run_out_dir, run_viz_top);
        for (const auto& p : artifacts.reproducible) std::cout << p << "\n";
        std::cout << artifacts.timings << "\n";
    });

    // bench -----------------------------------------------------------------
    auto* bench_cmd = app.add_subcommand("bench", "compare algorithms across instances");
    std::string bench_instances, bench_out;
    std::string bench_algos = "scs-min,scs-avg,scs-sp,msls";
    std::string bench_criterion = "sp", bench_scope;
    scs::ScsParams bench_params;
    bench_cmd->add_option("--instances", bench_instances, "instance file or directory")->required();
    bench_cmd->add_option("--out", bench_out, "output CSV")->required();
    bench_cmd->add_option("--algos", bench_algos,
                          "comma list: scs-min,scs-avg,scs-sp,msls,yen,yen-ls");
    add_criterion_option(bench_cmd, bench_criterion, bench_scope);
    add_param_options(bench_cmd, bench_params);
    bench_cmd->callback([&] {
        if (bench_scope == "all") bench_params.scope_override = scs::CriterionScope::AllRemaining;
        if (bench_scope == "cluster") bench_params.scope_override = scs::CriterionScope::ClusterOnly;
        std::vector<std::pair<std::string, scs::Instance>> instances;
        if (fs::is_directory(bench_instances)) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(bench_instances)) {
                if (entry.path().extension() == ".instance") files.push_back(entry.path());
            }
            std::sort(files.begin(), files.end());
            for (const auto& f : files) {
                instances.emplace_back(f.stem().string(), scs::read_instance(f.string()));
            }
        } else {
            instances.emplace_back(fs::path(bench_instances).stem().string(),
                                   scs::read_instance(bench_instances));
        }
        if (instances.empty()) throw scs::Error("no .instance files found");
        const auto report = scs::bench(instances, bench_params, parse_algos(bench_algos));
        scs::write_bench_csv(report, bench_out);
        for (const auto& row : report.rows) {
            if (!row.note.empty() && row.note != "undefined") {
                std::cerr << "note: " << row.instance << "/" << row.algorithm << ": " << row.note
                          << "\n";
            }
        }
        std::cout << bench_out << "\n";
    });

    // hist ------------------------------------------------------------------
    auto* hist = app.add_subcommand("hist", "pairwise dissimilarity histogram");
    std::string hist_solutions, hist_out, hist_view = "indices", hist_instance;
    hist->add_option("--solutions", hist_solutions, "solutions file")->required();
    hist->add_option("--out", hist_out, "output base path (writes .csv and .svg)")->required();
    hist->add_option("--spp-elements", hist_view, "spp element view")
        ->check(CLI::IsMember({"indices", "cells"}));
    hist->add_option("--instance", hist_instance, "instance file (cells view only)");
    hist->callback([&] {
        const auto sols = scs::read_solutions(hist_solutions);
        const auto elems = file_element_views(sols, scs::parse_view_tag(hist_view), hist_instance);
        const auto matrix = scs::pairwise_matrix(elems);
        scs::export_histogram(matrix, hist_out);
        std::cout << hist_out << ".csv\n" << hist_out << ".svg\n";
    });

    // viz -------------------------------------------------------------------
    auto* viz = app.add_subcommand("viz", "superimpose one cluster over the instance");
    std::string viz_instance, viz_clusters, viz_out;
    int viz_index = 0;
    viz->add_option("--instance", viz_instance, "instance file")->required();
    viz->add_option("--cluster", viz_clusters, "clusters file")->required();
    viz->add_option("--out", viz_out, "output SVG")->required();
    viz->add_option("--index", viz_index, "cluster rank (0 = biggest)");
    viz->callback([&] {
        const auto inst = scs::read_instance(viz_instance);
        const auto cf = scs::read_clusters(viz_clusters);
        if (viz_index < 0 || static_cast<std::size_t>(viz_index) >= cf.clusters.size())
            throw scs::Error("cluster index out of range (file has " +
                             std::to_string(cf.clusters.size()) + " clusters)");
        scs::SolutionSet members;
        members.problem = cf.solutions.problem;
        for (int i : cf.clusters[viz_index]) members.records.push_back(cf.solutions.records[i]);
        scs::export_superimposition(inst, members, viz_out);
        std::cout << viz_out << "\n";
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const scs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
