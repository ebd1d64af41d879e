#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "scs/pipeline.hpp"
#include "scs/viz.hpp"

namespace scs {

// End-to-end run artifacts. Every file listed in `reproducible` is a pure
// function of (instance file, params); wall-clock timings go to timings.txt,
// which is deliberately excluded.
struct RunArtifacts {
    std::vector<std::string> reproducible;
    std::string timings;
};

inline RunArtifacts run_pipeline(const Instance& inst, const ScsParams& params,
                                 const std::string& out_dir, int viz_top = 3) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    RunArtifacts artifacts;
    auto emit = [&](const std::string& name) {
        std::string p = (fs::path(out_dir) / name).string();
        artifacts.reproducible.push_back(p);
        return p;
    };

    ScsResult res = run_scs(inst, params);
    const ScsShared& shared = res.shared;

    write_solutions(shared.samples, emit("samples.solutions"));

    ClusterFile cf;
    cf.solutions = shared.samples;
    cf.view = params.spp_view;
    cf.clusters = shared.clusters.clusters;
    write_clusters(cf, emit("clusters.clusters"));

    SolutionSet selected;
    selected.problem = shared.samples.problem;
    for (int i : res.selected) selected.records.push_back(shared.samples.records[i]);
    write_solutions(selected, emit("selected-" + criterion_name(params.criterion) + ".solutions"));

    {
        std::vector<ElementSet> elems;
        for (int i : res.selected) elems.push_back(shared.elements[i]);
        const Measures m = measure_set(elems, params.beta);
        std::ofstream out(emit("metrics.csv"));
        if (!out) throw Error("cannot write metrics.csv");
        out << "algorithm,Dmin,Davg,Dsp,ns\n";
        out << "SCS-" << (params.criterion == CriterionTag::Min   ? "MIN"
                          : params.criterion == CriterionTag::Avg ? "AVG"
                                                                  : "SP")
            << "," << detail::csv_real(m.dmin) << "," << detail::csv_real(m.davg) << ","
            << detail::csv_real(m.dsp) << "," << m.count << "\n";
    }

    {
        const std::string base = (fs::path(out_dir) / "hist").string();
        export_histogram(shared.matrix, base);
        artifacts.reproducible.push_back(base + ".csv");
        artifacts.reproducible.push_back(base + ".svg");
    }

    const int top = std::min<int>(viz_top, static_cast<int>(shared.clusters.clusters.size()));
    for (int c = 0; c < top; ++c) {
        SolutionSet members;
        members.problem = shared.samples.problem;
        for (int i : shared.clusters.clusters[c]) {
            members.records.push_back(shared.samples.records[i]);
        }
        export_superimposition(inst, members, emit("cluster-" + std::to_string(c) + ".svg"));
    }

    {
        artifacts.timings = (fs::path(out_dir) / "timings.txt").string();
        std::ofstream out(artifacts.timings);
        out << "sampling_s " << res.timings.sampling_s << "\n";
        out << "matrix_s " << res.timings.matrix_s << "\n";
        out << "clustering_s " << res.timings.clustering_s << "\n";
        out << "setup_s " << res.timings.setup_s << "\n";
        out << "select_s " << res.timings.select_s << "\n";
    }
    return artifacts;
}

} // namespace scs
