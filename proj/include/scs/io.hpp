#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "scs/element_set.hpp"
#include "scs/error.hpp"
#include "scs/instance_gen.hpp"
#include "scs/sp_sampler.hpp"
#include "scs/spp.hpp"
#include "scs/tsp.hpp"

namespace scs {

enum class ProblemKind { SpGrid, SpEud, Tsp, Spp };

inline std::string problem_tag(ProblemKind k) {
    switch (k) {
    case ProblemKind::SpGrid: return "sp-grid";
    case ProblemKind::SpEud: return "sp-eud";
    case ProblemKind::Tsp: return "tsp";
    case ProblemKind::Spp: return "spp";
    }
    throw Error("unknown problem kind");
}

inline ProblemKind parse_problem_tag(const std::string& tag) {
    if (tag == "sp-grid") return ProblemKind::SpGrid;
    if (tag == "sp-eud") return ProblemKind::SpEud;
    if (tag == "tsp") return ProblemKind::Tsp;
    if (tag == "spp") return ProblemKind::Spp;
    throw Error("unknown problem tag: " + tag);
}

using Instance = std::variant<SpGridInstance, SpEudInstance, TspInstance, SppInstance>;

inline ProblemKind instance_kind(const Instance& inst) {
    if (std::holds_alternative<SpGridInstance>(inst)) return ProblemKind::SpGrid;
    if (std::holds_alternative<SpEudInstance>(inst)) return ProblemKind::SpEud;
    if (std::holds_alternative<TspInstance>(inst)) return ProblemKind::Tsp;
    return ProblemKind::Spp;
}

// Which element view SPP solutions use for dissimilarity.
enum class SppView { Indices, Cells };

inline std::string view_tag(SppView v) { return v == SppView::Indices ? "indices" : "cells"; }
inline SppView parse_view_tag(const std::string& tag) {
    if (tag == "indices") return SppView::Indices;
    if (tag == "cells") return SppView::Cells;
    throw Error("unknown view tag: " + tag);
}

// Sampled solutions of one problem. Paths, tours and packings all serialize
// as an id sequence, so one record type covers every problem.
struct SolutionSet {
    ProblemKind problem = ProblemKind::SpGrid;
    std::vector<std::vector<int>> records;

    std::size_t size() const { return records.size(); }
};

inline const char* record_keyword(ProblemKind k) {
    switch (k) {
    case ProblemKind::SpGrid:
    case ProblemKind::SpEud: return "path";
    case ProblemKind::Tsp: return "tour";
    case ProblemKind::Spp: return "packing";
    }
    throw Error("unknown problem kind");
}

// Canonical element-set views of every record.
inline std::vector<ElementSet> element_views(const SolutionSet& sols, SppView view = SppView::Indices,
                                             const SppInstance* spp = nullptr) {
    std::vector<ElementSet> out;
    out.reserve(sols.records.size());
    for (const auto& r : sols.records) {
        switch (sols.problem) {
        case ProblemKind::SpGrid:
        case ProblemKind::SpEud:
            out.push_back(path_edge_set(r));
            break;
        case ProblemKind::Tsp:
            out.push_back(tour_edge_set(r));
            break;
        case ProblemKind::Spp:
            if (view == SppView::Cells) {
                if (!spp) throw Error("cell view needs the instance");
                out.push_back(packing_cell_view(r, *spp));
            } else {
                out.push_back(packing_element_view(r));
            }
            break;
        }
    }
    return out;
}

namespace detail {

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

class LineReader {
public:
    explicit LineReader(const std::string& path) : in_(path), path_(path) {
        if (!in_) throw Error("cannot open " + path);
    }

    // Next non-empty line; throws at end of file.
    std::string next() {
        std::string l;
        while (std::getline(in_, l)) {
            if (!l.empty()) return l;
        }
        throw Error("unexpected end of file in " + path_);
    }

    const std::string& path() const { return path_; }

private:
    std::ifstream in_;
    std::string path_;
};

// "key value..." line; throws when the keyword differs.
inline std::istringstream expect(const std::string& l, const std::string& keyword,
                                 const std::string& path) {
    std::istringstream ss(l);
    std::string head;
    ss >> head;
    if (head != keyword) throw Error("expected '" + keyword + "' in " + path + ", got '" + head + "'");
    return ss;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Instance files
// ---------------------------------------------------------------------------

inline void write_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "scs-instance v1\n";
    out << "problem " << problem_tag(instance_kind(inst)) << "\n";
    if (const auto* g = std::get_if<SpGridInstance>(&inst)) {
        out << "rows " << g->rows << "\n";
        out << "cols " << g->cols << "\n";
        out << "s " << g->graph.source << "\n";
        out << "t " << g->graph.sink << "\n";
        out << "edges " << g->graph.edges.size() << "\n";
        for (const auto& e : g->graph.edges) {
            out << e.u << " " << e.v << " " << static_cast<long>(e.w) << "\n";
        }
    } else if (const auto* u = std::get_if<SpEudInstance>(&inst)) {
        out << "vertices " << u->graph.vertex_count << "\n";
        out << "s " << u->graph.source << "\n";
        out << "t " << u->graph.sink << "\n";
        out << "points " << u->points.size() << "\n";
        for (const auto& p : u->points) {
            out << detail::format_real(p.x) << " " << detail::format_real(p.y) << "\n";
        }
        out << "edges " << u->graph.edges.size() << "\n";
        for (const auto& e : u->graph.edges) {
            out << e.u << " " << e.v << " " << detail::format_real(e.w) << "\n";
        }
    } else if (const auto* t = std::get_if<TspInstance>(&inst)) {
        out << "points " << t->size() << "\n";
        for (const auto& p : t->points()) {
            out << detail::format_real(p.x) << " " << detail::format_real(p.y) << "\n";
        }
    } else if (const auto* s = std::get_if<SppInstance>(&inst)) {
        out << "grid " << s->rows() << " " << s->cols() << "\n";
        out << "sets " << s->family_size() << "\n";
        for (const auto& r : s->sets()) {
            out << r.a1 << " " << r.b1 << " " << r.a2 << " " << r.b2 << " " << r.cost << "\n";
        }
    }
    if (!out) throw Error("failed while writing " + path);
}

// Loads and re-validates an instance (the constructors enforce the module
// invariants; SP graphs are additionally checked for connectivity).
inline Instance read_instance(const std::string& path) {
    detail::LineReader r(path);
    detail::expect(r.next(), "scs-instance", path);
    std::string tag;
    detail::expect(r.next(), "problem", path) >> tag;
    const ProblemKind kind = parse_problem_tag(tag);

    auto read_edges = [&](std::size_t count) {
        std::vector<WeightedGraph::Edge> edges(count);
        for (auto& e : edges) {
            std::istringstream ss(r.next());
            if (!(ss >> e.u >> e.v >> e.w)) throw Error("malformed edge line in " + path);
        }
        return edges;
    };

    switch (kind) {
    case ProblemKind::SpGrid: {
        SpGridInstance inst;
        int s, t;
        std::size_t m;
        detail::expect(r.next(), "rows", path) >> inst.rows;
        detail::expect(r.next(), "cols", path) >> inst.cols;
        detail::expect(r.next(), "s", path) >> s;
        detail::expect(r.next(), "t", path) >> t;
        detail::expect(r.next(), "edges", path) >> m;
        inst.graph = WeightedGraph::build(inst.rows * inst.cols, s, t, read_edges(m));
        if (!is_connected(inst.graph)) throw Error("instance graph is disconnected: " + path);
        return inst;
    }
    case ProblemKind::SpEud: {
        SpEudInstance inst;
        int n, s, t;
        std::size_t np, m;
        detail::expect(r.next(), "vertices", path) >> n;
        detail::expect(r.next(), "s", path) >> s;
        detail::expect(r.next(), "t", path) >> t;
        detail::expect(r.next(), "points", path) >> np;
        if (static_cast<int>(np) != n) throw Error("point count mismatch in " + path);
        inst.points.resize(np);
        for (auto& p : inst.points) {
            std::istringstream ss(r.next());
            if (!(ss >> p.x >> p.y)) throw Error("malformed point line in " + path);
        }
        detail::expect(r.next(), "edges", path) >> m;
        inst.graph = WeightedGraph::build(n, s, t, read_edges(m));
        if (!is_connected(inst.graph)) throw Error("instance graph is disconnected: " + path);
        return inst;
    }
    case ProblemKind::Tsp: {
        std::size_t np;
        detail::expect(r.next(), "points", path) >> np;
        std::vector<Point> pts(np);
        for (auto& p : pts) {
            std::istringstream ss(r.next());
            if (!(ss >> p.x >> p.y)) throw Error("malformed point line in " + path);
        }
        return TspInstance::from_points(std::move(pts));
    }
    case ProblemKind::Spp: {
        int n1, n2;
        std::size_t m;
        detail::expect(r.next(), "grid", path) >> n1 >> n2;
        detail::expect(r.next(), "sets", path) >> m;
        std::vector<RectSet> sets(m);
        for (auto& s : sets) {
            std::istringstream ss(r.next());
            if (!(ss >> s.a1 >> s.b1 >> s.a2 >> s.b2 >> s.cost))
                throw Error("malformed set line in " + path);
        }
        return SppInstance::build(n1, n2, std::move(sets));
    }
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Solution files: one record per line
// ---------------------------------------------------------------------------

namespace detail {

inline void write_records(std::ostream& out, const SolutionSet& sols) {
    const char* kw = record_keyword(sols.problem);
    for (const auto& rec : sols.records) {
        out << kw;
        for (int v : rec) out << " " << v;
        out << "\n";
    }
}

inline std::vector<std::vector<int>> read_records(LineReader& r, ProblemKind kind,
                                                  std::size_t count) {
    std::vector<std::vector<int>> records(count);
    for (auto& rec : records) {
        auto ss = expect(r.next(), record_keyword(kind), r.path());
        int v;
        while (ss >> v) rec.push_back(v);
    }
    return records;
}

} // namespace detail

inline void write_solutions(const SolutionSet& sols, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "scs-solutions v1\n";
    out << "problem " << problem_tag(sols.problem) << "\n";
    out << "count " << sols.records.size() << "\n";
    detail::write_records(out, sols);
    if (!out) throw Error("failed while writing " + path);
}

inline SolutionSet read_solutions(const std::string& path) {
    detail::LineReader r(path);
    detail::expect(r.next(), "scs-solutions", path);
    std::string tag;
    detail::expect(r.next(), "problem", path) >> tag;
    SolutionSet sols;
    sols.problem = parse_problem_tag(tag);
    std::size_t count;
    detail::expect(r.next(), "count", path) >> count;
    sols.records = detail::read_records(r, sols.problem, count);
    return sols;
}

// ---------------------------------------------------------------------------
// Cluster files: the clustering output plus the solution records it indexes,
// so selection and rendering need no other solution input.
// ---------------------------------------------------------------------------

struct ClusterFile {
    SolutionSet solutions;
    SppView view = SppView::Indices;
    std::vector<std::vector<int>> clusters;
};

inline void write_clusters(const ClusterFile& cf, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "scs-clusters v1\n";
    out << "problem " << problem_tag(cf.solutions.problem) << "\n";
    out << "view " << view_tag(cf.view) << "\n";
    out << "count " << cf.solutions.records.size() << "\n";
    detail::write_records(out, cf.solutions);
    out << "clusters " << cf.clusters.size() << "\n";
    for (const auto& c : cf.clusters) {
        out << "cluster";
        for (int i : c) out << " " << i;
        out << "\n";
    }
    if (!out) throw Error("failed while writing " + path);
}

inline ClusterFile read_clusters(const std::string& path) {
    detail::LineReader r(path);
    detail::expect(r.next(), "scs-clusters", path);
    ClusterFile cf;
    std::string tag;
    detail::expect(r.next(), "problem", path) >> tag;
    cf.solutions.problem = parse_problem_tag(tag);
    std::string vtag;
    detail::expect(r.next(), "view", path) >> vtag;
    cf.view = parse_view_tag(vtag);
    std::size_t count;
    detail::expect(r.next(), "count", path) >> count;
    cf.solutions.records = detail::read_records(r, cf.solutions.problem, count);
    std::size_t nc;
    detail::expect(r.next(), "clusters", path) >> nc;
    cf.clusters.resize(nc);
    for (auto& c : cf.clusters) {
        auto ss = detail::expect(r.next(), "cluster", path);
        int v;
        while (ss >> v) {
            if (v < 0 || static_cast<std::size_t>(v) >= count)
                throw Error("cluster index out of range in " + path);
            c.push_back(v);
        }
    }
    return cf;
}

} // namespace scs
