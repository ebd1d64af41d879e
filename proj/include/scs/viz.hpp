#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "scs/element_set.hpp"
#include "scs/error.hpp"
#include "scs/io.hpp"

namespace scs {

// Fraction of a cluster's solutions that contain each element.
inline std::map<std::uint64_t, double> sharing_ratios(const std::vector<ElementSet>& members) {
    if (members.empty()) throw Error("sharing ratios need at least one solution");
    std::map<std::uint64_t, double> counts;
    for (const auto& s : members) {
        for (std::uint64_t e : s.elements()) counts[e] += 1.0;
    }
    for (auto& [e, c] : counts) c /= static_cast<double>(members.size());
    return counts;
}

// ---------------------------------------------------------------------------
// Dissimilarity histogram: 100 bins of width 0.01 over all unordered pairs,
// duplicates included.
// ---------------------------------------------------------------------------

struct Histogram {
    std::array<double, 100> pct{};
    std::size_t pair_count = 0;
};

inline Histogram dissimilarity_histogram(const DissimilarityMatrix& m) {
    if (m.size() < 2) throw Error("histogram needs at least two solutions");
    std::array<std::size_t, 100> counts{};
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            // Nudge against representation error so exact hundredths land in
            // their own bin; genuine values are rationals spaced far wider.
            int bin = static_cast<int>(std::floor(m.at(i, j) * 100.0 + 1e-9));
            bin = std::min(std::max(bin, 0), 99);
            ++counts[static_cast<std::size_t>(bin)];
            ++pairs;
        }
    }
    Histogram h;
    h.pair_count = pairs;
    for (std::size_t b = 0; b < 100; ++b) {
        h.pct[b] = 100.0 * static_cast<double>(counts[b]) / static_cast<double>(pairs);
    }
    return h;
}

namespace detail {

inline std::string fmt(double v, const char* spec = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

// Cool-to-warm ramp: blue through light gray to red.
inline std::string ramp_color(double t) {
    t = std::min(std::max(t, 0.0), 1.0);
    const int cool[3] = {59, 76, 192};
    const int mid[3] = {221, 221, 221};
    const int warm[3] = {180, 4, 38};
    int rgb[3];
    for (int c = 0; c < 3; ++c) {
        if (t < 0.5) {
            rgb[c] = static_cast<int>(std::lround(cool[c] + (mid[c] - cool[c]) * (2.0 * t)));
        } else {
            rgb[c] = static_cast<int>(std::lround(mid[c] + (warm[c] - mid[c]) * (2.0 * t - 1.0)));
        }
    }
    return "rgb(" + std::to_string(rgb[0]) + "," + std::to_string(rgb[1]) + "," +
           std::to_string(rgb[2]) + ")";
}

inline void svg_open(std::ofstream& out, int width, int height) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
}

inline void svg_color_bar(std::ofstream& out, int x, int y, int width, int height) {
    const int steps = 64;
    for (int i = 0; i < steps; ++i) {
        const double t = (i + 0.5) / steps;
        out << "<rect x=\"" << fmt(x + width * static_cast<double>(i) / steps, "%.2f") << "\" y=\""
            << y << "\" width=\"" << fmt(static_cast<double>(width) / steps + 0.5, "%.2f")
            << "\" height=\"" << height << "\" fill=\"" << ramp_color(t) << "\"/>\n";
    }
    out << "<text x=\"" << x << "\" y=\"" << y + height + 14
        << "\" font-size=\"12\" text-anchor=\"start\">0.0</text>\n";
    out << "<text x=\"" << x + width << "\" y=\"" << y + height + 14
        << "\" font-size=\"12\" text-anchor=\"end\">1.0</text>\n";
    out << "<text x=\"" << x + width / 2 << "\" y=\"" << y + height + 14
        << "\" font-size=\"12\" text-anchor=\"middle\">sharing ratio</text>\n";
}

} // namespace detail

inline void write_histogram_csv(const Histogram& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "bin_lo,bin_hi,pct\n";
    for (std::size_t b = 0; b < 100; ++b) {
        out << detail::fmt(0.01 * static_cast<double>(b), "%.2f") << ","
            << detail::fmt(0.01 * static_cast<double>(b + 1), "%.2f") << ","
            << detail::fmt(h.pct[b], "%.9f") << "\n";
    }
    if (!out) throw Error("failed while writing " + path);
}

inline void write_histogram_svg(const Histogram& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    const int width = 640, height = 420, margin = 50;
    const int plot_w = width - 2 * margin, plot_h = height - 2 * margin;
    detail::svg_open(out, width, height);
    const double peak = std::max(1e-12, *std::max_element(h.pct.begin(), h.pct.end()));
    for (std::size_t b = 0; b < 100; ++b) {
        const double bar = h.pct[b] / peak * plot_h;
        if (bar <= 0.0) continue;
        out << "<rect x=\"" << detail::fmt(margin + plot_w * (b / 100.0), "%.2f") << "\" y=\""
            << detail::fmt(margin + plot_h - bar, "%.2f") << "\" width=\""
            << detail::fmt(plot_w / 100.0, "%.2f") << "\" height=\"" << detail::fmt(bar, "%.2f")
            << "\" fill=\"rgb(70,110,180)\"/>\n";
    }
    out << "<line x1=\"" << margin << "\" y1=\"" << margin + plot_h << "\" x2=\"" << margin + plot_w
        << "\" y2=\"" << margin + plot_h << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
        << margin + plot_h << "\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= 10; ++tick) {
        const double x = margin + plot_w * tick / 10.0;
        out << "<text x=\"" << detail::fmt(x, "%.2f") << "\" y=\"" << margin + plot_h + 16
            << "\" font-size=\"10\" text-anchor=\"middle\">" << detail::fmt(tick / 10.0, "%.1f")
            << "</text>\n";
    }
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 8
        << "\" font-size=\"12\" text-anchor=\"middle\">dissimilarity</text>\n";
    out << "<text x=\"14\" y=\"" << margin - 10 << "\" font-size=\"12\">" << "relative frequency [%], peak "
        << detail::fmt(peak, "%.3f") << "</text>\n";
    out << "</svg>\n";
    if (!out) throw Error("failed while writing " + path);
}

// Writes <base>.csv and <base>.svg.
inline void export_histogram(const DissimilarityMatrix& m, const std::string& base_path) {
    const Histogram h = dissimilarity_histogram(m);
    write_histogram_csv(h, base_path + ".csv");
    write_histogram_svg(h, base_path + ".svg");
}

// ---------------------------------------------------------------------------
// Cluster superimposition
// ---------------------------------------------------------------------------

namespace detail {

struct Canvas {
    int width = 620;
    int height = 700;
    int margin = 50;
    int plot = 520;

    double x(double unit) const { return margin + unit * plot; }
    double y(double unit) const { return margin + 40 + (1.0 - unit) * plot; }
};

inline void svg_header_and_title(std::ofstream& out, const Canvas& cv, std::size_t cluster_size) {
    svg_open(out, cv.width, cv.height);
    out << "<text x=\"" << cv.width / 2 << "\" y=\"28\" font-size=\"16\" text-anchor=\"middle\">"
        << "cluster size: " << cluster_size << "</text>\n";
}

inline void svg_footer(std::ofstream& out, const Canvas& cv) {
    svg_color_bar(out, cv.margin, cv.height - 58, cv.width - 2 * cv.margin, 16);
    out << "</svg>\n";
}

// Edges sorted by ratio so strongly shared ones draw on top.
inline std::vector<std::pair<double, std::uint64_t>>
edges_by_ratio(const std::map<std::uint64_t, double>& ratios, double min_exclusive) {
    std::vector<std::pair<double, std::uint64_t>> out;
    for (const auto& [e, r] : ratios) {
        if (r > min_exclusive) out.emplace_back(r, e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline void draw_colored_edges(std::ofstream& out, const Canvas& cv,
                               const std::vector<std::pair<double, std::uint64_t>>& edges,
                               const std::vector<std::pair<double, double>>& pos) {
    for (const auto& [ratio, e] : edges) {
        const auto [u, v] = decode_edge_element(e);
        out << "<line x1=\"" << fmt(cv.x(pos[u].first), "%.2f") << "\" y1=\""
            << fmt(cv.y(pos[u].second), "%.2f") << "\" x2=\"" << fmt(cv.x(pos[v].first), "%.2f")
            << "\" y2=\"" << fmt(cv.y(pos[v].second), "%.2f") << "\" stroke=\""
            << ramp_color(ratio) << "\" stroke-width=\"3\" data-ratio=\"" << fmt(ratio, "%.6f")
            << "\"/>\n";
    }
}

inline void draw_nodes(std::ofstream& out, const Canvas& cv,
                       const std::vector<std::pair<double, double>>& pos, double radius) {
    for (const auto& [px, py] : pos) {
        out << "<circle cx=\"" << fmt(cv.x(px), "%.2f") << "\" cy=\"" << fmt(cv.y(py), "%.2f")
            << "\" r=\"" << fmt(radius, "%.2f") << "\" fill=\"rgb(40,70,160)\"/>\n";
    }
}

inline void draw_base_edges(std::ofstream& out, const Canvas& cv, const WeightedGraph& g,
                            const std::vector<std::pair<double, double>>& pos) {
    for (const auto& e : g.edges) {
        out << "<line x1=\"" << fmt(cv.x(pos[e.u].first), "%.2f") << "\" y1=\""
            << fmt(cv.y(pos[e.u].second), "%.2f") << "\" x2=\"" << fmt(cv.x(pos[e.v].first), "%.2f")
            << "\" y2=\"" << fmt(cv.y(pos[e.v].second), "%.2f")
            << "\" stroke=\"rgb(225,225,225)\" stroke-width=\"1\"/>\n";
    }
}

} // namespace detail

// Renders the members of one cluster over the instance geometry, coloring
// elements by sharing ratio. Elements with ratio 0 are invisible for SP
// (they never occur in the map); TSP and SPP additionally hide elements with
// ratio 0.5 or less.
inline void export_superimposition(const Instance& inst, const SolutionSet& members,
                                   const std::string& path) {
    if (members.records.empty()) throw Error("superimposition needs a nonempty cluster");
    if (instance_kind(inst) != members.problem)
        throw Error("instance and solutions disagree on the problem");
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    const detail::Canvas cv;
    detail::svg_header_and_title(out, cv, members.records.size());

    if (const auto* g = std::get_if<SpGridInstance>(&inst)) {
        std::vector<std::pair<double, double>> pos(g->graph.vertex_count);
        const double dr = g->rows > 1 ? 1.0 / (g->rows - 1) : 0.0;
        const double dc = g->cols > 1 ? 1.0 / (g->cols - 1) : 0.0;
        for (int id = 0; id < g->graph.vertex_count; ++id) {
            // row 0 at the bottom, so the source corner sits bottom-left
            pos[id] = {(id % g->cols) * dc, (id / g->cols) * dr};
        }
        const auto ratios = sharing_ratios(element_views(members));
        detail::draw_base_edges(out, cv, g->graph, pos);
        detail::draw_colored_edges(out, cv, detail::edges_by_ratio(ratios, 0.0), pos);
        detail::draw_nodes(out, cv, pos, 3.0);
    } else if (const auto* u = std::get_if<SpEudInstance>(&inst)) {
        std::vector<std::pair<double, double>> pos;
        for (const auto& p : u->points) pos.emplace_back(p.x, p.y);
        const auto ratios = sharing_ratios(element_views(members));
        detail::draw_base_edges(out, cv, u->graph, pos);
        detail::draw_colored_edges(out, cv, detail::edges_by_ratio(ratios, 0.0), pos);
        detail::draw_nodes(out, cv, pos, 2.5);
    } else if (const auto* t = std::get_if<TspInstance>(&inst)) {
        std::vector<std::pair<double, double>> pos;
        for (const auto& p : t->points()) pos.emplace_back(p.x, p.y);
        const auto ratios = sharing_ratios(element_views(members));
        detail::draw_colored_edges(out, cv, detail::edges_by_ratio(ratios, 0.5), pos);
        detail::draw_nodes(out, cv, pos, 2.5);
    } else if (const auto* s = std::get_if<SppInstance>(&inst)) {
        const auto ratios = sharing_ratios(element_views(members, SppView::Indices));
        const double step1 = 1.0 / s->rows(); // vertical extent per grid row
        const double step2 = 1.0 / s->cols();
        // grid cells as dots
        for (int x1 = 1; x1 <= s->rows(); ++x1) {
            for (int x2 = 1; x2 <= s->cols(); ++x2) {
                out << "<circle cx=\"" << detail::fmt(cv.x((x2 - 0.5) * step2), "%.2f")
                    << "\" cy=\"" << detail::fmt(cv.y((x1 - 0.5) * step1), "%.2f")
                    << "\" r=\"1.5\" fill=\"black\"/>\n";
            }
        }
        for (const auto& [ratio, idx] : detail::edges_by_ratio(ratios, 0.5)) {
            const auto& r = s->set(static_cast<int>(idx));
            const double x = cv.x((r.a2 - 1) * step2) + 2;
            const double y = cv.y(r.b1 * step1) + 2;
            const double w = (r.b2 - r.a2 + 1) * step2 * cv.plot - 4;
            const double h = (r.b1 - r.a1 + 1) * step1 * cv.plot - 4;
            out << "<rect x=\"" << detail::fmt(x, "%.2f") << "\" y=\"" << detail::fmt(y, "%.2f")
                << "\" width=\"" << detail::fmt(w, "%.2f") << "\" height=\""
                << detail::fmt(h, "%.2f") << "\" fill=\"" << detail::ramp_color(ratio)
                << "\" fill-opacity=\"0.85\" stroke=\"rgb(60,60,60)\" data-ratio=\""
                << detail::fmt(ratio, "%.6f") << "\"/>\n";
        }
    }

    detail::svg_footer(out, cv);
    if (!out) throw Error("failed while writing " + path);
}

} // namespace scs
