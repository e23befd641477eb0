#include "knowmap/exports.hpp"

#include "knowmap/csv.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace knowmap {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c); break;
        }
    }
    return out;
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// Fixed palette; cluster ids cycle through it.
constexpr const char* kPalette[12] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};

} // namespace

std::string to_graphml(const WeightedGraph& graph, const std::map<std::string, int>* clusters,
                       const std::map<std::string, std::array<double, 2>>* points,
                       const std::map<std::string, double>* betweenness) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out += "  <key id=\"d_label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
    out += "  <key id=\"d_occurrence\" for=\"node\" attr.name=\"occurrence\" attr.type=\"long\"/>\n";
    out += "  <key id=\"d_cluster\" for=\"node\" attr.name=\"cluster\" attr.type=\"int\"/>\n";
    out += "  <key id=\"d_x\" for=\"node\" attr.name=\"x\" attr.type=\"double\"/>\n";
    out += "  <key id=\"d_y\" for=\"node\" attr.name=\"y\" attr.type=\"double\"/>\n";
    out += "  <key id=\"d_betweenness\" for=\"node\" attr.name=\"betweenness\" attr.type=\"double\"/>\n";
    out += "  <key id=\"d_weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
    out += graph.kind == WeightedGraph::Kind::TermCooccurrence
               ? "  <graph id=\"terms\" edgedefault=\"undirected\">\n"
               : "  <graph id=\"authors\" edgedefault=\"undirected\">\n";
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        const auto& node = graph.nodes[i];
        out += "    <node id=\"n" + std::to_string(i) + "\">\n";
        out += "      <data key=\"d_label\">" + xml_escape(node.label) + "</data>\n";
        out += "      <data key=\"d_occurrence\">" + std::to_string(node.occurrence) + "</data>\n";
        if (clusters) {
            if (const auto it = clusters->find(node.label); it != clusters->end())
                out += "      <data key=\"d_cluster\">" + std::to_string(it->second) + "</data>\n";
        }
        if (points) {
            if (const auto it = points->find(node.label); it != points->end()) {
                out += "      <data key=\"d_x\">" + fmt_double(it->second[0]) + "</data>\n";
                out += "      <data key=\"d_y\">" + fmt_double(it->second[1]) + "</data>\n";
            }
        }
        if (betweenness) {
            if (const auto it = betweenness->find(node.label); it != betweenness->end())
                out += "      <data key=\"d_betweenness\">" + fmt_double(it->second) + "</data>\n";
        }
        out += "    </node>\n";
    }
    for (size_t i = 0; i < graph.edges.size(); ++i) {
        const auto& e = graph.edges[i];
        out += "    <edge id=\"e" + std::to_string(i) + "\" source=\"n" + std::to_string(e.a)
               + "\" target=\"n" + std::to_string(e.b) + "\">\n";
        out += "      <data key=\"d_weight\">" + fmt_double(e.weight) + "</data>\n";
        out += "    </edge>\n";
    }
    out += "  </graph>\n</graphml>\n";
    return out;
}

std::string to_dot(const WeightedGraph& graph, const std::map<std::string, int>* clusters) {
    std::string out;
    out += graph.kind == WeightedGraph::Kind::TermCooccurrence ? "graph terms {\n" : "graph authors {\n";
    out += "  node [style=filled];\n";
    for (size_t i = 0; i < graph.nodes.size(); ++i) {
        const auto& node = graph.nodes[i];
        out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(node.label) + "\"";
        if (clusters) {
            if (const auto it = clusters->find(node.label); it != clusters->end())
                out += std::string(", fillcolor=\"") + kPalette[it->second % 12] + "\"";
        }
        out += "];\n";
    }
    for (const auto& e : graph.edges) {
        out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [weight="
               + fmt_double(e.weight) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string occurrence_csv(const OccurrenceTable& table) {
    std::string out = "term,occurrences\n";
    long total = 0;
    for (const auto& [term, n] : table.rows) {
        out += csv::join_row({term, std::to_string(n)});
        total += n;
    }
    out += csv::join_row({"TOTAL", std::to_string(total)});
    return out;
}

std::string annual_csv(const AnnualProduction& production) {
    std::string out = "year,articles\n";
    for (const auto& [year, n] : production.counts)
        out += csv::join_row({std::to_string(year), std::to_string(n)});
    return out;
}

std::string ranking_csv(const RankingReport& report, const std::string& name_col) {
    std::string out = name_col + ",articles\n";
    for (const auto& [name, n] : report.rows)
        out += csv::join_row({name, std::to_string(n)});
    return out;
}

std::string cumulative_csv(const RankingReport& report) {
    std::string out = "source,year,cumulative\n";
    for (const auto& [name, per_year] : report.cumulative_by_year)
        for (const auto& [year, n] : per_year)
            out += csv::join_row({name, std::to_string(year), std::to_string(n)});
    return out;
}

std::string summary_json(const IndicatorSummary& s) {
    nlohmann::ordered_json j;
    j["documents"] = s.documents;
    j["sources"] = s.sources;
    j["keywords"] = s.keywords;
    if (s.period) {
        j["period"] = {{"min_year", s.period->first}, {"max_year", s.period->second}};
    } else {
        j["period"] = nullptr;
    }
    j["authors"] = s.authors;
    j["author_appearances"] = s.author_appearances;
    j["authors_single"] = s.authors_single;
    j["authors_multi"] = s.authors_multi;
    j["single_authored_docs"] = s.single_authored_docs;
    j["documents_per_author"] = s.documents_per_author;
    j["authors_per_document"] = s.authors_per_document;
    j["coauthors_per_document"] = s.coauthors_per_document;
    if (s.collaboration_index)
        j["collaboration_index"] = *s.collaboration_index;
    else
        j["collaboration_index"] = nullptr;
    // counting rules that Table-1-style numbers depend on
    j["notes"] = {
        {"author_identity", "surname plus initials after normalization; homonyms collapse"},
        {"keywords", "distinct author keywords after normalization"},
        {"authors_partition", "authors on any multi-authored document count as multi only"},
    };
    return j.dump(2) + "\n";
}

std::string centrality_csv(const CentralityScores& scores, const std::map<std::string, long>& degrees) {
    std::string out = "term,betweenness,degree\n";
    // highest betweenness first, label breaks ties
    std::vector<std::pair<std::string, double>> rows(scores.scores.begin(), scores.scores.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
    for (const auto& [label, bc] : rows) {
        const auto it = degrees.find(label);
        const long deg = it == degrees.end() ? 0 : it->second;
        out += csv::join_row({label, fmt_double(bc), std::to_string(deg)});
    }
    return out;
}

std::string clusters_csv(const Partition& partition) {
    std::string out = "term,cluster\n";
    for (const auto& [label, cluster] : partition.assignment)
        out += csv::join_row({label, std::to_string(cluster)});
    return out;
}

namespace {

constexpr int kChartWidth = 640;
constexpr int kChartHeight = 400;
constexpr int kMarginLeft = 60;
constexpr int kMarginBottom = 60;
constexpr int kMarginTop = 40;
constexpr int kMarginRight = 20;

std::string svg_header(const std::string& title) {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kChartWidth)
           + "\" height=\"" + std::to_string(kChartHeight) + "\" viewBox=\"0 0 "
           + std::to_string(kChartWidth) + " " + std::to_string(kChartHeight) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "  <text x=\"" + std::to_string(kChartWidth / 2)
           + "\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">"
           + xml_escape(title) + "</text>\n";
    return out;
}

} // namespace

std::string svg_bar_chart(const std::string& title, const std::vector<std::pair<std::string, long>>& bars) {
    std::string out = svg_header(title);
    const double plot_w = kChartWidth - kMarginLeft - kMarginRight;
    const double plot_h = kChartHeight - kMarginTop - kMarginBottom;
    long max_v = 1;
    for (const auto& [label, v] : bars)
        max_v = std::max(max_v, v);
    const size_t n = bars.empty() ? 1 : bars.size();
    const double slot = plot_w / static_cast<double>(n);
    const double bar_w = slot * 0.7;

    out += "  <line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + std::to_string(kMarginTop)
           + "\" x2=\"" + std::to_string(kMarginLeft) + "\" y2=\""
           + std::to_string(kChartHeight - kMarginBottom) + "\" stroke=\"black\"/>\n";
    out += "  <line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\""
           + std::to_string(kChartHeight - kMarginBottom) + "\" x2=\""
           + std::to_string(kChartWidth - kMarginRight) + "\" y2=\""
           + std::to_string(kChartHeight - kMarginBottom) + "\" stroke=\"black\"/>\n";
    out += "  <text x=\"" + std::to_string(kMarginLeft - 8) + "\" y=\"" + std::to_string(kMarginTop + 4)
           + "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\">" + std::to_string(max_v)
           + "</text>\n";

    for (size_t i = 0; i < bars.size(); ++i) {
        const double h = plot_h * static_cast<double>(bars[i].second) / static_cast<double>(max_v);
        const double x = kMarginLeft + slot * static_cast<double>(i) + (slot - bar_w) / 2;
        const double y = kChartHeight - kMarginBottom - h;
        out += "  <rect x=\"" + fmt_fixed(x, 2) + "\" y=\"" + fmt_fixed(y, 2) + "\" width=\""
               + fmt_fixed(bar_w, 2) + "\" height=\"" + fmt_fixed(h, 2) + "\" fill=\"#1f77b4\"/>\n";
        out += "  <text x=\"" + fmt_fixed(x + bar_w / 2, 2) + "\" y=\""
               + std::to_string(kChartHeight - kMarginBottom + 14)
               + "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"9\" transform=\"rotate(-45 "
               + fmt_fixed(x + bar_w / 2, 2) + " " + std::to_string(kChartHeight - kMarginBottom + 14)
               + ")\">" + xml_escape(bars[i].first) + "</text>\n";
        out += "  <text x=\"" + fmt_fixed(x + bar_w / 2, 2) + "\" y=\"" + fmt_fixed(y - 4, 2)
               + "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"9\">"
               + std::to_string(bars[i].second) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string svg_scatter(const std::string& title,
                        const std::map<std::string, std::array<double, 2>>& points,
                        const std::map<std::string, int>& clusters) {
    std::string out = svg_header(title);
    const double plot_w = kChartWidth - kMarginLeft - kMarginRight;
    const double plot_h = kChartHeight - kMarginTop - kMarginBottom;

    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& [label, p] : points) {
        if (first) {
            xmin = xmax = p[0];
            ymin = ymax = p[1];
            first = false;
        } else {
            xmin = std::min(xmin, p[0]);
            xmax = std::max(xmax, p[0]);
            ymin = std::min(ymin, p[1]);
            ymax = std::max(ymax, p[1]);
        }
    }
    const double xspan = (xmax - xmin) > 1e-12 ? xmax - xmin : 1.0;
    const double yspan = (ymax - ymin) > 1e-12 ? ymax - ymin : 1.0;

    for (const auto& [label, p] : points) {
        const double px = kMarginLeft + (p[0] - xmin) / xspan * plot_w;
        const double py = kChartHeight - kMarginBottom - (p[1] - ymin) / yspan * plot_h;
        const auto cit = clusters.find(label);
        const char* color = cit == clusters.end() ? "#7f7f7f" : kPalette[cit->second % 12];
        out += std::string("  <circle cx=\"") + fmt_fixed(px, 2) + "\" cy=\"" + fmt_fixed(py, 2)
               + "\" r=\"4\" fill=\"" + color + "\"/>\n";
        out += "  <text x=\"" + fmt_fixed(px + 6, 2) + "\" y=\"" + fmt_fixed(py + 3, 2)
               + "\" font-family=\"monospace\" font-size=\"8\">" + xml_escape(label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace knowmap
