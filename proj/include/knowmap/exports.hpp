#pragma once

#include "knowmap/betweenness.hpp"
#include "knowmap/community.hpp"
#include "knowmap/graph.hpp"
#include "knowmap/indicators.hpp"
#include "knowmap/termspace.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace knowmap {

// GraphML with node attributes label/occurrence/cluster/x/y/betweenness and
// edge attribute weight; optional blocks are omitted per node when the
// corresponding map is absent. Floats carry 9 significant digits.
std::string to_graphml(const WeightedGraph& graph, const std::map<std::string, int>* clusters,
                       const std::map<std::string, std::array<double, 2>>* points,
                       const std::map<std::string, double>* betweenness);

// DOT with nodes colored from a fixed 12-color palette cycling by cluster id.
std::string to_dot(const WeightedGraph& graph, const std::map<std::string, int>* clusters);

// "term,occurrences" rows plus a closing "TOTAL,<n>" row.
std::string occurrence_csv(const OccurrenceTable& table);

std::string annual_csv(const AnnualProduction& production);
std::string ranking_csv(const RankingReport& report, const std::string& name_col);
// source,year,cumulative rows for the time-evolution curves.
std::string cumulative_csv(const RankingReport& report);
std::string summary_json(const IndicatorSummary& summary);
// term,betweenness,degree
std::string centrality_csv(const CentralityScores& scores, const std::map<std::string, long>& degrees);
std::string clusters_csv(const Partition& partition);

// Hand-built deterministic SVG (fixed viewport, no font metrics consulted).
std::string svg_bar_chart(const std::string& title, const std::vector<std::pair<std::string, long>>& bars);
std::string svg_scatter(const std::string& title,
                        const std::map<std::string, std::array<double, 2>>& points,
                        const std::map<std::string, int>& clusters);

} // namespace knowmap
