#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "outbreak/centrality.hpp"
#include "outbreak/epidemic.hpp"
#include "outbreak/graph.hpp"
#include "outbreak/optimizer.hpp"
#include "outbreak/strategies.hpp"

namespace outbreak {

/// Decimal text with 12 significant digits.
std::string format_real(double value);

/// `value` rounded to 12 significant digits, so JSON output stays stable
/// across implementations.
double round12(double value);

std::vector<std::string> labels_of(const Graph& g, const NodeSet& nodes);

/// `node_label,degree,betweenness,eigenvector`, one row per node id.
void write_centrality_csv(std::ostream& out, const Graph& g, const RankingSet& rankings);

/// `generation,best_fitness,mean_fitness,best_chromosome_labels`; labels
/// within the last field are separated by single spaces.
void write_history_csv(std::ostream& out, const Graph& g, const GaHistory& history);

/// `t,S,I,R`, one row per step including t = 0.
void write_trace_csv(std::ostream& out, const std::vector<CompartmentCounts>& trace);

/// `run,casualties`.
void write_casualties_csv(std::ostream& out, const StrategyReport& report);

/// `degree,nodes,ga_selected`.
void write_overlay_csv(std::ostream& out, const std::vector<DegreeOverlayRow>& overlay);

nlohmann::json to_json(const BoxplotStats& stats);
nlohmann::json to_json(const Graph& g, const StrategyReport& report);
nlohmann::json to_json(const Graph& g, const GaHistory& history);
nlohmann::json to_json(const Graph& g, const Comparison& comparison);

}  // namespace outbreak
