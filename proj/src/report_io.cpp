#include "outbreak/report_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace outbreak {

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

double round12(double value) {
    return std::strtod(format_real(value).c_str(), nullptr);
}

std::vector<std::string> labels_of(const Graph& g, const NodeSet& nodes) {
    std::vector<std::string> labels;
    labels.reserve(nodes.size());
    for (NodeId v : nodes) {
        labels.push_back(g.label(v));
    }
    return labels;
}

void write_centrality_csv(std::ostream& out, const Graph& g, const RankingSet& rankings) {
    out << "node_label,degree,betweenness,eigenvector\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << g.label(v) << ',' << format_real(rankings[0].scores[v]) << ','
            << format_real(rankings[1].scores[v]) << ',' << format_real(rankings[2].scores[v])
            << '\n';
    }
}

namespace {

std::string join_labels(const Graph& g, const Chromosome& chromosome) {
    std::string joined;
    for (NodeId v : chromosome.genes()) {
        if (!joined.empty()) {
            joined += ' ';
        }
        joined += g.label(v);
    }
    return joined;
}

}  // namespace

void write_history_csv(std::ostream& out, const Graph& g, const GaHistory& history) {
    out << "generation,best_fitness,mean_fitness,best_chromosome_labels\n";
    for (const auto& record : history.records) {
        out << record.generation << ',' << format_real(record.best_fitness) << ','
            << format_real(record.mean_fitness) << ',' << join_labels(g, record.best_chromosome)
            << '\n';
    }
}

void write_trace_csv(std::ostream& out, const std::vector<CompartmentCounts>& trace) {
    out << "t,S,I,R\n";
    for (const auto& row : trace) {
        out << row.t << ',' << row.susceptible << ',' << row.infectious << ',' << row.removed << '\n';
    }
}

void write_casualties_csv(std::ostream& out, const StrategyReport& report) {
    out << "run,casualties\n";
    for (std::size_t i = 0; i < report.casualties.size(); ++i) {
        out << i << ',' << report.casualties[i] << '\n';
    }
}

void write_overlay_csv(std::ostream& out, const std::vector<DegreeOverlayRow>& overlay) {
    out << "degree,nodes,ga_selected\n";
    for (const auto& row : overlay) {
        out << row.degree << ',' << row.nodes << ',' << row.selected << '\n';
    }
}

nlohmann::json to_json(const BoxplotStats& stats) {
    nlohmann::json outliers = nlohmann::json::array();
    for (double v : stats.outliers) {
        outliers.push_back(round12(v));
    }
    return {{"min", round12(stats.min)},
            {"q1", round12(stats.q1)},
            {"median", round12(stats.median)},
            {"q3", round12(stats.q3)},
            {"max", round12(stats.max)},
            {"mean", round12(stats.mean)},
            {"whisker_low", round12(stats.whisker_low)},
            {"whisker_high", round12(stats.whisker_high)},
            {"outliers", std::move(outliers)}};
}

nlohmann::json to_json(const Graph& g, const StrategyReport& report) {
    return {{"strategy", std::string(to_string(report.strategy))},
            {"protected_nodes", labels_of(g, report.protected_nodes)},
            {"casualties", report.casualties},
            {"stats", to_json(report.stats)}};
}

nlohmann::json to_json(const Graph& g, const GaHistory& history) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& record : history.records) {
        records.push_back({{"generation", record.generation},
                           {"best_fitness", round12(record.best_fitness)},
                           {"mean_fitness", round12(record.mean_fitness)},
                           {"best_chromosome", labels_of(g, record.best_chromosome.to_node_set())}});
    }
    return records;
}

nlohmann::json to_json(const Graph& g, const Comparison& comparison) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& report : comparison.reports) {
        reports.push_back(to_json(g, report));
    }
    nlohmann::json overlay = nlohmann::json::array();
    for (const auto& row : comparison.overlay) {
        overlay.push_back({{"degree", row.degree}, {"nodes", row.nodes}, {"ga_selected", row.selected}});
    }
    return {{"reports", std::move(reports)},
            {"pool_size", comparison.pool.members.size()},
            {"ga_best_fitness", round12(comparison.ga.best.fitness)},
            {"ga_history", to_json(g, comparison.ga.history)},
            {"overlap",
             {{"both", labels_of(g, comparison.overlap.both)},
              {"ga_only", labels_of(g, comparison.overlap.ga_only)},
              {"degree_only", labels_of(g, comparison.overlap.degree_only)}}},
            {"degree_overlay", std::move(overlay)}};
}

}  // namespace outbreak
