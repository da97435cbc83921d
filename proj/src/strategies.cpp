#include "outbreak/strategies.hpp"

#include <string>

namespace outbreak {

std::string_view to_string(Strategy strategy) noexcept {
    switch (strategy) {
        case Strategy::DegreeTopK: return "degree";
        case Strategy::BetweennessTopK: return "betweenness";
        case Strategy::EigenvectorTopK: return "eigenvector";
        case Strategy::GeneticAlgorithm: return "ga";
        case Strategy::NoProtection: return "no_protection";
    }
    return "unknown";
}

NodeSet top_k_nodes(const CentralityRanking& ranking, std::size_t k) {
    if (k > ranking.order.size()) {
        throw std::invalid_argument("k = " + std::to_string(k) + " exceeds the node count " +
                                    std::to_string(ranking.order.size()));
    }
    return NodeSet(std::vector<NodeId>(ranking.order.begin(),
                                       ranking.order.begin() + static_cast<std::ptrdiff_t>(k)));
}

StrategyReport evaluate_protection(const Graph& g, const NodeSet& protect, const SirParams& params,
                                   std::size_t runs, const RngStream& stream,
                                   std::size_t threads) {
    if (runs == 0) {
        throw EpidemicError("evaluation needs at least one run");
    }
    const Subgraph residual = remove_nodes(g, protect);
    StrategyReport report;
    report.protected_nodes = protect;
    report.casualties = sample_casualties(residual.graph, params, runs, stream, threads);
    const std::vector<double> values(report.casualties.begin(), report.casualties.end());
    report.stats = boxplot_stats(values);
    return report;
}

SelectionOverlap selection_overlap(const NodeSet& ga, const NodeSet& degree) {
    return {set_intersection(ga, degree), set_difference(ga, degree), set_difference(degree, ga)};
}

std::vector<DegreeOverlayRow> degree_overlay(const Graph& g, const NodeSet& selected) {
    std::vector<DegreeOverlayRow> rows;
    for (const auto& [degree, count] : degree_distribution(g)) {
        rows.push_back({degree, count, 0});
    }
    for (NodeId v : selected) {
        const auto d = g.degree(v);
        for (auto& row : rows) {
            if (row.degree == d) {
                ++row.selected;
                break;
            }
        }
    }
    return rows;
}

Comparison compare_strategies(const Graph& g, const ComparisonSettings& settings,
                              std::size_t threads) {
    settings.params.validate();
    const RngStream root(settings.master_seed);

    Comparison out;
    out.rankings = compute_rankings(g, threads);
    out.pool = reduced_pool(out.rankings, settings.l);

    NodeSet ga_set;
    if (settings.k > 0) {
        GaConfig config = settings.ga;
        config.k = settings.k;
        config.l = settings.l;
        config.master_seed = root.substream(stream_tag::genetic_algorithm).key();
        out.ga = evolve(g, out.pool, out.rankings, settings.params, config, threads);
        ga_set = out.ga.best.chromosome.to_node_set();
    }

    for (std::size_t s = 0; s < all_strategies.size(); ++s) {
        const Strategy strategy = all_strategies[s];
        NodeSet protect;
        switch (strategy) {
            case Strategy::DegreeTopK: protect = top_k_nodes(out.rankings[0], settings.k); break;
            case Strategy::BetweennessTopK: protect = top_k_nodes(out.rankings[1], settings.k); break;
            case Strategy::EigenvectorTopK: protect = top_k_nodes(out.rankings[2], settings.k); break;
            case Strategy::GeneticAlgorithm: protect = ga_set; break;
            case Strategy::NoProtection: break;
        }
        auto report = evaluate_protection(g, protect, settings.params, settings.runs,
                                          root.substream(stream_tag::strategy, s), threads);
        report.strategy = strategy;
        out.reports.push_back(std::move(report));
    }

    out.overlap = selection_overlap(ga_set, out.reports[0].protected_nodes);
    out.overlay = degree_overlay(g, ga_set);
    return out;
}

}  // namespace outbreak
