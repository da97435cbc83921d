#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "outbreak/centrality.hpp"
#include "outbreak/epidemic.hpp"
#include "outbreak/graph.hpp"
#include "outbreak/optimizer.hpp"
#include "outbreak/stats.hpp"

namespace outbreak {

enum class Strategy { DegreeTopK, BetweennessTopK, EigenvectorTopK, GeneticAlgorithm, NoProtection };

inline constexpr std::array<Strategy, 5> all_strategies{
    Strategy::DegreeTopK, Strategy::BetweennessTopK, Strategy::EigenvectorTopK,
    Strategy::GeneticAlgorithm, Strategy::NoProtection};

std::string_view to_string(Strategy strategy) noexcept;

struct StrategyReport {
    Strategy strategy = Strategy::NoProtection;
    NodeSet protected_nodes;
    std::vector<std::size_t> casualties;  // one entry per run, in run order
    BoxplotStats stats;
};

/// The first k entries of the ranking.
NodeSet top_k_nodes(const CentralityRanking& ranking, std::size_t k);

/// Removes `protect` once and runs `runs` outbreaks from uniform seeds.
StrategyReport evaluate_protection(const Graph& g, const NodeSet& protect, const SirParams& params,
                                   std::size_t runs, const RngStream& stream,
                                   std::size_t threads = 1);

/// Node sets chosen by the GA and the degree strategy, split three ways.
struct SelectionOverlap {
    NodeSet both;
    NodeSet ga_only;
    NodeSet degree_only;
};

SelectionOverlap selection_overlap(const NodeSet& ga, const NodeSet& degree);

struct DegreeOverlayRow {
    std::size_t degree = 0;
    std::size_t nodes = 0;
    std::size_t selected = 0;
};

/// Degree histogram with, per degree, how many of `selected` have it.
std::vector<DegreeOverlayRow> degree_overlay(const Graph& g, const NodeSet& selected);

struct ComparisonSettings {
    SirParams params;
    std::size_t k = 10;
    std::size_t l = 100;
    std::size_t runs = 500;
    std::uint64_t master_seed = 0;
    /// Population, generation, tournament, elite and m settings; k, l and
    /// master_seed are overridden from the fields above.
    GaConfig ga;
};

struct Comparison {
    std::vector<StrategyReport> reports;  // in all_strategies order
    RankingSet rankings;
    ReducedPool pool;
    GaResult ga;
    SelectionOverlap overlap;
    std::vector<DegreeOverlayRow> overlay;
};

/// Runs the five-way comparison. Strategy s is evaluated on the stream
/// (master_seed, strategy, s); the GA gets its own seed derived from
/// (master_seed, genetic_algorithm).
Comparison compare_strategies(const Graph& g, const ComparisonSettings& settings,
                              std::size_t threads = 1);

}  // namespace outbreak
