#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "outbreak/graph.hpp"

namespace outbreak {

enum class CentralityKind { Degree, Betweenness, Eigenvector };

inline constexpr std::array<CentralityKind, 3> all_centrality_kinds{
    CentralityKind::Degree, CentralityKind::Betweenness, CentralityKind::Eigenvector};

std::string_view to_string(CentralityKind kind) noexcept;

class CentralityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<double> degree_centrality(const Graph& g);

/// Brandes' algorithm, summed over unordered source/target pairs.
/// Sources are processed in fixed-size blocks whose partial sums are added
/// in block order, so the result is bit-identical for any `threads`.
std::vector<double> betweenness_centrality(const Graph& g, std::size_t threads = 1);

struct EigenvectorOptions {
    double tolerance = 1e-10;
    std::size_t max_iterations = 10000;
};

struct EigenvectorResult {
    std::vector<double> scores;  // nonnegative, unit L2 norm
    double eigenvalue = 0.0;
    double residual = 0.0;       // max_v |(Ax)_v - lambda x_v|
    std::size_t iterations = 0;
};

/// Power iteration from the uniform start vector. Iterates on A + I, which
/// shares A's eigenvectors but keeps bipartite graphs from oscillating.
EigenvectorResult eigenvector_centrality_detailed(const Graph& g, EigenvectorOptions options = {});
std::vector<double> eigenvector_centrality(const Graph& g, EigenvectorOptions options = {});

struct CentralityRanking {
    CentralityKind kind = CentralityKind::Degree;
    std::vector<double> scores;
    /// Node ids by descending score, ties by ascending id.
    std::vector<NodeId> order;
};

CentralityRanking build_ranking(CentralityKind kind, std::vector<double> scores);

/// Degree, betweenness and eigenvector rankings, in that order.
using RankingSet = std::array<CentralityRanking, 3>;

RankingSet compute_rankings(const Graph& g, std::size_t threads = 1);

struct ReducedPool {
    std::vector<NodeId> members;  // ascending
    std::size_t depth = 0;        // the truncation l
};

/// Union of the first `depth` entries of each ranking. Requires depth < n.
ReducedPool reduced_pool(const RankingSet& rankings, std::size_t depth);

/// R^2 of the least-squares line of ys on xs.
double correlation_r2(std::span<const double> xs, std::span<const double> ys);

}  // namespace outbreak
