#pragma once

// Graph fixtures and independent oracles used by the unit and acceptance
// suites. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "outbreak/graph.hpp"
#include "outbreak/rng.hpp"

namespace outbreak::testing {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

inline Graph make_graph(std::size_t n, const EdgeList& edges) {
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(std::size_t n) {
    EdgeList edges;
    for (NodeId v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return make_graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
    EdgeList edges;
    for (NodeId v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<NodeId>((v + 1) % n));
    }
    return make_graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
    EdgeList edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return make_graph(n, edges);
}

/// Center 0 plus `leaves` leaves.
inline Graph star_graph(std::size_t leaves) {
    EdgeList edges;
    for (NodeId v = 1; v <= leaves; ++v) {
        edges.emplace_back(0, v);
    }
    return make_graph(leaves + 1, edges);
}

inline Graph edgeless_graph(std::size_t n) { return make_graph(n, {}); }

/// Disjoint union; the second graph's ids are shifted by a.node_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    EdgeList edges = a.edges();
    const auto shift = static_cast<NodeId>(a.node_count());
    for (const auto& [u, v] : b.edges()) {
        edges.emplace_back(u + shift, v + shift);
    }
    return make_graph(a.node_count() + b.node_count(), edges);
}

/// K6 on 0..5 and K6 on 7..12, joined through node 6 (edges 0-6 and 6-7).
inline Graph two_cliques_bridge() {
    EdgeList edges;
    for (NodeId base : {NodeId{0}, NodeId{7}}) {
        for (NodeId u = 0; u < 6; ++u) {
            for (NodeId v = u + 1; v < 6; ++v) {
                edges.emplace_back(base + u, base + v);
            }
        }
    }
    edges.emplace_back(0, 6);
    edges.emplace_back(6, 7);
    return make_graph(13, edges);
}

/// 14 nodes in two 7-node clusters; each cluster is K7 minus a perfect-ish
/// matching, and the clusters touch through edges 5-7 and 6-8.
inline Graph two_cluster_fourteen() {
    EdgeList edges;
    for (NodeId base : {NodeId{0}, NodeId{7}}) {
        for (NodeId u = 0; u < 7; ++u) {
            for (NodeId v = u + 1; v < 7; ++v) {
                const bool removed = (u == 0 && v == 1) || (u == 2 && v == 3);
                if (!removed) {
                    edges.emplace_back(base + u, base + v);
                }
            }
        }
    }
    edges.emplace_back(5, 7);
    edges.emplace_back(6, 8);
    return make_graph(14, edges);
}

inline Graph random_graph(std::size_t n, double p, Engine& engine) {
    EdgeList edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (uniform01(engine) < p) {
                edges.emplace_back(u, v);
            }
        }
    }
    return make_graph(n, edges);
}

/// Uniform random recursive tree.
inline Graph random_tree(std::size_t n, Engine& engine) {
    EdgeList edges;
    for (NodeId v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<NodeId>(uniform_index(engine, v)), v);
    }
    return make_graph(n, edges);
}

/// Modular scale-free graph: `communities` blocks grown by preferential
/// attachment with `attach` links per new node, plus `bridges` random
/// links between blocks whose endpoints are chosen by degree.
inline Graph modular_scale_free(std::size_t communities, std::size_t block, std::size_t attach,
                                std::size_t bridges, Engine& engine) {
    EdgeList edges;
    std::vector<NodeId> endpoints;  // one entry per edge end, for degree-biased picks
    for (std::size_t c = 0; c < communities; ++c) {
        const auto base = static_cast<NodeId>(c * block);
        std::vector<NodeId> local;
        for (NodeId u = 0; u <= attach; ++u) {
            for (NodeId v = u + 1; v <= attach; ++v) {
                edges.emplace_back(base + u, base + v);
                local.push_back(base + u);
                local.push_back(base + v);
            }
        }
        for (NodeId v = static_cast<NodeId>(attach + 1); v < block; ++v) {
            std::vector<NodeId> targets;
            while (targets.size() < attach) {
                const NodeId t = local[uniform_index(engine, local.size())];
                if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                    targets.push_back(t);
                }
            }
            for (NodeId t : targets) {
                edges.emplace_back(t, base + v);
                local.push_back(t);
                local.push_back(base + v);
            }
        }
        endpoints.insert(endpoints.end(), local.begin(), local.end());
    }
    for (std::size_t b = 0; b < bridges; ++b) {
        const NodeId u = endpoints[uniform_index(engine, endpoints.size())];
        const NodeId v = endpoints[uniform_index(engine, endpoints.size())];
        if (u / block != v / block) {
            edges.emplace_back(u, v);
        }
    }
    return make_graph(communities * block, edges);
}

/// Modular power-law graph (Chung-Lu): node i has expected degree
/// proportional to (i + offset)^(-1 / (exponent - 1)), scaled to
/// `mean_degree`. Nodes are dealt round-robin into `communities`; a
/// fraction `mixing` of each node's expected degree goes to other blocks.
inline Graph modular_power_law(std::size_t n, std::size_t communities, double mean_degree,
                               double exponent, double mixing, Engine& engine) {
    std::vector<double> weight(n);
    const double offset = 3.0;
    for (std::size_t i = 0; i < n; ++i) {
        weight[i] = std::pow(static_cast<double>(i) + offset, -1.0 / (exponent - 1.0));
    }
    const double scale = mean_degree * static_cast<double>(n) /
                         std::accumulate(weight.begin(), weight.end(), 0.0);
    for (auto& w : weight) {
        w *= scale;
    }
    std::vector<double> block_total(communities, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        block_total[i % communities] += weight[i];
    }
    const double total = std::accumulate(weight.begin(), weight.end(), 0.0);

    EdgeList edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            const bool same = u % communities == v % communities;
            const double p = same ? (1.0 - mixing) * weight[u] * weight[v] / block_total[u % communities]
                                  : mixing * weight[u] * weight[v] / (total - block_total[u % communities]);
            if (uniform01(engine) < std::min(1.0, p)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return make_graph(n, edges);
}

/// Regions of power-law (Chung-Lu) graphs whose only links to other
/// regions run through a few mid-degree gateway nodes, the way regional
/// airports reach the rest of a network through a handful of airports.
/// Gateway g of a region is the node of local rank `gateway_rank + g`.
inline Graph gateway_regions(std::size_t regions, std::size_t region_size, double mean_degree,
                             double exponent, std::size_t gateways, std::size_t gateway_rank,
                             std::size_t links_per_gateway, Engine& engine) {
    std::vector<double> weight(region_size);
    for (std::size_t i = 0; i < region_size; ++i) {
        weight[i] = std::pow(static_cast<double>(i) + 2.0, -1.0 / (exponent - 1.0));
    }
    const double scale = mean_degree * static_cast<double>(region_size) /
                         std::accumulate(weight.begin(), weight.end(), 0.0);
    for (auto& w : weight) {
        w *= scale;
    }
    const double total = std::accumulate(weight.begin(), weight.end(), 0.0);

    EdgeList edges;
    std::vector<NodeId> gateway_nodes;
    for (std::size_t r = 0; r < regions; ++r) {
        const auto base = static_cast<NodeId>(r * region_size);
        for (NodeId u = 0; u < region_size; ++u) {
            for (NodeId v = u + 1; v < region_size; ++v) {
                if (uniform01(engine) < std::min(1.0, weight[u] * weight[v] / total)) {
                    edges.emplace_back(base + u, base + v);
                }
            }
        }
        for (std::size_t g = 0; g < gateways; ++g) {
            gateway_nodes.push_back(base + static_cast<NodeId>(gateway_rank + g));
        }
    }
    for (NodeId u : gateway_nodes) {
        for (std::size_t link = 0; link < links_per_gateway; ++link) {
            const NodeId v = gateway_nodes[uniform_index(engine, gateway_nodes.size())];
            if (u / region_size != v / region_size) {
                edges.emplace_back(u, v);
            }
        }
    }
    return make_graph(regions * region_size, edges);
}

// ---------------------------------------------------------------------------
// Oracles

inline std::vector<std::vector<long>> all_pairs_distances(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<long>> dist(n, std::vector<long>(n, -1));
    for (NodeId s = 0; s < n; ++s) {
        std::queue<NodeId> q;
        dist[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            const NodeId v = q.front();
            q.pop();
            for (NodeId w : g.neighbors(v)) {
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][v] + 1;
                    q.push(w);
                }
            }
        }
    }
    return dist;
}

/// Shortest-path counts by dynamic programming over distance layers.
inline std::vector<std::vector<double>> all_pairs_path_counts(const Graph& g,
                                                              const std::vector<std::vector<long>>& dist) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    for (NodeId s = 0; s < n; ++s) {
        std::vector<NodeId> by_distance(n);
        std::iota(by_distance.begin(), by_distance.end(), NodeId{0});
        std::sort(by_distance.begin(), by_distance.end(),
                  [&](NodeId a, NodeId b) { return dist[s][a] < dist[s][b]; });
        sigma[s][s] = 1.0;
        for (NodeId v : by_distance) {
            if (dist[s][v] <= 0) {
                continue;
            }
            for (NodeId w : g.neighbors(v)) {
                if (dist[s][w] == dist[s][v] - 1) {
                    sigma[s][v] += sigma[s][w];
                }
            }
        }
    }
    return sigma;
}

/// Betweenness straight from the definition, over unordered pairs.
inline std::vector<double> naive_betweenness(const Graph& g) {
    const std::size_t n = g.node_count();
    const auto dist = all_pairs_distances(g);
    const auto sigma = all_pairs_path_counts(g, dist);
    std::vector<double> scores(n, 0.0);
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
            if (dist[s][t] < 0) {
                continue;
            }
            for (NodeId v = 0; v < n; ++v) {
                if (v == s || v == t || dist[s][v] < 0 || dist[v][t] < 0) {
                    continue;
                }
                if (dist[s][v] + dist[v][t] == dist[s][t]) {
                    scores[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
                }
            }
        }
    }
    return scores;
}

/// Sum over unordered pairs of the number of interior nodes on the unique
/// tree path, found by walking parent pointers.
inline double tree_interior_node_total(const Graph& tree) {
    const std::size_t n = tree.node_count();
    double total = 0.0;
    for (NodeId s = 0; s < n; ++s) {
        std::vector<long> parent(n, -2);
        std::queue<NodeId> q;
        parent[s] = -1;
        q.push(s);
        while (!q.empty()) {
            const NodeId v = q.front();
            q.pop();
            for (NodeId w : tree.neighbors(v)) {
                if (parent[w] == -2) {
                    parent[w] = v;
                    q.push(w);
                }
            }
        }
        for (NodeId t = s + 1; t < n; ++t) {
            long hops = 0;
            for (long v = parent[t]; v != static_cast<long>(s) && v >= 0; v = parent[v]) {
                ++hops;
            }
            total += static_cast<double>(hops);
        }
    }
    return total;
}

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

struct DenseEigen {
    double lambda = 0.0;
    /// Orthonormal basis of the eigenspace of lambda (columns).
    Eigen::MatrixXd basis;
};

/// Dominant eigenpair(s) from a dense symmetric solver. Eigenvalues within
/// `degenerate_tol` of the largest are treated as one eigenspace.
inline DenseEigen dense_dominant_eigenspace(const Graph& g, double degenerate_tol = 1e-9) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g));
    const auto& values = solver.eigenvalues();
    const Eigen::Index n = values.size();
    DenseEigen out;
    out.lambda = values(n - 1);
    Eigen::Index first = n - 1;
    while (first > 0 && out.lambda - values(first - 1) <= degenerate_tol) {
        --first;
    }
    out.basis = solver.eigenvectors().middleCols(first, n - first);
    return out;
}

/// 1 - cos(angle between x and the dominant eigenspace).
inline double eigenspace_cosine_distance(const Graph& g, const std::vector<double>& x) {
    const auto space = dense_dominant_eigenspace(g);
    const Eigen::Map<const Eigen::VectorXd> vec(x.data(), static_cast<Eigen::Index>(x.size()));
    const Eigen::VectorXd projected = space.basis * (space.basis.transpose() * vec);
    return 1.0 - projected.norm() / vec.norm();
}

/// Expected size of the component holding a uniformly chosen node.
inline std::vector<std::size_t> union_find_component_sizes(const Graph& g);

inline double expected_component_size(const Graph& g) {
    const auto sizes = union_find_component_sizes(g);
    double total = 0.0;
    for (auto s : sizes) {
        total += static_cast<double>(s);
    }
    return total / static_cast<double>(g.node_count());
}

/// Reference for component_sizes(): union-find.
inline std::vector<std::size_t> union_find_component_sizes(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& [u, v] : g.edges()) {
        parent[find(u)] = find(v);
    }
    std::map<std::size_t, std::size_t> counts;
    for (std::size_t v = 0; v < n; ++v) {
        ++counts[find(v)];
    }
    std::vector<std::size_t> sizes(n);
    for (std::size_t v = 0; v < n; ++v) {
        sizes[v] = counts[find(v)];
    }
    return sizes;
}

}  // namespace outbreak::testing
