#include "outbreak/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "outbreak/parallel.hpp"

namespace outbreak {

std::string_view to_string(CentralityKind kind) noexcept {
    switch (kind) {
        case CentralityKind::Degree: return "degree";
        case CentralityKind::Betweenness: return "betweenness";
        case CentralityKind::Eigenvector: return "eigenvector";
    }
    return "unknown";
}

std::vector<double> degree_centrality(const Graph& g) {
    std::vector<double> scores(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        scores[v] = static_cast<double>(g.degree(v));
    }
    return scores;
}

namespace {

constexpr std::size_t kSourceBlock = 32;

// Single-source phase of Brandes' algorithm; adds dependencies of `source`
// into `acc`.
class BrandesWorkspace {
public:
    explicit BrandesWorkspace(std::size_t n)
        : sigma_(n), dist_(n), delta_(n), order_(), queue_(n) {
        order_.reserve(n);
    }

    void accumulate(const Graph& g, NodeId source, std::vector<double>& acc) {
        std::fill(sigma_.begin(), sigma_.end(), 0.0);
        std::fill(dist_.begin(), dist_.end(), -1);
        std::fill(delta_.begin(), delta_.end(), 0.0);
        order_.clear();

        sigma_[source] = 1.0;
        dist_[source] = 0;
        std::size_t head = 0;
        std::size_t tail = 0;
        queue_[tail++] = source;
        while (head < tail) {
            const NodeId v = queue_[head++];
            order_.push_back(v);
            for (NodeId w : g.neighbors(v)) {
                if (dist_[w] < 0) {
                    dist_[w] = dist_[v] + 1;
                    queue_[tail++] = w;
                }
                if (dist_[w] == dist_[v] + 1) {
                    sigma_[w] += sigma_[v];
                }
            }
        }

        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            const NodeId w = *it;
            for (NodeId v : g.neighbors(w)) {
                if (dist_[v] == dist_[w] - 1) {
                    delta_[v] += sigma_[v] / sigma_[w] * (1.0 + delta_[w]);
                }
            }
            if (w != source) {
                acc[w] += delta_[w];
            }
        }
    }

private:
    std::vector<double> sigma_;
    std::vector<long> dist_;
    std::vector<double> delta_;
    std::vector<NodeId> order_;
    std::vector<NodeId> queue_;
};

}  // namespace

std::vector<double> betweenness_centrality(const Graph& g, std::size_t threads) {
    const std::size_t n = g.node_count();
    const std::size_t blocks = (n + kSourceBlock - 1) / kSourceBlock;
    std::vector<std::vector<double>> partial(blocks);

    parallel_for(blocks, threads, [&](std::size_t b) {
        BrandesWorkspace ws(n);
        std::vector<double> acc(n, 0.0);
        const std::size_t end = std::min(n, (b + 1) * kSourceBlock);
        for (std::size_t s = b * kSourceBlock; s < end; ++s) {
            ws.accumulate(g, static_cast<NodeId>(s), acc);
        }
        partial[b] = std::move(acc);
    });

    std::vector<double> scores(n, 0.0);
    for (const auto& acc : partial) {
        for (std::size_t v = 0; v < n; ++v) {
            scores[v] += acc[v];
        }
    }
    // Every unordered pair was visited from both ends.
    for (double& s : scores) {
        s /= 2.0;
    }
    return scores;
}

EigenvectorResult eigenvector_centrality_detailed(const Graph& g, EigenvectorOptions options) {
    const std::size_t n = g.node_count();
    if (g.edge_count() == 0) {
        throw CentralityError("eigenvector centrality undefined on a graph without edges");
    }

    auto multiply = [&](const std::vector<double>& x, std::vector<double>& out) {
        for (NodeId v = 0; v < n; ++v) {
            double sum = 0.0;
            for (NodeId w : g.neighbors(v)) {
                sum += x[w];
            }
            out[v] = sum;
        }
    };
    auto normalize = [](std::vector<double>& x) {
        const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
        for (double& value : x) {
            value /= norm;
        }
    };

    EigenvectorResult result;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n);
    for (std::size_t iter = 0; iter <= options.max_iterations; ++iter) {
        multiply(x, ax);
        const double lambda = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
        double residual = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            residual = std::max(residual, std::abs(ax[v] - lambda * x[v]));
        }
        result.eigenvalue = lambda;
        result.residual = residual;
        result.iterations = iter;
        if (residual <= options.tolerance) {
            // Isolated nodes only decay geometrically; pin them to zero.
            for (NodeId v = 0; v < n; ++v) {
                if (g.degree(v) == 0) {
                    x[v] = 0.0;
                }
            }
            normalize(x);
            result.scores = std::move(x);
            return result;
        }
        for (std::size_t v = 0; v < n; ++v) {
            x[v] += ax[v];
        }
        normalize(x);
    }
    throw CentralityError("eigenvector centrality did not converge after " +
                          std::to_string(options.max_iterations) +
                          " iterations (residual " + std::to_string(result.residual) + ")");
}

std::vector<double> eigenvector_centrality(const Graph& g, EigenvectorOptions options) {
    return eigenvector_centrality_detailed(g, options).scores;
}

CentralityRanking build_ranking(CentralityKind kind, std::vector<double> scores) {
    CentralityRanking ranking;
    ranking.kind = kind;
    ranking.order.resize(scores.size());
    std::iota(ranking.order.begin(), ranking.order.end(), NodeId{0});
    std::stable_sort(ranking.order.begin(), ranking.order.end(),
                     [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
    ranking.scores = std::move(scores);
    return ranking;
}

RankingSet compute_rankings(const Graph& g, std::size_t threads) {
    return {build_ranking(CentralityKind::Degree, degree_centrality(g)),
            build_ranking(CentralityKind::Betweenness, betweenness_centrality(g, threads)),
            build_ranking(CentralityKind::Eigenvector, eigenvector_centrality(g))};
}

ReducedPool reduced_pool(const RankingSet& rankings, std::size_t depth) {
    const std::size_t n = rankings.front().order.size();
    if (depth >= n) {
        throw CentralityError("truncation depth " + std::to_string(depth) +
                              " must be smaller than the node count " + std::to_string(n));
    }
    std::vector<NodeId> members;
    members.reserve(3 * depth);
    for (const auto& ranking : rankings) {
        members.insert(members.end(), ranking.order.begin(),
                       ranking.order.begin() + static_cast<std::ptrdiff_t>(depth));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return {std::move(members), depth};
}

double correlation_r2(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw CentralityError("regression needs two equal-length samples of size >= 2");
    }
    const double count = static_cast<double>(xs.size());
    const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / count;
    const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / count;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) {
        throw CentralityError("degenerate regression: zero variance");
    }
    return std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
}

}  // namespace outbreak
