#include "outbreak/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <unordered_map>

namespace outbreak {

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(NodeId v) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), v);
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet(std::move(out));
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet(std::move(out));
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet(std::move(out));
}

Graph Graph::from_edges(std::size_t node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges,
                        std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != node_count) {
        throw GraphError("label count does not match node count");
    }
    std::vector<std::vector<NodeId>> adjacency(node_count);
    for (const auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count) {
            throw GraphError("edge endpoint out of range");
        }
        if (u == v) {
            throw GraphError("self-loop on node " + std::to_string(u));
        }
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }

    Graph g;
    g.offsets_.reserve(node_count + 1);
    g.offsets_.push_back(0);
    for (auto& list : adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.targets_.insert(g.targets_.end(), list.begin(), list.end());
        g.offsets_.push_back(g.targets_.size());
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
    const auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::string Graph::label(NodeId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u) {
        for (NodeId v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool Graph::valid(const NodeSet& nodes) const noexcept {
    return nodes.empty() || nodes.members().back() < node_count();
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_blank(line[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !is_blank(line[i])) {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

}  // namespace

EdgeListLoad load_edge_list(std::istream& in) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;

    auto intern = [&](std::string_view token) {
        auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<NodeId>(labels.size()));
        if (inserted) {
            labels.emplace_back(token);
        }
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#' || tokens.front().front() == '%') {
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected 2 tokens, found " + std::to_string(tokens.size()));
        }
        if (tokens[0] == tokens[1]) {
            throw ParseError(line_no, "self-loop on '" + std::string(tokens[0]) + "'");
        }
        const NodeId u = intern(tokens[0]);
        const NodeId v = intern(tokens[1]);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (labels.empty()) {
        throw GraphError("empty graph");
    }

    const std::size_t raw = edges.size();
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    EdgeListLoad result;
    result.duplicates_collapsed = raw - edges.size();
    const std::size_t n = labels.size();
    result.graph = Graph::from_edges(n, edges, std::move(labels));
    return result;
}

EdgeListLoad load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw GraphError("cannot open '" + path + "'");
    }
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        out << g.label(u) << ' ' << g.label(v) << '\n';
    }
}

Subgraph remove_nodes(const Graph& g, const NodeSet& immunized) {
    if (!g.valid(immunized)) {
        throw GraphError("invalid node " + std::to_string(immunized.members().back()) +
                         " for graph with " + std::to_string(g.node_count()) + " nodes");
    }
    constexpr NodeId removed = ~NodeId{0};
    std::vector<NodeId> new_id(g.node_count(), removed);
    Subgraph sub;
    sub.original_ids.reserve(g.node_count() - immunized.size());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!immunized.contains(v)) {
            new_id[v] = static_cast<NodeId>(sub.original_ids.size());
            sub.original_ids.push_back(v);
        }
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& [u, v] : g.edges()) {
        if (new_id[u] != removed && new_id[v] != removed) {
            edges.emplace_back(new_id[u], new_id[v]);
        }
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(sub.original_ids.size());
        for (NodeId v : sub.original_ids) {
            labels.push_back(g.label(v));
        }
    }
    sub.graph = Graph::from_edges(sub.original_ids.size(), edges, std::move(labels));
    return sub;
}

std::map<std::size_t, std::size_t> degree_distribution(const Graph& g) {
    std::map<std::size_t, std::size_t> counts;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        ++counts[g.degree(v)];
    }
    return counts;
}

std::vector<std::size_t> component_sizes(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> component(n, n);
    std::vector<std::size_t> sizes;
    std::queue<NodeId> frontier;
    for (NodeId start = 0; start < n; ++start) {
        if (component[start] != n) {
            continue;
        }
        const std::size_t id = sizes.size();
        sizes.push_back(0);
        component[start] = id;
        frontier.push(start);
        while (!frontier.empty()) {
            const NodeId v = frontier.front();
            frontier.pop();
            ++sizes[id];
            for (NodeId w : g.neighbors(v)) {
                if (component[w] == n) {
                    component[w] = id;
                    frontier.push(w);
                }
            }
        }
    }
    std::vector<std::size_t> out(n);
    for (NodeId v = 0; v < n; ++v) {
        out[v] = sizes[component[v]];
    }
    return out;
}

}  // namespace outbreak
