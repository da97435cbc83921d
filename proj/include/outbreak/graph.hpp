#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace outbreak {

using NodeId = std::uint32_t;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the edge-list reader; carries the 1-based offending line.
class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Sorted, duplicate-free set of node ids.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::vector<NodeId> members);

    [[nodiscard]] std::span<const NodeId> members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] bool contains(NodeId v) const noexcept;
    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
    std::vector<NodeId> members_;
};

NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);

/// Immutable undirected simple graph over dense ids 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list over ids < node_count. Duplicate edges (in
    /// either orientation) are collapsed; self-loops and out-of-range ids
    /// throw GraphError.
    static Graph from_edges(std::size_t node_count,
                            std::span<const std::pair<NodeId, NodeId>> edges,
                            std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return targets_.size() / 2; }
    [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] bool has_edge(NodeId u, NodeId v) const noexcept;

    /// Original label of a node; the decimal id when the graph was built
    /// without labels.
    [[nodiscard]] std::string label(NodeId v) const;
    [[nodiscard]] bool has_labels() const noexcept { return !labels_.empty(); }

    /// Every edge once, as (u, v) with u < v, in ascending order.
    [[nodiscard]] std::vector<std::pair<NodeId, NodeId>> edges() const;

    [[nodiscard]] bool valid(const NodeSet& nodes) const noexcept;

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
    std::vector<std::string> labels_;
};

struct EdgeListLoad {
    Graph graph;
    std::size_t duplicates_collapsed = 0;
};

/// Reads a whitespace-separated edge list. One edge per line; blank lines
/// and lines starting with '#' or '%' are skipped. Labels become dense ids
/// in order of first appearance.
EdgeListLoad load_edge_list(std::istream& in);
EdgeListLoad load_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

/// Graph induced on the nodes that were not removed.
struct Subgraph {
    Graph graph;
    /// original_ids[new_id] is the id of that node in the parent graph.
    std::vector<NodeId> original_ids;
};

Subgraph remove_nodes(const Graph& g, const NodeSet& immunized);

std::map<std::size_t, std::size_t> degree_distribution(const Graph& g);

/// Size of the connected component containing each node.
std::vector<std::size_t> component_sizes(const Graph& g);

}  // namespace outbreak
