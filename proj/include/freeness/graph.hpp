#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace freeness {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bitset over the edge ids of one graph.
class EdgeSubset {
public:
    EdgeSubset() = default;
    explicit EdgeSubset(std::size_t edge_count) : bits_(edge_count, false) {}

    std::size_t size() const { return bits_.size(); }
    bool contains(EdgeId e) const { return bits_.at(static_cast<std::size_t>(e)); }
    void insert(EdgeId e) { bits_.at(static_cast<std::size_t>(e)) = true; }
    void erase(EdgeId e) { bits_.at(static_cast<std::size_t>(e)) = false; }
    std::size_t count() const;
    std::vector<EdgeId> ids() const;
    EdgeSubset complement() const;

    friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

private:
    std::vector<bool> bits_;
};

/// Undirected loopless multigraph with stable edge ids.
///
/// Graphs are immutable values. Edge `i` of the constructor list keeps id `i`
/// for the life of the object; deletion and contraction build a new graph and
/// return the mapping back to the original ids.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<Edge> edges,
          std::vector<std::string> labels = {});

    std::size_t vertex_count() const { return incidence_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::span<const Edge> edges() const { return edges_; }

    /// Incident edge ids of `v` in increasing order; parallel edges appear once each.
    std::span<const EdgeId> incident(VertexId v) const {
        return incidence_.at(static_cast<std::size_t>(v));
    }
    std::size_t degree(VertexId v) const { return incident(v).size(); }
    VertexId other_end(EdgeId e, VertexId v) const { return edge(e).other(v); }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_simple() const;
    /// Lowest edge id joining u and v, if any.
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::string> labels_;
};

/// A derived graph plus, for each of its edges, the id the edge had in the source.
struct DerivedGraph {
    Graph graph;
    std::vector<EdgeId> source_edge;
    std::vector<VertexId> source_vertex_image;  // source vertex -> derived vertex
};

/// Removes edge interiors; every vertex is kept.
DerivedGraph delete_edges(const Graph& g, const EdgeSubset& removed);
/// Contracts edge `e`; loops that would arise are dropped, parallel edges kept.
DerivedGraph contract_edge(const Graph& g, EdgeId e);

std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);
EdgeSubset bridges(const Graph& g);
bool is_bridgeless(const Graph& g);
bool is_cubic(const Graph& g);
bool vertex_connectivity_at_least(const Graph& g, int k);
/// Shortest cycle length; a parallel pair is a 2-cycle. Empty for forests.
std::optional<int> girth(const Graph& g);

}  // namespace freeness
