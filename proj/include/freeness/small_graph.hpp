#pragma once

#include "freeness/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace freeness {

inline constexpr std::size_t kMaxSmallOrder = 64;

/// Simple graph on at most 64 vertices as adjacency bitmasks.
struct SmallGraph {
    std::vector<std::uint64_t> adj;

    SmallGraph() = default;
    explicit SmallGraph(std::size_t n) : adj(n, 0) {}

    std::size_t order() const { return adj.size(); }
    int degree(int v) const { return __builtin_popcountll(adj[static_cast<std::size_t>(v)]); }
    bool adjacent(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1u; }
    void add_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    std::size_t size() const;

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

/// Simple projection of g: parallel edges merge. Throws GraphError above 64 vertices.
SmallGraph to_small(const Graph& g);
/// Edges listed in (u < v) lexicographic order.
Graph to_graph(const SmallGraph& g);

struct CanonicalForm {
    SmallGraph graph;             // relabeled so that vertex i is labeling[i] of the input
    std::vector<int> colors;      // colour of canonical vertex i
    std::vector<int> labeling;

    /// Compact byte string; equal keys iff isomorphic (colour-preserving).
    std::string key() const;
};

/// Canonical labeling by equitable refinement plus individualization search with
/// automorphism pruning. Vertex colours, when given, must be preserved.
CanonicalForm canonical_form(const SmallGraph& g, std::span<const int> colors = {});

bool isomorphic(const SmallGraph& a, const SmallGraph& b);

}  // namespace freeness
