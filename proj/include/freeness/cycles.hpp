#pragma once

#include "freeness/graph.hpp"
#include "freeness/search.hpp"

#include <vector>

namespace freeness {

/// Closed vertex-simple walk. vertices[i] and vertices[i+1] are joined by edges[i];
/// the last edge returns to vertices[0].
struct Cycle {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;

    std::size_t length() const { return edges.size(); }
    std::vector<EdgeId> sorted_edges() const;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct TwoFactor {
    std::vector<Cycle> cycles;

    std::size_t component_count() const { return cycles.size(); }
    EdgeSubset edge_set(const Graph& g) const;
    std::vector<EdgeId> sorted_edges() const;
};

struct DisjointCyclePair {
    Cycle first;
    Cycle second;
    int total_length = 0;
};

/// Builds the cycle through `edges` (any order); throws GraphError if they do not
/// form one vertex-simple closed walk. Output is normalized: it starts at the
/// smallest vertex and leaves along the smaller of its two cycle edges.
Cycle cycle_from_edges(const Graph& g, std::vector<EdgeId> edges);
/// Splits a spanning 2-regular edge set into normalized cycles sorted by first vertex.
std::vector<Cycle> cycles_of_two_regular(const Graph& g, const EdgeSubset& edges);

bool is_valid_cycle(const Graph& g, const Cycle& c);
bool is_hamiltonian_cycle(const Graph& g, const Cycle& c);
bool is_two_factor(const Graph& g, const TwoFactor& f);
bool is_perfect_matching(const Graph& g, const EdgeSubset& m);

SearchResult<Cycle> hamiltonian_cycle(const Graph& g, std::uint64_t budget);

std::vector<EdgeSubset> perfect_matchings(const Graph& g, std::size_t limit);
/// Cubic graphs go through perfect-matching complements; others through a
/// generic degree-2 spanning subgraph search.
std::vector<TwoFactor> two_factors(const Graph& g, std::size_t limit);
/// The generic degree-2 search, regardless of cubicity.
std::vector<TwoFactor> two_factors_generic(const Graph& g, std::size_t limit);

inline constexpr std::size_t kDefaultTwoFactorLimit = std::size_t{1} << 20;

/// Fewest components; ties broken by the lexicographically smallest sorted edge ids.
std::optional<TwoFactor> min_component_two_factor(const Graph& g, std::size_t limit = kDefaultTwoFactorLimit);

/// Minimum total length pair of vertex-disjoint cycles. Cycles are enumerated by
/// increasing length; the search stops once no longer cycle can beat the best pair.
/// Requires at most 64 vertices.
SearchResult<DisjointCyclePair> min_disjoint_cycle_pair(const Graph& g, std::uint64_t budget = 50'000'000);

}  // namespace freeness
