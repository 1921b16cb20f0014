#pragma once

#include "freeness/graph.hpp"
#include "freeness/search.hpp"

#include <array>
#include <string>
#include <vector>

namespace freeness {

/// Witness that `pattern` is a minor of a host graph.
struct MinorModel {
    std::vector<int> branch_of;         // host vertex -> pattern vertex, or -1 if unused
    std::vector<EdgeId> edge_realizer;  // pattern edge id -> host edge id
};

/// Independent check: branch sets are non-empty, disjoint and connected, and every
/// pattern edge is realized by a host edge between the right branch sets.
bool verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model);

/// Replaces a triangle (three edge ids) by a new degree-3 vertex. Throws GraphError
/// if the edges are not a triangle.
Graph delta_y(const Graph& g, const std::array<EdgeId, 3>& triangle);
/// Deletes a degree-3 vertex and joins its three distinct neighbours pairwise.
/// Parallel edges that arise are kept.
Graph y_delta(const Graph& g, VertexId v);

struct FamilyMember {
    std::string name;
    Graph graph;
};

/// The seven graphs reachable from K6 by ΔY and YΔ moves that stay simple,
/// ordered by vertex count. Computed once.
const std::vector<FamilyMember>& petersen_family();

/// Branch-and-bound minor test over "fix as branch vertex / contract / delete"
/// decisions with isomorphism memoization. Hosts are projected to simple graphs;
/// hosts over 64 vertices report BudgetExhausted.
SearchResult<MinorModel> has_minor(const Graph& host, const Graph& pattern, std::uint64_t budget);

enum class Linkage { Linked, Linkless, BudgetExhausted };

std::string_view to_string(Linkage l);

struct MemberOutcome {
    std::string member;
    SearchStatus status = SearchStatus::NotFound;
    std::uint64_t nodes = 0;
    bool filtered = false;  // refuted by the vertex/edge count filter alone
    bool skipped = false;   // not needed: an earlier member was found
};

struct LinkageResult {
    Linkage status = Linkage::Linkless;
    int member = -1;  // index into petersen_family() when Linked
    std::optional<MinorModel> model;
    std::vector<MemberOutcome> outcomes;  // one per family member, family order
};

/// Tests all seven family members concurrently; the reported witness is the first
/// member, in family order, that is found. `budget` applies to each member.
LinkageResult is_intrinsically_linked(const Graph& g, std::uint64_t budget);

}  // namespace freeness
