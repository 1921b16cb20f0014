#pragma once

// Generators and brute-force oracles shared by the unit tests and the acceptance
// runner. Oracles deliberately avoid the library's search code.

#include "freeness/embedding.hpp"
#include "freeness/graph.hpp"

#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace ft {

using namespace freeness;
using Rng = std::mt19937_64;

// --- generators -----------------------------------------------------------

Graph random_graph(Rng& rng, int n, double p);
Graph random_connected_graph(Rng& rng, int n, double p);
/// Loopless multigraph with m random edges (parallels likely).
Graph random_multigraph(Rng& rng, int n, int m);
/// Uniform-ish simple connected cubic graph by the pairing model (n even, n >= 4).
Graph random_cubic(Rng& rng, int n);

/// Pairwise non-isomorphic simple graphs on exactly n vertices.
const std::vector<Graph>& all_graphs(int n);
/// Connected members of all_graphs(k) for 1 <= k <= n.
std::vector<Graph> connected_graphs_up_to(int n);
/// Pairwise non-isomorphic connected simple cubic graphs on n vertices (n even, 4..12).
const std::vector<Graph>& cubic_catalog(int n);

struct PlanarMap {
    Graph graph;
    RotationSystem rotation;
};
/// Planar cubic graph on n vertices (n even >= 4) with a genus-0 rotation, grown from
/// the tetrahedron by joining two edges of one face.
PlanarMap random_planar_cubic(Rng& rng, int n);

RotationSystem random_rotation(Rng& rng, const Graph& g);
RotationSystem planar_k4_rotation(const Graph& k4);

/// Calls f on every rotation system of g (first dart at each vertex fixed).
void for_each_rotation(const Graph& g, const std::function<void(const RotationSystem&)>& f);

// --- oracles ----------------------------------------------------------------

/// Facial walks traced directly from the rotation lists.
std::vector<std::vector<Dart>> oracle_faces(const Graph& g, const RotationSystem& rot);
/// Strong (no repeated corner in any face) and the dual graph has no loop and no
/// parallel edge. For cubic graphs this is polyhedrality.
bool oracle_polyhedral(const Graph& g, const RotationSystem& rot);
bool oracle_strong(const Graph& g, const RotationSystem& rot);
/// Smallest genus over all strong rotations, or -1.
int oracle_min_strong_genus(const Graph& g);

bool brute_hamiltonian(const Graph& g);
std::optional<int> brute_girth(const Graph& g);
std::optional<int> brute_min_disjoint_pair(const Graph& g);
std::vector<EdgeId> brute_bridges(const Graph& g);
bool brute_connected(const Graph& g);
bool brute_connectivity_at_least(const Graph& g, int k);
std::size_t brute_perfect_matching_count(const Graph& g);

}  // namespace ft
