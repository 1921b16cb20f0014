#pragma once

#include "freeness/cycles.hpp"
#include "freeness/graph.hpp"
#include "freeness/search.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace freeness {

/// Half-edge: dart 2e+0 sits at edge(e).u, dart 2e+1 at edge(e).v.
using Dart = int;

constexpr Dart make_dart(EdgeId e, int end) { return 2 * e + end; }
constexpr EdgeId dart_edge(Dart d) { return d >> 1; }
constexpr int dart_end(Dart d) { return d & 1; }
constexpr Dart partner(Dart d) { return d ^ 1; }
inline VertexId dart_vertex(const Graph& g, Dart d) {
    const Edge& e = g.edge(dart_edge(d));
    return dart_end(d) == 0 ? e.u : e.v;
}

class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cyclic order of the darts at each vertex; an orientable cellular embedding.
class RotationSystem {
public:
    RotationSystem() = default;
    /// Throws EmbeddingError unless every dart of g appears exactly once, at its own vertex.
    RotationSystem(const Graph& g, std::vector<std::vector<Dart>> orders);

    /// Darts in increasing id order at every vertex.
    static RotationSystem identity(const Graph& g);

    std::size_t vertex_count() const { return orders_.size(); }
    const std::vector<Dart>& at(VertexId v) const { return orders_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::vector<Dart>>& orders() const { return orders_; }
    Dart successor(Dart d) const { return succ_.at(static_cast<std::size_t>(d)); }

    friend bool operator==(const RotationSystem& a, const RotationSystem& b) { return a.orders_ == b.orders_; }

private:
    std::vector<std::vector<Dart>> orders_;
    std::vector<Dart> succ_;
};

/// "v: e.end e.end ..." one line per vertex, darts in cyclic order.
std::string format_rotation(const RotationSystem& rot);
RotationSystem parse_rotation(const Graph& g, std::string_view text);

struct FaceSet {
    std::vector<std::vector<Dart>> walks;
    int genus = 0;

    std::size_t face_count() const { return walks.size(); }
};

/// Faces of the embedding. From dart d the walk continues with successor(partner(d)).
/// Requires a connected graph.
FaceSet trace_faces(const Graph& g, const RotationSystem& rot);

/// Every facial walk is a simple cycle: no vertex and no edge repeats inside one walk.
bool is_strong(const Graph& g, const RotationSystem& rot);
bool is_strong(const Graph& g, const FaceSet& faces);
/// Strong, and any two distinct faces meet in nothing, one vertex, or exactly one
/// edge with its two endpoints. Cubic graphs only (throws GraphError otherwise).
bool is_polyhedral(const Graph& g, const RotationSystem& rot);
bool is_polyhedral(const Graph& g, const FaceSet& faces);

struct CycleDoubleCover {
    std::vector<Cycle> cycles;
};

/// The facial walks as cycles. Throws EmbeddingError unless the face set is strong.
CycleDoubleCover cdc_from_faces(const Graph& g, const FaceSet& faces);
bool verify_cdc(const Graph& g, const CycleDoubleCover& cdc);

struct EmbeddingCertificate {
    RotationSystem rotation;
    int genus = 0;
};

inline constexpr std::uint64_t kExhaustiveRotationLimit = std::uint64_t{1} << 24;

/// Size of the rotation space, the product of (deg(v) - 1)!; saturates at UINT64_MAX.
std::uint64_t rotation_space_size(const Graph& g);

/// Spaces up to 2^24 rotations are enumerated (NotFound only after full enumeration);
/// larger spaces use seeded random restarts with local moves and never report
/// NotFound. Among rotations found, the lowest genus wins, then the smallest
/// enumeration index. One node = one rotation evaluated.
SearchResult<EmbeddingCertificate> search_strong_embedding(const Graph& g, int max_genus, std::uint64_t budget);
/// As above with the polyhedral predicate and no genus cap. Cubic graphs only.
SearchResult<EmbeddingCertificate> search_polyhedral_embedding(const Graph& g, std::uint64_t budget);

}  // namespace freeness
