#pragma once

#include "freeness/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace freeness {

enum class NamedFamily { Complete, CompleteBipartite, Cycle, Petersen, FlowerSnark, Prism, PetersenFamily };

struct NamedGraphSpec {
    NamedFamily family = NamedFamily::Complete;
    std::vector<int> params;

    std::string to_string() const;
};

/// Parses "complete:6", "complete-bipartite:3,3", "cycle:5", "petersen",
/// "flower-snark:5", "prism:3", "petersen-family:0". Throws GraphError.
NamedGraphSpec parse_named_spec(std::string_view text);

/// Standard constructions. Flower snark J_k (k odd, k >= 3): for each i a star
/// centre a_i joined to b_i, c_i, d_i; the b_i form a k-cycle and the c_i, d_i
/// form one 2k-cycle c_0..c_{k-1} d_0..d_{k-1}. Vertex ids: a_i = i, b_i = k+i,
/// c_i = 2k+i, d_i = 3k+i. The Petersen graph uses outer cycle 0..4, spokes
/// i to i+5, inner pentagram on 5..9.
Graph build_named(const NamedGraphSpec& spec);
Graph build_named(std::string_view text);

struct NamedFamilyInfo {
    std::string syntax;
    std::string description;
};
std::vector<NamedFamilyInfo> named_catalog();

}  // namespace freeness
