#include "freeness/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace freeness {

std::size_t EdgeSubset::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<EdgeId> EdgeSubset::ids() const {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(static_cast<EdgeId>(i));
    return out;
}

EdgeSubset EdgeSubset::complement() const {
    EdgeSubset out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (!bits_[i]) out.insert(static_cast<EdgeId>(i));
    return out;
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : edges_(std::move(edges)), incidence_(vertex_count), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != vertex_count)
        throw GraphError("label count does not match vertex count");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& [u, v] = edges_[i];
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count ||
            static_cast<std::size_t>(v) >= vertex_count)
            throw GraphError("edge " + std::to_string(i) + " has an endpoint out of range");
        if (u == v) throw GraphError("edge " + std::to_string(i) + " is a loop at vertex " + std::to_string(u));
        incidence_[static_cast<std::size_t>(u)].push_back(static_cast<EdgeId>(i));
        incidence_[static_cast<std::size_t>(v)].push_back(static_cast<EdgeId>(i));
    }
}

bool Graph::is_simple() const {
    std::vector<VertexId> seen(vertex_count(), -1);
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        for (EdgeId e : incidence_[v]) {
            VertexId w = other_end(e, static_cast<VertexId>(v));
            if (seen[static_cast<std::size_t>(w)] == static_cast<VertexId>(v)) return false;
            seen[static_cast<std::size_t>(w)] = static_cast<VertexId>(v);
        }
    }
    return true;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    for (EdgeId e : incident(u))
        if (other_end(e, u) == v) return e;
    return std::nullopt;
}

DerivedGraph delete_edges(const Graph& g, const EdgeSubset& removed) {
    if (removed.size() != g.edge_count()) throw GraphError("edge subset does not match graph");
    DerivedGraph out;
    std::vector<Edge> kept;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (removed.contains(static_cast<EdgeId>(e))) continue;
        kept.push_back(g.edge(static_cast<EdgeId>(e)));
        out.source_edge.push_back(static_cast<EdgeId>(e));
    }
    out.graph = Graph(g.vertex_count(), std::move(kept), g.labels());
    out.source_vertex_image.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out.source_vertex_image[v] = static_cast<VertexId>(v);
    return out;
}

DerivedGraph contract_edge(const Graph& g, EdgeId e) {
    const Edge target = g.edge(e);
    const VertexId keep = std::min(target.u, target.v);
    const VertexId gone = std::max(target.u, target.v);
    DerivedGraph out;
    out.source_vertex_image.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto vv = static_cast<VertexId>(v);
        if (vv == gone) out.source_vertex_image[v] = keep;
        else out.source_vertex_image[v] = vv > gone ? vv - 1 : vv;
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& ed = g.edge(static_cast<EdgeId>(i));
        VertexId a = out.source_vertex_image[static_cast<std::size_t>(ed.u)];
        VertexId b = out.source_vertex_image[static_cast<std::size_t>(ed.v)];
        if (a == b) continue;
        edges.push_back({a, b});
        out.source_edge.push_back(static_cast<EdgeId>(i));
    }
    out.graph = Graph(g.vertex_count() - 1, std::move(edges));
    return out;
}

namespace {

std::size_t components_without(const Graph& g, const std::vector<bool>& removed_vertex) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::size_t count = 0;
    std::vector<VertexId> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] || removed_vertex[s]) continue;
        ++count;
        seen[s] = true;
        stack.push_back(static_cast<VertexId>(s));
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                auto w = static_cast<std::size_t>(g.other_end(e, v));
                if (!seen[w] && !removed_vertex[w]) {
                    seen[w] = true;
                    stack.push_back(static_cast<VertexId>(w));
                }
            }
        }
    }
    return count;
}

}  // namespace

std::size_t component_count(const Graph& g) {
    return components_without(g, std::vector<bool>(g.vertex_count(), false));
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

EdgeSubset bridges(const Graph& g) {
    const std::size_t n = g.vertex_count();
    EdgeSubset out(g.edge_count());
    std::vector<int> order(n, -1), low(n, 0);
    int clock = 0;

    // Iterative lowlink DFS; the tree edge is skipped by id so parallel edges count as back edges.
    struct Frame {
        VertexId v;
        EdgeId via;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (order[root] >= 0) continue;
        order[root] = low[root] = clock++;
        stack.push_back({static_cast<VertexId>(root), -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (e == f.via) continue;
                auto w = static_cast<std::size_t>(g.other_end(e, f.v));
                if (order[w] < 0) {
                    order[w] = low[w] = clock++;
                    stack.push_back({static_cast<VertexId>(w), e, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], order[w]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            auto parent = static_cast<std::size_t>(stack.back().v);
            auto child = static_cast<std::size_t>(done.v);
            low[parent] = std::min(low[parent], low[child]);
            if (low[child] > order[parent]) out.insert(done.via);
        }
    }
    return out;
}

bool is_bridgeless(const Graph& g) { return bridges(g).count() == 0; }

bool is_cubic(const Graph& g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.degree(static_cast<VertexId>(v)) != 3) return false;
    return true;
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
    if (k < 1) throw GraphError("connectivity threshold must be at least 1");
    const std::size_t n = g.vertex_count();
    // K_n is (n-1)-connected and no graph on n vertices is n-connected.
    if (n <= static_cast<std::size_t>(k)) return false;
    if (!is_connected(g)) return false;

    std::vector<bool> removed(n, false);
    std::function<bool(std::size_t, int)> separates = [&](std::size_t from, int left) -> bool {
        if (left == 0) return false;
        for (std::size_t v = from; v < n; ++v) {
            removed[v] = true;
            bool cut = components_without(g, removed) > 1 || separates(v + 1, left - 1);
            removed[v] = false;
            if (cut) return true;
        }
        return false;
    };
    return !separates(0, k - 1);
}

std::optional<int> girth(const Graph& g) {
    if (!g.is_simple()) return 2;
    const std::size_t n = g.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(n);
    std::vector<EdgeId> parent_edge(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent_edge[s] = -1;
        std::queue<VertexId> queue;
        queue.push(static_cast<VertexId>(s));
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            auto dv = dist[static_cast<std::size_t>(v)];
            if (best && 2 * dv + 1 >= *best) break;
            for (EdgeId e : g.incident(v)) {
                if (e == parent_edge[static_cast<std::size_t>(v)]) continue;
                auto w = static_cast<std::size_t>(g.other_end(e, v));
                if (dist[w] < 0) {
                    dist[w] = dv + 1;
                    parent_edge[w] = e;
                    queue.push(static_cast<VertexId>(w));
                } else {
                    int len = dv + dist[w] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

}  // namespace freeness
