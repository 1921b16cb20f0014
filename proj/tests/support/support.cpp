#include "support.hpp"

#include "freeness/small_graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace ft {

namespace {

std::size_t ix(int v) { return static_cast<std::size_t>(v); }

std::string key_of(const Graph& g) { return canonical_form(to_small(g)).key(); }

std::vector<std::vector<VertexId>> adjacency(const Graph& g) {
    std::vector<std::vector<VertexId>> adj(g.vertex_count());
    for (const auto& e : g.edges()) {
        adj[ix(e.u)].push_back(e.v);
        adj[ix(e.v)].push_back(e.u);
    }
    return adj;
}

// components of g with the vertices in `gone` and the edge `skip` removed
int count_components(const Graph& g, const std::vector<bool>& gone, int skip = -1) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[ix(x)] != x) x = parent[ix(x)] = parent[ix(parent[ix(x)])];
        return x;
    };
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (static_cast<int>(e) == skip) continue;
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        if (gone[ix(ed.u)] || gone[ix(ed.v)]) continue;
        parent[ix(find(ed.u))] = find(ed.v);
    }
    int count = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!gone[v] && find(static_cast<int>(v)) == static_cast<int>(v)) ++count;
    return count;
}

}  // namespace

// --- generators -------------------------------------------------------------

Graph random_graph(Rng& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(ix(n), std::move(edges));
}

Graph random_connected_graph(Rng& rng, int n, double p) {
    while (true) {
        Graph g = random_graph(rng, n, p);
        if (brute_connected(g)) return g;
    }
}

Graph random_multigraph(Rng& rng, int n, int m) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Edge> edges;
    while (static_cast<int>(edges.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u != v) edges.push_back({u, v});
    }
    return Graph(ix(n), std::move(edges));
}

Graph random_cubic(Rng& rng, int n) {
    while (true) {
        std::vector<int> points(ix(3 * n));
        for (int i = 0; i < 3 * n; ++i) points[ix(i)] = i / 3;
        std::shuffle(points.begin(), points.end(), rng);
        std::set<std::pair<int, int>> seen;
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i < points.size() && ok; i += 2) {
            int u = std::min(points[i], points[i + 1]), v = std::max(points[i], points[i + 1]);
            ok = u != v && seen.insert({u, v}).second;
            edges.push_back({u, v});
        }
        if (!ok) continue;
        Graph g(ix(n), std::move(edges));
        if (brute_connected(g)) return g;
    }
}

const std::vector<Graph>& all_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> out;
    if (n <= 1) {
        out.push_back(Graph(ix(std::max(n, 0)), {}));
    } else {
        std::unordered_set<std::string> keys;
        for (const auto& base : all_graphs(n - 1)) {
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<Edge> edges(base.edges().begin(), base.edges().end());
                for (int v = 0; v < n - 1; ++v)
                    if ((mask >> v) & 1u) edges.push_back({v, n - 1});
                Graph g(ix(n), std::move(edges));
                if (keys.insert(key_of(g)).second) out.push_back(std::move(g));
            }
        }
    }
    return cache[n] = std::move(out);
}

std::vector<Graph> connected_graphs_up_to(int n) {
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k)
        for (const auto& g : all_graphs(k))
            if (brute_connected(g)) out.push_back(g);
    return out;
}

namespace {

// Subdivide e1 and e2 and join the two new vertices.
Graph insert_edge(const Graph& g, EdgeId e1, EdgeId e2) {
    const int x = static_cast<int>(g.vertex_count()), y = x + 1;
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        if (static_cast<EdgeId>(e) == e1) {
            edges.push_back({ed.u, x});
            edges.push_back({x, ed.v});
        } else if (static_cast<EdgeId>(e) == e2) {
            edges.push_back({ed.u, y});
            edges.push_back({y, ed.v});
        } else {
            edges.push_back(ed);
        }
    }
    edges.push_back({x, y});
    return Graph(g.vertex_count() + 2, std::move(edges));
}

// Replace vertex v by a triangle.
Graph blow_up(const Graph& g, VertexId v) {
    const int base = static_cast<int>(g.vertex_count());
    const int t[3] = {v, base, base + 1};
    int slot = 0;
    std::vector<Edge> edges;
    for (const auto& ed : g.edges()) {
        if (ed.u == v) edges.push_back({t[slot++], ed.v});
        else if (ed.v == v) edges.push_back({ed.u, t[slot++]});
        else edges.push_back(ed);
    }
    edges.push_back({t[0], t[1]});
    edges.push_back({t[1], t[2]});
    edges.push_back({t[2], t[0]});
    return Graph(g.vertex_count() + 2, std::move(edges));
}

}  // namespace

const std::vector<Graph>& cubic_catalog(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> out;
    std::unordered_set<std::string> keys;
    auto add = [&](Graph g) {
        if (!g.is_simple() || !brute_connected(g)) return;
        if (keys.insert(key_of(g)).second) out.push_back(std::move(g));
    };
    if (n == 4) {
        add(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    } else if (n > 4) {
        for (const auto& g : cubic_catalog(n - 2)) {
            for (std::size_t a = 0; a < g.edge_count(); ++a)
                for (std::size_t b = a + 1; b < g.edge_count(); ++b)
                    add(insert_edge(g, static_cast<EdgeId>(a), static_cast<EdgeId>(b)));
            for (std::size_t v = 0; v < g.vertex_count(); ++v) add(blow_up(g, static_cast<VertexId>(v)));
        }
        // Pairing-model samples as a completeness backstop.
        Rng rng(0xc0b1c ^ static_cast<unsigned>(n));
        for (int i = 0; i < 4000; ++i) add(random_cubic(rng, n));
    }
    return cache[n] = std::move(out);
}

RotationSystem planar_k4_rotation(const Graph& k4) {
    const std::vector<std::vector<VertexId>> around = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    std::vector<std::vector<Dart>> orders(4);
    for (int v = 0; v < 4; ++v)
        for (VertexId w : around[ix(v)]) {
            EdgeId e = *k4.find_edge(v, w);
            orders[ix(v)].push_back(make_dart(e, k4.edge(e).u == v ? 0 : 1));
        }
    return RotationSystem(k4, std::move(orders));
}

PlanarMap random_planar_cubic(Rng& rng, int n) {
    // neighbour rotations of a simple planar map, starting from the tetrahedron
    std::vector<std::vector<int>> rot = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    auto succ = [&rot](int v, int w) {
        const auto& r = rot[ix(v)];
        auto pos = std::find(r.begin(), r.end(), w) - r.begin();
        return r[(ix(static_cast<int>(pos)) + 1) % r.size()];
    };
    auto replace = [&rot](int v, int from, int to) { *std::find(rot[ix(v)].begin(), rot[ix(v)].end(), from) = to; };
    while (static_cast<int>(rot.size()) < n) {
        // list faces as sequences of directed edges
        std::set<std::pair<int, int>> used;
        std::vector<std::vector<std::pair<int, int>>> faces;
        for (int u = 0; u < static_cast<int>(rot.size()); ++u)
            for (int w : rot[ix(u)]) {
                if (used.count({u, w})) continue;
                std::vector<std::pair<int, int>> face;
                int a = u, b = w;
                while (!used.count({a, b})) {
                    used.insert({a, b});
                    face.push_back({a, b});
                    int c = succ(b, a);
                    a = b;
                    b = c;
                }
                faces.push_back(face);
            }
        const auto& face = faces[rng() % faces.size()];
        std::size_t i = rng() % face.size(), j = rng() % (face.size() - 1);
        if (j >= i) ++j;
        auto [u, w] = face[i];
        auto [p, q] = face[j];
        const int x = static_cast<int>(rot.size()), y = x + 1;
        replace(u, w, x);
        replace(w, u, x);
        replace(p, q, y);
        replace(q, p, y);
        rot.push_back({u, y, w});
        rot.push_back({x, q, p});
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int w : rot[ix(u)])
            if (u < w) edges.push_back({u, w});
    Graph g(ix(n), std::move(edges));
    std::vector<std::vector<Dart>> orders(ix(n));
    for (int v = 0; v < n; ++v)
        for (int w : rot[ix(v)]) {
            EdgeId e = *g.find_edge(v, w);
            orders[ix(v)].push_back(make_dart(e, g.edge(e).u == v ? 0 : 1));
        }
    RotationSystem rs(g, std::move(orders));
    return {std::move(g), std::move(rs)};
}

RotationSystem random_rotation(Rng& rng, const Graph& g) {
    std::vector<std::vector<Dart>> orders(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        orders[ix(g.edge(static_cast<EdgeId>(e)).u)].push_back(make_dart(static_cast<EdgeId>(e), 0));
        orders[ix(g.edge(static_cast<EdgeId>(e)).v)].push_back(make_dart(static_cast<EdgeId>(e), 1));
    }
    for (auto& o : orders) std::shuffle(o.begin(), o.end(), rng);
    return RotationSystem(g, std::move(orders));
}

void for_each_rotation(const Graph& g, const std::function<void(const RotationSystem&)>& f) {
    std::vector<std::vector<Dart>> orders(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        orders[ix(g.edge(static_cast<EdgeId>(e)).u)].push_back(make_dart(static_cast<EdgeId>(e), 0));
        orders[ix(g.edge(static_cast<EdgeId>(e)).v)].push_back(make_dart(static_cast<EdgeId>(e), 1));
    }
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == orders.size()) {
            f(RotationSystem(g, orders));
            return;
        }
        auto& o = orders[v];
        if (o.size() <= 2) {
            rec(v + 1);
            return;
        }
        auto saved = o;
        std::sort(o.begin() + 1, o.end());
        do {
            rec(v + 1);
        } while (std::next_permutation(o.begin() + 1, o.end()));
        o = saved;
    };
    rec(0);
}

// --- oracles ----------------------------------------------------------------

std::vector<std::vector<Dart>> oracle_faces(const Graph& g, const RotationSystem& rot) {
    std::vector<Dart> next_at(2 * g.edge_count(), -1);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& o = rot.at(static_cast<VertexId>(v));
        for (std::size_t i = 0; i < o.size(); ++i) next_at[ix(o[i])] = o[(i + 1) % o.size()];
    }
    std::vector<bool> seen(next_at.size(), false);
    std::vector<std::vector<Dart>> faces;
    for (std::size_t s = 0; s < next_at.size(); ++s) {
        if (seen[s]) continue;
        std::vector<Dart> walk;
        for (Dart d = static_cast<Dart>(s); !seen[ix(d)]; d = next_at[ix(d ^ 1)]) {
            seen[ix(d)] = true;
            walk.push_back(d);
        }
        faces.push_back(std::move(walk));
    }
    return faces;
}

namespace {

VertexId tail(const Graph& g, Dart d) { return (d & 1) ? g.edge(d >> 1).v : g.edge(d >> 1).u; }

}  // namespace

bool oracle_strong(const Graph& g, const RotationSystem& rot) {
    for (const auto& walk : oracle_faces(g, rot)) {
        std::set<VertexId> corners;
        for (Dart d : walk)
            if (!corners.insert(tail(g, d)).second) return false;
    }
    return true;
}

bool oracle_polyhedral(const Graph& g, const RotationSystem& rot) {
    if (!oracle_strong(g, rot)) return false;
    auto faces = oracle_faces(g, rot);
    std::vector<int> face_of(2 * g.edge_count());
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (Dart d : faces[f]) face_of[ix(d)] = static_cast<int>(f);
    std::set<std::pair<int, int>> dual;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        int a = face_of[2 * e], b = face_of[2 * e + 1];
        if (a == b) return false;
        if (!dual.insert({std::min(a, b), std::max(a, b)}).second) return false;
    }
    return true;
}

int oracle_min_strong_genus(const Graph& g) {
    int best = -1;
    for_each_rotation(g, [&](const RotationSystem& rot) {
        if (!oracle_strong(g, rot)) return;
        auto f = static_cast<long>(oracle_faces(g, rot).size());
        int genus = static_cast<int>((2 - static_cast<long>(g.vertex_count()) + static_cast<long>(g.edge_count()) - f) / 2);
        if (best < 0 || genus < best) best = genus;
    });
    return best;
}

bool brute_hamiltonian(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    if (n < 3) return false;
    std::vector<std::vector<bool>> adj(ix(n), std::vector<bool>(ix(n), false));
    for (const auto& e : g.edges()) adj[ix(e.u)][ix(e.v)] = adj[ix(e.v)][ix(e.u)] = true;
    std::vector<int> perm(ix(n - 1));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = adj[0][ix(perm.front())] && adj[ix(perm.back())][0];
        for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i) ok = adj[ix(perm[i])][ix(perm[i + 1])];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

// Vertex sets (as masks) of all cycles, with lengths. Parallel pairs give 2-cycles.
std::vector<std::pair<std::uint64_t, int>> all_cycles(const Graph& g) {
    const int n = static_cast<int>(g.vertex_count());
    std::vector<std::pair<std::uint64_t, int>> out;
    std::map<std::pair<int, int>, int> mult;
    for (const auto& e : g.edges()) ++mult[{std::min(e.u, e.v), std::max(e.u, e.v)}];
    for (const auto& [p, m] : mult)
        if (m >= 2) out.push_back({(std::uint64_t{1} << p.first) | (std::uint64_t{1} << p.second), 2});
    auto adj = adjacency(g);
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    // simple cycles of length >= 3 with smallest vertex s; each found twice (two directions)
    std::set<std::vector<int>> seen;
    std::vector<int> path;
    std::function<void(int, int, std::uint64_t)> dfs = [&](int s, int v, std::uint64_t mask) {
        for (int w : adj[ix(v)]) {
            if (w == s && path.size() >= 3) {
                auto key = path;
                if (key[1] > key.back()) std::reverse(key.begin() + 1, key.end());
                if (seen.insert(key).second) out.push_back({mask, static_cast<int>(path.size())});
            } else if (w > s && !((mask >> w) & 1u)) {
                path.push_back(w);
                dfs(s, w, mask | (std::uint64_t{1} << w));
                path.pop_back();
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        dfs(s, s, std::uint64_t{1} << s);
    }
    return out;
}

}  // namespace

std::optional<int> brute_girth(const Graph& g) {
    std::optional<int> best;
    for (const auto& [mask, len] : all_cycles(g))
        if (!best || len < *best) best = len;
    return best;
}

std::optional<int> brute_min_disjoint_pair(const Graph& g) {
    auto cycles = all_cycles(g);
    std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < cycles.size() && 2 * cycles[i].second < best; ++i)
        for (std::size_t j = i + 1; j < cycles.size() && cycles[i].second + cycles[j].second < best; ++j)
            if ((cycles[i].first & cycles[j].first) == 0) best = cycles[i].second + cycles[j].second;
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::vector<EdgeId> brute_bridges(const Graph& g) {
    std::vector<bool> none(g.vertex_count(), false);
    const int base = count_components(g, none);
    std::vector<EdgeId> out;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (count_components(g, none, static_cast<int>(e)) > base) out.push_back(static_cast<EdgeId>(e));
    return out;
}

bool brute_connected(const Graph& g) {
    return g.vertex_count() == 0 || count_components(g, std::vector<bool>(g.vertex_count(), false)) == 1;
}

bool brute_connectivity_at_least(const Graph& g, int k) {
    const int n = static_cast<int>(g.vertex_count());
    if (n <= k) return false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) >= k) continue;
        std::vector<bool> gone(ix(n));
        for (int v = 0; v < n; ++v) gone[ix(v)] = (mask >> v) & 1u;
        if (count_components(g, gone) != 1) return false;
    }
    return true;
}

std::size_t brute_perfect_matching_count(const Graph& g) {
    const std::size_t n = g.vertex_count(), m = g.edge_count();
    if (n % 2 != 0 || m < n / 2) return 0;
    std::size_t count = 0;
    std::vector<bool> pick(m, false);
    std::fill(pick.end() - static_cast<long>(n / 2), pick.end(), true);
    do {
        std::vector<int> deg(n, 0);
        bool ok = true;
        for (std::size_t e = 0; e < m && ok; ++e)
            if (pick[e]) ok = ++deg[ix(g.edge(static_cast<EdgeId>(e)).u)] == 1 && ++deg[ix(g.edge(static_cast<EdgeId>(e)).v)] == 1;
        if (ok) ++count;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return count;
}

}  // namespace ft
