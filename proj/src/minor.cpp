#include "freeness/minor.hpp"

#include "freeness/small_graph.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>
#include <future>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace freeness {

std::string_view to_string(Linkage l) {
    switch (l) {
        case Linkage::Linked: return "linked";
        case Linkage::Linkless: return "linkless";
        case Linkage::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

std::size_t ix(int v) { return static_cast<std::size_t>(v); }
constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Edge count of the simple projection.
std::size_t to_small_size(const Graph& g) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : g.edges()) pairs.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    return pairs.size();
}

}  // namespace

bool verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model) {
    const std::size_t k = pattern.vertex_count();
    if (model.branch_of.size() != host.vertex_count()) return false;
    if (model.edge_realizer.size() != pattern.edge_count()) return false;
    std::vector<std::vector<VertexId>> sets(k);
    for (std::size_t v = 0; v < host.vertex_count(); ++v) {
        int b = model.branch_of[v];
        if (b < -1 || b >= static_cast<int>(k)) return false;
        if (b >= 0) sets[ix(b)].push_back(static_cast<VertexId>(v));
    }
    for (std::size_t p = 0; p < k; ++p) {
        if (sets[p].empty()) return false;
        // connectivity of the branch set inside the host
        std::vector<bool> seen(host.vertex_count(), false);
        std::vector<VertexId> stack{sets[p].front()};
        seen[ix(sets[p].front())] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : host.incident(v)) {
                VertexId w = host.other_end(e, v);
                if (!seen[ix(w)] && model.branch_of[ix(w)] == static_cast<int>(p)) {
                    seen[ix(w)] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != sets[p].size()) return false;
    }
    for (std::size_t pe = 0; pe < pattern.edge_count(); ++pe) {
        EdgeId he = model.edge_realizer[pe];
        if (he < 0 || static_cast<std::size_t>(he) >= host.edge_count()) return false;
        const Edge& want = pattern.edge(static_cast<EdgeId>(pe));
        const Edge& got = host.edge(he);
        int a = model.branch_of[ix(got.u)], b = model.branch_of[ix(got.v)];
        if (!((a == want.u && b == want.v) || (a == want.v && b == want.u))) return false;
    }
    return true;
}

Graph delta_y(const Graph& g, const std::array<EdgeId, 3>& triangle) {
    std::map<VertexId, int> hits;
    std::set<EdgeId> ids(triangle.begin(), triangle.end());
    if (ids.size() != 3) throw GraphError("triangle edges must be distinct");
    for (EdgeId e : triangle) {
        if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) throw GraphError("edge id out of range");
        ++hits[g.edge(e).u];
        ++hits[g.edge(e).v];
    }
    if (hits.size() != 3 || std::any_of(hits.begin(), hits.end(), [](auto& kv) { return kv.second != 2; }))
        throw GraphError("edges do not form a triangle");
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (!ids.count(static_cast<EdgeId>(e))) edges.push_back(g.edge(static_cast<EdgeId>(e)));
    const auto centre = static_cast<VertexId>(g.vertex_count());
    for (const auto& [v, _] : hits) edges.push_back({v, centre});
    return Graph(g.vertex_count() + 1, std::move(edges));
}

Graph y_delta(const Graph& g, VertexId v) {
    if (g.degree(v) != 3) throw GraphError("Y-Delta needs a degree-3 vertex");
    std::vector<VertexId> nb;
    for (EdgeId e : g.incident(v)) nb.push_back(g.other_end(e, v));
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw GraphError("Y-Delta needs three distinct neighbours");
    auto shift = [v](VertexId x) { return x > v ? x - 1 : x; };
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (e.u != v && e.v != v) edges.push_back({shift(e.u), shift(e.v)});
    edges.push_back({shift(nb[0]), shift(nb[1])});
    edges.push_back({shift(nb[1]), shift(nb[2])});
    edges.push_back({shift(nb[0]), shift(nb[2])});
    return Graph(g.vertex_count() - 1, std::move(edges));
}

namespace {

SmallGraph complete_graph(int n) {
    SmallGraph g(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SmallGraph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    SmallGraph g(static_cast<std::size_t>(n));
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of.push_back(static_cast<int>(i));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[ix(u)] != part_of[ix(v)]) g.add_edge(u, v);
    return g;
}

std::vector<FamilyMember> build_family() {
    const Graph seed = to_graph(complete_graph(6));
    const std::size_t edge_count = seed.edge_count();
    std::map<std::string, Graph> found;  // canonical key -> canonical representative
    std::queue<Graph> frontier;
    auto admit = [&](const Graph& g) {
        if (g.edge_count() != edge_count) return;
        auto canon = canonical_form(to_small(g));
        auto key = canon.key();
        if (found.count(key)) return;
        Graph rep = to_graph(canon.graph);
        found.emplace(key, rep);
        frontier.push(rep);
    };
    admit(seed);
    while (!frontier.empty()) {
        Graph g = frontier.front();
        frontier.pop();
        // ΔY on every triangle
        for (std::size_t a = 0; a < g.edge_count(); ++a)
            for (std::size_t b = a + 1; b < g.edge_count(); ++b)
                for (std::size_t c = b + 1; c < g.edge_count(); ++c) {
                    std::array<EdgeId, 3> t{static_cast<EdgeId>(a), static_cast<EdgeId>(b), static_cast<EdgeId>(c)};
                    Graph next;
                    try {
                        next = delta_y(g, t);
                    } catch (const GraphError&) {
                        continue;
                    }
                    admit(to_graph(to_small(next)));
                }
        // YΔ on every degree-3 vertex; projections that merge edges leave the family
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(static_cast<VertexId>(v)) != 3) continue;
            Graph next = y_delta(g, static_cast<VertexId>(v));
            admit(to_graph(to_small(next)));
        }
    }
    if (found.size() != 7) throw std::logic_error("Petersen family closure has " + std::to_string(found.size()) + " members");

    std::vector<Graph> members;
    for (auto& [key, g] : found) members.push_back(g);
    std::stable_sort(members.begin(), members.end(),
                     [](const Graph& a, const Graph& b) { return a.vertex_count() < b.vertex_count(); });

    const auto k331 = canonical_form(complete_multipartite({3, 3, 1})).key();
    SmallGraph k44e = complete_multipartite({4, 4});
    k44e.adj[0] &= ~bit(4);
    k44e.adj[4] &= ~bit(0);
    const auto k44e_key = canonical_form(k44e).key();

    std::vector<FamilyMember> out;
    std::map<std::size_t, int> unnamed_by_order;
    for (auto& g : members) {
        auto key = canonical_form(to_small(g)).key();
        std::string name;
        if (g.vertex_count() == 6) name = "K6";
        else if (g.vertex_count() == 10) name = "Petersen";
        else if (key == k331) name = "K3,3,1";
        else if (key == k44e_key) name = "K4,4-e";
        else name = "G" + std::to_string(g.vertex_count());
        out.push_back({name, g});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Minor search

struct State {
    std::array<std::uint64_t, 64> adj{};
    std::array<std::uint64_t, 64> members{};
    std::uint64_t alive = 0;
    std::uint64_t fixed = 0;

    int degree(int v) const { return __builtin_popcountll(adj[ix(v)]); }
    int order() const { return __builtin_popcountll(alive); }
    int size() const {
        int twice = 0;
        for (auto m = alive; m; m &= m - 1) twice += degree(__builtin_ctzll(m));
        return twice / 2;
    }
    void remove(int v) {
        for (auto m = adj[ix(v)]; m; m &= m - 1) adj[ix(__builtin_ctzll(m))] &= ~bit(v);
        adj[ix(v)] = 0;
        alive &= ~bit(v);
        fixed &= ~bit(v);
    }
    void contract(int v, int into) {
        for (auto m = adj[ix(v)]; m; m &= m - 1) {
            int x = __builtin_ctzll(m);
            adj[ix(x)] &= ~bit(v);
            if (x != into) {
                adj[ix(x)] |= bit(into);
                adj[ix(into)] |= bit(x);
            }
        }
        adj[ix(v)] = 0;
        alive &= ~bit(v);
        members[ix(into)] |= members[ix(v)];
    }
};

class MinorSearch {
public:
    MinorSearch(const Graph& host, const Graph& pattern, std::uint64_t budget, std::function<bool()> cancelled)
        : host_(host), pattern_(to_small(pattern)), pattern_graph_(pattern), budget_(budget), cancelled_(std::move(cancelled)) {
        k_ = static_cast<int>(pattern_.order());
        m_ = static_cast<int>(pattern_.size());
        min_degree_ = INT_MAX;
        for (int p = 0; p < k_; ++p) min_degree_ = std::min(min_degree_, pattern_.degree(p));
        if (k_ == 0) min_degree_ = 0;
        reduce_ = min_degree_ >= 3;
    }

    SearchResult<MinorModel> run() {
        SearchResult<MinorModel> out;
        if (host_.vertex_count() > kMaxSmallOrder) {
            out.status = SearchStatus::BudgetExhausted;
            return out;
        }
        State s;
        SmallGraph h = to_small(host_);
        for (std::size_t v = 0; v < h.order(); ++v) {
            s.adj[v] = h.adj[v];
            s.members[v] = bit(static_cast<int>(v));
            s.alive |= bit(static_cast<int>(v));
        }
        bool found = k_ == 0 ? finish_empty() : search(s);
        out.nodes = budget_.used();
        if (found) {
            out.status = SearchStatus::Found;
            out.value = std::move(model_);
        } else {
            out.status = budget_.exhausted() || stopped_ ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
        }
        return out;
    }

private:
    bool finish_empty() {
        model_.branch_of.assign(host_.vertex_count(), -1);
        return true;
    }

    // Vertices that cannot be branch vertices on their own are deleted or absorbed.
    // Sound only when every pattern vertex has degree at least 3.
    bool reduce(State& s) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto m = s.alive & ~s.fixed; m; m &= m - 1) {
                int v = __builtin_ctzll(m);
                int d = s.degree(v);
                if (d <= 1) {
                    s.remove(v);
                    changed = true;
                } else if (d == 2) {
                    auto open = s.adj[ix(v)] & ~s.fixed;
                    if (open) s.contract(v, __builtin_ctzll(open));
                    else s.remove(v);
                    changed = true;
                }
            }
        }
        return true;
    }

    bool fixed_degrees_ok(const State& s) const {
        for (auto m = s.fixed; m; m &= m - 1)
            if (s.degree(__builtin_ctzll(m)) < min_degree_) return false;
        return true;
    }

    std::string memo_key(const State& s) const {
        std::vector<int> index(64, -1);
        int n = 0;
        for (auto m = s.alive; m; m &= m - 1) index[ix(__builtin_ctzll(m))] = n++;
        SmallGraph g(static_cast<std::size_t>(n));
        std::vector<int> colors(static_cast<std::size_t>(n), 0);
        for (auto m = s.alive; m; m &= m - 1) {
            int v = __builtin_ctzll(m);
            int i = index[ix(v)];
            if (s.fixed & bit(v)) colors[ix(i)] = 1;
            for (auto a = s.adj[ix(v)]; a; a &= a - 1) {
                int w = __builtin_ctzll(a);
                g.adj[ix(i)] |= bit(index[ix(w)]);
            }
        }
        return canonical_form(g, colors).key();
    }

    bool search(State s) {
        if (stopped_ || (cancelled_ && cancelled_())) {
            stopped_ = true;
            return false;
        }
        if (!budget_.spend()) return false;
        if (reduce_) reduce(s);
        if (!fixed_degrees_ok(s)) return false;
        const int n = s.order();
        const int e = s.size();
        const int nf = __builtin_popcountll(s.fixed);
        if (n < k_ || e < m_) return false;
        if (reduce_ && e - (n - k_) < m_) return false;

        if (nf == k_ || nf == n) {
            for (auto m = s.alive & ~s.fixed; m; m &= m - 1) s.remove(__builtin_ctzll(m));
            return s.order() == k_ && fixed_degrees_ok(s) && embed_spanning(s);
        }

        std::string key = memo_key(s);
        if (failed_.count(key)) return false;

        int v = -1;
        for (auto m = s.alive & ~s.fixed; m; m &= m - 1) {
            int x = __builtin_ctzll(m);
            if (v < 0 || s.degree(x) > s.degree(v)) v = x;
        }

        if (s.degree(v) >= min_degree_) {
            State t = s;
            t.fixed |= bit(v);
            if (search(t)) return true;
        }
        for (auto m = s.adj[ix(v)] & ~s.fixed; m; m &= m - 1) {
            State t = s;
            t.contract(v, __builtin_ctzll(m));
            if (search(t)) return true;
        }
        {
            State t = s;
            t.remove(v);
            if (search(t)) return true;
        }
        if (!budget_.exhausted() && !stopped_) failed_.insert(std::move(key));
        return false;
    }

    // All alive vertices are branch vertices; look for the pattern as a spanning subgraph.
    bool embed_spanning(const State& s) {
        std::vector<int> hosts;
        for (auto m = s.alive; m; m &= m - 1) hosts.push_back(__builtin_ctzll(m));
        // pattern vertices in BFS order from the highest-degree vertex
        std::vector<int> order;
        std::vector<bool> placed(ix(k_), false);
        while (static_cast<int>(order.size()) < k_) {
            int root = -1;
            for (int p = 0; p < k_; ++p)
                if (!placed[ix(p)] && (root < 0 || pattern_.degree(p) > pattern_.degree(root))) root = p;
            std::queue<int> q;
            q.push(root);
            placed[ix(root)] = true;
            while (!q.empty()) {
                int p = q.front();
                q.pop();
                order.push_back(p);
                for (int r = 0; r < k_; ++r)
                    if (pattern_.adjacent(p, r) && !placed[ix(r)]) {
                        placed[ix(r)] = true;
                        q.push(r);
                    }
            }
        }
        std::vector<int> image(ix(k_), -1);
        std::uint64_t used = 0;
        std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
            if (i == order.size()) return true;
            int p = order[i];
            for (int h : hosts) {
                if (used & bit(h)) continue;
                if (s.degree(h) < pattern_.degree(p)) continue;
                bool ok = true;
                for (std::size_t j = 0; j < i && ok; ++j) {
                    int r = order[j];
                    if (pattern_.adjacent(p, r) && !(s.adj[ix(h)] & bit(image[ix(r)]))) ok = false;
                }
                if (!ok) continue;
                image[ix(p)] = h;
                used |= bit(h);
                if (place(i + 1)) return true;
                used &= ~bit(h);
                image[ix(p)] = -1;
            }
            return false;
        };
        if (!place(0)) return false;

        model_.branch_of.assign(host_.vertex_count(), -1);
        for (int p = 0; p < k_; ++p)
            for (auto m = s.members[ix(image[ix(p)])]; m; m &= m - 1) model_.branch_of[ix(__builtin_ctzll(m))] = p;
        model_.edge_realizer.assign(pattern_graph_.edge_count(), -1);
        for (std::size_t pe = 0; pe < pattern_graph_.edge_count(); ++pe) {
            const Edge& want = pattern_graph_.edge(static_cast<EdgeId>(pe));
            for (std::size_t he = 0; he < host_.edge_count(); ++he) {
                const Edge& got = host_.edge(static_cast<EdgeId>(he));
                int a = model_.branch_of[ix(got.u)], b = model_.branch_of[ix(got.v)];
                if ((a == want.u && b == want.v) || (a == want.v && b == want.u)) {
                    model_.edge_realizer[pe] = static_cast<EdgeId>(he);
                    break;
                }
            }
        }
        return true;
    }

    const Graph& host_;
    SmallGraph pattern_;
    const Graph& pattern_graph_;
    NodeBudget budget_;
    std::function<bool()> cancelled_;
    int k_ = 0, m_ = 0, min_degree_ = 0;
    bool reduce_ = false;
    bool stopped_ = false;
    std::unordered_set<std::string> failed_;
    MinorModel model_;
};

SearchResult<MinorModel> has_minor_impl(const Graph& host, const Graph& pattern, std::uint64_t budget,
                                        std::function<bool()> cancelled) {
    if (!pattern.is_simple()) throw GraphError("minor patterns must be simple");
    SearchResult<MinorModel> out;
    if (host.vertex_count() < pattern.vertex_count() || to_small_size(host) < pattern.edge_count()) {
        out.status = SearchStatus::NotFound;
        return out;
    }
    return MinorSearch(host, pattern, budget, std::move(cancelled)).run();
}

}  // namespace

const std::vector<FamilyMember>& petersen_family() {
    static const std::vector<FamilyMember> family = build_family();
    return family;
}

SearchResult<MinorModel> has_minor(const Graph& host, const Graph& pattern, std::uint64_t budget) {
    return has_minor_impl(host, pattern, budget, {});
}

LinkageResult is_intrinsically_linked(const Graph& g, std::uint64_t budget) {
    const auto& family = petersen_family();
    LinkageResult out;
    out.outcomes.resize(family.size());
    const std::size_t simple_edges = to_small_size(g);
    std::vector<std::future<SearchResult<MinorModel>>> tasks(family.size());
    std::atomic<int> first_found{INT_MAX};

    for (std::size_t i = 0; i < family.size(); ++i) {
        out.outcomes[i].member = family[i].name;
        const Graph& p = family[i].graph;
        if (g.vertex_count() < p.vertex_count() || simple_edges < p.edge_count()) {
            out.outcomes[i].filtered = true;
            continue;
        }
        const int index = static_cast<int>(i);
        tasks[i] = std::async(std::launch::async, [&g, &p, budget, index, &first_found] {
            auto r = has_minor_impl(g, p, budget, [&first_found, index] { return first_found.load() < index; });
            if (r.found()) {
                int cur = first_found.load();
                while (index < cur && !first_found.compare_exchange_weak(cur, index)) {
                }
            }
            return r;
        });
    }

    bool exhausted = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!tasks[i].valid()) continue;
        auto r = tasks[i].get();
        if (out.status == Linkage::Linked) {
            out.outcomes[i].status = SearchStatus::BudgetExhausted;
            out.outcomes[i].skipped = true;
            continue;
        }
        out.outcomes[i].status = r.status;
        out.outcomes[i].nodes = r.nodes;
        if (r.found()) {
            out.status = Linkage::Linked;
            out.member = static_cast<int>(i);
            out.model = std::move(r.value);
        } else if (r.status == SearchStatus::BudgetExhausted) {
            exhausted = true;
        }
    }
    if (out.status != Linkage::Linked && exhausted) out.status = Linkage::BudgetExhausted;
    return out;
}

}  // namespace freeness
