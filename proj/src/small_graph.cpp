#include "freeness/small_graph.hpp"

#include <algorithm>
#include <numeric>

namespace freeness {

std::size_t SmallGraph::size() const {
    std::size_t twice = 0;
    for (auto m : adj) twice += static_cast<std::size_t>(__builtin_popcountll(m));
    return twice / 2;
}

SmallGraph to_small(const Graph& g) {
    if (g.vertex_count() > kMaxSmallOrder) throw GraphError("graph exceeds 64 vertices");
    SmallGraph s(g.vertex_count());
    for (const auto& e : g.edges()) s.add_edge(e.u, e.v);
    return s;
}

Graph to_graph(const SmallGraph& g) {
    std::vector<Edge> edges;
    const int n = static_cast<int>(g.order());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) edges.push_back({u, v});
    return Graph(g.order(), std::move(edges));
}

std::string CanonicalForm::key() const {
    std::string out;
    out.reserve(1 + colors.size() + graph.adj.size() * 8);
    out.push_back(static_cast<char>(graph.order()));
    for (int c : colors) out.push_back(static_cast<char>(c));
    for (auto m : graph.adj)
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((m >> (8 * b)) & 0xff));
    return out;
}

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
public:
    Canonizer(const SmallGraph& g, std::vector<int> colors) : g_(g), colors_(std::move(colors)), n_(static_cast<int>(g.order())) {}

    CanonicalForm run() {
        Cells cells;
        if (n_ > 0) {
            std::vector<int> vs(static_cast<std::size_t>(n_));
            std::iota(vs.begin(), vs.end(), 0);
            std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) { return colors_[idx(a)] < colors_[idx(b)]; });
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (i == 0 || colors_[idx(vs[i])] != colors_[idx(vs[i - 1])]) cells.emplace_back();
                cells.back().push_back(vs[i]);
            }
        }
        std::vector<int> prefix;
        search(std::move(cells), prefix);

        CanonicalForm out;
        out.graph.adj = best_adj_;
        out.labeling = best_order_;
        for (int v : best_order_) out.colors.push_back(colors_[idx(v)]);
        return out;
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    void refine(Cells& cells) const {
        std::vector<std::uint64_t> masks;
        std::vector<std::pair<std::vector<int>, int>> sig;
        for (;;) {
            masks.assign(cells.size(), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) masks[c] |= std::uint64_t{1} << v;
            Cells next;
            next.reserve(cells.size());
            bool split = false;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                sig.clear();
                for (int v : cell) {
                    std::vector<int> counts(cells.size());
                    for (std::size_t c = 0; c < cells.size(); ++c)
                        counts[c] = __builtin_popcountll(g_.adj[idx(v)] & masks[c]);
                    sig.emplace_back(std::move(counts), v);
                }
                std::sort(sig.begin(), sig.end());
                for (std::size_t i = 0; i < sig.size(); ++i) {
                    if (i == 0 || sig[i].first != sig[i - 1].first) {
                        if (i > 0) split = true;
                        next.emplace_back();
                    }
                    next.back().push_back(sig[i].second);
                }
            }
            cells = std::move(next);
            if (!split) return;
        }
    }

    void leaf(const Cells& cells) {
        std::vector<int> order;
        order.reserve(cells.size());
        for (const auto& c : cells) order.push_back(c.front());
        std::vector<int> pos(idx(n_));
        for (int i = 0; i < n_; ++i) pos[idx(order[idx(i)])] = i;
        std::vector<std::uint64_t> adj(idx(n_), 0);
        for (int i = 0; i < n_; ++i) {
            auto m = g_.adj[idx(order[idx(i)])];
            while (m) {
                int w = __builtin_ctzll(m);
                m &= m - 1;
                adj[idx(i)] |= std::uint64_t{1} << pos[idx(w)];
            }
        }
        if (!have_best_ || adj < best_adj_) {
            have_best_ = true;
            best_adj_ = std::move(adj);
            best_order_ = std::move(order);
        } else if (adj == best_adj_) {
            std::vector<int> perm(idx(n_));
            for (int i = 0; i < n_; ++i) perm[idx(best_order_[idx(i)])] = order[idx(i)];
            automorphisms_.push_back(std::move(perm));
        }
    }

    int find(std::vector<int>& parent, int x) const {
        while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
        return x;
    }

    bool same_orbit(int w, const std::vector<int>& tried, const std::vector<int>& prefix) {
        if (tried.empty() || automorphisms_.empty()) return false;
        std::vector<int> parent(idx(n_));
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& a : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return a[idx(v)] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int x = find(parent, v), y = find(parent, a[idx(v)]);
                if (x != y) parent[idx(x)] = y;
            }
        }
        int rw = find(parent, w);
        return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(parent, t) == rw; });
    }

    void search(Cells cells, std::vector<int>& prefix) {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        const std::vector<int> members = cells[target];
        std::vector<int> tried;
        for (int w : members) {
            if (same_orbit(w, tried, prefix)) continue;
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({w});
                std::vector<int> rest;
                for (int x : members)
                    if (x != w) rest.push_back(x);
                child.push_back(std::move(rest));
            }
            prefix.push_back(w);
            search(std::move(child), prefix);
            prefix.pop_back();
            tried.push_back(w);
        }
    }

    const SmallGraph& g_;
    std::vector<int> colors_;
    int n_;
    bool have_best_ = false;
    std::vector<std::uint64_t> best_adj_;
    std::vector<int> best_order_;
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g, std::span<const int> colors) {
    std::vector<int> c(g.order(), 0);
    if (!colors.empty()) {
        if (colors.size() != g.order()) throw GraphError("colour vector does not match graph order");
        c.assign(colors.begin(), colors.end());
    }
    return Canonizer(g, std::move(c)).run();
}

bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace freeness
