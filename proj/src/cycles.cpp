#include "freeness/cycles.hpp"

#include <algorithm>
#include <map>

namespace freeness {

namespace {

std::size_t ix(int v) { return static_cast<std::size_t>(v); }

}  // namespace

std::vector<EdgeId> Cycle::sorted_edges() const {
    auto out = edges;
    std::sort(out.begin(), out.end());
    return out;
}

EdgeSubset TwoFactor::edge_set(const Graph& g) const {
    EdgeSubset s(g.edge_count());
    for (const auto& c : cycles)
        for (EdgeId e : c.edges) s.insert(e);
    return s;
}

std::vector<EdgeId> TwoFactor::sorted_edges() const {
    std::vector<EdgeId> out;
    for (const auto& c : cycles) out.insert(out.end(), c.edges.begin(), c.edges.end());
    std::sort(out.begin(), out.end());
    return out;
}

Cycle cycle_from_edges(const Graph& g, std::vector<EdgeId> edges) {
    if (edges.size() < 2) throw GraphError("a cycle needs at least two edges");
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw GraphError("repeated edge in cycle");
    std::map<VertexId, std::vector<EdgeId>> at;
    for (EdgeId e : edges) {
        if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) throw GraphError("edge id out of range");
        at[g.edge(e).u].push_back(e);
        at[g.edge(e).v].push_back(e);
    }
    for (const auto& [v, inc] : at)
        if (inc.size() != 2) throw GraphError("cycle edges do not form a 2-regular set");

    Cycle c;
    VertexId start = at.begin()->first;
    VertexId v = start;
    EdgeId e = at.begin()->second[0];  // incident lists are built from sorted ids
    do {
        c.vertices.push_back(v);
        c.edges.push_back(e);
        v = g.other_end(e, v);
        const auto& inc = at[v];
        e = inc[0] == e ? inc[1] : inc[0];
    } while (v != start);
    if (c.edges.size() != edges.size()) throw GraphError("cycle edges are not connected");
    return c;
}

std::vector<Cycle> cycles_of_two_regular(const Graph& g, const EdgeSubset& edges) {
    std::vector<std::vector<EdgeId>> at(g.vertex_count());
    for (EdgeId e : edges.ids()) {
        at[ix(g.edge(e).u)].push_back(e);
        at[ix(g.edge(e).v)].push_back(e);
    }
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Cycle> out;
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        if (seen[s] || at[s].empty()) continue;
        if (at[s].size() != 2) throw GraphError("edge set is not 2-regular");
        std::vector<EdgeId> component;
        VertexId v = static_cast<VertexId>(s);
        EdgeId e = at[s][0];
        do {
            seen[ix(v)] = true;
            component.push_back(e);
            v = g.other_end(e, v);
            if (at[ix(v)].size() != 2) throw GraphError("edge set is not 2-regular");
            e = at[ix(v)][0] == e ? at[ix(v)][1] : at[ix(v)][0];
        } while (v != static_cast<VertexId>(s));
        out.push_back(cycle_from_edges(g, std::move(component)));
    }
    return out;
}

bool is_valid_cycle(const Graph& g, const Cycle& c) {
    const std::size_t len = c.edges.size();
    if (len < 2 || c.vertices.size() != len) return false;
    auto sorted_v = c.vertices;
    std::sort(sorted_v.begin(), sorted_v.end());
    if (std::adjacent_find(sorted_v.begin(), sorted_v.end()) != sorted_v.end()) return false;
    auto sorted_e = c.sorted_edges();
    if (std::adjacent_find(sorted_e.begin(), sorted_e.end()) != sorted_e.end()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        EdgeId e = c.edges[i];
        if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) return false;
        VertexId a = c.vertices[i], b = c.vertices[(i + 1) % len];
        if (a < 0 || static_cast<std::size_t>(a) >= g.vertex_count()) return false;
        const Edge& ed = g.edge(e);
        if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
    }
    return true;
}

bool is_hamiltonian_cycle(const Graph& g, const Cycle& c) {
    return g.vertex_count() >= 3 && c.length() == g.vertex_count() && is_valid_cycle(g, c);
}

bool is_two_factor(const Graph& g, const TwoFactor& f) {
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        if (!is_valid_cycle(g, f.cycles[i])) return false;
        for (VertexId v : f.cycles[i].vertices) {
            if (owner[ix(v)] >= 0) return false;
            owner[ix(v)] = static_cast<int>(i);
        }
        for (EdgeId e : f.cycles[i].edges) {
            ++deg[ix(g.edge(e).u)];
            ++deg[ix(g.edge(e).v)];
        }
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

bool is_perfect_matching(const Graph& g, const EdgeSubset& m) {
    if (m.size() != g.edge_count()) return false;
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e : m.ids()) {
        ++deg[ix(g.edge(e).u)];
        ++deg[ix(g.edge(e).v)];
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

// ---------------------------------------------------------------------------
// Hamiltonian cycle

namespace {

class HamiltonSearch {
public:
    HamiltonSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget), on_path_(g.vertex_count(), false) {}

    SearchResult<Cycle> run() {
        SearchResult<Cycle> out;
        const std::size_t n = g_.vertex_count();
        if (n < 3) {
            out.status = SearchStatus::NotFound;
            return out;
        }
        path_.push_back(0);
        on_path_[0] = true;
        bool found = extend();
        out.nodes = budget_.used();
        if (found) {
            out.status = SearchStatus::Found;
            std::vector<EdgeId> edges;
            for (std::size_t i = 0; i < n; ++i) edges.push_back(edge_between(path_[i], path_[(i + 1) % n]));
            Cycle c;
            c.vertices = path_;
            c.edges = std::move(edges);
            out.value = std::move(c);
        } else {
            out.status = budget_.exhausted() ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
        }
        return out;
    }

private:
    EdgeId edge_between(VertexId a, VertexId b) const { return *g_.find_edge(std::min(a, b), std::max(a, b)) ; }

    std::vector<VertexId> sorted_neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (EdgeId e : g_.incident(v)) out.push_back(g_.other_end(e, v));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Every vertex off the path needs two usable neighbours: off-path ones or the path ends.
    bool feasible() const {
        const VertexId head = path_.back();
        const VertexId start = path_.front();
        for (std::size_t w = 0; w < g_.vertex_count(); ++w) {
            if (on_path_[w]) continue;
            int usable = 0;
            VertexId last = -1;
            for (EdgeId e : g_.incident(static_cast<VertexId>(w))) {
                VertexId x = g_.other_end(e, static_cast<VertexId>(w));
                if (x == last) continue;
                if (!on_path_[ix(x)] || x == head || x == start) ++usable;
                last = x;
            }
            if (usable < 2) return false;
        }
        return true;
    }

    bool extend() {
        if (!budget_.spend()) return false;
        const std::size_t n = g_.vertex_count();
        const VertexId head = path_.back();
        if (path_.size() == n) return g_.find_edge(head, path_.front()).has_value();
        if (!feasible()) return false;
        for (VertexId w : sorted_neighbors(head)) {
            if (on_path_[ix(w)]) continue;
            path_.push_back(w);
            on_path_[ix(w)] = true;
            if (extend()) return true;
            on_path_[ix(w)] = false;
            path_.pop_back();
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    const Graph& g_;
    NodeBudget budget_;
    std::vector<bool> on_path_;
    std::vector<VertexId> path_;
};

}  // namespace

SearchResult<Cycle> hamiltonian_cycle(const Graph& g, std::uint64_t budget) {
    return HamiltonSearch(g, budget).run();
}

// ---------------------------------------------------------------------------
// Degree-constrained spanning subgraphs (perfect matchings, 2-factors)

namespace {

// Enumerates edge subsets in which every vertex has degree exactly `target`.
// Branches include/exclude on an undecided edge at the most constrained vertex,
// forcing edges whenever a vertex has exactly as many options as it needs.
class FactorEnumerator {
public:
    FactorEnumerator(const Graph& g, int target, std::size_t limit) : g_(g), target_(target), limit_(limit) {}

    std::vector<EdgeSubset> run() {
        State s;
        s.status.assign(g_.edge_count(), kOpen);
        s.deg.assign(g_.vertex_count(), 0);
        for (std::size_t v = 0; v < g_.vertex_count(); ++v)
            if (g_.degree(static_cast<VertexId>(v)) < static_cast<std::size_t>(target_)) return {};
        if (limit_ > 0) recurse(std::move(s));
        return std::move(out_);
    }

private:
    static constexpr char kOpen = 0, kIn = 1, kOut = 2;

    struct State {
        std::vector<char> status;
        std::vector<int> deg;
    };

    int open_count(const State& s, VertexId v) const {
        int c = 0;
        for (EdgeId e : g_.incident(v)) c += s.status[ix(e)] == kOpen;
        return c;
    }

    // Applies a decision and closes edges at saturated vertices. False on contradiction.
    bool set(State& s, EdgeId e, char value) const {
        if (s.status[ix(e)] != kOpen) return s.status[ix(e)] == value;
        s.status[ix(e)] = value;
        if (value == kIn) {
            for (VertexId v : {g_.edge(e).u, g_.edge(e).v}) {
                if (++s.deg[ix(v)] > target_) return false;
                if (s.deg[ix(v)] == target_)
                    for (EdgeId f : g_.incident(v))
                        if (s.status[ix(f)] == kOpen) s.status[ix(f)] = kOut;
            }
        }
        return true;
    }

    // Forces edges at vertices whose open options equal their deficit.
    bool propagate(State& s) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
                int deficit = target_ - s.deg[v];
                if (deficit == 0) continue;
                int open = open_count(s, static_cast<VertexId>(v));
                if (open < deficit) return false;
                if (open == deficit) {
                    for (EdgeId e : g_.incident(static_cast<VertexId>(v)))
                        if (s.status[ix(e)] == kOpen && !set(s, e, kIn)) return false;
                    changed = true;
                }
            }
        }
        return true;
    }

    void recurse(State s) {
        if (out_.size() >= limit_) return;
        if (!propagate(s)) return;
        VertexId pick = -1;
        int slack = 0;
        for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
            int deficit = target_ - s.deg[v];
            if (deficit == 0) continue;
            int sl = open_count(s, static_cast<VertexId>(v)) - deficit;
            if (pick < 0 || sl < slack) {
                pick = static_cast<VertexId>(v);
                slack = sl;
            }
        }
        if (pick < 0) {
            EdgeSubset sub(g_.edge_count());
            for (std::size_t e = 0; e < g_.edge_count(); ++e)
                if (s.status[e] == kIn) sub.insert(static_cast<EdgeId>(e));
            out_.push_back(std::move(sub));
            return;
        }
        EdgeId branch = -1;
        for (EdgeId e : g_.incident(pick))
            if (s.status[ix(e)] == kOpen) {
                branch = e;
                break;
            }
        State with = s;
        if (set(with, branch, kIn)) recurse(std::move(with));
        if (set(s, branch, kOut)) recurse(std::move(s));
    }

    const Graph& g_;
    int target_;
    std::size_t limit_;
    std::vector<EdgeSubset> out_;
};

TwoFactor factor_from_edges(const Graph& g, const EdgeSubset& edges) {
    return TwoFactor{cycles_of_two_regular(g, edges)};
}

}  // namespace

std::vector<EdgeSubset> perfect_matchings(const Graph& g, std::size_t limit) {
    if (g.vertex_count() % 2 != 0) return {};
    return FactorEnumerator(g, 1, limit).run();
}

std::vector<TwoFactor> two_factors_generic(const Graph& g, std::size_t limit) {
    std::vector<TwoFactor> out;
    if (g.vertex_count() == 0) return out;
    for (const auto& s : FactorEnumerator(g, 2, limit).run()) out.push_back(factor_from_edges(g, s));
    return out;
}

std::vector<TwoFactor> two_factors(const Graph& g, std::size_t limit) {
    if (!is_cubic(g) || g.vertex_count() == 0) return two_factors_generic(g, limit);
    std::vector<TwoFactor> out;
    for (const auto& m : perfect_matchings(g, limit)) out.push_back(factor_from_edges(g, m.complement()));
    return out;
}

std::optional<TwoFactor> min_component_two_factor(const Graph& g, std::size_t limit) {
    std::optional<TwoFactor> best;
    std::vector<EdgeId> best_key;
    for (auto& f : two_factors(g, limit)) {
        auto key = f.sorted_edges();
        if (!best || f.component_count() < best->component_count() ||
            (f.component_count() == best->component_count() && key < best_key)) {
            best = std::move(f);
            best_key = std::move(key);
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Minimum vertex-disjoint cycle pair

namespace {

struct CycleRecord {
    std::uint64_t mask = 0;
    std::vector<EdgeId> sorted;
    std::vector<EdgeId> edges;  // traversal order, starting at the smallest vertex
};

// All cycles of exactly `len` edges whose smallest vertex is `start`, each once.
class FixedLengthCycles {
public:
    FixedLengthCycles(const Graph& g, NodeBudget& budget) : g_(g), budget_(budget) {}

    bool collect(VertexId start, int len, std::vector<CycleRecord>& out) {
        start_ = start;
        len_ = len;
        out_ = &out;
        path_edges_.clear();
        mask_ = std::uint64_t{1} << start;
        return dfs(start);
    }

private:
    bool dfs(VertexId v) {
        if (!budget_.spend()) return false;
        const int depth = static_cast<int>(path_edges_.size());
        for (EdgeId e : g_.incident(v)) {
            VertexId w = g_.other_end(e, v);
            if (depth == len_ - 1) {
                if (w == start_ && !path_edges_.empty() && e > path_edges_.front()) {
                    CycleRecord r;
                    r.mask = mask_;
                    r.edges = path_edges_;
                    r.edges.push_back(e);
                    r.sorted = r.edges;
                    std::sort(r.sorted.begin(), r.sorted.end());
                    out_->push_back(std::move(r));
                }
                continue;
            }
            if (w <= start_ || ((mask_ >> w) & 1u)) continue;
            path_edges_.push_back(e);
            mask_ |= std::uint64_t{1} << w;
            bool ok = dfs(w);
            mask_ &= ~(std::uint64_t{1} << w);
            path_edges_.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    const Graph& g_;
    NodeBudget& budget_;
    VertexId start_ = 0;
    int len_ = 0;
    std::vector<CycleRecord>* out_ = nullptr;
    std::vector<EdgeId> path_edges_;
    std::uint64_t mask_ = 0;
};

Cycle record_to_cycle(const Graph& g, const CycleRecord& r) { return cycle_from_edges(g, r.edges); }

}  // namespace

SearchResult<DisjointCyclePair> min_disjoint_cycle_pair(const Graph& g, std::uint64_t budget) {
    if (g.vertex_count() > 64) throw GraphError("min_disjoint_cycle_pair supports at most 64 vertices");
    SearchResult<DisjointCyclePair> out;
    auto gir = girth(g);
    if (!gir) return out;

    NodeBudget nodes(budget);
    FixedLengthCycles finder(g, nodes);
    // One representative (lexicographically smallest sorted ids) per vertex set.
    std::map<std::uint64_t, CycleRecord> reps;
    std::vector<std::vector<std::uint64_t>> masks_by_len(g.vertex_count() + 1);
    int best = -1;
    const int n = static_cast<int>(g.vertex_count());
    for (int len = *gir; len <= n; ++len) {
        if (best >= 0 && len + *gir > best) break;
        std::vector<CycleRecord> found;
        for (VertexId s = 0; s < n; ++s) {
            if (!finder.collect(s, len, found)) {
                out.status = SearchStatus::BudgetExhausted;
                out.nodes = nodes.used();
                return out;
            }
        }
        std::vector<std::uint64_t> fresh;
        for (auto& r : found) {
            auto it = reps.find(r.mask);
            if (it == reps.end()) {
                fresh.push_back(r.mask);
                reps.emplace(r.mask, std::move(r));
            } else if (r.sorted < it->second.sorted) {
                it->second = std::move(r);
            }
        }
        std::sort(fresh.begin(), fresh.end());
        masks_by_len[static_cast<std::size_t>(len)] = fresh;
        for (std::uint64_t m : fresh) {
            for (int l2 = *gir; l2 <= len; ++l2)
                for (std::uint64_t m2 : masks_by_len[static_cast<std::size_t>(l2)])
                    if ((m & m2) == 0 && (best < 0 || len + l2 < best)) best = len + l2;
        }
    }
    out.nodes = nodes.used();
    if (best < 0) return out;

    // Deterministic choice among optimal pairs: smallest first cycle, then second.
    const CycleRecord* first = nullptr;
    const CycleRecord* second = nullptr;
    for (int l1 = *gir; 2 * l1 <= best; ++l1) {
        int l2 = best - l1;
        if (l2 > n) continue;
        for (std::uint64_t a : masks_by_len[static_cast<std::size_t>(l1)])
            for (std::uint64_t b : masks_by_len[static_cast<std::size_t>(l2)]) {
                if ((a & b) != 0) continue;
                const CycleRecord* x = &reps.at(a);
                const CycleRecord* y = &reps.at(b);
                if (y->sorted < x->sorted) std::swap(x, y);
                if (!first || x->sorted < first->sorted || (x->sorted == first->sorted && y->sorted < second->sorted)) {
                    first = x;
                    second = y;
                }
            }
    }
    DisjointCyclePair pair;
    pair.first = record_to_cycle(g, *first);
    pair.second = record_to_cycle(g, *second);
    pair.total_length = best;
    out.status = SearchStatus::Found;
    out.value = std::move(pair);
    return out;
}

}  // namespace freeness
