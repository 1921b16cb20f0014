#include "freeness/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace freeness {

namespace {

std::size_t ix(int v) { return static_cast<std::size_t>(v); }

}  // namespace

RotationSystem::RotationSystem(const Graph& g, std::vector<std::vector<Dart>> orders) : orders_(std::move(orders)) {
    if (orders_.size() != g.vertex_count()) throw EmbeddingError("rotation lists " + std::to_string(orders_.size()) +
                                                                 " vertices, graph has " + std::to_string(g.vertex_count()));
    const std::size_t darts = 2 * g.edge_count();
    succ_.assign(darts, -1);
    std::vector<bool> seen(darts, false);
    for (std::size_t v = 0; v < orders_.size(); ++v) {
        const auto& order = orders_[v];
        if (order.size() != g.degree(static_cast<VertexId>(v)))
            throw EmbeddingError("vertex " + std::to_string(v) + " lists " + std::to_string(order.size()) +
                                 " darts, degree is " + std::to_string(g.degree(static_cast<VertexId>(v))));
        for (std::size_t i = 0; i < order.size(); ++i) {
            Dart d = order[i];
            if (d < 0 || ix(d) >= darts) throw EmbeddingError("dart " + std::to_string(d) + " out of range");
            if (seen[ix(d)]) throw EmbeddingError("dart " + std::to_string(dart_edge(d)) + "." + std::to_string(dart_end(d)) + " listed twice");
            if (dart_vertex(g, d) != static_cast<VertexId>(v))
                throw EmbeddingError("dart " + std::to_string(dart_edge(d)) + "." + std::to_string(dart_end(d)) +
                                     " does not sit at vertex " + std::to_string(v));
            seen[ix(d)] = true;
            succ_[ix(d)] = order[(i + 1) % order.size()];
        }
    }
}

RotationSystem RotationSystem::identity(const Graph& g) {
    std::vector<std::vector<Dart>> orders(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        orders[ix(ed.u)].push_back(make_dart(static_cast<EdgeId>(e), 0));
        orders[ix(ed.v)].push_back(make_dart(static_cast<EdgeId>(e), 1));
    }
    return RotationSystem(g, std::move(orders));
}

std::string format_rotation(const RotationSystem& rot) {
    std::ostringstream out;
    for (std::size_t v = 0; v < rot.vertex_count(); ++v) {
        out << v << ':';
        for (Dart d : rot.at(static_cast<VertexId>(v))) out << ' ' << dart_edge(d) << '.' << dart_end(d);
        out << '\n';
    }
    return out.str();
}

RotationSystem parse_rotation(const Graph& g, std::string_view text) {
    std::vector<std::vector<Dart>> orders(g.vertex_count());
    std::vector<bool> listed(g.vertex_count(), false);
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& what) { throw EmbeddingError("line " + std::to_string(line_no) + ": " + what); };
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) fail("expected 'v: darts'");
        long v = -1;
        try {
            std::size_t used = 0;
            v = std::stol(line.substr(first, colon - first), &used);
            if (line.substr(first, colon - first).find_first_not_of(" \t", used) != std::string::npos) fail("bad vertex");
        } catch (const std::logic_error&) {
            fail("bad vertex");
        }
        if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) fail("vertex out of range");
        if (listed[ix(static_cast<int>(v))]) fail("vertex listed twice");
        listed[ix(static_cast<int>(v))] = true;
        std::istringstream darts(line.substr(colon + 1));
        std::string tok;
        while (darts >> tok) {
            auto dot = tok.find('.');
            if (dot == std::string::npos) fail("dart '" + tok + "' is not edge.end");
            int e = -1, end = -1;
            auto r1 = std::from_chars(tok.data(), tok.data() + dot, e);
            auto r2 = std::from_chars(tok.data() + dot + 1, tok.data() + tok.size(), end);
            if (r1.ec != std::errc() || r1.ptr != tok.data() + dot || r2.ec != std::errc() ||
                r2.ptr != tok.data() + tok.size() || (end != 0 && end != 1) || e < 0 ||
                static_cast<std::size_t>(e) >= g.edge_count())
                fail("bad dart '" + tok + "'");
            orders[ix(static_cast<int>(v))].push_back(make_dart(e, end));
        }
    }
    return RotationSystem(g, std::move(orders));
}

namespace {

int euler_genus(const Graph& g, std::size_t faces) {
    if (g.edge_count() == 0) return 0;
    long chi = static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) + static_cast<long>(faces);
    long twice = 2 - chi;
    if (twice < 0 || twice % 2 != 0) throw EmbeddingError("Euler characteristic inconsistent; is the graph connected?");
    return static_cast<int>(twice / 2);
}

}  // namespace

FaceSet trace_faces(const Graph& g, const RotationSystem& rot) {
    if (rot.vertex_count() != g.vertex_count()) throw EmbeddingError("rotation does not match graph");
    if (!is_connected(g)) throw EmbeddingError("face tracing needs a connected graph");
    const std::size_t darts = 2 * g.edge_count();
    std::vector<bool> used(darts, false);
    FaceSet out;
    for (std::size_t start = 0; start < darts; ++start) {
        if (used[start]) continue;
        std::vector<Dart> walk;
        Dart d = static_cast<Dart>(start);
        do {
            used[ix(d)] = true;
            walk.push_back(d);
            d = rot.successor(partner(d));
        } while (d != static_cast<Dart>(start));
        out.walks.push_back(std::move(walk));
    }
    out.genus = euler_genus(g, out.walks.size());
    return out;
}

bool is_strong(const Graph& g, const FaceSet& faces) {
    std::vector<int> vstamp(g.vertex_count(), -1), estamp(g.edge_count(), -1);
    for (std::size_t f = 0; f < faces.walks.size(); ++f) {
        for (Dart d : faces.walks[f]) {
            auto v = ix(dart_vertex(g, d));
            auto e = ix(dart_edge(d));
            if (vstamp[v] == static_cast<int>(f) || estamp[e] == static_cast<int>(f)) return false;
            vstamp[v] = estamp[e] = static_cast<int>(f);
        }
    }
    return true;
}

bool is_strong(const Graph& g, const RotationSystem& rot) { return is_strong(g, trace_faces(g, rot)); }

bool is_polyhedral(const Graph& g, const FaceSet& faces) {
    if (!is_cubic(g)) throw GraphError("polyhedrality is defined for cubic graphs");
    if (!is_strong(g, faces)) return false;
    const std::size_t nf = faces.walks.size();
    std::vector<std::vector<VertexId>> verts(nf);
    std::vector<std::vector<EdgeId>> edges(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        for (Dart d : faces.walks[f]) {
            verts[f].push_back(dart_vertex(g, d));
            edges[f].push_back(dart_edge(d));
        }
        std::sort(verts[f].begin(), verts[f].end());
        std::sort(edges[f].begin(), edges[f].end());
    }
    auto overlap = [](const auto& a, const auto& b) {
        std::size_t i = 0, j = 0, n = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (b[j] < a[i]) ++j;
            else ++n, ++i, ++j;
        }
        return n;
    };
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t h = f + 1; h < nf; ++h) {
            std::size_t sv = overlap(verts[f], verts[h]);
            std::size_t se = overlap(edges[f], edges[h]);
            bool ok = (se == 0 && sv <= 1) || (se == 1 && sv == 2);
            if (!ok) return false;
        }
    return true;
}

bool is_polyhedral(const Graph& g, const RotationSystem& rot) { return is_polyhedral(g, trace_faces(g, rot)); }

CycleDoubleCover cdc_from_faces(const Graph& g, const FaceSet& faces) {
    if (!is_strong(g, faces)) throw EmbeddingError("facial walks of a non-strong embedding are not cycles");
    CycleDoubleCover out;
    for (const auto& walk : faces.walks) {
        Cycle c;
        for (Dart d : walk) {
            c.vertices.push_back(dart_vertex(g, d));
            c.edges.push_back(dart_edge(d));
        }
        out.cycles.push_back(std::move(c));
    }
    return out;
}

bool verify_cdc(const Graph& g, const CycleDoubleCover& cdc) {
    std::vector<int> count(g.edge_count(), 0);
    for (const auto& c : cdc.cycles) {
        if (!is_valid_cycle(g, c)) return false;
        for (EdgeId e : c.edges) ++count[ix(e)];
    }
    return std::all_of(count.begin(), count.end(), [](int k) { return k == 2; });
}

std::uint64_t rotation_space_size(const Graph& g) {
    std::uint64_t total = 1;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (std::uint64_t k = 2; k < g.degree(static_cast<VertexId>(v)); ++k) {
            if (total > cap / k) return cap;
            total *= k;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Search

namespace {

enum class Target { Strong, Polyhedral };

// Candidate cyclic orders per vertex: first dart fixed, remaining darts permuted.
std::vector<std::vector<std::vector<Dart>>> vertex_choices(const Graph& g) {
    std::vector<std::vector<std::vector<Dart>>> out(g.vertex_count());
    const auto base = RotationSystem::identity(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<Dart> darts = base.at(static_cast<VertexId>(v));
        if (darts.size() <= 2) {
            out[v].push_back(darts);
            continue;
        }
        std::vector<Dart> rest(darts.begin() + 1, darts.end());
        do {
            std::vector<Dart> order{darts.front()};
            order.insert(order.end(), rest.begin(), rest.end());
            out[v].push_back(std::move(order));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

class Evaluator {
public:
    explicit Evaluator(const Graph& g)
        : g_(g), darts_(2 * g.edge_count()), tail_(darts_), succ_(darts_, -1), used_(darts_, 0), vstamp_(g.vertex_count(), 0) {
        for (std::size_t d = 0; d < darts_; ++d) tail_[d] = dart_vertex(g, static_cast<Dart>(d));
    }

    void set_order(const std::vector<Dart>& order) {
        for (std::size_t i = 0; i < order.size(); ++i) succ_[ix(order[i])] = order[(i + 1) % order.size()];
    }

    struct Result {
        std::size_t faces = 0;
        int repeats = 0;  // vertex repetitions inside facial walks; 0 iff strong
    };

    Result evaluate() {
        Result r;
        ++epoch_;
        for (std::size_t s = 0; s < darts_; ++s) {
            if (used_[s] == epoch_) continue;
            ++r.faces;
            ++stamp_;
            Dart d = static_cast<Dart>(s);
            do {
                used_[ix(d)] = epoch_;
                auto v = ix(tail_[ix(d)]);
                if (vstamp_[v] == stamp_) ++r.repeats;
                vstamp_[v] = stamp_;
                d = succ_[ix(partner(d))];
            } while (d != static_cast<Dart>(s));
        }
        return r;
    }

    // Pairs of faces sharing two or more edges (cubic strong embeddings: polyhedral iff 0).
    int multiple_adjacencies() {
        std::vector<int> face_of(darts_, -1);
        int f = 0;
        for (std::size_t s = 0; s < darts_; ++s) {
            if (face_of[s] >= 0) continue;
            Dart d = static_cast<Dart>(s);
            do {
                face_of[ix(d)] = f;
                d = succ_[ix(partner(d))];
            } while (d != static_cast<Dart>(s));
            ++f;
        }
        std::map<std::pair<int, int>, int> shared;
        int bad = 0;
        for (std::size_t e = 0; e < darts_ / 2; ++e) {
            int a = face_of[2 * e], b = face_of[2 * e + 1];
            if (a == b) {
                ++bad;
                continue;
            }
            if (++shared[{std::min(a, b), std::max(a, b)}] == 2) ++bad;
        }
        return bad;
    }

    const std::vector<Dart>& succ() const { return succ_; }

private:
    const Graph& g_;
    std::size_t darts_;
    std::vector<VertexId> tail_;
    std::vector<Dart> succ_;
    std::vector<unsigned> used_;
    std::vector<unsigned> vstamp_;
    unsigned epoch_ = 0;
    unsigned stamp_ = 0;
};

int genus_of(const Graph& g, std::size_t faces) { return euler_genus(g, faces); }

bool accepts(const Graph& g, Target target, const std::vector<std::vector<Dart>>& orders) {
    RotationSystem rot(g, orders);
    auto faces = trace_faces(g, rot);
    return target == Target::Strong ? is_strong(g, faces) : is_polyhedral(g, faces);
}

struct Best {
    bool found = false;
    int genus = 0;
    std::uint64_t index = 0;
    std::vector<std::uint32_t> digits;
};

// Enumerates rotation indices [begin, end) in lexicographic digit order (vertex 0 most significant).
Best enumerate_range(const Graph& g, const std::vector<std::vector<std::vector<Dart>>>& choices, Target target,
                     int max_genus, std::uint64_t begin, std::uint64_t end) {
    Best best;
    if (begin >= end) return best;
    const std::size_t n = choices.size();
    std::vector<std::uint32_t> digits(n, 0);
    {
        std::uint64_t rem = begin;
        for (std::size_t v = n; v-- > 0;) {
            digits[v] = static_cast<std::uint32_t>(rem % choices[v].size());
            rem /= choices[v].size();
        }
    }
    Evaluator ev(g);
    for (std::size_t v = 0; v < n; ++v) ev.set_order(choices[v][digits[v]]);
    for (std::uint64_t index = begin; index < end; ++index) {
        auto r = ev.evaluate();
        if (r.repeats == 0) {
            int genus = genus_of(g, r.faces);
            bool better = !best.found || genus < best.genus;
            if (better && genus <= max_genus && (target == Target::Strong || ev.multiple_adjacencies() == 0)) {
                best = {true, genus, index, digits};
                if (genus == 0) break;
            }
        }
        for (std::size_t v = n; v-- > 0;) {
            if (++digits[v] < choices[v].size()) {
                ev.set_order(choices[v][digits[v]]);
                break;
            }
            digits[v] = 0;
            ev.set_order(choices[v][0]);
        }
    }
    return best;
}

RotationSystem rotation_from_digits(const Graph& g, const std::vector<std::vector<std::vector<Dart>>>& choices,
                                    const std::vector<std::uint32_t>& digits) {
    std::vector<std::vector<Dart>> orders(choices.size());
    for (std::size_t v = 0; v < choices.size(); ++v) orders[v] = choices[v][digits[v]];
    return RotationSystem(g, std::move(orders));
}

SearchResult<EmbeddingCertificate> exhaustive(const Graph& g, Target target, int max_genus, std::uint64_t budget,
                                              std::uint64_t space) {
    SearchResult<EmbeddingCertificate> out;
    const auto choices = vertex_choices(g);
    const std::uint64_t end = std::min(space, budget);
    Best best;
    const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    if (workers > 1 && end >= (std::uint64_t{1} << 14)) {
        std::vector<Best> partial(workers);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (end + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                partial[w] = enumerate_range(g, choices, target, max_genus, std::min(end, w * chunk),
                                             std::min(end, (w + 1) * chunk));
            });
        for (auto& t : pool) t.join();
        for (auto& p : partial)
            if (p.found && (!best.found || p.genus < best.genus || (p.genus == best.genus && p.index < best.index))) best = p;
    } else {
        best = enumerate_range(g, choices, target, max_genus, 0, end);
    }
    out.nodes = end;
    if (best.found) {
        out.status = SearchStatus::Found;
        out.value = EmbeddingCertificate{rotation_from_digits(g, choices, best.digits), best.genus};
    } else {
        out.status = end < space ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
    }
    return out;
}

SearchResult<EmbeddingCertificate> randomized(const Graph& g, Target target, int max_genus, std::uint64_t budget) {
    SearchResult<EmbeddingCertificate> out;
    out.status = SearchStatus::BudgetExhausted;
    const auto choices = vertex_choices(g);
    const std::size_t n = choices.size();
    std::vector<std::size_t> movable;
    for (std::size_t v = 0; v < n; ++v)
        if (choices[v].size() > 1) movable.push_back(v);
    if (movable.empty()) return out;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (g.vertex_count() * 1315423911ull) ^ g.edge_count());
    Evaluator ev(g);
    std::vector<std::uint32_t> digits(n, 0);
    auto score = [&](const Evaluator::Result& r) {
        long s = 4L * r.repeats;
        long genus2 = 2 - static_cast<long>(g.vertex_count()) + static_cast<long>(g.edge_count()) - static_cast<long>(r.faces);
        long excess = genus2 / 2 - max_genus;
        if (excess > 0) s += 2 * excess;
        if (target == Target::Polyhedral && r.repeats == 0) s += ev.multiple_adjacencies();
        return s;
    };
    const std::uint64_t restart_every = std::max<std::uint64_t>(2000, 200 * n);
    std::uint64_t used = 0;
    while (used < budget) {
        for (std::size_t v = 0; v < n; ++v) {
            digits[v] = static_cast<std::uint32_t>(rng() % choices[v].size());
            ev.set_order(choices[v][digits[v]]);
        }
        long current = score(ev.evaluate());
        ++used;
        for (std::uint64_t step = 0; step < restart_every && used < budget; ++step) {
            if (current == 0) break;
            std::size_t v = movable[rng() % movable.size()];
            std::uint32_t old = digits[v];
            std::uint32_t next = static_cast<std::uint32_t>(rng() % (choices[v].size() - 1));
            if (next >= old) ++next;
            digits[v] = next;
            ev.set_order(choices[v][next]);
            long s = score(ev.evaluate());
            ++used;
            // accept improvements and sideways moves, occasionally a worse one
            if (s <= current || rng() % 64 == 0) {
                current = s;
            } else {
                digits[v] = old;
                ev.set_order(choices[v][old]);
            }
        }
        if (current == 0) {
            auto rot = rotation_from_digits(g, choices, digits);
            auto faces = trace_faces(g, rot);
            if (faces.genus <= max_genus && accepts(g, target, rot.orders())) {
                out.status = SearchStatus::Found;
                out.value = EmbeddingCertificate{std::move(rot), faces.genus};
                break;
            }
        }
    }
    out.nodes = used;
    return out;
}

SearchResult<EmbeddingCertificate> search(const Graph& g, Target target, int max_genus, std::uint64_t budget) {
    if (!is_connected(g)) throw GraphError("embedding search needs a connected graph");
    if (g.edge_count() == 0) {
        SearchResult<EmbeddingCertificate> out;
        out.status = SearchStatus::Found;
        out.value = EmbeddingCertificate{RotationSystem::identity(g), 0};
        return out;
    }
    const std::uint64_t space = rotation_space_size(g);
    if (space <= kExhaustiveRotationLimit) return exhaustive(g, target, max_genus, budget, space);
    return randomized(g, target, max_genus, budget);
}

}  // namespace

SearchResult<EmbeddingCertificate> search_strong_embedding(const Graph& g, int max_genus, std::uint64_t budget) {
    return search(g, Target::Strong, max_genus, budget);
}

SearchResult<EmbeddingCertificate> search_polyhedral_embedding(const Graph& g, std::uint64_t budget) {
    if (!is_cubic(g)) throw GraphError("polyhedral embedding search needs a cubic graph");
    return search(g, Target::Polyhedral, std::numeric_limits<int>::max(), budget);
}

}  // namespace freeness
