#include "freeness/named.hpp"

#include "freeness/minor.hpp"

#include <charconv>

namespace freeness {

namespace {

struct FamilyName {
    NamedFamily family;
    std::string_view name;
    std::size_t arity;
};

constexpr FamilyName kNames[] = {
    {NamedFamily::Complete, "complete", 1},        {NamedFamily::CompleteBipartite, "complete-bipartite", 2},
    {NamedFamily::Cycle, "cycle", 1},              {NamedFamily::Petersen, "petersen", 0},
    {NamedFamily::FlowerSnark, "flower-snark", 1}, {NamedFamily::Prism, "prism", 1},
    {NamedFamily::PetersenFamily, "petersen-family", 1},
};

constexpr int kMaxParam = 64;

Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace

std::string NamedGraphSpec::to_string() const {
    std::string out;
    for (const auto& f : kNames)
        if (f.family == family) out = std::string(f.name);
    for (std::size_t i = 0; i < params.size(); ++i) out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
    return out;
}

NamedGraphSpec parse_named_spec(std::string_view text) {
    auto colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    const FamilyName* match = nullptr;
    for (const auto& f : kNames)
        if (f.name == name) match = &f;
    if (!match) throw GraphError("unknown graph family '" + std::string(name) + "'");

    NamedGraphSpec spec{match->family, {}};
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            auto comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
                throw GraphError("bad parameter '" + std::string(tok) + "'");
            spec.params.push_back(value);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    if (spec.params.size() != match->arity)
        throw GraphError(std::string(name) + " takes " + std::to_string(match->arity) + " parameter(s)");
    for (int p : spec.params)
        if (p > kMaxParam) throw GraphError("parameter exceeds " + std::to_string(kMaxParam));
    return spec;
}

Graph build_named(const NamedGraphSpec& spec) {
    const auto& p = spec.params;
    std::vector<Edge> edges;
    switch (spec.family) {
        case NamedFamily::Complete: {
            if (p[0] < 1) throw GraphError("complete graph needs n >= 1");
            for (int u = 0; u < p[0]; ++u)
                for (int v = u + 1; v < p[0]; ++v) edges.push_back({u, v});
            return Graph(static_cast<std::size_t>(p[0]), std::move(edges));
        }
        case NamedFamily::CompleteBipartite: {
            if (p[0] < 1 || p[1] < 1) throw GraphError("complete bipartite graph needs a, b >= 1");
            for (int u = 0; u < p[0]; ++u)
                for (int v = 0; v < p[1]; ++v) edges.push_back({u, p[0] + v});
            return Graph(static_cast<std::size_t>(p[0] + p[1]), std::move(edges));
        }
        case NamedFamily::Cycle:
            if (p[0] < 3) throw GraphError("cycle needs n >= 3");
            return cycle(p[0]);
        case NamedFamily::Petersen: {
            for (int i = 0; i < 5; ++i) {
                edges.push_back({i, (i + 1) % 5});
                edges.push_back({i, i + 5});
                edges.push_back({5 + i, 5 + (i + 2) % 5});
            }
            return Graph(10, std::move(edges));
        }
        case NamedFamily::FlowerSnark: {
            const int k = p[0];
            if (k < 3 || k % 2 == 0) throw GraphError("flower snark needs an odd k >= 3");
            auto a = [k](int i) { return i % k; };
            auto b = [k](int i) { return k + i % k; };
            auto c = [k](int i) { return 2 * k + i % k; };
            auto d = [k](int i) { return 3 * k + i % k; };
            for (int i = 0; i < k; ++i) {
                edges.push_back({a(i), b(i)});
                edges.push_back({a(i), c(i)});
                edges.push_back({a(i), d(i)});
            }
            for (int i = 0; i < k; ++i) edges.push_back({b(i), b(i + 1)});
            for (int i = 0; i + 1 < k; ++i) edges.push_back({c(i), c(i + 1)});
            edges.push_back({c(k - 1), d(0)});
            for (int i = 0; i + 1 < k; ++i) edges.push_back({d(i), d(i + 1)});
            edges.push_back({d(k - 1), c(0)});
            return Graph(static_cast<std::size_t>(4 * k), std::move(edges));
        }
        case NamedFamily::Prism: {
            const int n = p[0];
            if (n < 3) throw GraphError("prism needs n >= 3");
            for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
            for (int i = 0; i < n; ++i) edges.push_back({n + i, n + (i + 1) % n});
            for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
            return Graph(static_cast<std::size_t>(2 * n), std::move(edges));
        }
        case NamedFamily::PetersenFamily: {
            const auto& family = petersen_family();
            if (p[0] < 0 || static_cast<std::size_t>(p[0]) >= family.size())
                throw GraphError("petersen-family index must be in 0..6");
            return family[static_cast<std::size_t>(p[0])].graph;
        }
    }
    throw GraphError("unhandled family");
}

Graph build_named(std::string_view text) { return build_named(parse_named_spec(text)); }

std::vector<NamedFamilyInfo> named_catalog() {
    return {
        {"complete:N", "complete graph K_N"},
        {"complete-bipartite:A,B", "complete bipartite graph K_{A,B}"},
        {"cycle:N", "cycle C_N (N >= 3)"},
        {"petersen", "the Petersen graph"},
        {"flower-snark:K", "flower snark J_K (K odd, K >= 3): 4K vertices, 6K edges"},
        {"prism:N", "prism C_N x K_2 (N >= 3)"},
        {"petersen-family:I", "member I (0..6) of the Petersen family, ordered by vertex count"},
    };
}

}  // namespace freeness
