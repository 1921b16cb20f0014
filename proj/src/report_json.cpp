#include "freeness/report_json.hpp"

#include "freeness/io.hpp"

namespace freeness {

using nlohmann::json;

std::string_view tool_version() { return "0.1.0"; }

namespace {

json cycle_json(const Cycle& c) { return {{"edges", c.edges}, {"vertices", c.vertices}}; }

Cycle cycle_from(const json& j) {
    Cycle c;
    c.edges = j.at("edges").get<std::vector<EdgeId>>();
    c.vertices = j.at("vertices").get<std::vector<VertexId>>();
    return c;
}

json factor_json(const TwoFactor& f) {
    json cycles = json::array();
    for (const auto& c : f.cycles) cycles.push_back(cycle_json(c));
    return {{"components", f.component_count()}, {"cycles", cycles}};
}

TwoFactor factor_from(const json& j) {
    TwoFactor f;
    for (const auto& c : j.at("cycles")) f.cycles.push_back(cycle_from(c));
    return f;
}

json model_json(const MinorModel& m, std::size_t pattern_vertices) {
    json branch_sets = json::array();
    for (std::size_t p = 0; p < pattern_vertices; ++p) {
        json set = json::array();
        for (std::size_t v = 0; v < m.branch_of.size(); ++v)
            if (m.branch_of[v] == static_cast<int>(p)) set.push_back(v);
        branch_sets.push_back(set);
    }
    return {{"branch_sets", branch_sets}, {"edge_realizers", m.edge_realizer}};
}

MinorModel model_from(const json& j, std::size_t host_vertices) {
    MinorModel m;
    m.branch_of.assign(host_vertices, -1);
    const auto& sets = j.at("branch_sets");
    for (std::size_t p = 0; p < sets.size(); ++p) {
        for (const auto& v : sets[p]) {
            auto vi = v.get<std::size_t>();
            if (vi >= host_vertices || m.branch_of[vi] != -1) throw ParseError("bad branch set");
            m.branch_of[vi] = static_cast<int>(p);
        }
    }
    m.edge_realizer = j.at("edge_realizers").get<std::vector<EdgeId>>();
    return m;
}

SearchStatus status_from(std::string_view s) {
    for (auto st : {SearchStatus::Found, SearchStatus::NotFound, SearchStatus::BudgetExhausted})
        if (to_string(st) == s) return st;
    throw ParseError("unknown search status '" + std::string(s) + "'");
}

struct CertificateWriter {
    const Graph& g;

    json operator()(const cert::Connected&) const { return json::object(); }
    json operator()(const cert::TwoComponentFactor& c) const { return {{"two_factor", factor_json(c.factor)}}; }
    json operator()(const cert::FewComponentFactor& c) const { return {{"two_factor", factor_json(c.factor)}}; }
    json operator()(const cert::Hamiltonian& c) const { return {{"cycle", cycle_json(c.cycle)}}; }
    json operator()(const cert::Strong& c) const {
        return {{"genus", c.genus}, {"rotation", format_rotation(c.rotation)}};
    }
    json operator()(const cert::Polyhedral& c) const {
        return {{"genus", c.genus}, {"rotation", format_rotation(c.rotation)}};
    }
    json operator()(const cert::Linkless& c) const {
        json refutations = json::array();
        for (const auto& r : c.refutations)
            refutations.push_back({{"member", r.member},
                                   {"status", to_string(r.status)},
                                   {"nodes", r.nodes},
                                   {"filtered", r.filtered}});
        return {{"refutations", refutations}};
    }
    json operator()(const cert::Link& c) const {
        const auto& member = petersen_family().at(static_cast<std::size_t>(c.member));
        return {{"generalized", true},
                {"member", member.name},
                {"member_index", c.member},
                {"minor_model", model_json(c.model, member.graph.vertex_count())},
                {"pair",
                 {{"first", cycle_json(c.pair.first)},
                  {"second", cycle_json(c.pair.second)},
                  {"total_length", c.pair.total_length}}}};
    }
    json operator()(const cert::Trivial&) const { return json::object(); }
};

json outcome_json(const RuleOutcome& o) {
    json j = {{"rule", to_string(o.rule)},
              {"kind", is_upper_rule(o.rule) ? "upper" : "lower"},
              {"status", to_string(o.status)},
              {"nodes", o.nodes}};
    j["bound"] = o.bound ? json(*o.bound) : json(nullptr);
    if (!o.note.empty()) j["note"] = o.note;
    return j;
}

}  // namespace

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    json j = {{"vertex_count", g.vertex_count()}, {"edges", edges}};
    if (g.is_simple()) j["graph6"] = encode_graph6(g);
    return j;
}

Graph graph_from_json(const json& j) {
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>()});
        return Graph(j.at("vertex_count").get<std::size_t>(), std::move(edges));
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph document: ") + e.what());
    } catch (const GraphError& e) {
        throw ParseError(std::string("graph document: ") + e.what());
    }
}

json to_json(const Graph& g, const Bound& b) {
    return {{"value", b.value}, {"rule", to_string(b.rule())}, {"certificate", std::visit(CertificateWriter{g}, b.certificate)}};
}

Bound bound_from_json(const Graph& g, const json& j) {
    try {
        Bound b;
        b.value = j.at("value").get<int>();
        auto rule = rule_from_string(j.at("rule").get<std::string>());
        if (!rule) throw ParseError("unknown rule '" + j.at("rule").get<std::string>() + "'");
        const json& c = j.at("certificate");
        switch (*rule) {
            case Rule::R1: b.certificate = cert::Connected{}; break;
            case Rule::R2F2: b.certificate = cert::TwoComponentFactor{factor_from(c.at("two_factor"))}; break;
            case Rule::R2F34: b.certificate = cert::FewComponentFactor{factor_from(c.at("two_factor"))}; break;
            case Rule::R3Ham: b.certificate = cert::Hamiltonian{cycle_from(c.at("cycle"))}; break;
            case Rule::R2Strong:
                b.certificate = cert::Strong{parse_rotation(g, c.at("rotation").get<std::string>()), c.at("genus").get<int>()};
                break;
            case Rule::R2Poly:
                b.certificate =
                    cert::Polyhedral{parse_rotation(g, c.at("rotation").get<std::string>()), c.at("genus").get<int>()};
                break;
            case Rule::RFull: {
                cert::Linkless l;
                for (const auto& r : c.at("refutations")) {
                    MemberOutcome o;
                    o.member = r.at("member").get<std::string>();
                    o.status = status_from(r.at("status").get<std::string>());
                    o.nodes = r.at("nodes").get<std::uint64_t>();
                    o.filtered = r.at("filtered").get<bool>();
                    l.refutations.push_back(std::move(o));
                }
                b.certificate = std::move(l);
                break;
            }
            case Rule::ULink: {
                cert::Link l;
                l.member = c.at("member_index").get<int>();
                l.model = model_from(c.at("minor_model"), g.vertex_count());
                const json& p = c.at("pair");
                l.pair.first = cycle_from(p.at("first"));
                l.pair.second = cycle_from(p.at("second"));
                l.pair.total_length = p.at("total_length").get<int>();
                b.certificate = std::move(l);
                break;
            }
            case Rule::UTrivial: b.certificate = cert::Trivial{}; break;
        }
        return b;
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
}

json to_json(const Graph& g, const BoundReport& r, const ReportContext& ctx) {
    const auto& s = r.summary;
    json rules = json::array();
    for (const auto& o : r.rules) rules.push_back(outcome_json(o));
    json budgets = {{"nodes", r.budgets.nodes}, {"two_factor_limit", r.budgets.two_factor_limit}};
    budgets["max_genus"] =
        r.budgets.max_genus == std::numeric_limits<int>::max() ? json(nullptr) : json(r.budgets.max_genus);

    json j = {
        {"schema_version", kReportSchemaVersion},
        {"tool", {{"name", "freeness"}, {"version", tool_version()}}},
        {"input", ctx.input},
        {"graph", to_json(g)},
        {"stats",
         {{"vertices", s.vertices},
          {"edges", s.edges},
          {"cubic", s.cubic},
          {"connected", s.connected},
          {"bridgeless", s.bridgeless},
          {"three_connected", s.three_connected},
          {"girth", s.girth ? json(*s.girth) : json(nullptr)}}},
        {"rules", rules},
        {"lower", to_json(g, r.lower)},
        {"upper", to_json(g, r.upper)},
        {"index_interval", {r.lower.value, r.upper.value}},
        {"class_interval", {r.class_low(), r.class_high()}},
        {"determined", r.determined()},
        {"status", r.complete() ? "complete" : "partial"},
        {"budgets", budgets},
        {"notes", r.notes},
    };
    if (ctx.wall_time_ms) j["wall_time_ms"] = *ctx.wall_time_ms;
    return j;
}

json to_json(const Graph& g, const ConjectureScan& s) {
    json j = {{"verdict", to_string(s.verdict)}};
    if (s.certificate)
        j["certificate"] = to_json(g, *s.certificate);
    else
        j["strong_search"] = to_string(s.strong_search);
    return j;
}

}  // namespace freeness
