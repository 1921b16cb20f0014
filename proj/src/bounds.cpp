#include "freeness/bounds.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <set>

namespace freeness {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 9> kRuleNames{{
    {Rule::R1, "R1"},
    {Rule::RFull, "R-Full"},
    {Rule::R2F2, "R2-F2"},
    {Rule::R2F34, "R2-F34"},
    {Rule::R3Ham, "R3-Ham"},
    {Rule::R2Strong, "R2-Strong"},
    {Rule::R2Poly, "R2-Poly"},
    {Rule::ULink, "U-Link"},
    {Rule::UTrivial, "U-Trivial"},
}};

const char* const kLinkNote =
    "U-Link extends the linking argument for K6 and the Petersen graph to every intrinsically linked graph";
const char* const kStrongScopeNote =
    "R2-Strong applied to a non-cubic graph; the strong-embedding rule is only established for cubic graphs";

std::size_t simple_edge_count(const Graph& g) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : g.edges()) pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    return pairs.size();
}

int edge_total(const Graph& g) { return static_cast<int>(g.edge_count()); }

}  // namespace

std::string_view to_string(Rule r) {
    for (const auto& [rule, name] : kRuleNames)
        if (rule == r) return name;
    return "?";
}

std::optional<Rule> rule_from_string(std::string_view s) {
    for (const auto& [rule, name] : kRuleNames)
        if (name == s) return rule;
    return std::nullopt;
}

bool is_upper_rule(Rule r) { return r == Rule::ULink || r == Rule::UTrivial; }

std::string_view to_string(RuleStatus s) {
    switch (s) {
        case RuleStatus::Applied: return "applied";
        case RuleStatus::Inapplicable: return "inapplicable";
        case RuleStatus::Unknown: return "unknown";
        case RuleStatus::Skipped: return "skipped";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Flag: return "flag";
        case Verdict::Clear: return "clear";
        case Verdict::Undetermined: return "undetermined";
    }
    return "?";
}

Rule rule_of(const Certificate& c) {
    constexpr std::array<Rule, 9> by_index{Rule::R1,     Rule::R2F2,   Rule::R2F34, Rule::R3Ham,    Rule::R2Strong,
                                           Rule::R2Poly, Rule::RFull,  Rule::ULink, Rule::UTrivial};
    return by_index[c.index()];
}

GraphSummary summarize(const Graph& g) {
    GraphSummary s;
    s.vertices = g.vertex_count();
    s.edges = g.edge_count();
    s.cubic = is_cubic(g);
    s.connected = is_connected(g);
    s.bridgeless = is_bridgeless(g);
    s.three_connected = vertex_connectivity_at_least(g, 3);
    s.girth = girth(g);
    return s;
}

bool BoundReport::complete() const {
    return std::none_of(rules.begin(), rules.end(), [](const RuleOutcome& o) { return o.status == RuleStatus::Unknown; });
}

const RuleOutcome& BoundReport::outcome(Rule r) const {
    for (const auto& o : rules)
        if (o.rule == r) return o;
    throw std::out_of_range("rule missing from report");
}

// ---------------------------------------------------------------------------
// Verification

namespace {

bool cycles_disjoint(const Cycle& a, const Cycle& b) {
    for (VertexId v : a.vertices)
        if (std::find(b.vertices.begin(), b.vertices.end(), v) != b.vertices.end()) return false;
    return true;
}

struct Verifier {
    const Graph& g;
    int value;

    bool operator()(const cert::Connected&) const { return g.edge_count() > 0 && is_connected(g) && value == 1; }
    bool operator()(const cert::TwoComponentFactor& c) const {
        return value == 2 && is_cubic(g) && is_connected(g) && is_two_factor(g, c.factor) && c.factor.component_count() == 2;
    }
    bool operator()(const cert::FewComponentFactor& c) const {
        auto k = c.factor.component_count();
        return value == 2 && is_cubic(g) && vertex_connectivity_at_least(g, 3) && is_two_factor(g, c.factor) && (k == 3 || k == 4);
    }
    bool operator()(const cert::Hamiltonian& c) const { return value == 3 && is_hamiltonian_cycle(g, c.cycle); }
    bool operator()(const cert::Strong& c) const {
        if (value != 2 || !is_bridgeless(g)) return false;
        auto faces = trace_faces(g, c.rotation);
        return faces.genus == c.genus && is_strong(g, faces);
    }
    bool operator()(const cert::Polyhedral& c) const {
        if (value != 2 || !is_cubic(g) || !vertex_connectivity_at_least(g, 3)) return false;
        auto faces = trace_faces(g, c.rotation);
        return faces.genus == c.genus && is_polyhedral(g, faces);
    }
    bool operator()(const cert::Linkless& c) const {
        const auto& family = petersen_family();
        if (value != edge_total(g) || c.refutations.size() != family.size()) return false;
        const std::size_t simple = simple_edge_count(g);
        for (std::size_t i = 0; i < family.size(); ++i) {
            const auto& r = c.refutations[i];
            if (r.member != family[i].name || r.status != SearchStatus::NotFound || r.skipped) return false;
            const auto& p = family[i].graph;
            if (r.filtered && g.vertex_count() >= p.vertex_count() && simple >= p.edge_count()) return false;
        }
        return true;
    }
    bool operator()(const cert::Link& c) const {
        const auto& family = petersen_family();
        if (c.member < 0 || static_cast<std::size_t>(c.member) >= family.size()) return false;
        if (!verify_minor_model(g, family[static_cast<std::size_t>(c.member)].graph, c.model)) return false;
        const auto& p = c.pair;
        if (!is_valid_cycle(g, p.first) || !is_valid_cycle(g, p.second) || !cycles_disjoint(p.first, p.second)) return false;
        if (p.total_length != static_cast<int>(p.first.length() + p.second.length())) return false;
        if (value != edge_total(g) - p.total_length - 1) return false;
        auto best = min_disjoint_cycle_pair(g);
        return best.found() && best.value->total_length == p.total_length;
    }
    bool operator()(const cert::Trivial&) const { return value == edge_total(g); }
};

}  // namespace

bool verify_bound(const Graph& g, const Bound& b) {
    try {
        return std::visit(Verifier{g, b.value}, b.certificate);
    } catch (const std::exception&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Rule ladder

namespace {

struct Candidate {
    int value;
    Certificate certificate;
};

class Analysis {
public:
    Analysis(const Graph& g, const Budgets& budgets) : g_(g), budgets_(budgets) {
        if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    }

    BoundReport run(bool want_lower, bool want_upper) {
        BoundReport out;
        out.summary = summarize(g_);
        out.budgets = budgets_;

        const std::uint64_t budget = budgets_.nodes;
        const Graph& g = g_;
        auto linkage = std::async(std::launch::async, [&g, budget] { return is_intrinsically_linked(g, budget); });
        std::future<SearchResult<Cycle>> ham;
        if (want_lower && g.vertex_count() >= 3)
            ham = std::async(std::launch::async, [&g, budget] { return hamiltonian_cycle(g, budget); });

        LinkageResult link = linkage.get();

        std::vector<RuleOutcome> lower_rules;
        std::vector<Candidate> lower;
        if (want_lower) {
            lower_ladder(out.summary, link, ham, lower_rules, lower);
        } else {
            for (Rule r : {Rule::R1, Rule::RFull, Rule::R2F2, Rule::R2F34, Rule::R3Ham, Rule::R2Strong, Rule::R2Poly})
                lower_rules.push_back({r, RuleStatus::Skipped, std::nullopt, 0, ""});
        }

        std::vector<RuleOutcome> upper_rules;
        std::vector<Candidate> upper;
        if (want_upper) {
            upper_ladder(link, upper_rules, upper);
        } else {
            upper_rules.push_back({Rule::ULink, RuleStatus::Skipped, std::nullopt, 0, ""});
            upper_rules.push_back({Rule::UTrivial, RuleStatus::Skipped, std::nullopt, 0, ""});
        }

        out.rules = std::move(lower_rules);
        out.rules.insert(out.rules.end(), upper_rules.begin(), upper_rules.end());

        // Ties go to the earliest rule in ladder order.
        if (!lower.empty()) {
            auto best = lower.begin();
            for (auto it = lower.begin(); it != lower.end(); ++it)
                if (it->value > best->value) best = it;
            out.lower = {best->value, best->certificate};
        } else {
            out.lower = {0, cert::Trivial{}};
        }
        if (!upper.empty()) {
            auto best = upper.begin();
            for (auto it = upper.begin(); it != upper.end(); ++it)
                if (it->value < best->value) best = it;
            out.upper = {best->value, best->certificate};
        } else {
            out.upper = {edge_total(g_), cert::Trivial{}};
        }
        if (want_lower && want_upper && out.lower.value > out.upper.value)
            throw std::logic_error("lower bound exceeds upper bound");

        if (want_upper && out.upper.rule() == Rule::ULink) out.notes.push_back(kLinkNote);
        if (want_lower && !out.summary.cubic) {
            for (const auto& o : out.rules)
                if (o.rule == Rule::R2Strong && o.status == RuleStatus::Applied) out.notes.push_back(kStrongScopeNote);
        }
        return out;
    }

private:
    void lower_ladder(const GraphSummary& s, const LinkageResult& link, std::future<SearchResult<Cycle>>& ham,
                      std::vector<RuleOutcome>& rules, std::vector<Candidate>& found) {
        const int edges = edge_total(g_);
        auto best = [&found] {
            int b = 0;
            for (const auto& c : found) b = std::max(b, c.value);
            return b;
        };

        // R1
        if (edges >= 1) {
            rules.push_back({Rule::R1, RuleStatus::Applied, 1, 0, ""});
            found.push_back({1, cert::Connected{}});
        } else {
            rules.push_back({Rule::R1, RuleStatus::Inapplicable, std::nullopt, 0, "graph has no edges"});
        }

        // R-Full
        {
            std::uint64_t nodes = 0;
            for (const auto& o : link.outcomes) nodes += o.nodes;
            switch (link.status) {
                case Linkage::Linkless:
                    rules.push_back({Rule::RFull, RuleStatus::Applied, edges, nodes, ""});
                    found.push_back({edges, cert::Linkless{link.outcomes}});
                    break;
                case Linkage::Linked:
                    rules.push_back({Rule::RFull, RuleStatus::Inapplicable, std::nullopt, nodes,
                                     "contains a " + petersen_family()[static_cast<std::size_t>(link.member)].name + " minor"});
                    break;
                case Linkage::BudgetExhausted:
                    rules.push_back({Rule::RFull, RuleStatus::Unknown, std::nullopt, nodes, "minor search out of budget"});
                    break;
            }
        }

        // R2-F2, R2-F34
        if (!s.cubic) {
            rules.push_back({Rule::R2F2, RuleStatus::Inapplicable, std::nullopt, 0, "not cubic"});
            rules.push_back({Rule::R2F34, RuleStatus::Inapplicable, std::nullopt, 0, "not cubic"});
        } else {
            auto factors = two_factors(g_, budgets_.two_factor_limit);
            const bool complete = factors.size() < budgets_.two_factor_limit;
            const auto nodes = static_cast<std::uint64_t>(factors.size());
            auto pick = [&factors](auto accept) -> std::optional<TwoFactor> {
                std::optional<TwoFactor> out;
                for (const auto& f : factors)
                    if (accept(f.component_count()) && (!out || f.sorted_edges() < out->sorted_edges())) out = f;
                return out;
            };
            auto record = [&](Rule rule, std::optional<TwoFactor> f, bool hypothesis, const char* why, auto wrap) {
                if (!hypothesis) {
                    rules.push_back({rule, RuleStatus::Inapplicable, std::nullopt, 0, why});
                } else if (f) {
                    rules.push_back({rule, RuleStatus::Applied, 2, nodes, ""});
                    found.push_back({2, wrap(std::move(*f))});
                } else if (complete) {
                    rules.push_back({rule, RuleStatus::Inapplicable, std::nullopt, nodes, "no qualifying 2-factor"});
                } else {
                    rules.push_back({rule, RuleStatus::Unknown, std::nullopt, nodes, "2-factor limit reached"});
                }
            };
            record(Rule::R2F2, pick([](std::size_t k) { return k == 2; }), true, "",
                   [](TwoFactor f) -> Certificate { return cert::TwoComponentFactor{std::move(f)}; });
            record(Rule::R2F34, pick([](std::size_t k) { return k == 3 || k == 4; }), s.three_connected, "not 3-connected",
                   [](TwoFactor f) -> Certificate { return cert::FewComponentFactor{std::move(f)}; });
        }

        // R3-Ham
        if (!ham.valid()) {
            rules.push_back({Rule::R3Ham, RuleStatus::Inapplicable, std::nullopt, 0, "fewer than 3 vertices"});
        } else {
            auto r = ham.get();
            if (r.found()) {
                rules.push_back({Rule::R3Ham, RuleStatus::Applied, 3, r.nodes, ""});
                found.push_back({std::min(3, edges), cert::Hamiltonian{*r.value}});
            } else if (r.status == SearchStatus::NotFound) {
                rules.push_back({Rule::R3Ham, RuleStatus::Inapplicable, std::nullopt, r.nodes, "not Hamiltonian"});
            } else {
                rules.push_back({Rule::R3Ham, RuleStatus::Unknown, std::nullopt, r.nodes, "search out of budget"});
            }
        }

        // Embedding rules, only when they can still raise the bound.
        bool no_strong_embedding = false;
        if (best() >= 2) {
            rules.push_back({Rule::R2Strong, RuleStatus::Skipped, std::nullopt, 0, ""});
        } else if (edges == 0) {
            rules.push_back({Rule::R2Strong, RuleStatus::Inapplicable, std::nullopt, 0, "graph has no edges"});
        } else if (!s.bridgeless) {
            no_strong_embedding = true;
            rules.push_back({Rule::R2Strong, RuleStatus::Inapplicable, std::nullopt, 0, "graph has a bridge"});
        } else {
            auto r = search_strong_embedding(g_, budgets_.max_genus, budgets_.nodes);
            if (r.found()) {
                rules.push_back({Rule::R2Strong, RuleStatus::Applied, 2, r.nodes, ""});
                found.push_back({2, cert::Strong{r.value->rotation, r.value->genus}});
            } else if (r.status == SearchStatus::NotFound) {
                no_strong_embedding = budgets_.max_genus == std::numeric_limits<int>::max();
                rules.push_back({Rule::R2Strong, RuleStatus::Inapplicable, std::nullopt, r.nodes,
                                 "no strong embedding within the genus cap"});
            } else {
                rules.push_back({Rule::R2Strong, RuleStatus::Unknown, std::nullopt, r.nodes, "search out of budget"});
            }
        }

        if (best() >= 2) {
            rules.push_back({Rule::R2Poly, RuleStatus::Skipped, std::nullopt, 0, ""});
        } else if (!s.cubic || !s.three_connected) {
            rules.push_back({Rule::R2Poly, RuleStatus::Inapplicable, std::nullopt, 0, "not cubic and 3-connected"});
        } else if (no_strong_embedding) {
            rules.push_back({Rule::R2Poly, RuleStatus::Inapplicable, std::nullopt, 0, "no strong embedding exists"});
        } else {
            auto r = search_polyhedral_embedding(g_, budgets_.nodes);
            if (r.found()) {
                rules.push_back({Rule::R2Poly, RuleStatus::Applied, 2, r.nodes, ""});
                found.push_back({2, cert::Polyhedral{r.value->rotation, r.value->genus}});
            } else if (r.status == SearchStatus::NotFound) {
                rules.push_back({Rule::R2Poly, RuleStatus::Inapplicable, std::nullopt, r.nodes, "no polyhedral embedding"});
            } else {
                rules.push_back({Rule::R2Poly, RuleStatus::Unknown, std::nullopt, r.nodes, "search out of budget"});
            }
        }
    }

    void upper_ladder(const LinkageResult& link, std::vector<RuleOutcome>& rules, std::vector<Candidate>& found) {
        const int edges = edge_total(g_);
        if (link.status == Linkage::Linked) {
            SearchResult<DisjointCyclePair> pair;
            try {
                pair = min_disjoint_cycle_pair(g_, budgets_.nodes);
            } catch (const GraphError&) {
                pair.status = SearchStatus::BudgetExhausted;
            }
            if (pair.found()) {
                int value = edges - pair.value->total_length - 1;
                rules.push_back({Rule::ULink, RuleStatus::Applied, value, pair.nodes,
                                 "L_min = " + std::to_string(pair.value->total_length)});
                found.push_back({value, cert::Link{*pair.value, link.member, *link.model}});
            } else if (pair.status == SearchStatus::NotFound) {
                rules.push_back({Rule::ULink, RuleStatus::Inapplicable, std::nullopt, pair.nodes, "no disjoint cycle pair"});
            } else {
                rules.push_back({Rule::ULink, RuleStatus::Unknown, std::nullopt, pair.nodes, "cycle-pair search out of budget"});
            }
        } else if (link.status == Linkage::Linkless) {
            rules.push_back({Rule::ULink, RuleStatus::Inapplicable, std::nullopt, 0, "not intrinsically linked"});
        } else {
            rules.push_back({Rule::ULink, RuleStatus::Unknown, std::nullopt, 0, "minor search out of budget"});
        }
        rules.push_back({Rule::UTrivial, RuleStatus::Applied, edges, 0, ""});
        found.push_back({edges, cert::Trivial{}});
    }

    const Graph& g_;
    Budgets budgets_;
};

}  // namespace

Bound lower_bound(const Graph& g, const Budgets& budgets) { return Analysis(g, budgets).run(true, false).lower; }

Bound upper_bound(const Graph& g, const Budgets& budgets) { return Analysis(g, budgets).run(false, true).upper; }

BoundReport report(const Graph& g, const Budgets& budgets) { return Analysis(g, budgets).run(true, true); }

ConjectureScan conjecture_verdict(const BoundReport& rep) {
    ConjectureScan out;
    if (rep.lower.value >= 2) {
        out.verdict = Verdict::Clear;
        out.certificate = rep.lower;
        return out;
    }
    const auto& strong = rep.outcome(Rule::R2Strong);
    const bool uncapped = rep.budgets.max_genus == std::numeric_limits<int>::max();
    if (strong.status == RuleStatus::Inapplicable && rep.summary.bridgeless) {
        out.strong_search = SearchStatus::NotFound;
        out.verdict = uncapped ? Verdict::Flag : Verdict::Undetermined;
    } else {
        out.strong_search = SearchStatus::BudgetExhausted;
        out.verdict = Verdict::Undetermined;
    }
    return out;
}

ConjectureScan conjecture_scan(const Graph& g, const Budgets& budgets) {
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    if (!is_cubic(g)) throw PreconditionError("graph is not cubic");
    if (!is_bridgeless(g)) throw PreconditionError("graph has a bridge");
    return conjecture_verdict(Analysis(g, budgets).run(true, false));
}

}  // namespace freeness
