#pragma once

#include "freeness/cycles.hpp"
#include "freeness/embedding.hpp"
#include "freeness/graph.hpp"
#include "freeness/minor.hpp"

#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace freeness {

/// Input violates a documented precondition (disconnected, not cubic, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Rule { R1, RFull, R2F2, R2F34, R3Ham, R2Strong, R2Poly, ULink, UTrivial };

/// "R1", "R-Full", "R2-F2", "R2-F34", "R3-Ham", "R2-Strong", "R2-Poly", "U-Link", "U-Trivial".
std::string_view to_string(Rule r);
std::optional<Rule> rule_from_string(std::string_view s);
bool is_upper_rule(Rule r);

/// Applied: hypothesis certified. Inapplicable: hypothesis refuted or not met.
/// Unknown: the search ran out of budget. Skipped: not evaluated, since it could
/// not improve on a bound already certified.
enum class RuleStatus { Applied, Inapplicable, Unknown, Skipped };
std::string_view to_string(RuleStatus s);

struct Budgets {
    std::uint64_t nodes = std::uint64_t{1} << 24;  // per search
    int max_genus = std::numeric_limits<int>::max();
    std::size_t two_factor_limit = kDefaultTwoFactorLimit;
};

namespace cert {
struct Connected {};
struct TwoComponentFactor { TwoFactor factor; };
struct FewComponentFactor { TwoFactor factor; };
struct Hamiltonian { Cycle cycle; };
struct Strong { RotationSystem rotation; int genus = 0; };
struct Polyhedral { RotationSystem rotation; int genus = 0; };
struct Linkless { std::vector<MemberOutcome> refutations; };
struct Link {
    DisjointCyclePair pair;
    int member = -1;
    MinorModel model;
};
struct Trivial {};
}  // namespace cert

using Certificate = std::variant<cert::Connected, cert::TwoComponentFactor, cert::FewComponentFactor, cert::Hamiltonian,
                                 cert::Strong, cert::Polyhedral, cert::Linkless, cert::Link, cert::Trivial>;

Rule rule_of(const Certificate& c);

struct Bound {
    int value = 0;
    Certificate certificate;

    Rule rule() const { return rule_of(certificate); }
};

/// Re-checks the payload against g without searching; the one exception is U-Link,
/// whose minimality of the cycle pair is recomputed.
bool verify_bound(const Graph& g, const Bound& b);

struct RuleOutcome {
    Rule rule = Rule::R1;
    RuleStatus status = RuleStatus::Inapplicable;
    std::optional<int> bound;
    std::uint64_t nodes = 0;
    std::string note;
};

struct GraphSummary {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    bool cubic = false;
    bool connected = false;
    bool bridgeless = false;
    bool three_connected = false;
    std::optional<int> girth;
};

GraphSummary summarize(const Graph& g);

struct BoundReport {
    GraphSummary summary;
    Bound lower;
    Bound upper;
    std::vector<RuleOutcome> rules;  // ladder order: lower rules, then upper rules
    Budgets budgets;
    std::vector<std::string> notes;

    int class_low() const { return static_cast<int>(summary.edges) - upper.value; }
    int class_high() const { return static_cast<int>(summary.edges) - lower.value; }
    bool determined() const { return lower.value == upper.value; }
    bool complete() const;  // no rule ended Unknown
    const RuleOutcome& outcome(Rule r) const;
};

/// All three throw PreconditionError on a disconnected graph.
Bound lower_bound(const Graph& g, const Budgets& budgets = {});
Bound upper_bound(const Graph& g, const Budgets& budgets = {});
BoundReport report(const Graph& g, const Budgets& budgets = {});

enum class Verdict { Flag, Clear, Undetermined };
std::string_view to_string(Verdict v);

struct ConjectureScan {
    Verdict verdict = Verdict::Undetermined;
    std::optional<Bound> certificate;
    SearchStatus strong_search = SearchStatus::NotFound;  // meaningful unless Clear
};

/// Clear carries the lower-bound certificate. Flag: no rule reaches 2 and the
/// strong-embedding space was exhausted. Undetermined: no rule reaches 2 but the
/// strong search ran out of budget or was genus-capped. Requires connected, cubic,
/// bridgeless input (PreconditionError otherwise).
ConjectureScan conjecture_scan(const Graph& g, const Budgets& budgets = {});
/// The same verdict read off a finished report of a cubic bridgeless graph.
ConjectureScan conjecture_verdict(const BoundReport& r);

}  // namespace freeness
