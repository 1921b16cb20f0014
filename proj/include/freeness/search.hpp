#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace freeness {

enum class SearchStatus { Found, NotFound, BudgetExhausted };

std::string_view to_string(SearchStatus s);

/// Outcome of a budgeted exhaustive search. NotFound is only reported when the
/// search space was exhausted; budget exhaustion is a value, never an error.
template <class T>
struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<T> value;
    std::uint64_t nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
};

/// Node-expansion counter shared by one search.
class NodeBudget {
public:
    explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

    /// Consumes one expansion; false once the limit is spent.
    bool spend() {
        if (used_ >= limit_) {
            exhausted_ = true;
            return false;
        }
        ++used_;
        return true;
    }
    bool exhausted() const { return exhausted_; }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    bool exhausted_ = false;
};

}  // namespace freeness
