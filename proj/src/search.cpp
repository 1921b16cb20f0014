#include "freeness/search.hpp"

namespace freeness {

std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NotFound: return "not-found";
        case SearchStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

}  // namespace freeness
