#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hygap {

/// A search or count exceeded its configured budget. Results are exact or
/// aborted, never silently approximated.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t budget)
        : std::runtime_error(what + " (budget " + std::to_string(budget) + ")"),
          budget_(budget) {}

    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

}  // namespace hygap
