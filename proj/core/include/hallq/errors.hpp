#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hallq {

/// Malformed input: bad JSON, out-of-range parameters, contract violations.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive enumeration would exceed the configured budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree did not. Must never trigger on shipped suites.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration budget, counted in raw points (matrix tuples, subspaces, ...).
/// Exhausting it raises BudgetError; enumerations are all-or-nothing, never
/// silently truncated.
class Budget {
  public:
    static constexpr std::int64_t kDefaultLimit = 10'000'000;

    Budget() = default;
    explicit Budget(std::int64_t limit) : limit_(limit) {}

    void charge(std::int64_t points, const char* what) {
        spent_ += points;
        if (spent_ > limit_)
            throw BudgetError(std::string(what) + ": enumeration budget exceeded (" +
                              std::to_string(spent_) + " > " + std::to_string(limit_) + " points)");
    }

    std::int64_t limit() const { return limit_; }
    std::int64_t spent() const { return spent_; }

  private:
    std::int64_t limit_ = kDefaultLimit;
    std::int64_t spent_ = 0;
};

}  // namespace hallq
