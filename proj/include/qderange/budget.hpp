#ifndef QDERANGE_BUDGET_HPP
#define QDERANGE_BUDGET_HPP

#include <chrono>
#include <string>

#include "qderange/errors.hpp"

namespace qderange {

/// Cooperative wall-clock budget.  Long-running loops call check() at work-item
/// granularity; an exhausted budget raises BudgetExceeded at the next check.
class Budget {
public:
    Budget() = default;  // unlimited

    static Budget unlimited() { return Budget(); }
    static Budget seconds(double s) {
        Budget b;
        b.limited_ = true;
        b.deadline_ = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(s));
        return b;
    }

    bool limited() const { return limited_; }
    bool exhausted() const {
        return limited_ && std::chrono::steady_clock::now() > deadline_;
    }
    void check(const std::string& where) const {
        if (exhausted()) throw BudgetExceeded(where);
    }

private:
    bool limited_ = false;
    std::chrono::steady_clock::time_point deadline_{};
};

} // namespace qderange

#endif
