#ifndef QDERANGE_ERRORS_HPP
#define QDERANGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qderange {

/// Exact division was requested but the divisor does not divide the dividend.
/// Always indicates an internal inconsistency (the engine only divides where
/// divisibility is a theorem).
class InexactDivision : public std::logic_error {
public:
    explicit InexactDivision(const std::string& what) : std::logic_error(what) {}
};

class PreconditionViolation : public std::invalid_argument {
public:
    explicit PreconditionViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// Enumeration would exceed a hard size bound.
class SizeGuard : public std::runtime_error {
public:
    explicit SizeGuard(const std::string& what) : std::runtime_error(what) {}
};

/// The elimination step found no candidate ratio that is minimal uniformly
/// over all q > 1.  Raised instead of picking a sample-dependent minimum.
class NoUniformMinimizer : public std::runtime_error {
public:
    NoUniformMinimizer(int k, int j, std::string candidates)
        : std::runtime_error("no uniform minimizer at elimination step (k=" + std::to_string(k) +
                             ", j=" + std::to_string(j) + "); candidates: " + candidates),
          k(k), j(j), candidates(std::move(candidates)) {}
    int k;
    int j;
    std::string candidates;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& where)
        : std::runtime_error("time budget exceeded: " + where) {}
};

} // namespace qderange

#endif
