#ifndef QDERANGE_TABLES_HPP
#define QDERANGE_TABLES_HPP

#include <string>
#include <vector>

#include "qderange/budget.hpp"
#include "qderange/characters.hpp"

namespace qderange {

/// Coefficient table over the canonical partition rows; entry (row, k) is the
/// multiplicity of [lambda]_n in the k-th basis character.
struct CoeffTable {
    int n = 0;
    std::string basis;  // "psi" | "sigma" | "tau"
    std::vector<Partition> rows;
    std::vector<std::vector<RatFunc>> entries;  // rows x (n+1)
};

/// Builds the table for one of the three bases ("tau" runs the elimination).
CoeffTable make_table(int n, const std::string& basis, const Budget& budget = Budget());

} // namespace qderange

#endif
