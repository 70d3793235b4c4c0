#include "qderange/tables.hpp"

#include "qderange/cone.hpp"
#include "qderange/errors.hpp"

namespace qderange {

CoeffTable make_table(int n, const std::string& basis, const Budget& budget) {
    if (n < 0) throw PreconditionViolation("make_table: negative level");
    CoeffTable t;
    t.n = n;
    t.basis = basis;
    t.rows = all_partitions_up_to(n);
    t.entries.assign(t.rows.size(), std::vector<RatFunc>(static_cast<size_t>(n) + 1));
    if (basis == "psi") {
        for (size_t i = 0; i < t.rows.size(); ++i) {
            budget.check("table row " + t.rows[i].str());
            for (int k = 0; k <= n; ++k)
                t.entries[i][static_cast<size_t>(k)] = RatFunc(coeff_c(n, k, t.rows[i]));
        }
    } else if (basis == "sigma") {
        for (size_t i = 0; i < t.rows.size(); ++i) {
            budget.check("table row " + t.rows[i].str());
            for (int k = 0; k <= n; ++k) {
                IntPoly acc;
                for (int j = 0; j <= k; ++j) acc += q_binomial(k, j) * coeff_c(n, j, t.rows[i]);
                t.entries[i][static_cast<size_t>(k)] = RatFunc(std::move(acc));
            }
        }
    } else if (basis == "tau") {
        const ConeBasis cb = eliminate(n, budget);
        for (size_t i = 0; i < t.rows.size(); ++i)
            for (int k = 0; k <= n; ++k)
                t.entries[i][static_cast<size_t>(k)] = cb.taus[static_cast<size_t>(k)].coeff(t.rows[i]);
    } else {
        throw PreconditionViolation("make_table: basis must be psi, sigma or tau");
    }
    return t;
}

} // namespace qderange
