#ifndef QDERANGE_POLYHEDRAL_HPP
#define QDERANGE_POLYHEDRAL_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace qderange {

using QVec = std::vector<mpq_class>;

/// Extreme rays of the pointed polyhedral cone {x : A x >= 0} by the double
/// description method over exact rationals.  Requires A to have full column
/// rank (the cone contains no line); rays come back as integer vectors with
/// content 1, sorted lexicographically for determinism.
std::vector<std::vector<mpz_class>> extreme_rays(const std::vector<QVec>& a);

/// Exact feasibility of  G^T y = v, y >= 0  (columns of G^T are the rows of
/// g).  Feasible: weights y.  Infeasible: a Farkas certificate w with
/// w . g_i >= 0 for every row and w . v < 0; the certificate is verified
/// before it is returned.
struct LpResult {
    bool feasible = false;
    QVec weights;  // over the rows of g, when feasible
    QVec farkas;   // when infeasible
};

LpResult nonnegative_combination(const std::vector<QVec>& g, const QVec& v);

} // namespace qderange

#endif
