#ifndef QDERANGE_LINALG_HPP
#define QDERANGE_LINALG_HPP

#include <optional>
#include <vector>

#include "qderange/ratfunc.hpp"

namespace qderange {

using PolyMatrix = std::vector<std::vector<IntPoly>>;
using RatFuncMatrix = std::vector<std::vector<RatFunc>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

/// Rank over the rational-function field by fraction-free (Bareiss)
/// elimination, cross-validated against the numeric rank at three rational
/// points q > 1 (numeric rank never exceeds the symbolic one).
int bareiss_rank(const PolyMatrix& m);
int bareiss_rank(const RatFuncMatrix& m);  // clears denominators row-wise

/// Rank of the matrix evaluated at q = x, by exact Gaussian elimination.
int rank_at(const PolyMatrix& m, const mpq_class& x);
int rank_at(const RatFuncMatrix& m, const mpq_class& x);

int rank_q(QMatrix m);

/// Determinant of a square polynomial matrix (fraction-free expansion).
IntPoly bareiss_determinant(PolyMatrix m);

/// One-dimensional kernel of an r x d matrix of rank d-1, as a RatFunc
/// vector; nullopt when the rank is not d-1.  The result satisfies M v = 0
/// exactly and is normalized so its first nonzero entry is 1.
std::optional<std::vector<RatFunc>> kernel_vector(const PolyMatrix& m);

} // namespace qderange

#endif
