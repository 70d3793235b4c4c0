#ifndef QDERANGE_ORACLE_HPP
#define QDERANGE_ORACLE_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qderange {

/// Invertible n x n matrix over the prime field F_p, entries row-major
/// residues in [0, p).
class FFMatrix {
public:
    FFMatrix(int n, int p, std::vector<int> entries);

    int n() const { return n_; }
    int p() const { return p_; }
    int at(int i, int j) const { return e_[static_cast<size_t>(i * n_ + j)]; }
    const std::vector<int>& entries() const { return e_; }

    FFMatrix mul(const FFMatrix& o) const;
    FFMatrix inverse() const;

    friend bool operator==(const FFMatrix& a, const FFMatrix& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.e_ == b.e_;
    }

private:
    FFMatrix() = default;
    int n_ = 0, p_ = 0;
    std::vector<int> e_;
};

/// All invertible matrices, each once.  Guard: |GL(n,p)| <= 20000.
std::vector<FFMatrix> enumerate_gl(int n, int p);

/// dim ker(g - 1) over F_p.
int r_of(const FFMatrix& g);

/// Number of n x k matrices x over F_p with g x = x; rank_exact restricts to
/// rank k.  Guard: p^(n k) <= 20000.
long count_fixed(const FFMatrix& g, int k, bool rank_exact);

struct PsdReport {
    bool psd = false;
    /// Row indices (into the group list) of a principal submatrix with
    /// negative determinant, when not psd.
    std::vector<int> failing_minor;
    mpq_class failing_minor_det;
    std::string detail;
};

/// Exact positive-semidefiniteness of the Gram matrix M[g,h] = f(r(g h^-1))
/// by symmetric elimination with diagonal pivoting.  values[r] supplies f.
/// Guard: |group| <= 500.
PsdReport certify_psd(const std::vector<mpq_class>& values, const std::vector<FFMatrix>& group);

} // namespace qderange

#endif
