#ifndef QDERANGE_CHARACTERS_HPP
#define QDERANGE_CHARACTERS_HPP

#include <map>
#include <optional>
#include <vector>

#include "qderange/partition.hpp"
#include "qderange/ratfunc.hpp"

namespace qderange {

/// A derangement function written over the basis psi_0^(n), ..., psi_n^(n).
struct PsiCoeffs {
    int n = 0;
    std::vector<RatFunc> coeffs;  // exactly n+1 entries, index k

    PsiCoeffs() = default;
    explicit PsiCoeffs(int level) : n(level), coeffs(static_cast<size_t>(level) + 1) {}
    const RatFunc& operator[](int k) const { return coeffs[static_cast<size_t>(k)]; }
    RatFunc& operator[](int k) { return coeffs[static_cast<size_t>(k)]; }
    friend bool operator==(const PsiCoeffs& a, const PsiCoeffs& b) {
        return a.n == b.n && a.coeffs == b.coeffs;
    }
};

/// A class function written over the blocks [lambda]_n, |lambda| <= n.
/// Absent key means zero coefficient.
class BlockVector {
public:
    using Map = std::map<Partition, RatFunc, CanonicalLess>;

    BlockVector() = default;
    explicit BlockVector(int level) : n_(level) {}

    int level() const { return n_; }
    const RatFunc& coeff(const Partition& lambda) const;
    void set(const Partition& lambda, RatFunc value);
    const Map& coeffs() const { return m_; }
    std::vector<Partition> support() const;
    bool is_zero() const { return m_.empty(); }

    BlockVector& add_scaled(const BlockVector& other, const RatFunc& factor);
    friend BlockVector operator+(BlockVector a, const BlockVector& b) {
        return a.add_scaled(b, RatFunc(1L));
    }
    friend BlockVector operator-(BlockVector a, const BlockVector& b) {
        return a.add_scaled(b, RatFunc(-1L));
    }
    friend BlockVector operator*(const RatFunc& c, BlockVector v);
    friend bool operator==(const BlockVector& a, const BlockVector& b) {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }
    friend bool operator!=(const BlockVector& a, const BlockVector& b) { return !(a == b); }

private:
    int n_ = 0;
    Map m_;
};

/// The n+1 values of a derangement function, indexed by r = dim ker(g - 1).
struct DerangementValues {
    int n = 0;
    std::vector<RatFunc> values;  // index r = 0..n

    DerangementValues() = default;
    explicit DerangementValues(int level) : n(level), values(static_cast<size_t>(level) + 1) {}
    const RatFunc& operator[](int r) const { return values[static_cast<size_t>(r)]; }
    RatFunc& operator[](int r) { return values[static_cast<size_t>(r)]; }
    friend bool operator==(const DerangementValues& a, const DerangementValues& b) {
        return a.n == b.n && a.values == b.values;
    }

    /// Restriction along g -> g + one fixed vector: f'(r) = f(r+1), level n-1.
    DerangementValues restricted() const;
};

/// |GL(n, q)| as a polynomial in q.
IntPoly gl_order(int n);

/// Dimension of the unipotent character of lambda by the q-hook formula
/// (the Kostka-Foulkes polynomial K_{lambda,(1^n)}).
IntPoly unipotent_dim(const Partition& lambda);

/// Dimension of rho_m (the unipotent-free part of the regular character),
/// from the group-order recursion.
IntPoly dim_rho(int m);

/// Dimension of the block [lambda]_n.
IntPoly block_dim(int n, const Partition& lambda);

/// Multiplicity of [lambda]_n in psi_k^(n).  Memoized; uses the one-row fast
/// path and the level-reduction recurrence.
IntPoly coeff_c(int n, int k, const Partition& lambda);

/// Same value by the direct strip-sum formula only; kept as an independent
/// route for cross-checking.
IntPoly coeff_c_direct(int n, int k, const Partition& lambda);

/// psi_k^(n) in the block basis; support is {lambda : lambda_1 >= n-k}.
BlockVector psi_block(int n, int k);

/// sigma_k^(n) = sum_j binom(k,j)_q psi_j^(n).
PsiCoeffs sigma_in_psi(int n, int k);

/// psi_k^(n) = sum_j (-1)^(k-j) q^C(k-j,2) binom(k,j)_q sigma_j^(n);
/// returns the n+1 coefficients over the sigma basis.
std::vector<IntPoly> psi_in_sigma(int n, int k);

/// Value of psi_k at r: (q^r - 1)(q^r - q)...(q^r - q^(k-1)).
DerangementValues psi_values(int n, int k);
/// Value of sigma_k at r: q^(k r).
DerangementValues sigma_values(int n, int k);

BlockVector to_blocks(const PsiCoeffs& f);
DerangementValues to_values(const PsiCoeffs& f);
/// Unique psi expansion with the given values (triangular solve).
PsiCoeffs values_to_psi(const DerangementValues& v);

/// Coefficients of f_z(g) = z^(n - r(g)) over the psi basis; z may be a
/// rational constant or a rational function of q.
PsiCoeffs fz_coeffs(int n, const RatFunc& z);

struct FzReport {
    bool is_character = false;
    std::optional<Partition> first_negative_block;
};

/// Tests every block coefficient of f_z.  With q_at set the test is exact
/// rational evaluation at that point; otherwise signs are decided uniformly
/// on q > 1.
FzReport fz_positivity(int n, const RatFunc& z, const std::optional<mpq_class>& q_at = {});

/// The derangement character with zero coefficient at every full-degree
/// block: coefficient binom(n-1,|lambda|)_q dim(lambda) at |lambda| <= n-1.
BlockVector hat_tau_blocks(int n);

/// The same character over the psi basis: psi_n - sum_k ((n-1)_q!/k_q!) q^k psi_k.
PsiCoeffs hat_tau_psi(int n);

/// c_n^(n)(lambda) - sum_k ((n-1)_q!/k_q!) q^k c_k^(n)(lambda) for |lambda| = n;
/// identically zero.
IntPoly kirillov_residual(int n, const Partition& lambda);

/// Consistency of the two representations: sum of block coefficients times
/// block dimensions must equal the value at the identity.
bool dimension_check(const BlockVector& f, const DerangementValues& v);

} // namespace qderange

#endif
