#ifndef QDERANGE_CONE_HPP
#define QDERANGE_CONE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qderange/budget.hpp"
#include "qderange/characters.hpp"

namespace qderange {

/// Output of the elimination algorithm: the tau basis of the space of
/// derangement functions, with psi_k = sum_j transition[k][j] tau_j,
/// transition lower triangular with unit diagonal.
struct ConeBasis {
    int n = 0;
    std::vector<BlockVector> taus;             // tau_0 .. tau_n over blocks
    std::vector<PsiCoeffs> taus_psi;           // the same over the psi basis
    std::vector<std::vector<RatFunc>> transition;

    DerangementValues tau_values(int k) const { return to_values(taus_psi[static_cast<size_t>(k)]); }
};

/// tau_0 = psi_0; at stage k the algorithm subtracts from psi_k the largest
/// multiple of each earlier tau_{j-1} that keeps every block coefficient
/// nonnegative on q > 1.  The subtraction coefficient is the minimum of the
/// coefficient ratios; the minimizer must dominate uniformly over q > 1,
/// otherwise NoUniformMinimizer is thrown.
ConeBasis eliminate(int n, const Budget& budget = Budget());

/// For each listed vector, a support diagram absent from every other support.
/// Several may qualify; the canonically first is reported.
std::vector<std::optional<Partition>> eigendiagrams(const std::vector<BlockVector>& basis);

/// Extremality test: f (the first basis element, a character) is extreme iff
/// the columns of the remaining basis vectors restricted to the complement of
/// supp(f) have full rank n.
bool is_extreme(const BlockVector& f, const std::vector<BlockVector>& basis);

/// Closed form for tau_k^(n) in the stable range k <= n/2.
BlockVector stable_tau(int n, int k);

/// Branching identity for stable tau characters, checked at the level of
/// values; uses elimination output on either side where needed.
bool branch_tau_check(int n, int k);

/// The extra extreme ray of D_7^+: a1 tau_4 + a2 tau_6 - tau_5.
BlockVector tau_star_7();
RatFunc tau_star_a1();
RatFunc tau_star_a2();

struct ConeReport {
    int n = 0;
    bool simplicial = false;
    bool complete = true;  // false when the budget cut the ray search short
    std::vector<BlockVector> extremes;
    std::vector<PsiCoeffs> extremes_psi;
    std::vector<std::optional<Partition>> eigendiagram_of;  // per extreme
    std::vector<std::string> notes;

    bool has_sample_disagreement() const;
};

/// Runs the elimination, decides simpliciality from eigendiagrams, and in the
/// non-simplicial case searches for the remaining extreme rays: double
/// description at exact rational samples q* in {3,5,7}, symbolic lift of each
/// sampled zero pattern, then symbolic nonnegativity and extremality checks.
/// Sample disagreements become notes, never silent drops.
ConeReport analyze(int n, const Budget& budget = Budget());

/// Exact feasibility of writing the row of lambda (|lambda| < n) at q = q*
/// as a nonnegative combination of the full-degree rows and the empty-diagram
/// row, with a Farkas certificate either way.
struct ProbeRow {
    Partition lambda;
    bool feasible = false;
    std::vector<mpq_class> certificate;  // weights or Farkas vector
};

std::vector<ProbeRow> unipotent_conjecture_probe(int n, const mpq_class& qstar);

/// Rank of the coefficient block {c_k(lambda) : |lambda| = n-j, k = 0..n}.
int rank_blocks(int n, int j);

} // namespace qderange

#endif
