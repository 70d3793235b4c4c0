#include "qderange/cone.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <sstream>

#include "qderange/errors.hpp"
#include "qderange/linalg.hpp"
#include "qderange/polyhedral.hpp"
#include "qderange/sign.hpp"

namespace qderange {

namespace {

std::mutex g_elim_mu;
std::map<int, ConeBasis> g_elim_cache;

mpq_class eval_or_throw(const RatFunc& f, const mpq_class& x) {
    auto v = f.eval(x);
    if (!v) throw PreconditionViolation("evaluation hit a pole");
    return *v;
}

ConeBasis eliminate_impl(int n, const Budget& budget) {
    ConeBasis cb;
    cb.n = n;
    cb.transition.assign(static_cast<size_t>(n) + 1,
                         std::vector<RatFunc>(static_cast<size_t>(n) + 1));
    for (int k = 0; k <= n; ++k) cb.transition[static_cast<size_t>(k)][static_cast<size_t>(k)] = RatFunc(1L);

    cb.taus.push_back(psi_block(n, 0));
    PsiCoeffs p0(n);
    p0[0] = RatFunc(1L);
    cb.taus_psi.push_back(p0);

    for (int k = 1; k <= n; ++k) {
        BlockVector cur = psi_block(n, k);
        PsiCoeffs cur_psi(n);
        cur_psi[k] = RatFunc(1L);
        for (int j = 1; j <= k; ++j) {
            budget.check("elimination stage " + std::to_string(k));
            const BlockVector& tau = cb.taus[static_cast<size_t>(j - 1)];
            // candidate ratios cur<lambda> / tau<lambda> over supp(tau);
            // lambdas outside the support impose no constraint (a/0 = infinity)
            std::vector<std::pair<RatFunc, Partition>> cands;
            for (const auto& [lam, tc] : tau.coeffs()) {
                RatFunc ratio = cur.coeff(lam) / tc;
                bool seen = false;
                for (const auto& c : cands)
                    if (c.first == ratio) {
                        seen = true;
                        break;
                    }
                if (!seen) cands.emplace_back(std::move(ratio), lam);
            }
            if (cands.empty()) continue;
            // tentative minimum by exact evaluation at a pole-free sample
            size_t best = 0;
            if (cands.size() > 1) {
                mpq_class sample;
                bool ok = false;
                for (const int s : {3, 5, 7, 11, 13, 17, 19}) {
                    sample = s;
                    ok = true;
                    for (const auto& c : cands)
                        if (!c.first.eval(sample)) {
                            ok = false;
                            break;
                        }
                    if (ok) break;
                }
                if (!ok) throw PreconditionViolation("eliminate: no pole-free sample point");
                mpq_class bestval = *cands[0].first.eval(sample);
                for (size_t i = 1; i < cands.size(); ++i) {
                    const mpq_class v = *cands[i].first.eval(sample);
                    if (v < bestval) {
                        bestval = v;
                        best = i;
                    }
                }
            }
            // the minimum must hold uniformly on q > 1
            for (size_t i = 0; i < cands.size(); ++i) {
                if (i == best) continue;
                const CmpResult c = compare_on_q_gt_1(cands[best].first, cands[i].first);
                if (c != CmpResult::Less && c != CmpResult::Equal) {
                    std::ostringstream os;
                    os << cands[best].second.str() << ": " << cands[best].first.str() << " vs "
                       << cands[i].second.str() << ": " << cands[i].first.str();
                    throw NoUniformMinimizer(k, j - 1, os.str());
                }
            }
            const RatFunc a = cands[best].first;
            cb.transition[static_cast<size_t>(k)][static_cast<size_t>(j - 1)] = a;
            if (!a.is_zero()) {
                cur.add_scaled(tau, -a);
                for (int i = 0; i <= n; ++i)
                    cur_psi[i] -= a * cb.taus_psi[static_cast<size_t>(j - 1)][i];
            }
        }
        cb.taus.push_back(std::move(cur));
        cb.taus_psi.push_back(std::move(cur_psi));
    }

    // every tau must be a character with strictly positive stored coefficients
    for (const auto& tau : cb.taus)
        for (const auto& [lam, c] : tau.coeffs())
            if (!sign_on_q_gt_1(c).positive())
                throw std::logic_error("eliminate: tau coefficient at " + lam.str() +
                                       " is not positive on q > 1");
    return cb;
}

} // namespace

ConeBasis eliminate(int n, const Budget& budget) {
    if (n < 0) throw PreconditionViolation("eliminate: negative level");
    {
        std::lock_guard<std::mutex> lock(g_elim_mu);
        auto it = g_elim_cache.find(n);
        if (it != g_elim_cache.end()) return it->second;
    }
    ConeBasis cb = eliminate_impl(n, budget);
    std::lock_guard<std::mutex> lock(g_elim_mu);
    return g_elim_cache.emplace(n, std::move(cb)).first->second;
}

std::vector<std::optional<Partition>> eigendiagrams(const std::vector<BlockVector>& basis) {
    std::vector<std::optional<Partition>> out(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        for (const auto& [lam, c] : basis[i].coeffs()) {
            bool unique = true;
            for (size_t j = 0; j < basis.size() && unique; ++j)
                if (j != i && !basis[j].coeff(lam).is_zero()) unique = false;
            if (unique) {
                out[i] = lam;
                break;  // canonically first
            }
        }
    }
    return out;
}

bool is_extreme(const BlockVector& f, const std::vector<BlockVector>& basis) {
    if (basis.empty() || !(basis[0] == f))
        throw PreconditionViolation("is_extreme: f must be the first basis element");
    const int n = f.level();
    if (static_cast<int>(basis.size()) != n + 1)
        throw PreconditionViolation("is_extreme: basis must have n+1 elements");
    RatFuncMatrix m(static_cast<size_t>(n));
    for (const auto& lam : all_partitions_up_to(n)) {
        if (!f.coeff(lam).is_zero()) continue;
        for (int j = 1; j <= n; ++j)
            m[static_cast<size_t>(j - 1)].push_back(basis[static_cast<size_t>(j)].coeff(lam));
    }
    if (n == 0) return true;  // no columns needed; rank 0 == n
    if (m[0].empty()) return false;
    // numeric rank at a generic point certifies full rank
    for (const int s : {3, 5, 7})
        if (rank_at(m, mpq_class(s)) == n) return true;
    return bareiss_rank(m) == n;
}

BlockVector stable_tau(int n, int k) {
    if (k < 0 || 2 * k > n)
        throw PreconditionViolation("stable_tau: k out of the stable range k <= n/2");
    BlockVector v(n);
    if (n == 0) {
        v.set(Partition(), RatFunc(1L));
        return v;
    }
    for (int j = 0; j <= k; ++j) {
        const IntPoly binom = q_binomial(k, j);
        for (const auto& mu : partitions_of(j))
            v.set(mu.prepend_row(n - k), RatFunc(binom * unipotent_dim(mu)));
    }
    return v;
}

bool branch_tau_check(int n, int k) {
    if (k < 0 || 2 * k > n || n < 1)
        throw PreconditionViolation("branch_tau_check: outside the stable range");
    const ConeBasis hi = eliminate(n);
    const ConeBasis lo = eliminate(n - 1);
    const DerangementValues lhs = hi.tau_values(k).restricted();
    DerangementValues rhs(n - 1);
    auto accumulate = [&](int idx, const RatFunc& coeff) {
        if (idx < 0 || coeff.is_zero()) return;
        const DerangementValues tv = lo.tau_values(idx);
        for (int r = 0; r <= n - 1; ++r) rhs[r] += coeff * tv[r];
    };
    accumulate(k, RatFunc::q_pow(k));
    accumulate(k - 1, RatFunc(2L) * RatFunc::q_pow(k - 1) * (RatFunc::q_pow(k) - RatFunc(1L)));
    accumulate(k - 2, RatFunc::q_pow(k - 2) * (RatFunc::q_pow(k - 1) - RatFunc(1L)) *
                          (RatFunc::q_pow(k) - RatFunc(1L)));
    return lhs == rhs;
}

RatFunc tau_star_a1() {
    const IntPoly one(1L);
    const IntPoly q = IntPoly::q();
    return RatFunc((one + q) * (one + IntPoly::q_pow(2)),
                   one + q + IntPoly::q_pow(2));
}

RatFunc tau_star_a2() {
    const IntPoly one(1L);
    const IntPoly q = IntPoly::q();
    const IntPoly q2 = IntPoly::q_pow(2);
    IntPoly num = (one + q) * (one + q2) * (one + q2);
    IntPoly pent = one + q + q2 + IntPoly::q_pow(3) + IntPoly::q_pow(4);
    num *= pent;
    IntPoly den = q2 + IntPoly::q_pow(4) + IntPoly::q_pow(5) + IntPoly::q_pow(6) +
                  IntPoly::q_pow(7) + IntPoly::q_pow(8) + IntPoly::q_pow(10);
    return RatFunc(std::move(num), std::move(den));
}

BlockVector tau_star_7() {
    const ConeBasis cb = eliminate(7);
    BlockVector v(7);
    v.add_scaled(cb.taus[4], tau_star_a1());
    v.add_scaled(cb.taus[6], tau_star_a2());
    v.add_scaled(cb.taus[5], RatFunc(-1L));
    return v;
}

bool ConeReport::has_sample_disagreement() const {
    for (const auto& note : notes)
        if (note.find("sample disagreement") != std::string::npos) return true;
    return false;
}

namespace {

std::vector<BlockVector> lemma15_basis(const BlockVector& f, int drop_psi,
                                       const std::vector<BlockVector>& psis) {
    std::vector<BlockVector> basis{f};
    for (int j = 0; j <= f.level(); ++j)
        if (j != drop_psi) basis.push_back(psis[static_cast<size_t>(j)]);
    return basis;
}

} // namespace

ConeReport analyze(int n, const Budget& budget) {
    ConeReport rep;
    rep.n = n;
    const ConeBasis cb = eliminate(n, budget);
    rep.eigendiagram_of = eigendiagrams(cb.taus);
    rep.simplicial = std::all_of(rep.eigendiagram_of.begin(), rep.eigendiagram_of.end(),
                                 [](const auto& e) { return e.has_value(); });
    rep.extremes = cb.taus;
    rep.extremes_psi = cb.taus_psi;
    {
        std::ostringstream os;
        os << "eliminated tau basis; " << (rep.simplicial ? "every" : "not every")
           << " tau has an eigendiagram";
        rep.notes.push_back(os.str());
    }
    // verify extremality of each tau (expected, but never assumed)
    for (int k = 0; k <= n; ++k) {
        budget.check("extremality of tau_" + std::to_string(k));
        std::vector<BlockVector> basis{cb.taus[static_cast<size_t>(k)]};
        for (int j = 0; j <= n; ++j)
            if (j != k) basis.push_back(cb.taus[static_cast<size_t>(j)]);
        if (!is_extreme(cb.taus[static_cast<size_t>(k)], basis))
            rep.notes.push_back("tau_" + std::to_string(k) +
                                " failed the extremality rank test");
    }
    if (rep.simplicial) return rep;

    // non-simplicial: search for the remaining extreme rays by sampling
    try {
        const auto partitions = all_partitions_up_to(n);
        std::vector<BlockVector> psis;
        for (int k = 0; k <= n; ++k) psis.push_back(psi_block(n, k));

        const std::vector<mpq_class> samples = {mpq_class(3), mpq_class(5), mpq_class(7)};
        std::vector<std::vector<QVec>> mats;
        for (const auto& s : samples) {
            std::vector<QVec> a(partitions.size(), QVec(static_cast<size_t>(n) + 1));
            for (size_t i = 0; i < partitions.size(); ++i)
                for (int k = 0; k <= n; ++k)
                    a[i][static_cast<size_t>(k)] = coeff_c(n, k, partitions[i]).eval(s);
            mats.push_back(std::move(a));
        }
        budget.check("double description setup");
        std::vector<std::future<std::vector<std::vector<mpz_class>>>> jobs;
        for (const auto& m : mats)
            jobs.push_back(std::async(std::launch::async, [&m] { return extreme_rays(m); }));
        std::vector<std::vector<std::vector<mpz_class>>> rays(samples.size());
        for (size_t i = 0; i < jobs.size(); ++i) rays[i] = jobs[i].get();

        for (size_t i = 0; i < samples.size(); ++i) {
            std::ostringstream os;
            os << "double description at q=" << samples[i] << ": " << rays[i].size()
               << " extreme rays";
            rep.notes.push_back(os.str());
        }
        for (size_t i = 1; i < samples.size(); ++i)
            if (rays[i].size() != rays[0].size()) {
                std::ostringstream os;
                os << "sample disagreement: ray counts differ between q=" << samples[0]
                   << " and q=" << samples[i];
                rep.notes.push_back(os.str());
            }

        // zero-support patterns per sample
        auto pattern_of = [&](const std::vector<QVec>& a, const std::vector<mpz_class>& ray) {
            std::vector<bool> zero(a.size());
            for (size_t i = 0; i < a.size(); ++i) {
                mpq_class acc = 0;
                for (size_t k = 0; k < ray.size(); ++k) acc += a[i][k] * mpq_class(ray[k]);
                zero[i] = (acc == 0);
            }
            return zero;
        };
        std::map<std::vector<bool>, int> pattern_hits;
        for (size_t i = 0; i < samples.size(); ++i)
            for (const auto& r : rays[i]) ++pattern_hits[pattern_of(mats[i], r)];
        for (const auto& [pattern, hits] : pattern_hits) {
            budget.check("symbolic lift");
            if (hits != static_cast<int>(samples.size())) {
                std::ostringstream os;
                os << "sample disagreement: a zero pattern appeared in " << hits << " of "
                   << samples.size() << " samples";
                rep.notes.push_back(os.str());
                continue;
            }
            // lift: solve the tight rows symbolically
            PolyMatrix tight;
            for (size_t i = 0; i < partitions.size(); ++i) {
                if (!pattern[i]) continue;
                std::vector<IntPoly> row;
                for (int k = 0; k <= n; ++k) row.push_back(coeff_c(n, k, partitions[i]));
                tight.push_back(std::move(row));
            }
            auto x = kernel_vector(tight);
            if (!x) {
                rep.notes.push_back(
                    "lift failed: tight system has no one-dimensional kernel");
                continue;
            }
            PsiCoeffs cand_psi(n);
            for (int k = 0; k <= n; ++k) cand_psi[k] = (*x)[static_cast<size_t>(k)];
            BlockVector cand = to_blocks(cand_psi);
            // orient along the sampled ray
            int orientation = 0;
            for (const auto& [lam, c] : cand.coeffs()) {
                const mpq_class v = eval_or_throw(c, samples[0]);
                if (v != 0) {
                    orientation = sgn(v.get_num());
                    break;
                }
            }
            if (orientation < 0) {
                cand = RatFunc(-1L) * cand;
                for (int k = 0; k <= n; ++k) cand_psi[k] = -cand_psi[k];
            }
            // symbolic nonnegativity on every block coefficient
            bool character = true;
            for (const auto& [lam, c] : cand.coeffs()) {
                const SignVerdict v = sign_on_q_gt_1(c);
                if (!v.nonnegative()) {
                    std::ostringstream os;
                    os << "lifted ray rejected: coefficient at " << lam.str()
                       << " is not nonnegative on q > 1";
                    rep.notes.push_back(os.str());
                    character = false;
                    break;
                }
                if (!v.positive()) {
                    std::ostringstream os;
                    os << "lifted ray note: coefficient at " << lam.str()
                       << " touches zero on q > 1";
                    rep.notes.push_back(os.str());
                }
            }
            if (!character) continue;
            // skip rays that reproduce a tau
            bool is_tau = false;
            for (const auto& tau : cb.taus) {
                if (tau.support() != cand.support()) continue;
                const Partition lam0 = tau.support().front();
                const RatFunc factor = tau.coeff(lam0) / cand.coeff(lam0);
                BlockVector scaled = factor * cand;
                if (scaled == tau) {
                    is_tau = true;
                    break;
                }
            }
            if (is_tau) continue;
            int pivot = 0;
            while (pivot <= n && cand_psi[pivot].is_zero()) ++pivot;
            if (!is_extreme(cand, lemma15_basis(cand, pivot, psis))) {
                rep.notes.push_back("lifted ray rejected: not extreme by the rank test");
                continue;
            }
            rep.extremes.push_back(cand);
            rep.extremes_psi.push_back(cand_psi);
            rep.eigendiagram_of.push_back(std::nullopt);
            rep.notes.push_back("additional extreme ray confirmed symbolically");
        }
        if (rep.extremes.size() != rays[0].size()) {
            std::ostringstream os;
            os << "note: " << rep.extremes.size() << " symbolic extremes vs " << rays[0].size()
               << " sampled rays";
            rep.notes.push_back(os.str());
        }
    } catch (const BudgetExceeded& e) {
        rep.complete = false;
        rep.notes.push_back(std::string("incomplete: ") + e.what() +
                            "; extremes list may be missing rays");
    }
    return rep;
}

std::vector<ProbeRow> unipotent_conjecture_probe(int n, const mpq_class& qstar) {
    if (qstar <= 2) throw PreconditionViolation("unipotent_conjecture_probe: need q* > 2");
    std::vector<QVec> gens;
    for (const auto& mu : partitions_of(n)) {
        QVec row(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) row[static_cast<size_t>(k)] = coeff_c(n, k, mu).eval(qstar);
        gens.push_back(std::move(row));
    }
    {
        QVec empty_row(static_cast<size_t>(n) + 1, mpq_class(0));
        empty_row[static_cast<size_t>(n)] = 1;  // c_k(empty) = delta_{kn}
        gens.push_back(std::move(empty_row));
    }
    std::vector<ProbeRow> out;
    for (const auto& lam : all_partitions_up_to(n)) {
        if (lam.size() == n) continue;
        QVec v(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) v[static_cast<size_t>(k)] = coeff_c(n, k, lam).eval(qstar);
        LpResult lp = nonnegative_combination(gens, v);
        out.push_back({lam, lp.feasible, lp.feasible ? lp.weights : lp.farkas});
    }
    return out;
}

int rank_blocks(int n, int j) {
    if (j < 0 || j > n) throw PreconditionViolation("rank_blocks: j out of range");
    PolyMatrix m;
    for (const auto& lam : partitions_of(n - j)) {
        std::vector<IntPoly> row;
        for (int k = 0; k <= n; ++k) row.push_back(coeff_c(n, k, lam));
        m.push_back(std::move(row));
    }
    return bareiss_rank(m);
}

} // namespace qderange
