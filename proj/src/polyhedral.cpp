#include "qderange/polyhedral.hpp"

#include <algorithm>
#include <cassert>

#include "qderange/errors.hpp"
#include "qderange/linalg.hpp"

namespace qderange {

namespace {

mpq_class dot(const QVec& a, const QVec& b) {
    mpq_class s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    s.canonicalize();
    return s;
}

std::vector<mpz_class> normalize_ray(const QVec& v) {
    mpz_class lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> out(v.size());
    mpz_class gcd = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = mpz_class(v[i].get_num() * (lcm / v[i].get_den()));
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), out[i].get_mpz_t());
    }
    if (gcd > 1)
        for (auto& x : out) x /= gcd;
    return out;
}

struct Ray {
    QVec x;
    std::vector<bool> tight;  // per processed constraint
};

// extremality of a ray relative to the processed constraints: the rows tight
// at the ray must have rank d-1
bool ray_is_extreme(const std::vector<QVec>& a, size_t processed, const Ray& r) {
    const size_t d = r.x.size();
    QMatrix tight_rows;
    for (size_t c = 0; c < processed; ++c)
        if (r.tight[c]) tight_rows.push_back(a[c]);
    return rank_q(std::move(tight_rows)) == static_cast<int>(d) - 1;
}

} // namespace

std::vector<std::vector<mpz_class>> extreme_rays(const std::vector<QVec>& a0) {
    if (a0.empty()) throw PreconditionViolation("extreme_rays: empty constraint matrix");
    const size_t d = a0[0].size();
    // process a maximal independent subset first, so the intermediate cone is
    // pointed from step d onward and the extremality/adjacency ranks below
    // are meaningful for every double-description step
    std::vector<QVec> a;
    a.reserve(a0.size());
    {
        std::vector<size_t> first, rest;
        QMatrix echelon;
        for (size_t i = 0; i < a0.size(); ++i) {
            echelon.push_back(a0[i]);
            if (rank_q(echelon) == static_cast<int>(first.size()) + 1)
                first.push_back(i);
            else {
                echelon.pop_back();
                rest.push_back(i);
            }
        }
        for (const size_t i : first) a.push_back(a0[i]);
        for (const size_t i : rest) a.push_back(a0[i]);
    }
    // lineality basis of the not-yet-pointed part; kept orthogonal to every
    // processed constraint, so it shrinks to empty when A has full column rank
    std::vector<QVec> lineality(d, QVec(d, 0));
    for (size_t i = 0; i < d; ++i) lineality[i][i] = 1;
    std::vector<Ray> rays;
    size_t processed = 0;

    for (const auto& row : a) {
        if (!lineality.empty()) {
            size_t wi = lineality.size();
            for (size_t i = 0; i < lineality.size(); ++i)
                if (dot(row, lineality[i]) != 0) {
                    wi = i;
                    break;
                }
            if (wi < lineality.size()) {
                QVec wvec = lineality[wi];
                if (dot(row, wvec) < 0)
                    for (auto& x : wvec) x = -x;
                const mpq_class ws = dot(row, wvec);
                lineality.erase(lineality.begin() + static_cast<long>(wi));
                for (auto& l : lineality) {
                    const mpq_class c = dot(row, l) / ws;
                    for (size_t i = 0; i < d; ++i) {
                        l[i] -= c * wvec[i];
                        l[i].canonicalize();
                    }
                }
                // lineality vectors vanish on all processed rows, so the
                // projections below change no earlier tightness flag
                for (auto& r : rays) {
                    const mpq_class c = dot(row, r.x) / ws;
                    if (c != 0)
                        for (size_t i = 0; i < d; ++i) {
                            r.x[i] -= c * wvec[i];
                            r.x[i].canonicalize();
                        }
                    r.tight.push_back(true);
                }
                Ray nr{std::move(wvec), std::vector<bool>(processed, true)};
                nr.tight.push_back(false);
                rays.push_back(std::move(nr));
                ++processed;
                if (lineality.empty()) {
                    // entering the pointed phase: restrict the description to
                    // the extreme rays, which still generate the cone
                    std::vector<Ray> kept;
                    for (auto& r : rays)
                        if (ray_is_extreme(a, processed, r)) kept.push_back(std::move(r));
                    rays = std::move(kept);
                }
                continue;
            }
        }
        // double description step on the pointed cone
        std::vector<size_t> pos, neg, zero;
        std::vector<mpq_class> val(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(row, rays[i].x);
            const int s = sgn(val[i].get_num());
            if (s > 0)
                pos.push_back(i);
            else if (s < 0)
                neg.push_back(i);
            else
                zero.push_back(i);
        }
        std::vector<Ray> next;
        for (const size_t i : pos) {
            next.push_back(rays[i]);
            next.back().tight.push_back(false);
        }
        for (const size_t i : zero) {
            next.push_back(rays[i]);
            next.back().tight.push_back(true);
        }
        for (const size_t ip : pos)
            for (const size_t in : neg) {
                // algebraic adjacency: the common tight rows span a face of
                // dimension 2, i.e. have rank d-2
                QMatrix common;
                for (size_t c = 0; c < processed; ++c)
                    if (rays[ip].tight[c] && rays[in].tight[c]) common.push_back(a[c]);
                if (rank_q(std::move(common)) != static_cast<int>(d) - 2) continue;
                Ray nr;
                nr.x.resize(d);
                for (size_t c = 0; c < d; ++c) {
                    nr.x[c] = val[ip] * rays[in].x[c] - val[in] * rays[ip].x[c];
                    nr.x[c].canonicalize();
                }
                nr.tight.resize(processed + 1);
                for (size_t c = 0; c < processed; ++c) nr.tight[c] = (dot(a[c], nr.x) == 0);
                nr.tight[processed] = true;
                // keep the description minimal: admit only genuine extreme rays
                if (!ray_is_extreme(a, processed + 1, nr)) continue;
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
        ++processed;
    }
    if (!lineality.empty())
        throw PreconditionViolation("extreme_rays: constraint matrix not full column rank");

    std::vector<std::vector<mpz_class>> out;
    out.reserve(rays.size());
    for (const auto& r : rays) out.push_back(normalize_ray(r.x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LpResult nonnegative_combination(const std::vector<QVec>& g, const QVec& v) {
    const size_t dim = v.size();
    const size_t m = g.size();
    for (const auto& row : g) assert(row.size() == dim);
    // phase-1 simplex:  min sum(s)  s.t.  sum_i y_i g_i + D s = v, y,s >= 0
    // tableau columns: y_0..y_{m-1}, s_0..s_{dim-1} | rhs
    std::vector<QVec> t(dim, QVec(m + dim + 1, 0));
    std::vector<int> sign(dim, 1);
    for (size_t r = 0; r < dim; ++r) {
        sign[r] = (sgn(v[r].get_num()) < 0) ? -1 : 1;
        for (size_t c = 0; c < m; ++c) t[r][c] = sign[r] * g[c][r];
        t[r][m + r] = 1;
        t[r][m + dim] = sign[r] * v[r];
    }
    std::vector<size_t> basis(dim);
    for (size_t r = 0; r < dim; ++r) basis[r] = m + r;

    // reduced-cost row for min sum(s) under the all-artificial basis
    QVec obj(m + dim + 1, 0);
    for (size_t c = 0; c <= m + dim; ++c) {
        mpq_class s = 0;
        for (size_t r = 0; r < dim; ++r) s += t[r][c];
        s.canonicalize();
        obj[c] = -s;
    }
    for (size_t r = 0; r < dim; ++r) obj[m + r] = 0;

    auto pivot = [&](size_t pr, size_t pc) {
        const mpq_class pv = t[pr][pc];
        for (auto& x : t[pr]) {
            x /= pv;
            x.canonicalize();
        }
        for (size_t r = 0; r < dim; ++r) {
            if (r == pr || t[r][pc] == 0) continue;
            const mpq_class f = t[r][pc];
            for (size_t c = 0; c <= m + dim; ++c) {
                t[r][c] -= f * t[pr][c];
                t[r][c].canonicalize();
            }
        }
        if (obj[pc] != 0) {
            const mpq_class f = obj[pc];
            for (size_t c = 0; c <= m + dim; ++c) {
                obj[c] -= f * t[pr][c];
                obj[c].canonicalize();
            }
        }
        basis[pr] = pc;
    };

    while (true) {
        // Bland's rule: first improving column, smallest-index leaving basic
        size_t pc = m + dim;
        for (size_t c = 0; c < m + dim; ++c)
            if (obj[c] < 0) {
                pc = c;
                break;
            }
        if (pc == m + dim) break;
        size_t pr = dim;
        mpq_class best;
        for (size_t r = 0; r < dim; ++r) {
            if (t[r][pc] <= 0) continue;
            mpq_class ratio = t[r][m + dim] / t[r][pc];
            ratio.canonicalize();
            if (pr == dim || ratio < best || (ratio == best && basis[r] < basis[pr])) {
                pr = r;
                best = ratio;
            }
        }
        if (pr == dim) throw PreconditionViolation("nonnegative_combination: unbounded phase-1");
        pivot(pr, pc);
    }

    LpResult out;
    const mpq_class opt = -obj[m + dim];
    if (opt == 0) {
        out.feasible = true;
        out.weights.assign(m, mpq_class(0));
        for (size_t r = 0; r < dim; ++r)
            if (basis[r] < m) out.weights[basis[r]] = t[r][m + dim];
        for (size_t c = 0; c < dim; ++c) {
            mpq_class s = 0;
            for (size_t i = 0; i < m; ++i) s += out.weights[i] * g[i][c];
            s.canonicalize();
            if (s != v[c]) throw std::logic_error("nonnegative_combination: weights fail");
        }
        return out;
    }
    // Farkas vector from the reduced costs of the artificial columns:
    // pi_r = 1 - obj[m+r], w_r = -pi_r * sign_r
    out.feasible = false;
    QVec w(dim, 0);
    for (size_t r = 0; r < dim; ++r) {
        w[r] = -(mpq_class(1) - obj[m + r]) * sign[r];
        w[r].canonicalize();
    }
    for (const auto& row : g)
        if (dot(w, row) < 0)
            throw std::logic_error("nonnegative_combination: certificate fails on a generator");
    if (dot(w, v) >= 0)
        throw std::logic_error("nonnegative_combination: certificate fails on the target");
    out.farkas = std::move(w);
    return out;
}

} // namespace qderange
