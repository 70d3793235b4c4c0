#include "qderange/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "qderange/errors.hpp"

namespace qderange {

namespace {

// fraction-free elimination; returns rank and (optionally) the original
// indices of the pivot rows
int bareiss_eliminate(PolyMatrix m, std::vector<int>* pivot_rows) {
    const int nr = static_cast<int>(m.size());
    const int nc = nr == 0 ? 0 : static_cast<int>(m[0].size());
    std::vector<int> row_origin(nr);
    for (int i = 0; i < nr; ++i) row_origin[i] = i;
    IntPoly prev(1L);
    int r = 0;
    for (int col = 0; col < nc && r < nr; ++col) {
        int best = -1;
        for (int i = r; i < nr; ++i) {
            if (m[i][col].is_zero()) continue;
            if (best < 0 || m[i][col].degree() < m[best][col].degree()) best = i;
        }
        if (best < 0) continue;
        std::swap(m[r], m[best]);
        std::swap(row_origin[r], row_origin[best]);
        const IntPoly pivot = m[r][col];
        for (int i = r + 1; i < nr; ++i) {
            for (int j = col + 1; j < nc; ++j) {
                IntPoly t = m[i][j] * pivot - m[i][col] * m[r][j];
                auto e = t.divided_exactly(prev);
                if (!e) throw InexactDivision("bareiss: inexact step");
                m[i][j] = std::move(*e);
            }
            m[i][col] = IntPoly();
        }
        prev = pivot;
        if (pivot_rows) pivot_rows->push_back(row_origin[r]);
        ++r;
    }
    return r;
}

PolyMatrix clear_denominators(const RatFuncMatrix& m) {
    PolyMatrix out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        IntPoly lcm(1L);
        for (const auto& e : m[i]) {
            const IntPoly g = poly_gcd(lcm, e.den());
            lcm = *(lcm * e.den()).divided_exactly(g);
        }
        out[i].reserve(m[i].size());
        for (const auto& e : m[i]) {
            const IntPoly cofactor = *lcm.divided_exactly(e.den());
            out[i].push_back(e.num() * cofactor);
        }
    }
    return out;
}

} // namespace

int rank_q(QMatrix m) {
    const int nr = static_cast<int>(m.size());
    const int nc = nr == 0 ? 0 : static_cast<int>(m[0].size());
    int r = 0;
    for (int col = 0; col < nc && r < nr; ++col) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < nr; ++i) {
            if (m[i][col] == 0) continue;
            mpq_class f = m[i][col] / m[r][col];
            f.canonicalize();
            for (int j = col; j < nc; ++j) {
                m[i][j] -= f * m[r][j];
                m[i][j].canonicalize();
            }
        }
        ++r;
    }
    return r;
}

int rank_at(const PolyMatrix& m, const mpq_class& x) {
    QMatrix q(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        q[i].reserve(m[i].size());
        for (const auto& e : m[i]) q[i].push_back(e.eval(x));
    }
    return rank_q(std::move(q));
}

int rank_at(const RatFuncMatrix& m, const mpq_class& x) {
    return rank_at(clear_denominators(m), x);
}

int bareiss_rank(const PolyMatrix& m) {
    const int symbolic = bareiss_eliminate(m, nullptr);
    int numeric = 0;
    for (const int p : {3, 5, 7}) numeric = std::max(numeric, rank_at(m, mpq_class(p)));
    if (numeric > symbolic) throw InexactDivision("bareiss_rank: numeric rank exceeds symbolic");
    return symbolic;
}

int bareiss_rank(const RatFuncMatrix& m) { return bareiss_rank(clear_denominators(m)); }

IntPoly bareiss_determinant(PolyMatrix m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return IntPoly(1L);
    assert(static_cast<int>(m[0].size()) == n);
    IntPoly prev(1L);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return IntPoly();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                IntPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto e = t.divided_exactly(prev);
                if (!e) throw InexactDivision("bareiss determinant");
                m[i][j] = std::move(*e);
            }
            m[i][k] = IntPoly();
        }
        prev = m[k][k];
    }
    IntPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::optional<std::vector<RatFunc>> kernel_vector(const PolyMatrix& m) {
    if (m.empty()) return std::nullopt;
    const int d = static_cast<int>(m[0].size());
    std::vector<int> pivots;
    const int rank = bareiss_eliminate(m, &pivots);
    if (rank != d - 1) return std::nullopt;
    // kernel vector from signed maximal minors of the pivot-row submatrix
    PolyMatrix s(pivots.size());
    for (size_t i = 0; i < pivots.size(); ++i) s[i] = m[static_cast<size_t>(pivots[i])];
    std::vector<RatFunc> v(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        PolyMatrix minor(s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            minor[i].reserve(static_cast<size_t>(d - 1));
            for (int c = 0; c < d; ++c)
                if (c != j) minor[i].push_back(s[i][static_cast<size_t>(c)]);
        }
        IntPoly det = bareiss_determinant(std::move(minor));
        v[static_cast<size_t>(j)] = RatFunc((j % 2) ? -det : det);
    }
    RatFunc lead;
    for (const auto& x : v)
        if (!x.is_zero()) {
            lead = x;
            break;
        }
    if (lead.is_zero()) return std::nullopt;
    for (auto& x : v) x /= lead;
    // exactness check: M v must vanish identically
    for (const auto& row : m) {
        RatFunc acc;
        for (int j = 0; j < d; ++j) acc += RatFunc(row[static_cast<size_t>(j)]) * v[static_cast<size_t>(j)];
        if (!acc.is_zero()) throw InexactDivision("kernel_vector: residual nonzero");
    }
    return v;
}

} // namespace qderange
