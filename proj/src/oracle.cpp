#include "qderange/oracle.hpp"

#include <numeric>

#include "qderange/errors.hpp"

namespace qderange {

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long gl_order_long(int n, int p) {
    long o = 1;
    const long pn = ipow(p, n);
    for (int i = 0; i < n; ++i) o *= pn - ipow(p, i);
    return o;
}

// rank of an r x c matrix over F_p, destroying its argument
int rank_mod_p(std::vector<int> m, int rows, int cols, int p) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m[static_cast<size_t>(i * cols + col)] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j)
            std::swap(m[static_cast<size_t>(rank * cols + j)], m[static_cast<size_t>(piv * cols + j)]);
        // scale pivot row to 1
        int inv = 1;
        const int pv = ((m[static_cast<size_t>(rank * cols + col)] % p) + p) % p;
        for (int x = 1; x < p; ++x)
            if (x * pv % p == 1) {
                inv = x;
                break;
            }
        for (int j = 0; j < cols; ++j)
            m[static_cast<size_t>(rank * cols + j)] =
                m[static_cast<size_t>(rank * cols + j)] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const int f = ((m[static_cast<size_t>(i * cols + col)] % p) + p) % p;
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j) {
                int v = m[static_cast<size_t>(i * cols + j)] -
                        f * m[static_cast<size_t>(rank * cols + j)];
                m[static_cast<size_t>(i * cols + j)] = ((v % p) + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

FFMatrix::FFMatrix(int n, int p, std::vector<int> entries) : n_(n), p_(p), e_(std::move(entries)) {
    if (static_cast<int>(e_.size()) != n * n)
        throw PreconditionViolation("FFMatrix: wrong entry count");
    for (auto& x : e_) x = ((x % p) + p) % p;
    if (rank_mod_p(e_, n_, n_, p_) != n_)
        throw PreconditionViolation("FFMatrix: matrix not invertible mod p");
}

FFMatrix FFMatrix::mul(const FFMatrix& o) const {
    if (o.n_ != n_ || o.p_ != p_) throw PreconditionViolation("FFMatrix: shape mismatch");
    FFMatrix r;
    r.n_ = n_;
    r.p_ = p_;
    r.e_.assign(static_cast<size_t>(n_ * n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const int a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j)
                r.e_[static_cast<size_t>(i * n_ + j)] =
                    (r.e_[static_cast<size_t>(i * n_ + j)] + a * o.at(k, j)) % p_;
        }
    return r;
}

FFMatrix FFMatrix::inverse() const {
    // Gauss-Jordan on [A | I]
    const int n = n_, p = p_;
    std::vector<int> m(static_cast<size_t>(n * 2 * n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i * 2 * n + j)] = at(i, j);
        m[static_cast<size_t>(i * 2 * n + n + i)] = 1;
    }
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (m[static_cast<size_t>(i * 2 * n + col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::logic_error("FFMatrix::inverse: singular");
        for (int j = 0; j < 2 * n; ++j)
            std::swap(m[static_cast<size_t>(rank * 2 * n + j)], m[static_cast<size_t>(piv * 2 * n + j)]);
        int inv = 1;
        const int pv = m[static_cast<size_t>(rank * 2 * n + col)];
        for (int x = 1; x < p; ++x)
            if (x * pv % p == 1) {
                inv = x;
                break;
            }
        for (int j = 0; j < 2 * n; ++j)
            m[static_cast<size_t>(rank * 2 * n + j)] = m[static_cast<size_t>(rank * 2 * n + j)] * inv % p;
        for (int i = 0; i < n; ++i) {
            if (i == rank) continue;
            const int f = m[static_cast<size_t>(i * 2 * n + col)];
            if (f == 0) continue;
            for (int j = 0; j < 2 * n; ++j) {
                int v = m[static_cast<size_t>(i * 2 * n + j)] - f * m[static_cast<size_t>(rank * 2 * n + j)];
                m[static_cast<size_t>(i * 2 * n + j)] = ((v % p) + p) % p;
            }
        }
        ++rank;
    }
    std::vector<int> inv_entries(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv_entries[static_cast<size_t>(i * n + j)] = m[static_cast<size_t>(i * 2 * n + n + j)];
    return FFMatrix(n, p, std::move(inv_entries));
}

std::vector<FFMatrix> enumerate_gl(int n, int p) {
    const long order = gl_order_long(n, p);
    if (order > 20000) throw SizeGuard("enumerate_gl: |GL(n,p)| exceeds 20000");
    std::vector<FFMatrix> out;
    out.reserve(static_cast<size_t>(order));
    const long total = ipow(p, n * n);
    std::vector<int> e(static_cast<size_t>(n * n));
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (auto& x : e) {
            x = static_cast<int>(c % p);
            c /= p;
        }
        if (rank_mod_p(e, n, n, p) == n) out.emplace_back(n, p, e);
    }
    if (static_cast<long>(out.size()) != order)
        throw std::logic_error("enumerate_gl: count mismatch with the group order");
    return out;
}

int r_of(const FFMatrix& g) {
    const int n = g.n();
    std::vector<int> m(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = g.at(i, j) - (i == j ? 1 : 0);
            m[static_cast<size_t>(i * n + j)] = ((v % g.p()) + g.p()) % g.p();
        }
    return n - rank_mod_p(std::move(m), n, n, g.p());
}

long count_fixed(const FFMatrix& g, int k, bool rank_exact) {
    const int n = g.n();
    const int p = g.p();
    if (k < 0) throw PreconditionViolation("count_fixed: negative k");
    const long total = ipow(p, n * k);
    if (total > 20000) throw SizeGuard("count_fixed: p^(n k) exceeds 20000");
    if (k == 0) return 1;  // the empty matrix
    long count = 0;
    std::vector<int> x(static_cast<size_t>(n * k));
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (auto& v : x) {
            v = static_cast<int>(c % p);
            c /= p;
        }
        // g x == x
        bool fixed = true;
        for (int i = 0; i < n && fixed; ++i)
            for (int j = 0; j < k && fixed; ++j) {
                int acc = 0;
                for (int t = 0; t < n; ++t) acc += g.at(i, t) * x[static_cast<size_t>(t * k + j)];
                if (((acc % p) + p) % p != x[static_cast<size_t>(i * k + j)]) fixed = false;
            }
        if (!fixed) continue;
        if (rank_exact && rank_mod_p(x, n, k, p) != k) continue;
        ++count;
    }
    return count;
}

PsdReport certify_psd(const std::vector<mpq_class>& values, const std::vector<FFMatrix>& group) {
    if (group.size() > 500) throw SizeGuard("certify_psd: group larger than 500");
    if (group.empty()) throw PreconditionViolation("certify_psd: empty group");
    const int n = group[0].n();
    if (static_cast<int>(values.size()) != n + 1)
        throw PreconditionViolation("certify_psd: need n+1 values");
    const size_t m = group.size();
    // Gram matrix M[g,h] = f(r(g h^-1))
    std::vector<FFMatrix> inverses;
    inverses.reserve(m);
    for (const auto& g : group) inverses.push_back(g.inverse());
    std::vector<std::vector<mpq_class>> gram(m, std::vector<mpq_class>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            gram[i][j] = values[static_cast<size_t>(r_of(group[i].mul(inverses[j])))];

    // symmetric elimination with diagonal pivoting; PSD iff every pivot is
    // positive and any zero-diagonal remainder is entirely zero
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> used_pivots;
    mpq_class pivot_product = 1;  // determinant of the pivoted principal block
    size_t head = 0;
    PsdReport rep;
    while (head < m) {
        // pick a strictly positive diagonal entry
        size_t pick = m;
        for (size_t i = head; i < m; ++i)
            if (gram[static_cast<size_t>(order[i])][static_cast<size_t>(order[i])] > 0) {
                pick = i;
                break;
            }
        if (pick == m) {
            // all remaining Schur-complement diagonals are <= 0
            for (size_t i = head; i < m; ++i) {
                const int oi = order[i];
                const mpq_class d = gram[static_cast<size_t>(oi)][static_cast<size_t>(oi)];
                if (d < 0) {
                    rep.psd = false;
                    rep.failing_minor = used_pivots;
                    rep.failing_minor.push_back(oi);
                    rep.failing_minor_det = pivot_product * d;
                    rep.failing_minor_det.canonicalize();
                    rep.detail = "negative diagonal in the Schur complement";
                    return rep;
                }
            }
            for (size_t i = head; i < m; ++i)
                for (size_t j = head; j < m; ++j) {
                    const int oi = order[i], oj = order[j];
                    const mpq_class a = gram[static_cast<size_t>(oi)][static_cast<size_t>(oj)];
                    if (a != 0) {
                        // [[0, a],[a, 0]] below the positive pivots
                        rep.psd = false;
                        rep.failing_minor = used_pivots;
                        rep.failing_minor.push_back(oi);
                        rep.failing_minor.push_back(oj);
                        rep.failing_minor_det = pivot_product * (-a * a);
                        rep.failing_minor_det.canonicalize();
                        rep.detail = "nonzero off-diagonal against a zero diagonal";
                        return rep;
                    }
                }
            break;  // remainder identically zero
        }
        std::swap(order[head], order[pick]);
        const int op = order[head];
        const mpq_class pivot = gram[static_cast<size_t>(op)][static_cast<size_t>(op)];
        for (size_t i = head + 1; i < m; ++i) {
            const int oi = order[i];
            const mpq_class f = gram[static_cast<size_t>(oi)][static_cast<size_t>(op)] / pivot;
            if (f == 0) continue;
            for (size_t j = head + 1; j < m; ++j) {
                const int oj = order[j];
                gram[static_cast<size_t>(oi)][static_cast<size_t>(oj)] -=
                    f * gram[static_cast<size_t>(op)][static_cast<size_t>(oj)];
                gram[static_cast<size_t>(oi)][static_cast<size_t>(oj)].canonicalize();
            }
        }
        used_pivots.push_back(op);
        pivot_product *= pivot;
        pivot_product.canonicalize();
        ++head;
    }
    rep.psd = true;
    rep.detail = "all pivots positive";
    return rep;
}

} // namespace qderange
