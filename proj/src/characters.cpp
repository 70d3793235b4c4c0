#include "qderange/characters.hpp"

#include <mutex>
#include <unordered_map>

#include "qderange/cache.hpp"
#include "qderange/errors.hpp"
#include "qderange/sign.hpp"

namespace qderange {

namespace {

const RatFunc kZeroRF;

struct CKey {
    int n, k;
    Partition lambda;
    bool operator==(const CKey& o) const { return n == o.n && k == o.k && lambda == o.lambda; }
};

struct CKeyHash {
    size_t operator()(const CKey& key) const noexcept {
        size_t h = std::hash<Partition>()(key.lambda);
        h ^= static_cast<size_t>(key.n) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<size_t>(key.k) * 0xc2b2ae3d27d4eb4full;
        return h;
    }
};

std::mutex g_dim_mu;
std::unordered_map<Partition, IntPoly> g_dim_cache;

std::mutex g_c_mu;
std::unordered_map<CKey, IntPoly, CKeyHash> g_c_cache;
// levels whose full table is already in g_c_cache (computed or disk-loaded)
std::unordered_map<int, bool> g_c_level_done;

std::mutex g_rho_mu;
std::vector<IntPoly> g_rho_cache;

IntPoly coeff_c_nomemo(int n, int k, const Partition& lambda);

IntPoly coeff_c_memo(int n, int k, const Partition& lambda) {
    const CKey key{n, k, lambda};
    {
        std::lock_guard<std::mutex> lock(g_c_mu);
        auto it = g_c_cache.find(key);
        if (it != g_c_cache.end()) return it->second;
    }
    IntPoly value = coeff_c_nomemo(n, k, lambda);
    std::lock_guard<std::mutex> lock(g_c_mu);
    return g_c_cache.emplace(key, std::move(value)).first->second;
}

IntPoly coeff_c_nomemo(int n, int k, const Partition& lambda) {
    if (lambda.first_row() < n - k) return IntPoly();
    const int j = n - lambda.size();
    if (j > k) return IntPoly();
    if (j > 0) return q_binomial(k, j) * coeff_c_memo(n - j, k - j, lambda);
    // |lambda| = n
    const int strip = n - k;
    if (lambda.part(1) <= strip && strip <= lambda.part(0)) {
        const Partition nu = lambda.drop_first_row();
        return q_binomial(k, lambda.part(0) - strip) * unipotent_dim(nu);
    }
    IntPoly sum;
    for (const auto& mu : hstrip_minus(lambda, strip)) sum += unipotent_dim(mu);
    return sum;
}

} // namespace

IntPoly gl_order(int n) {
    IntPoly r(1L);
    for (int i = 0; i < n; ++i) r *= IntPoly::q_pow(n) - IntPoly::q_pow(i);
    return r;
}

IntPoly unipotent_dim(const Partition& lambda) {
    {
        std::lock_guard<std::mutex> lock(g_dim_mu);
        auto it = g_dim_cache.find(lambda);
        if (it != g_dim_cache.end()) return it->second;
    }
    const int n = lambda.size();
    IntPoly num(1L);
    for (int i = 1; i <= n; ++i) num *= IntPoly::q_pow(i) - IntPoly(1L);
    IntPoly den(1L);
    for (const int h : hook_lengths(lambda)) den *= IntPoly::q_pow(h) - IntPoly(1L);
    auto quot = num.divided_exactly(den);
    if (!quot) throw InexactDivision("unipotent_dim: hook product does not divide");
    IntPoly value = quot->times_q_pow(static_cast<int>(n_stat(lambda)));
    std::lock_guard<std::mutex> lock(g_dim_mu);
    return g_dim_cache.emplace(lambda, std::move(value)).first->second;
}

IntPoly dim_rho(int m) {
    if (m < 0) throw PreconditionViolation("dim_rho: negative level");
    {
        std::lock_guard<std::mutex> lock(g_rho_mu);
        if (m < static_cast<int>(g_rho_cache.size())) return g_rho_cache[static_cast<size_t>(m)];
    }
    // |G_m| = sum over blocks of (binom(m,|lambda|) dim lambda)^2 dim rho_{m-|lambda|};
    // the lambda = empty term is dim rho_m itself
    IntPoly value;
    if (m == 0) {
        value = IntPoly(1L);
    } else {
        value = gl_order(m);
        for (const auto& lam : all_partitions_up_to(m)) {
            if (lam.empty()) continue;
            IntPoly d = q_binomial(m, lam.size()) * unipotent_dim(lam);
            value -= d * d * dim_rho(m - lam.size());
        }
    }
    std::lock_guard<std::mutex> lock(g_rho_mu);
    // the recursion above has already cached every smaller level
    if (m == static_cast<int>(g_rho_cache.size())) g_rho_cache.push_back(value);
    return value;
}

IntPoly block_dim(int n, const Partition& lambda) {
    if (lambda.size() > n) throw PreconditionViolation("block_dim: |lambda| > n");
    return q_binomial(n, lambda.size()) * unipotent_dim(lambda) * dim_rho(n - lambda.size());
}

IntPoly coeff_c(int n, int k, const Partition& lambda) {
    if (lambda.size() > n) throw PreconditionViolation("coeff_c: |lambda| > n");
    if (k < 0 || k > n) throw PreconditionViolation("coeff_c: k out of range");
    return coeff_c_memo(n, k, lambda);
}

IntPoly coeff_c_direct(int n, int k, const Partition& lambda) {
    if (lambda.size() > n) throw PreconditionViolation("coeff_c_direct: |lambda| > n");
    if (lambda.first_row() < n - k) return IntPoly();
    IntPoly sum;
    for (const auto& mu : hstrip_minus(lambda, n - k)) sum += unipotent_dim(mu);
    return q_binomial(k, n - lambda.size()) * sum;
}

namespace {

void ensure_level_table(int n) {
    {
        std::lock_guard<std::mutex> lock(g_c_mu);
        if (g_c_level_done[n]) return;
    }
    if (auto loaded = load_ctable(n)) {
        std::lock_guard<std::mutex> lock(g_c_mu);
        for (auto& e : *loaded)
            g_c_cache.emplace(CKey{n, e.k, std::move(e.lambda)}, std::move(e.value));
        g_c_level_done[n] = true;
        return;
    }
    std::vector<CTableEntry> entries;
    for (const auto& lam : all_partitions_up_to(n))
        for (int k = 0; k <= n; ++k) entries.push_back({k, lam, coeff_c_memo(n, k, lam)});
    store_ctable(n, entries);
    std::lock_guard<std::mutex> lock(g_c_mu);
    g_c_level_done[n] = true;
}

} // namespace

BlockVector psi_block(int n, int k) {
    if (k < 0 || k > n) throw PreconditionViolation("psi_block: k out of range");
    ensure_level_table(n);
    BlockVector v(n);
    for (const auto& lam : all_partitions_up_to(n)) {
        IntPoly c = coeff_c_memo(n, k, lam);
        if (!c.is_zero()) v.set(lam, RatFunc(std::move(c)));
    }
    return v;
}

PsiCoeffs sigma_in_psi(int n, int k) {
    if (k < 0 || k > n) throw PreconditionViolation("sigma_in_psi: k out of range");
    PsiCoeffs f(n);
    for (int j = 0; j <= k; ++j) f[j] = RatFunc(q_binomial(k, j));
    return f;
}

std::vector<IntPoly> psi_in_sigma(int n, int k) {
    if (k < 0 || k > n) throw PreconditionViolation("psi_in_sigma: k out of range");
    std::vector<IntPoly> out(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= k; ++j) {
        const int m = k - j;
        IntPoly t = q_binomial(k, j).times_q_pow(m * (m - 1) / 2);
        out[static_cast<size_t>(j)] = (m % 2) ? -t : t;
    }
    return out;
}

DerangementValues psi_values(int n, int k) {
    DerangementValues v(n);
    for (int r = 0; r <= n; ++r) {
        IntPoly prod(1L);
        for (int i = 0; i < k; ++i) prod *= IntPoly::q_pow(r) - IntPoly::q_pow(i);
        v[r] = RatFunc(std::move(prod));
    }
    return v;
}

DerangementValues sigma_values(int n, int k) {
    DerangementValues v(n);
    for (int r = 0; r <= n; ++r) v[r] = RatFunc(IntPoly::q_pow(k * r));
    return v;
}

const RatFunc& BlockVector::coeff(const Partition& lambda) const {
    auto it = m_.find(lambda);
    return it == m_.end() ? kZeroRF : it->second;
}

void BlockVector::set(const Partition& lambda, RatFunc value) {
    if (lambda.size() > n_) throw PreconditionViolation("BlockVector: |lambda| > level");
    if (value.is_zero())
        m_.erase(lambda);
    else
        m_[lambda] = std::move(value);
}

std::vector<Partition> BlockVector::support() const {
    std::vector<Partition> s;
    s.reserve(m_.size());
    for (const auto& [lam, c] : m_) s.push_back(lam);
    return s;
}

BlockVector& BlockVector::add_scaled(const BlockVector& other, const RatFunc& factor) {
    if (other.n_ != n_) throw PreconditionViolation("BlockVector: level mismatch");
    if (factor.is_zero()) return *this;
    for (const auto& [lam, c] : other.m_) {
        RatFunc next = coeff(lam) + factor * c;
        set(lam, std::move(next));
    }
    return *this;
}

BlockVector operator*(const RatFunc& c, BlockVector v) {
    if (c.is_zero()) return BlockVector(v.level());
    for (auto& [lam, x] : v.m_) x *= c;
    return v;
}

DerangementValues DerangementValues::restricted() const {
    if (n < 1) throw PreconditionViolation("restricted: level must be >= 1");
    DerangementValues out(n - 1);
    for (int r = 0; r < n; ++r) out[r] = values[static_cast<size_t>(r) + 1];
    return out;
}

BlockVector to_blocks(const PsiCoeffs& f) {
    BlockVector v(f.n);
    for (int k = 0; k <= f.n; ++k) {
        if (f[k].is_zero()) continue;
        v.add_scaled(psi_block(f.n, k), f[k]);
    }
    return v;
}

DerangementValues to_values(const PsiCoeffs& f) {
    DerangementValues v(f.n);
    for (int k = 0; k <= f.n; ++k) {
        if (f[k].is_zero()) continue;
        const DerangementValues pk = psi_values(f.n, k);
        for (int r = 0; r <= f.n; ++r) v[r] += f[k] * pk[r];
    }
    return v;
}

PsiCoeffs values_to_psi(const DerangementValues& v) {
    // psi_j(r) vanishes for r < j, so the system is triangular with nonzero
    // diagonal psi_k(k)
    const int n = v.n;
    PsiCoeffs f(n);
    std::vector<DerangementValues> basis;
    basis.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) basis.push_back(psi_values(n, k));
    for (int k = 0; k <= n; ++k) {
        RatFunc rhs = v[k];
        for (int j = 0; j < k; ++j) rhs -= f[j] * basis[static_cast<size_t>(j)][k];
        f[k] = rhs / basis[static_cast<size_t>(k)][k];
    }
    return f;
}

PsiCoeffs fz_coeffs(int n, const RatFunc& z) {
    PsiCoeffs f(n);
    RatFunc strip(1L);  // prod_{i<j} (q^-i - z)/(q^(i+1) - 1)
    for (int j = 0; j <= n; ++j) {
        if (j > 0) {
            const RatFunc num = RatFunc::q_pow(-(j - 1)) - z;
            const RatFunc den(IntPoly::q_pow(j) - IntPoly(1L));
            strip *= num / den;
        }
        f[j] = z.pow(n - j) * strip;
    }
    return f;
}

FzReport fz_positivity(int n, const RatFunc& z, const std::optional<mpq_class>& q_at) {
    const BlockVector blocks = to_blocks(fz_coeffs(n, z));
    for (const auto& [lam, c] : blocks.coeffs()) {
        if (q_at) {
            auto val = c.eval(*q_at);
            if (!val) throw PreconditionViolation("fz_positivity: pole at the sample point");
            if (*val < 0) return {false, lam};
        } else {
            const SignVerdict v = sign_on_q_gt_1(c);
            if (v.kind == SignKind::Undetermined)
                throw PreconditionViolation("fz_positivity: undetermined coefficient sign");
            if (!v.nonnegative()) return {false, lam};
        }
    }
    return {true, std::nullopt};
}

BlockVector hat_tau_blocks(int n) {
    if (n < 1) throw PreconditionViolation("hat_tau_blocks: n must be >= 1");
    BlockVector v(n);
    for (const auto& lam : all_partitions_up_to(n - 1))
        v.set(lam, RatFunc(q_binomial(n - 1, lam.size()) * unipotent_dim(lam)));
    return v;
}

PsiCoeffs hat_tau_psi(int n) {
    if (n < 1) throw PreconditionViolation("hat_tau_psi: n must be >= 1");
    PsiCoeffs f(n);
    f[n] = RatFunc(1L);
    for (int k = 0; k < n; ++k) {
        // (n-1)_q!/k_q! = prod_{i=k+1}^{n-1} (1 - q^i)
        IntPoly ratio(1L);
        for (int i = k + 1; i <= n - 1; ++i) ratio *= IntPoly(1L) - IntPoly::q_pow(i);
        f[k] = RatFunc(-(ratio.times_q_pow(k)));
    }
    return f;
}

IntPoly kirillov_residual(int n, const Partition& lambda) {
    if (lambda.size() != n) throw PreconditionViolation("kirillov_residual: |lambda| != n");
    IntPoly res = coeff_c(n, n, lambda);
    for (int k = 0; k < n; ++k) {
        IntPoly ratio(1L);
        for (int i = k + 1; i <= n - 1; ++i) ratio *= IntPoly(1L) - IntPoly::q_pow(i);
        res -= ratio.times_q_pow(k) * coeff_c(n, k, lambda);
    }
    return res;
}

bool dimension_check(const BlockVector& f, const DerangementValues& v) {
    if (f.level() != v.n) throw PreconditionViolation("dimension_check: level mismatch");
    RatFunc total;
    for (const auto& [lam, c] : f.coeffs()) total += c * RatFunc(block_dim(f.level(), lam));
    return total == v[v.n];
}

} // namespace qderange
