#include <doctest.h>

#include <random>
#include <thread>

#include "qderange/characters.hpp"
#include "qderange/sign.hpp"

using namespace qderange;

namespace {
IntPoly poly(std::vector<long> cs) {
    std::vector<mpz_class> z(cs.begin(), cs.end());
    return IntPoly(std::move(z));
}
} // namespace

TEST_CASE("unipotent dimensions") {
    CHECK(unipotent_dim(Partition{6}) == IntPoly(1L));
    for (int n = 1; n <= 7; ++n) {
        std::vector<int> col(static_cast<size_t>(n), 1);
        CHECK(unipotent_dim(Partition(col)) == IntPoly::q_pow(n * (n - 1) / 2));
    }
    CHECK(unipotent_dim(Partition{2, 1}) == poly({0, 1, 1}));
    CHECK(unipotent_dim(Partition()) == IntPoly(1L));
    // cross-check against the regular-character column at n=4:
    // binom(4,3)_q * dim(2,1) must be the (2,1) entry of psi_4^(4)
    CHECK(q_binomial(4, 3) * unipotent_dim(Partition{2, 1}) == poly({0, 1, 2, 2, 2, 1}));
}

TEST_CASE("psi multiplicity table for n = 4") {
    struct Row {
        Partition lam;
        std::vector<std::vector<long>> cols;
    };
    const std::vector<Row> table = {
        {Partition{4}, {{1}, {1}, {1}, {1}, {1}}},
        {Partition{3, 1}, {{}, {1}, {1, 1}, {1, 1, 1}, {0, 1, 1, 1}}},
        {Partition{2, 2}, {{}, {}, {1}, {0, 1, 1}, {0, 0, 1, 0, 1}}},
        {Partition{2, 1, 1}, {{}, {}, {0, 1}, {0, 1, 1, 1}, {0, 0, 0, 1, 1, 1}}},
        {Partition{1, 1, 1, 1}, {{}, {}, {}, {0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1}}},
        {Partition{3}, {{}, {1}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1}}},
        {Partition{2, 1}, {{}, {}, {1, 1}, {1, 2, 2, 1}, {0, 1, 2, 2, 2, 1}}},
        {Partition{1, 1, 1}, {{}, {}, {}, {0, 1, 1, 1}, {0, 0, 0, 1, 1, 1, 1}}},
        {Partition{2}, {{}, {}, {1}, {1, 1, 1}, {1, 1, 2, 1, 1}}},
        {Partition{1, 1}, {{}, {}, {}, {1, 1, 1}, {0, 1, 1, 2, 1, 1}}},
        {Partition{1}, {{}, {}, {}, {1}, {1, 1, 1, 1}}},
        {Partition(), {{}, {}, {}, {}, {1}}},
    };
    for (const auto& row : table)
        for (int k = 0; k <= 4; ++k)
            CHECK(coeff_c(4, k, row.lam) == poly(std::vector<long>(row.cols[static_cast<size_t>(k)])));
}

TEST_CASE("multiplicity structure") {
    // direct strip-sum route agrees with the fast-path/recursive route
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : all_partitions_up_to(n))
            for (int k = 0; k <= n; ++k) CHECK(coeff_c(n, k, lam) == coeff_c_direct(n, k, lam));

    for (int n = 0; n <= 8; ++n) {
        for (const auto& lam : all_partitions_up_to(n)) {
            for (int k = 0; k <= n; ++k) {
                const IntPoly c = coeff_c(n, k, lam);
                // zero exactly when the first row is shorter than n-k
                CHECK(c.is_zero() == (lam.first_row() < n - k));
                for (const auto& x : c.coeffs()) CHECK(x >= 0);
            }
        }
        // empty diagram enters only the regular character
        for (int k = 0; k <= n; ++k)
            CHECK(coeff_c(n, k, Partition()) == (k == n ? IntPoly(1L) : IntPoly()));
    }
    // regular character: c_n(lambda) = binom(n,|lambda|) dim(lambda)
    for (int n = 0; n <= 7; ++n)
        for (const auto& lam : all_partitions_up_to(n))
            CHECK(coeff_c(n, n, lam) == q_binomial(n, lam.size()) * unipotent_dim(lam));
    // hook diagrams
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i + (n - k) >= 1 && i <= k; ++i)
                for (int j = 0; i + j <= k; ++j) {
                    std::vector<int> parts{n - k + i};
                    for (int t = 0; t < k - i - j; ++t) parts.push_back(1);
                    if (parts[0] < 1) continue;
                    const Partition lam{std::vector<int>(parts)};
                    if (lam.rows() > 1 && lam.part(0) < lam.part(1)) continue;
                    const int m = k - i - j;
                    CHECK(coeff_c(n, k, lam) ==
                          q_binomial(k, i) * q_binomial(k - i, j).times_q_pow(m * (m - 1) / 2));
                }
}

TEST_CASE("psi support grows strictly with k") {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 0; k < n; ++k) {
            const auto a = psi_block(n, k).support();
            const auto b = psi_block(n, k + 1).support();
            for (const auto& lam : a)
                CHECK(std::find(b.begin(), b.end(), lam) != b.end());
            CHECK(a.size() < b.size());
        }
        for (int k = 0; k <= n; ++k)
            for (const auto& lam : psi_block(n, k).support()) CHECK(lam.first_row() >= n - k);
    }
}

TEST_CASE("sigma psi transforms") {
    const PsiCoeffs s0 = sigma_in_psi(5, 0);
    CHECK(s0[0] == RatFunc(1L));
    for (int j = 1; j <= 5; ++j) CHECK(s0[j].is_zero());

    const PsiCoeffs s2 = sigma_in_psi(5, 2);
    CHECK(s2[0] == RatFunc(1L));
    CHECK(s2[1] == RatFunc(poly({1, 1})));
    CHECK(s2[2] == RatFunc(1L));
    CHECK(s2[3].is_zero());

    const auto p2 = psi_in_sigma(5, 2);
    CHECK(p2[0] == IntPoly::q());
    CHECK(p2[1] == -poly({1, 1}));
    CHECK(p2[2] == IntPoly(1L));

    // mutual inverse up to n = 10
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto over_sigma = psi_in_sigma(n, k);
            std::vector<RatFunc> acc(static_cast<size_t>(n) + 1);
            for (int j = 0; j <= n; ++j) {
                if (over_sigma[static_cast<size_t>(j)].is_zero()) continue;
                const PsiCoeffs sj = sigma_in_psi(n, j);
                for (int i = 0; i <= n; ++i)
                    acc[static_cast<size_t>(i)] += RatFunc(over_sigma[static_cast<size_t>(j)]) * sj[i];
            }
            for (int i = 0; i <= n; ++i)
                CHECK(acc[static_cast<size_t>(i)] == (i == k ? RatFunc(1L) : RatFunc()));
        }
}

TEST_CASE("character values") {
    const DerangementValues u = psi_values(6, 0);
    for (int r = 0; r <= 6; ++r) CHECK(u[r] == RatFunc(1L));

    const DerangementValues p32 = psi_values(3, 2);
    CHECK(p32[0].is_zero());
    CHECK(p32[1].is_zero());
    CHECK(*p32[2].eval(mpq_class(2)) == 6);  // matches the finite-field count

    const DerangementValues s1 = sigma_values(4, 1);
    for (int r = 0; r <= 4; ++r) CHECK(s1[r] == RatFunc(IntPoly::q_pow(r)));
}

TEST_CASE("restriction") {
    // constants restrict to constants
    DerangementValues one(3);
    for (int r = 0; r <= 3; ++r) one[r] = RatFunc(1L);
    CHECK(one.restricted() == [] {
        DerangementValues v(2);
        for (int r = 0; r <= 2; ++r) v[r] = RatFunc(1L);
        return v;
    }());
    // sigma branch: restriction multiplies by q^k
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            const DerangementValues lhs = sigma_values(n, k).restricted();
            const DerangementValues low = sigma_values(n - 1, k);
            for (int r = 0; r <= n - 1; ++r)
                CHECK(lhs[r] == RatFunc::q_pow(k) * low[r]);
        }
    // psi branch rule, symbolically for 1 <= k <= n <= 10
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            const DerangementValues lhs = psi_values(n, k).restricted();
            const DerangementValues a = psi_values(n - 1, k);
            const DerangementValues b = psi_values(n - 1, k - 1);
            const RatFunc c1 = RatFunc::q_pow(k);
            const RatFunc c2 = RatFunc(IntPoly::q_pow(2 * k - 1) - IntPoly::q_pow(k - 1));
            for (int r = 0; r <= n - 1; ++r) CHECK(lhs[r] == c1 * a[r] + c2 * b[r]);
        }
}

TEST_CASE("values round trip") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> dc(-4, 4);
    for (int n = 0; n <= 6; ++n) {
        PsiCoeffs f(n);
        for (int k = 0; k <= n; ++k) f[k] = RatFunc(IntPoly(dc(rng)));
        CHECK(values_to_psi(to_values(f)) == f);
    }
}

TEST_CASE("f_z expansion") {
    // z = 1 is the unit character
    const PsiCoeffs unit = fz_coeffs(5, RatFunc(1L));
    CHECK(unit[0] == RatFunc(1L));
    for (int j = 1; j <= 5; ++j) CHECK(unit[j].is_zero());

    // z = q^-k matches the normalized Thoma expansion
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            const PsiCoeffs f = fz_coeffs(n, RatFunc::q_pow(-k));
            const PsiCoeffs s = sigma_in_psi(n, k);
            const RatFunc scale = RatFunc::q_pow(-k * n);
            for (int j = 0; j <= n; ++j) CHECK(f[j] == scale * s[j]);
        }

    // z = 0 leaves only the regular term, a positive multiple of psi_n
    const PsiCoeffs zero = fz_coeffs(4, RatFunc());
    for (int j = 0; j < 4; ++j) CHECK(zero[j].is_zero());
    CHECK(sign_on_q_gt_1(zero[4]).positive());

    CHECK(fz_positivity(4, RatFunc(1L)).is_character);
    for (int k = 0; k <= 4; ++k) CHECK(fz_positivity(4, RatFunc::q_pow(-k)).is_character);

    // z = -1/10 at q = 2.  The one-column coefficient stays nonnegative up to
    // n = 4 and first goes negative at n = 5, exactly where the threshold
    // z < -1/(q^n - q^(n-1) - 1) starts to hold.  (The full block test fails
    // earlier, at n = 3 via the one-row block.)
    const RatFunc z(mpq_class(-1, 10));
    auto one_column_value = [&](int n) {
        const PsiCoeffs f = fz_coeffs(n, z);
        std::vector<int> col(static_cast<size_t>(n), 1);
        const Partition steinberg{std::vector<int>(col)};
        RatFunc acc;
        for (int j = 0; j <= n; ++j) acc += f[j] * RatFunc(coeff_c(n, j, steinberg));
        return *acc.eval(mpq_class(2));
    };
    int first_negative = 0;
    for (int n = 1; n <= 6 && first_negative == 0; ++n)
        if (one_column_value(n) < 0) first_negative = n;
    CHECK(first_negative == 5);
    int threshold = 0;
    for (int n = 1; n <= 6 && threshold == 0; ++n) {
        // positivity of the one-column coefficient is 1 + z (q^n - q^(n-1) - 1) >= 0
        const mpq_class form = 1 + mpq_class(-1, 10) * ((1 << n) - (1 << (n - 1)) - 1);
        if (form < 0) threshold = n;
    }
    CHECK(threshold == first_negative);

    const FzReport r3 = fz_positivity(3, z, mpq_class(2));
    CHECK_FALSE(r3.is_character);
    REQUIRE(r3.first_negative_block.has_value());
    CHECK(*r3.first_negative_block == Partition{3});
    const FzReport r5 = fz_positivity(5, z, mpq_class(2));
    CHECK_FALSE(r5.is_character);
}

TEST_CASE("dimension bookkeeping") {
    CHECK(dim_rho(0) == IntPoly(1L));
    CHECK(dim_rho(1) == poly({-2, 1}));
    CHECK(dim_rho(2) == poly({1, 4, -2, -2, 1}));
    CHECK(dim_rho(2).eval(mpz_class(2)) == 1);

    CHECK(block_dim(3, Partition{3}) == IntPoly(1L));
    CHECK(block_dim(2, Partition{1}) == poly({1, 1}) * poly({-2, 1}));
    for (const auto& lam : partitions_of(4)) CHECK(block_dim(4, lam) == unipotent_dim(lam));

    // identity value of psi_k and of the regular character
    for (int n = 0; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            PsiCoeffs f(n);
            f[k] = RatFunc(1L);
            CHECK(dimension_check(to_blocks(f), psi_values(n, k)));
        }
        CHECK(psi_values(n, n)[n] == RatFunc(gl_order(n)));
    }
}

TEST_CASE("character with no unipotent part") {
    const BlockVector b1 = hat_tau_blocks(1);
    CHECK(b1.coeff(Partition()) == RatFunc(1L));
    CHECK(b1.support().size() == 1);
    const PsiCoeffs p1 = hat_tau_psi(1);
    CHECK(p1[0] == RatFunc(-1L));
    CHECK(p1[1] == RatFunc(1L));
    const DerangementValues v1 = to_values(p1);
    CHECK(v1[0] == RatFunc(-1L));
    CHECK(v1[1] == RatFunc(poly({-2, 1})));

    const DerangementValues v2 = to_values(hat_tau_psi(2));
    CHECK(v2[0] == RatFunc(poly({-1, 1})));
    CHECK(v2[1] == RatFunc(-(poly({-1, 1}) * poly({-1, 1}))));

    for (int n = 1; n <= 6; ++n) {
        CHECK(hat_tau_blocks(n) == to_blocks(hat_tau_psi(n)));
        // closed-form values below the identity: -(n-1)_q! r_q!
        const DerangementValues v = to_values(hat_tau_psi(n));
        for (int r = 0; r < n; ++r) {
            IntPoly expect = nq_factorial(n - 1) * nq_factorial(r);
            CHECK(v[r] == RatFunc(-expect));
        }
        CHECK(dimension_check(hat_tau_blocks(n), v));
    }
}

TEST_CASE("kirillov identity residuals vanish") {
    CHECK(kirillov_residual(2, Partition{2}).is_zero());
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(kirillov_residual(n, lam).is_zero());
    // the hook specialization: sum_j q^j N_q!/j_q! = 1
    for (int bigN = 0; bigN <= 8; ++bigN) {
        IntPoly acc;
        for (int j = 0; j <= bigN; ++j) {
            IntPoly term(1L);
            for (int i = j + 1; i <= bigN; ++i) term *= IntPoly(1L) - IntPoly::q_pow(i);
            acc += term.times_q_pow(j);
        }
        CHECK(acc == IntPoly(1L));
    }
}

TEST_CASE("concurrent table access is consistent") {
    const BlockVector expect = psi_block(6, 3);
    std::vector<std::thread> threads;
    std::vector<BlockVector> results(4);
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&results, t] { results[static_cast<size_t>(t)] = psi_block(6, 3); });
    for (auto& th : threads) th.join();
    for (const auto& r : results) CHECK(r == expect);
}
