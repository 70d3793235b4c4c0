#include <doctest.h>

#include <random>

#include "qderange/errors.hpp"
#include "qderange/sign.hpp"

using namespace qderange;

namespace {
IntPoly poly(std::vector<long> cs) {
    std::vector<mpz_class> z(cs.begin(), cs.end());
    return IntPoly(std::move(z));
}
} // namespace

TEST_CASE("sign verdicts on simple polynomials") {
    CHECK(sign_on_q_gt_1(IntPoly()).kind == SignKind::ZeroEverywhere);
    CHECK(sign_on_q_gt_1(poly({-1, 1})).kind == SignKind::PositiveOnQgt1);  // q - 1
    CHECK(sign_on_q_gt_1(IntPoly(5L)).kind == SignKind::PositiveOnQgt1);
    CHECK(sign_on_q_gt_1(IntPoly(-3L)).kind == SignKind::NegativeSomewhere);

    const IntPoly qm2 = poly({-2, 1});  // q - 2
    CHECK(qm2.eval(mpq_class(3, 2)) == mpq_class(-1, 2));
    const SignVerdict v = sign_on_q_gt_1(qm2);
    CHECK(v.kind == SignKind::NegativeSomewhere);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness > 1);
    CHECK(qm2.eval(*v.witness) < 0);
}

TEST_CASE("sturm tier decides where the shift test cannot") {
    // q^2 - 3q + 3: discriminant -3, no real roots, positive at q=2
    const IntPoly p = poly({3, -3, 1});
    CHECK(p.shifted_by_one().coeffs()[1] < 0);  // shift test inconclusive
    CHECK(sign_on_q_gt_1(p).kind == SignKind::PositiveOnQgt1);
}

TEST_CASE("touching zero gives nonnegative") {
    const IntPoly p = poly({-2, 1}) * poly({-2, 1});  // (q-2)^2
    CHECK(sign_on_q_gt_1(p).kind == SignKind::NonNegativeOnQgt1);
    const IntPoly m = -p;
    CHECK(sign_on_q_gt_1(m).kind == SignKind::NegativeSomewhere);
    // (q-1)^2 vanishes only at the boundary, so it is positive on the ray
    CHECK(sign_on_q_gt_1(poly({1, -2, 1})).kind == SignKind::PositiveOnQgt1);
}

TEST_CASE("root counting") {
    CHECK(count_roots_q_gt_1(poly({6, -5, 1})) == 2);        // (q-2)(q-3)
    CHECK(count_roots_q_gt_1(poly({4, -4, 1})) == 1);        // (q-2)^2, distinct
    CHECK(count_roots_q_gt_1(poly({1, 0, 1})) == 0);         // q^2 + 1
    CHECK(count_roots_q_gt_1(poly({-1, 1}) * poly({-5, 1})) == 1);
    CHECK(count_roots_q_gt_1(IntPoly()) == 0);
}

TEST_CASE("verdicts agree with exact evaluation on random polynomials") {
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<int> dd(0, 12);
    std::uniform_int_distribution<long> dc(-30, 30);
    const mpq_class points[] = {mpq_class(3, 2), mpq_class(2), mpq_class(3), mpq_class(10)};
    for (int it = 0; it < 1000; ++it) {
        const int d = dd(rng);
        std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
        for (auto& x : c) x = dc(rng);
        const IntPoly p(std::move(c));
        const SignVerdict v = sign_on_q_gt_1(p);
        for (const auto& x : points) {
            const mpq_class val = p.eval(x);
            switch (v.kind) {
                case SignKind::PositiveOnQgt1: CHECK(val > 0); break;
                case SignKind::NonNegativeOnQgt1: CHECK(val >= 0); break;
                case SignKind::ZeroEverywhere: CHECK(val == 0); break;
                case SignKind::NegativeSomewhere: break;
                case SignKind::Undetermined: FAIL("undetermined for polynomial input"); break;
            }
        }
        if (v.kind == SignKind::NegativeSomewhere) {
            REQUIRE(v.witness.has_value());
            CHECK(*v.witness > 1);
            CHECK(p.eval(*v.witness) < 0);
        }
    }
}

TEST_CASE("rational function comparison") {
    const RatFunc one(1L);
    CHECK(compare_on_q_gt_1(one, one) == CmpResult::Equal);
    const RatFunc qp1(poly({1, 1}));
    const RatFunc q(IntPoly::q());
    CHECK(compare_on_q_gt_1(qp1, q) == CmpResult::Greater);
    CHECK(compare_on_q_gt_1(q, qp1) == CmpResult::Less);
    // q vs q^2/(q+1): cross difference is q
    const RatFunc f(IntPoly::q_pow(2), poly({1, 1}));
    CHECK(compare_on_q_gt_1(q, f) == CmpResult::Greater);
    // q vs 3/2 changes order on the ray
    CHECK(compare_on_q_gt_1(q, RatFunc(mpq_class(3, 2))) == CmpResult::Undetermined);
    // denominator not positive on the ray
    CHECK_THROWS_AS(compare_on_q_gt_1(RatFunc(IntPoly(1L), poly({-2, 1})), one),
                    PreconditionViolation);
}

TEST_CASE("rational function verdicts") {
    const RatFunc f(poly({-1, 1}), poly({1, 1}));  // (q-1)/(q+1)
    CHECK(sign_on_q_gt_1(f).kind == SignKind::PositiveOnQgt1);
    const RatFunc g(IntPoly(1L), poly({-2, 1}));   // 1/(q-2)
    CHECK(sign_on_q_gt_1(g).kind == SignKind::Undetermined);
}
