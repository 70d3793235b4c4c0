#include "qderange/sign.hpp"

#include <algorithm>
#include <vector>

#include "qderange/errors.hpp"

namespace qderange {

std::string to_string(SignKind k) {
    switch (k) {
        case SignKind::PositiveOnQgt1: return "positive";
        case SignKind::NonNegativeOnQgt1: return "nonnegative";
        case SignKind::ZeroEverywhere: return "zero";
        case SignKind::NegativeSomewhere: return "negative-somewhere";
        case SignKind::Undetermined: return "undetermined";
    }
    return "?";
}

namespace {

int sgn(const mpq_class& x) { return sgn(x.get_num()); }

// Sturm chain: s0 = g, s1 = g', s_{i+1} = -(s_{i-1} mod s_i), each element
// rescaled by a positive constant (pseudo-remainders with sign correction).
std::vector<IntPoly> sturm_chain(const IntPoly& g) {
    std::vector<IntPoly> chain;
    chain.push_back(g.primitive_part());
    IntPoly d = g.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive_part());
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        if (b.degree() < 0) break;
        const int delta = a.degree() - b.degree();
        if (delta < 0) break;
        // prem(a,b) = lb^(delta+1) * (a mod b); flip so the result is a
        // positive multiple of -(a mod b)
        std::vector<mpz_class> r = a.coeffs();
        const mpz_class& lb = b.leading();
        int steps = delta + 1;
        int dr = a.degree();
        while (dr >= b.degree() && dr >= 0) {
            mpz_class lr = r[static_cast<size_t>(dr)];
            for (auto& x : r) x *= lb;
            for (int i = 0; i <= b.degree(); ++i)
                r[static_cast<size_t>(dr - b.degree() + i)] -= lr * b.coeffs()[static_cast<size_t>(i)];
            --steps;
            while (dr >= 0 && r[static_cast<size_t>(dr)] == 0) --dr;
            r.resize(static_cast<size_t>(dr + 1));
        }
        IntPoly rem{std::vector<mpz_class>(r)};
        if (rem.is_zero()) break;
        const bool multiplier_negative = (lb < 0) && (((delta + 1 - steps) % 2) != 0);
        IntPoly next = multiplier_negative ? rem : -rem;
        chain.push_back(next.primitive_part());
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

int sign_changes_at(const std::vector<IntPoly>& chain, const mpq_class& x) {
    int changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int sign_changes_at_plus_inf(const std::vector<IntPoly>& chain) {
    int changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = sgn(p.leading());
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

mpq_class cauchy_bound(const IntPoly& g) {
    mpq_class best = 0;
    const mpz_class lead = abs(g.leading());
    for (int i = 0; i < g.degree(); ++i) {
        mpq_class c(abs(g.coeff(i)), lead);
        c.canonicalize();
        best = std::max(best, c);
    }
    mpq_class bound = best + 1;
    return std::max(bound, mpq_class(2));
}

IntPoly squarefree_part(const IntPoly& p) {
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.primitive_part();
    return p.divided_exactly(g).value().primitive_part();
}

struct RootInterval {
    mpq_class lo, hi;  // (lo, hi] contains exactly one root; endpoints non-roots
};

// midpoint of (lo, hi) avoiding roots of g
mpq_class nonroot_point(const IntPoly& g, const mpq_class& lo, const mpq_class& hi) {
    static const int num[] = {1, 1, 2, 3, 5, 7, 11};
    static const int den[] = {2, 3, 5, 7, 11, 13, 17};
    for (size_t i = 0; i < sizeof(num) / sizeof(num[0]); ++i) {
        mpq_class m = lo + (hi - lo) * mpq_class(num[i], den[i]);
        m.canonicalize();
        if (g.eval(m) != 0) return m;
    }
    // denser sweep; g has finitely many roots so this terminates
    for (int d = 19;; d += 2) {
        for (int n = 1; n < d; ++n) {
            mpq_class m = lo + (hi - lo) * mpq_class(n, d);
            m.canonicalize();
            if (g.eval(m) != 0) return m;
        }
    }
}

std::vector<RootInterval> isolate_roots(const IntPoly& g, const std::vector<IntPoly>& chain,
                                        const mpq_class& lo0, const mpq_class& hi0) {
    std::vector<RootInterval> out;
    struct Node {
        mpq_class lo, hi;
        int vlo, vhi;
    };
    std::vector<Node> stack{{lo0, hi0, sign_changes_at(chain, lo0), sign_changes_at(chain, hi0)}};
    while (!stack.empty()) {
        Node nd = stack.back();
        stack.pop_back();
        const int cnt = nd.vlo - nd.vhi;
        if (cnt <= 0) continue;
        if (cnt == 1) {
            out.push_back({nd.lo, nd.hi});
            continue;
        }
        const mpq_class m = nonroot_point(g, nd.lo, nd.hi);
        const int vm = sign_changes_at(chain, m);
        stack.push_back({nd.lo, m, nd.vlo, vm});
        stack.push_back({m, nd.hi, vm, nd.vhi});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

} // namespace

int count_roots_q_gt_1(const IntPoly& p) {
    if (p.is_zero()) return 0;
    IntPoly g = squarefree_part(p);
    // roots exactly at 1 do not lie in the open ray; remove them
    while (g.degree() > 0 && g.eval(mpz_class(1)) == 0)
        g = g.divided_exactly(IntPoly::q() - IntPoly(1L)).value();
    if (g.degree() <= 0) return 0;
    auto chain = sturm_chain(g);
    return sign_changes_at(chain, mpq_class(1)) - sign_changes_at_plus_inf(chain);
}

SignVerdict sign_on_q_gt_1(const IntPoly& p0) {
    if (p0.is_zero()) return {SignKind::ZeroEverywhere, std::nullopt};
    // factors (q-1)^m are positive on the ray; strip them
    IntPoly p = p0;
    while (p.eval(mpz_class(1)) == 0)
        p = p.divided_exactly(IntPoly::q() - IntPoly(1L)).value();
    if (p.degree() == 0)
        return p.leading() > 0 ? SignVerdict{SignKind::PositiveOnQgt1, std::nullopt}
                               : SignVerdict{SignKind::NegativeSomewhere, mpq_class(2)};
    // shift fast path
    {
        const IntPoly s = p.shifted_by_one();
        bool all_nonneg = true;
        bool all_nonpos = true;
        for (const auto& c : s.coeffs()) {
            if (c < 0) all_nonneg = false;
            if (c > 0) all_nonpos = false;
        }
        if (all_nonneg) return {SignKind::PositiveOnQgt1, std::nullopt};
        if (all_nonpos) return {SignKind::NegativeSomewhere, mpq_class(2)};
    }
    const IntPoly g = squarefree_part(p);  // p(1) != 0, so g(1) != 0
    const auto chain = sturm_chain(g);
    const mpq_class one(1);
    const mpq_class bound = cauchy_bound(g);
    const int nroots = sign_changes_at(chain, one) - sign_changes_at(chain, bound);
    if (nroots == 0) {
        const int s = sgn(p.eval(mpq_class(2)));
        return s > 0 ? SignVerdict{SignKind::PositiveOnQgt1, std::nullopt}
                     : SignVerdict{SignKind::NegativeSomewhere, mpq_class(2)};
    }
    auto intervals = isolate_roots(g, chain, one, bound);
    // make the leftmost sample strictly greater than 1
    while (intervals.front().lo == 1) {
        auto& iv = intervals.front();
        const mpq_class m = nonroot_point(g, iv.lo, iv.hi);
        if (sign_changes_at(chain, iv.lo) - sign_changes_at(chain, m) == 1)
            iv.hi = m;
        else
            iv.lo = m;
    }
    // sample once before the first root and once after each root
    std::vector<mpq_class> samples;
    samples.push_back(intervals.front().lo);
    for (const auto& iv : intervals) samples.push_back(iv.hi);
    for (const auto& x : samples) {
        if (sgn(p.eval(x)) < 0) return {SignKind::NegativeSomewhere, x};
    }
    return {SignKind::NonNegativeOnQgt1, std::nullopt};
}

SignVerdict sign_on_q_gt_1(const RatFunc& f) {
    const SignVerdict dv = sign_on_q_gt_1(f.den());
    if (dv.kind != SignKind::PositiveOnQgt1) return {SignKind::Undetermined, std::nullopt};
    return sign_on_q_gt_1(f.num());
}

CmpResult compare_on_q_gt_1(const RatFunc& a, const RatFunc& b) {
    if (!sign_on_q_gt_1(a.den()).positive() || !sign_on_q_gt_1(b.den()).positive())
        throw PreconditionViolation("compare_on_q_gt_1: denominator not positive on q > 1");
    const IntPoly d = a.num() * b.den() - b.num() * a.den();
    const SignVerdict v = sign_on_q_gt_1(d);
    switch (v.kind) {
        case SignKind::ZeroEverywhere: return CmpResult::Equal;
        case SignKind::PositiveOnQgt1:
        case SignKind::NonNegativeOnQgt1: return CmpResult::Greater;
        default: break;
    }
    const SignVerdict w = sign_on_q_gt_1(-d);
    if (w.kind == SignKind::PositiveOnQgt1 || w.kind == SignKind::NonNegativeOnQgt1)
        return CmpResult::Less;
    return CmpResult::Undetermined;
}

} // namespace qderange
