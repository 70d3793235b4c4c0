#ifndef QDERANGE_SIGN_HPP
#define QDERANGE_SIGN_HPP

#include <optional>
#include <string>

#include "qderange/ratfunc.hpp"

namespace qderange {

/// Exact sign classification of a polynomial (or rational function) on the
/// open ray q > 1.
enum class SignKind {
    PositiveOnQgt1,     // strictly positive for every q > 1
    NonNegativeOnQgt1,  // >= 0 everywhere, = 0 at some q > 1, not identically 0
    ZeroEverywhere,
    NegativeSomewhere,  // carries an exact rational witness with value < 0
    Undetermined,       // only for rational functions whose denominator is not
                        // positive on the ray
};

struct SignVerdict {
    SignKind kind = SignKind::Undetermined;
    std::optional<mpq_class> witness;  // q* > 1 with strictly negative value

    bool nonnegative() const {
        return kind == SignKind::PositiveOnQgt1 || kind == SignKind::NonNegativeOnQgt1 ||
               kind == SignKind::ZeroEverywhere;
    }
    bool positive() const { return kind == SignKind::PositiveOnQgt1; }
    bool zero() const { return kind == SignKind::ZeroEverywhere; }
};

std::string to_string(SignKind k);

/// Decides the sign of p on (1, oo) exactly.  Fast path: if all coefficients
/// of p(1+t) are nonnegative the polynomial is positive there; the complete
/// tier is Sturm root counting plus exact evaluation between roots.  Never
/// returns Undetermined for polynomial input.
SignVerdict sign_on_q_gt_1(const IntPoly& p);

/// Verdict for num/den; Undetermined when den is not positive on the ray.
SignVerdict sign_on_q_gt_1(const RatFunc& f);

enum class CmpResult { Less, Equal, Greater, Undetermined };

/// Uniform comparison of a(q) vs b(q) over all q > 1 by the sign of the
/// cross-difference.  Greater/Less mean >= / <= everywhere and not equal;
/// Undetermined means the difference changes sign on the ray.  Throws
/// PreconditionViolation unless both denominators are positive on the ray.
CmpResult compare_on_q_gt_1(const RatFunc& a, const RatFunc& b);

/// Number of distinct real roots of p in the open interval (1, oo).
int count_roots_q_gt_1(const IntPoly& p);

} // namespace qderange

#endif
