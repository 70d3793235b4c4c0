#ifndef QDERANGE_RATFUNC_HPP
#define QDERANGE_RATFUNC_HPP

#include <optional>
#include <string>

#include "qderange/intpoly.hpp"

namespace qderange {

/// Quotient of integer polynomials in canonical form: nonzero denominator
/// with positive leading coefficient, gcd(num, den) = 1 both as polynomials
/// and in content.  Equality is plain field equality thanks to canonicity.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long v) : num_(v) {}             // NOLINT: implicit from integer literals
    RatFunc(IntPoly p) : num_(std::move(p)) {}  // NOLINT: polynomials embed
    RatFunc(IntPoly num, IntPoly den);
    explicit RatFunc(const mpq_class& v);

    static RatFunc q_pow(int e);             // q^e for any integer e

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(int e) const;                // integer exponent, e < 0 inverts

    /// Exact evaluation; nullopt when x is a pole.
    std::optional<mpq_class> eval(const mpq_class& x) const;

    std::string str(const std::string& var = "q") const;

private:
    void reduce();
    IntPoly num_;
    IntPoly den_{1L};
};

} // namespace qderange

#endif
