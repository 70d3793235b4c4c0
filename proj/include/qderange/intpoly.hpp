#ifndef QDERANGE_INTPOLY_HPP
#define QDERANGE_INTPOLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qderange {

/// Exact polynomial in the formal variable q with arbitrary-precision integer
/// coefficients.  Canonical form: coefficients ascending in q, no trailing
/// zero; the zero polynomial is the empty sequence.  Values are immutable in
/// spirit: every operation returns a fresh canonical polynomial.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long v);                         // NOLINT: implicit from integer literals
    explicit IntPoly(const mpz_class& v);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly q();                      // the variable
    static IntPoly q_pow(int e);             // q^e, e >= 0
    /// c * q^e
    static IntPoly monomial(const mpz_class& c, int e);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    /// Coefficient of q^i (zero outside the stored range).
    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    IntPoly derivative() const;
    /// Coefficients of p(1 + t) as a polynomial in t.
    IntPoly shifted_by_one() const;
    IntPoly times_q_pow(int e) const;        // multiply by q^e

    /// Exact quotient, or nullopt when d does not divide *this in Z[q].
    std::optional<IntPoly> divided_exactly(const IntPoly& d) const;

    /// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
    mpz_class content() const;
    /// *this / content; keeps the sign of the leading coefficient. pp(0) = 0.
    IntPoly primitive_part() const;

    /// Rendering like "1+2q+q^3"; "0" for zero.
    std::string str(const std::string& var = "q") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Primitive gcd with positive leading coefficient (subresultant PRS).
/// gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Gaussian binomial coefficient as an exact polynomial; zero for j < 0 or j > k.
IntPoly q_binomial(int k, int j);

/// Product (1 - q)(1 - q^2)...(1 - q^n); 1 for n = 0.
IntPoly nq_factorial(int n);

} // namespace qderange

#endif
