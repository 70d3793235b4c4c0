#include "qderange/ratfunc.hpp"

#include "qderange/errors.hpp"

namespace qderange {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PreconditionViolation("RatFunc: zero denominator");
    reduce();
}

RatFunc::RatFunc(const mpq_class& v)
    : num_(mpz_class(v.get_num())), den_(mpz_class(v.get_den())) {
    reduce();
}

RatFunc RatFunc::q_pow(int e) {
    if (e >= 0) return RatFunc(IntPoly::q_pow(e));
    return RatFunc(IntPoly(1L), IntPoly::q_pow(-e));
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly(1L);
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.divided_exactly(g);
        den_ = *den_.divided_exactly(g);
    }
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (c != 1) {
        num_ = *num_.divided_exactly(IntPoly(c));
        den_ = *den_.divided_exactly(IntPoly(c));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw PreconditionViolation("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e == 0) return RatFunc(1L);
    RatFunc base = *this;
    if (e < 0) {
        base = RatFunc(1L) / base;
        e = -e;
    }
    RatFunc r(1L);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::optional<mpq_class> RatFunc::eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (d == 0) return std::nullopt;
    mpq_class r = num_.eval(x) / d;
    r.canonicalize();
    return r;
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace qderange
