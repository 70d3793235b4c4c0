#include "qderange/intpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "qderange/errors.hpp"

namespace qderange {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(long v) {
    if (v != 0) c_.emplace_back(v);
}

IntPoly::IntPoly(const mpz_class& v) {
    if (v != 0) c_.push_back(v);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::q() { return q_pow(1); }

IntPoly IntPoly::q_pow(int e) { return monomial(1, e); }

IntPoly IntPoly::monomial(const mpz_class& c, int e) {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<size_t>(e) + 1, kZero);
    p.c_.back() = c;
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + mpq_class(*it);
        acc.canonicalize();
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mpz_class(i) * c_[i];
    r.trim();
    return r;
}

IntPoly IntPoly::shifted_by_one() const {
    // in-place Taylor shift q -> 1 + t
    IntPoly r(*this);
    const int d = r.degree();
    for (int i = 0; i <= d; ++i)
        for (int j = d - 1; j >= i; --j) r.c_[static_cast<size_t>(j)] += r.c_[static_cast<size_t>(j) + 1];
    r.trim();
    return r;
}

IntPoly IntPoly::times_q_pow(int e) const {
    if (is_zero() || e == 0) return *this;
    IntPoly r;
    r.c_.assign(static_cast<size_t>(e), kZero);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::optional<IntPoly> IntPoly::divided_exactly(const IntPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quot(c_.size() - d.c_.size() + 1, kZero);
    int rd = degree();
    const int dd = d.degree();
    while (rd >= dd) {
        if (rem[static_cast<size_t>(rd)] != 0) {
            mpz_class c;
            mpz_class r;
            mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem[static_cast<size_t>(rd)].get_mpz_t(),
                        d.leading().get_mpz_t());
            if (r != 0) return std::nullopt;
            const int e = rd - dd;
            quot[static_cast<size_t>(e)] = c;
            for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(e + i)] -= c * d.c_[static_cast<size_t>(i)];
        }
        --rd;
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    const mpz_class g = content();
    if (g == 1) return *this;
    IntPoly r(*this);
    for (auto& x : r.c_) x /= g;
    return r;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// remainder of lead(b)^(deg a - deg b + 1) * a  modulo  b
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    int dr = a.degree();
    int steps = dr - db + 1;
    while (dr >= db) {
        mpz_class lr = r[static_cast<size_t>(dr)];
        for (auto& x : r) x *= lb;
        for (int i = 0; i <= db; ++i)
            r[static_cast<size_t>(dr - db + i)] -= lr * b.coeffs()[static_cast<size_t>(i)];
        --steps;
        while (dr >= 0 && r[static_cast<size_t>(dr)] == 0) --dr;
        std::vector<mpz_class> cut(r.begin(), r.begin() + (dr + 1));
        r = std::move(cut);
        if (dr < db) break;
    }
    // keep the scaling consistent: multiply by lb^steps for the unused steps
    IntPoly rp((std::vector<mpz_class>(r)));
    if (steps > 0 && !rp.is_zero()) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
        rp *= IntPoly(f);
    }
    return rp;
}

mpz_class int_pow(const mpz_class& b, int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    auto normalize = [](IntPoly p) {
        p = p.primitive_part();
        if (p.leading() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    IntPoly f = a.primitive_part();
    IntPoly g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    // subresultant polynomial remainder sequence; any PRS element may be
    // rescaled by a nonzero constant without changing the gcd, so the
    // primitive_part fallback below is mathematically safe
    mpz_class gs = 1;
    mpz_class h = 1;
    while (true) {
        const int delta = f.degree() - g.degree();
        IntPoly r = pseudo_rem(f, g);
        if (r.is_zero()) return normalize(g);
        if (g.degree() == 0) return IntPoly(1L);
        const mpz_class divisor = gs * int_pow(h, delta);
        f = g;
        auto exact = r.divided_exactly(IntPoly(divisor));
        g = exact ? *exact : r.primitive_part();
        gs = f.leading();
        if (delta > 0) {
            mpz_class num = int_pow(gs, delta);
            h = (delta > 1) ? mpz_class(num / int_pow(h, delta - 1)) : num;
        }
        if (g.degree() == 0) return IntPoly(1L);
    }
}

IntPoly q_binomial(int k, int j) {
    if (j < 0 || j > k) return IntPoly();
    j = std::min(j, k - j); // symmetry
    static std::map<std::pair<int, int>, IntPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({k, j});
        if (it != cache.end()) return it->second;
    }
    IntPoly result(1L);
    for (int i = 1; i <= j; ++i) {
        IntPoly num = IntPoly::q_pow(k - j + i) - IntPoly(1L);
        IntPoly den = IntPoly::q_pow(i) - IntPoly(1L);
        auto exact = (result * num).divided_exactly(den);
        if (!exact) throw InexactDivision("q_binomial");
        result = std::move(*exact);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(k, j), result);
    return result;
}

IntPoly nq_factorial(int n) {
    IntPoly result(1L);
    for (int i = 1; i <= n; ++i) result *= IntPoly(1L) - IntPoly::q_pow(i);
    return result;
}

} // namespace qderange
