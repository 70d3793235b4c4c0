#include "qderange/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qderange/errors.hpp"

namespace qderange {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw PreconditionViolation("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw PreconditionViolation("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::prepend_row(int row) const {
    if (row < first_row())
        throw PreconditionViolation("prepend_row: row shorter than the current first row");
    std::vector<int> p;
    p.reserve(parts_.size() + 1);
    p.push_back(row);
    p.insert(p.end(), parts_.begin(), parts_.end());
    return Partition(std::move(p));
}

Partition Partition::drop_first_row() const {
    if (empty()) return *this;
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

std::string Partition::str_compact() const {
    std::ostringstream os;
    os << "(";
    size_t i = 0;
    bool first = true;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!first) os << ",";
        os << parts_[i];
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    os << ")";
    return os.str();
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.parts() > b.parts();  // lexicographically descending
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending-first-part recursion emits lexicographically descending order
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> all_partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int s = n; s >= 0; --s) {
        auto ps = partitions_of(s);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<int> hook_lengths(const Partition& p) {
    const auto& parts = p.parts();
    const int rows = p.rows();
    std::vector<int> conj(static_cast<size_t>(p.first_row()), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < parts[static_cast<size_t>(i)]; ++j) ++conj[static_cast<size_t>(j)];
    std::vector<int> hooks;
    hooks.reserve(static_cast<size_t>(p.size()));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= parts[static_cast<size_t>(i - 1)]; ++j)
            hooks.push_back(parts[static_cast<size_t>(i - 1)] + conj[static_cast<size_t>(j - 1)] - i - j + 1);
    std::sort(hooks.rbegin(), hooks.rend());
    return hooks;
}

long n_stat(const Partition& p) {
    long s = 0;
    for (int i = 0; i < p.rows(); ++i) s += static_cast<long>(i) * p.part(i);
    return s;
}

std::vector<Partition> hstrip_minus(const Partition& lambda, int m) {
    std::vector<Partition> out;
    if (m < 0 || m > lambda.size() || lambda.first_row() < m) return out;
    // mu interlaces lambda: lambda_{i+1} <= mu_i <= lambda_i, |mu| = |lambda| - m
    const int rows = lambda.rows();
    std::vector<int> mu;
    std::function<void(int, int)> rec = [&](int i, int removed) {
        if (removed > m) return;
        if (i == rows) {
            if (removed == m) {
                std::vector<int> clean;
                for (int x : mu)
                    if (x > 0) clean.push_back(x);
                out.emplace_back(std::move(clean));
            }
            return;
        }
        const int hi = lambda.part(i);
        const int lo = lambda.part(i + 1);
        for (int v = hi; v >= lo; --v) {
            mu.push_back(v);
            rec(i + 1, removed + hi - v);
            mu.pop_back();
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> hstrip_plus(const Partition& mu, int m, int cap) {
    if (cap < mu.size() + m)
        throw PreconditionViolation("hstrip_plus: cap below |mu| + m");
    std::vector<Partition> out;
    if (m < 0) return out;
    if (m == 0) {
        out.push_back(mu);
        return out;
    }
    // lambda interlaces mu: mu_i <= lambda_i <= mu_{i-1}, one extra row allowed
    const int rows = mu.rows();
    std::vector<int> lam;
    std::function<void(int, int)> rec = [&](int i, int added) {
        if (added > m) return;
        if (i == rows) {
            const int last = m - added;  // one extra row below mu
            const int limit = (rows == 0) ? m : mu.part(rows - 1);
            if (last <= limit) {
                std::vector<int> full = lam;
                if (last > 0) full.push_back(last);
                out.emplace_back(std::move(full));
            }
            return;
        }
        const int lo = mu.part(i);
        const int hi = (i == 0) ? mu.part(0) + m : mu.part(i - 1);
        for (int v = hi; v >= lo; --v) {
            lam.push_back(v);
            rec(i + 1, added + v - lo);
            lam.pop_back();
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace qderange
