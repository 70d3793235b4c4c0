#ifndef QDERANGE_PARTITION_HPP
#define QDERANGE_PARTITION_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace qderange {

/// Young diagram: weakly decreasing sequence of positive integers.  The empty
/// sequence is the empty diagram.  Value type; the canonical order used for
/// all table output sorts by size descending, then lexicographically
/// descending within a size.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }                    // |lambda|
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {                               // 0-based; 0 beyond
        return (i >= 0 && i < rows()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    int first_row() const { return part(0); }
    bool empty() const { return parts_.empty(); }

    /// New diagram with `row` prepended as the first row (row >= parts[0]).
    Partition prepend_row(int row) const;
    /// Diagram with the first row deleted.
    Partition drop_first_row() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    /// "(3,1)"; "()" for the empty diagram.
    std::string str() const;
    /// Exponent form as in the tables: "(2^2)", "(1^4)".
    std::string str_compact() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// true when a precedes b in canonical table order.
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return canonical_less(a, b);
    }
};

/// All partitions of every size 0..n, each once, in canonical order.
std::vector<Partition> all_partitions_up_to(int n);
/// Partitions of exactly n, lexicographically descending.
std::vector<Partition> partitions_of(int n);

/// One hook length per box, sorted descending.
std::vector<int> hook_lengths(const Partition& p);

/// n(lambda) = sum (i-1) * lambda_i.
long n_stat(const Partition& p);

/// Diagrams obtained by deleting a horizontal strip of m boxes (canonical
/// order).  Empty when the first row is shorter than m.
std::vector<Partition> hstrip_minus(const Partition& lambda, int m);

/// Diagrams obtained by appending a horizontal strip of m boxes (canonical
/// order).  cap bounds the resulting size and must be >= |mu| + m.
std::vector<Partition> hstrip_plus(const Partition& mu, int m, int cap);

} // namespace qderange

template <>
struct std::hash<qderange::Partition> {
    size_t operator()(const qderange::Partition& p) const noexcept {
        size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

#endif
