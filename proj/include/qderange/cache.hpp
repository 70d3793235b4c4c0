#ifndef QDERANGE_CACHE_HPP
#define QDERANGE_CACHE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qderange/intpoly.hpp"
#include "qderange/partition.hpp"

namespace qderange {

/// Format version baked into every cache file name; bump on any change to
/// the serialized shape or to the coefficient conventions.
inline constexpr const char* kCacheFormatVersion = "qdc1";

/// Directory for on-disk memo tables; disabled when unset.  Thread-safe.
void set_cache_dir(std::optional<std::string> dir);
std::optional<std::string> cache_dir();

/// Default platform cache location ($QDERANGE_CACHE_DIR, else
/// $XDG_CACHE_HOME/qderange, else ~/.cache/qderange).
std::string default_cache_dir();

struct CTableEntry {
    int k;
    Partition lambda;
    IntPoly value;
};

/// Load the block-coefficient table for level n; nullopt on miss or any
/// shape mismatch (corrupt entries are ignored, never trusted).
std::optional<std::vector<CTableEntry>> load_ctable(int n);
void store_ctable(int n, const std::vector<CTableEntry>& entries);

struct CacheInfo {
    std::string dir;
    std::vector<std::string> files;
    long total_bytes = 0;
};

CacheInfo cache_info();
int clear_cache();  // returns number of files removed

} // namespace qderange

#endif
