#include "qderange/cache.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

#include "qderange/json_io.hpp"

namespace fs = std::filesystem;

namespace qderange {

namespace {
std::mutex g_mu;
std::optional<std::string> g_dir;

fs::path ctable_path(const std::string& dir, int n) {
    return fs::path(dir) /
           ("ctable-" + std::string(kCacheFormatVersion) + "-n" + std::to_string(n) + ".json");
}
} // namespace

void set_cache_dir(std::optional<std::string> dir) {
    std::lock_guard<std::mutex> lock(g_mu);
    g_dir = std::move(dir);
}

std::optional<std::string> cache_dir() {
    std::lock_guard<std::mutex> lock(g_mu);
    return g_dir;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("QDERANGE_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return (fs::path(xdg) / "qderange").string();
    if (const char* home = std::getenv("HOME"))
        return (fs::path(home) / ".cache" / "qderange").string();
    return (fs::temp_directory_path() / "qderange-cache").string();
}

std::optional<std::vector<CTableEntry>> load_ctable(int n) {
    const auto dir = cache_dir();
    if (!dir) return std::nullopt;
    const fs::path path = ctable_path(*dir, n);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json j;
        in >> j;
        if (j.at("version").get<std::string>() != kCacheFormatVersion) return std::nullopt;
        if (j.at("n").get<int>() != n) return std::nullopt;
        std::vector<CTableEntry> out;
        for (const auto& e : j.at("entries"))
            out.push_back({e.at("k").get<int>(), partition_from_json(e.at("partition")),
                           intpoly_from_json(e.at("value"))});
        return out;
    } catch (...) {
        return std::nullopt;  // corrupt cache files are recomputed, never trusted
    }
}

void store_ctable(int n, const std::vector<CTableEntry>& entries) {
    const auto dir = cache_dir();
    if (!dir) return;
    std::error_code ec;
    fs::create_directories(*dir, ec);
    if (ec) return;
    json arr = json::array();
    for (const auto& e : entries)
        arr.push_back(json{{"k", e.k},
                           {"partition", to_json(e.lambda)},
                           {"value", to_json(e.value)}});
    json j{{"version", kCacheFormatVersion}, {"n", n}, {"entries", arr}};
    const fs::path path = ctable_path(*dir, n);
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump();
    }
    fs::rename(tmp, path, ec);  // atomic publish; failures just skip the cache
}

CacheInfo cache_info() {
    CacheInfo info;
    const auto dir = cache_dir();
    if (!dir) return info;
    info.dir = *dir;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(*dir, ec)) {
        if (!e.is_regular_file()) continue;
        const std::string name = e.path().filename().string();
        if (name.rfind("ctable-", 0) != 0) continue;
        info.files.push_back(name);
        info.total_bytes += static_cast<long>(e.file_size());
    }
    std::sort(info.files.begin(), info.files.end());
    return info;
}

int clear_cache() {
    const auto dir = cache_dir();
    if (!dir) return 0;
    int removed = 0;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(*dir, ec)) {
        if (!e.is_regular_file()) continue;
        const std::string name = e.path().filename().string();
        if (name.rfind("ctable-", 0) != 0) continue;
        std::error_code rec;
        if (fs::remove(e.path(), rec)) ++removed;
    }
    return removed;
}

} // namespace qderange
