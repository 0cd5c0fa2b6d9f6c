#pragma once

#include <json.hpp>

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace powg {

/// Version string baked into cache keys; bump when any cached result changes.
inline constexpr const char* code_version = "powg-1.0.0";

struct CacheKey {
    std::string family;
    int k = 0;
    long long p = 0;
    std::string invariant;
    std::string mode;
    std::string version = code_version;

    std::string filename() const;
    std::string text() const;
};

/// On-disk result cache: one JSON file per key. Entries written by another
/// code version are treated as misses and removed.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    /// $POWG_CACHE_DIR, else $XDG_CACHE_HOME/powg, else $HOME/.cache/powg,
    /// else ./.powg-cache.
    static std::filesystem::path default_directory();

    const std::filesystem::path& directory() const { return dir_; }

    std::optional<nlohmann::json> get(const CacheKey& key) const;
    void put(const CacheKey& key, const nlohmann::json& value);

private:
    std::filesystem::path dir_;
    mutable std::mutex mutex_;
};

}  // namespace powg
