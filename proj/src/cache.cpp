#include "powg/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace powg {

std::string CacheKey::text() const
{
    std::ostringstream out;
    out << family << '|' << k << '|' << p << '|' << invariant << '|' << mode << '|' << version;
    return out.str();
}

std::string CacheKey::filename() const
{
    std::ostringstream out;
    out << family << "_k" << k << "_p" << p << '_' << invariant << '_' << mode << ".json";
    return out.str();
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::default_directory()
{
    if (const char* dir = std::getenv("POWG_CACHE_DIR"); dir && *dir)
        return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path{xdg} / "powg";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path{home} / ".cache" / "powg";
    return ".powg-cache";
}

std::optional<nlohmann::json> ResultCache::get(const CacheKey& key) const
{
    std::lock_guard lock{mutex_};
    const auto path = dir_ / key.filename();
    std::ifstream in{path};
    if (!in)
        return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
    }
    catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
    if (!doc.is_object() || doc.value("key", "") != key.text() || !doc.contains("value")) {
        in.close();
        std::error_code ec;
        std::filesystem::remove(path, ec);
        return std::nullopt;
    }
    return doc["value"];
}

void ResultCache::put(const CacheKey& key, const nlohmann::json& value)
{
    std::lock_guard lock{mutex_};
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto path = dir_ / key.filename();
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out{tmp};
        if (!out)
            return;
        out << nlohmann::json{{"key", key.text()}, {"value", value}}.dump(1);
    }
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace powg
