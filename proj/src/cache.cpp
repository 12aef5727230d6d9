#include "tautring/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tautring {

namespace fs = std::filesystem;
using nlohmann::json;

ResultCache::ResultCache(std::string directory) : dir_(std::move(directory)) {
    fs::create_directories(dir_);
}

std::string ResultCache::checksum(const std::string& payload) {
    /* FNV-1a, 64 bit */
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string ResultCache::path_for(const std::string& key) const {
    std::string safe;
    for (char c : key)
        safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' || c == '_') ? c : '_';
    return dir_ + "/" + safe + "-" + checksum(key) + ".cache";
}

std::optional<std::string> ResultCache::load(const std::string& key, bool* corrupt) const {
    if (corrupt) *corrupt = false;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    json h = json::parse(header, nullptr, false);
    if (h.is_discarded() || h.value("version", "") != kArtifactVersion || h.value("key", "") != key) {
        if (corrupt) *corrupt = true;
        return std::nullopt;
    }
    if (h.value("checksum", "") != checksum(payload)) {
        if (corrupt) *corrupt = true;
        return std::nullopt;
    }
    return payload;
}

void ResultCache::store(const std::string& key, const std::string& payload) const {
    json h;
    h["version"] = kArtifactVersion;
    h["key"] = key;
    h["checksum"] = checksum(payload);
    const std::string path = path_for(key);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << h.dump() << "\n" << payload;
    }
    fs::rename(tmp, path);
}

}  // namespace tautring
