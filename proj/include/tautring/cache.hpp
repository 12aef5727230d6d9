#ifndef TAUTRING_CACHE_HPP
#define TAUTRING_CACHE_HPP

#include <optional>
#include <string>

namespace tautring {

/* Bumped whenever a change can alter any cached payload. */
inline constexpr const char* kArtifactVersion = "1";

/*
 * File-backed result cache.  A record is keyed by (operation, canonical
 * parameter encoding, artifact version); a hit is byte-identical to
 * recomputation at the same version.  Corrupt or stale entries are
 * discarded.  Writes go through a temp file and a rename, so a crash
 * never leaves a partial record behind.
 */
class ResultCache {
  public:
    explicit ResultCache(std::string directory);

    /* Payload bytes on a valid hit; nullopt on miss, version skew, or checksum failure. */
    std::optional<std::string> load(const std::string& key, bool* corrupt = nullptr) const;
    void store(const std::string& key, const std::string& payload) const;

    const std::string& directory() const { return dir_; }
    static std::string checksum(const std::string& payload);

  private:
    std::string path_for(const std::string& key) const;
    std::string dir_;
};

}  // namespace tautring

#endif
