#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "latcount/bigcount.hpp"

namespace latcount {

struct CacheKey {
  std::string descriptor;  ///< family descriptor ("cycle:4") or graph hash
  std::string method;      ///< engine identifier
  std::string params;      ///< e.g. "n_max=11"

  std::string canonical() const { return descriptor + '|' + method + '|' + params; }
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheEntry {
  CacheKey key;
  std::vector<std::string> terms;  ///< exact decimal renderings
  std::string tool_version;
  std::string created_at;          ///< UTC, ISO 8601
};

/// One JSON file per key under a directory. Writes go to a temporary file
/// that is renamed into place.
class SequenceCache {
 public:
  explicit SequenceCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const CacheKey& key) const;

  /// Returns nothing on a miss, on a stored key that differs from `key`, or
  /// on an unreadable file.
  std::optional<CacheEntry> load(const CacheKey& key) const;
  void store(const CacheEntry& entry) const;

 private:
  std::filesystem::path dir_;
};

/// LATCOUNT_CACHE_DIR if set, else $XDG_CACHE_HOME/latcount, else
/// ~/.cache/latcount.
std::filesystem::path default_cache_dir();

std::string hash_text(const std::string& text);
std::string utc_timestamp();

std::vector<std::string> to_terms(const std::vector<BigCount>& values);
std::vector<BigCount> from_terms(const std::vector<std::string>& terms);

}  // namespace latcount
