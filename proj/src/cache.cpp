#include "latcount/cache.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace latcount {

namespace fs = std::filesystem;

std::string hash_text(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> to_terms(const std::vector<BigCount>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

std::vector<BigCount> from_terms(const std::vector<std::string>& terms) {
  std::vector<BigCount> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(from_decimal(t));
  return out;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("LATCOUNT_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "latcount";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "latcount";
  return fs::temp_directory_path() / "latcount";
}

SequenceCache::SequenceCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path SequenceCache::path_for(const CacheKey& key) const {
  return dir_ / (hash_text(key.canonical()) + ".json");
}

std::optional<CacheEntry> SequenceCache::load(const CacheKey& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    CacheEntry entry;
    entry.key.descriptor = doc.at("key").at("descriptor").get<std::string>();
    entry.key.method = doc.at("key").at("method").get<std::string>();
    entry.key.params = doc.at("key").at("params").get<std::string>();
    if (!(entry.key == key)) return std::nullopt;
    entry.terms = doc.at("terms").get<std::vector<std::string>>();
    for (const auto& t : entry.terms) from_decimal(t);
    entry.tool_version = doc.at("tool_version").get<std::string>();
    entry.created_at = doc.at("created_at").get<std::string>();
    return entry;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void SequenceCache::store(const CacheEntry& entry) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw CountError(ErrorKind::IoError, "cannot create cache directory " + dir_.string());

  nlohmann::ordered_json doc;
  doc["key"] = {{"descriptor", entry.key.descriptor}, {"method", entry.key.method}, {"params", entry.key.params}};
  doc["terms"] = entry.terms;
  doc["tool_version"] = entry.tool_version;
  doc["created_at"] = entry.created_at;

  const auto target = path_for(entry.key);
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp." + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw CountError(ErrorKind::IoError, "cannot write " + tmp.string());
    out << doc.dump(2) << '\n';
    if (!out) throw CountError(ErrorKind::IoError, "short write to " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CountError(ErrorKind::IoError, "cannot move cache entry into place: " + target.string());
  }
}

}  // namespace latcount
