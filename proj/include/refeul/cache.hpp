#pragma once

// Persistent store of computed A_n, one JSON file:
//   {"entries": [{"n": 5, "method": "fast", "polynomial": {"terms": [...]},
//                 "tool_version": "0.1.0"}, ...]}
// Entries written by another tool version are ignored and overwritten.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "refeul/bipoly.hpp"

namespace refeul {

inline constexpr const char* kCacheEnvVar = "REFEUL_CACHE";

struct CacheEntry {
  std::size_t n = 0;
  std::string method;
  BiPoly polynomial;
  std::string tool_version;
};

class PolyCache {
 public:
  /// Loads `path` if it exists. A malformed file yields an empty cache and a
  /// message in load_warning().
  PolyCache(std::filesystem::path path, std::string tool_version);

  /// Current-version entry for n computed by `method`, after a cheap
  /// re-check (coefficient sum n!, unit top monomial).
  std::optional<BiPoly> lookup(std::size_t n, const std::string& method) const;
  /// Replaces any existing entry for n.
  void store(std::size_t n, const std::string& method, const BiPoly& poly);
  /// Writes atomically via a temporary file in the same directory.
  void save() const;

  const std::map<std::size_t, CacheEntry>& entries() const { return entries_; }
  const std::string& load_warning() const { return load_warning_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::string tool_version_;
  std::map<std::size_t, CacheEntry> entries_;
  std::string load_warning_;
};

nlohmann::json to_json(const CacheEntry& e);
CacheEntry cache_entry_from_json(const nlohmann::json& j);

}  // namespace refeul
