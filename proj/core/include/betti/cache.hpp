// Content-addressed result cache: canonical JSON values keyed by a hash of
// the computation inputs.
#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

namespace betti {

// FNV-1a over the canonical key string, as a hex digest.
std::string content_hash(const std::string& canonical);

// One directory per cache; a single serialized writer guards all file access.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value);
  // Removes every entry; returns the number of files deleted.
  int gc();

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

inline constexpr int kCacheProtocolVersion = 1;

}  // namespace betti
