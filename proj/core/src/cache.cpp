#include "betti/cache.hpp"

#include <fstream>

namespace betti {

std::string content_hash(const std::string& canonical) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<nlohmann::json> ResultCache::get(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto path = dir_ / (key + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // corrupt entry behaves like a miss
  }
  return j;
}

void ResultCache::put(const std::string& key, const nlohmann::json& value) {
  std::lock_guard lock(mutex_);
  auto tmp = dir_ / (key + ".tmp");
  auto path = dir_ / (key + ".json");
  {
    std::ofstream out(tmp);
    out << value.dump(0, ' ', false, nlohmann::json::error_handler_t::strict);
  }
  std::filesystem::rename(tmp, path);
}

int ResultCache::gc() {
  std::lock_guard lock(mutex_);
  int removed = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.path().extension() == ".json" || entry.path().extension() == ".tmp") {
      std::filesystem::remove(entry.path());
      ++removed;
    }
  }
  return removed;
}

}  // namespace betti
