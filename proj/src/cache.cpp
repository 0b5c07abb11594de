#include "klr/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace klr {

namespace fs = std::filesystem;

std::string fnv1a64_hex(const std::string& data) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", h);
  return std::string(buf);
}

std::string resolve_cache_dir(const std::string& cliOverride) {
  if (!cliOverride.empty()) return cliOverride;
  if (const char* env = std::getenv("KLRWB_CACHE"); env && *env) return env;
  return ".klrwb-cache";
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create cache directory " + dir + ": " + ec.message());
}

void clear_cache(const std::string& dir) {
  std::error_code ec;
  if (!fs::exists(dir, ec)) return;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".json") fs::remove(entry.path(), ec);
  }
}

std::string table_cache_path(const std::string& dir, const Quiver& q, const Weight& beta) {
  std::ostringstream key;
  key << kCodeVersion << "|" << q.content_key() << "|" << weight_str(beta);
  return dir + "/table_" + fnv1a64_hex(key.str()) + ".json";
}

bool file_exists(const std::string& path) {
  std::error_code ec;
  return fs::exists(path, ec);
}

}  // namespace klr
