#include "surgeon/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

namespace surgeon {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Cache::Cache(fs::path root, std::string tool_version) : root_(std::move(root)), version_(std::move(tool_version)) {}

fs::path Cache::default_root(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SURGEON_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return fs::path(xdg) / "surgeon";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".local" / "share" / "surgeon";
  return fs::temp_directory_path() / "surgeon-cache";
}

fs::path Cache::path_for(const std::string& key) const {
  const std::string digest = sha256_hex(key);
  return root_ / digest.substr(0, 2) / (digest + ".json");
}

std::optional<std::string> Cache::get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  auto doc = nlohmann::json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (doc.value("tool_version", "") != version_ || doc.value("key", "") != key) return std::nullopt;
  if (!doc.contains("value") || !doc["value"].is_string()) return std::nullopt;
  return doc["value"].get<std::string>();
}

bool Cache::put(const std::string& key, const std::string& value) const {
  static std::atomic<unsigned long> counter{0};
  const fs::path target = path_for(key);
  try {
    fs::create_directories(target.parent_path());
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp." + std::to_string(::getpid()) +
                                                 "." + std::to_string(counter++));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw fs::filesystem_error("cannot open cache file", tmp, std::make_error_code(std::errc::io_error));
      nlohmann::json doc = {{"key", key}, {"tool_version", version_}, {"value", value}};
      out << doc.dump();
      if (!out) throw fs::filesystem_error("cannot write cache file", tmp, std::make_error_code(std::errc::io_error));
    }
    fs::rename(tmp, target);
    return true;
  } catch (const std::exception& e) {
    std::cerr << "warning: cache write failed (" << e.what() << "); continuing uncached\n";
    return false;
  }
}

}  // namespace surgeon
