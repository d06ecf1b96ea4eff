#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace surgeon {

// Hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

// File-backed, content-addressed store. Each entry lives in
// <root>/<first two hex digits>/<digest>.json and records the tool version
// that wrote it; entries from another version read as misses.
class Cache {
 public:
  explicit Cache(std::filesystem::path root, std::string tool_version = SURGEON_VERSION);

  // Resolution order: explicit flag value, $SURGEON_CACHE_DIR, then
  // $XDG_DATA_HOME/surgeon or ~/.local/share/surgeon.
  static std::filesystem::path default_root(const std::string& flag_value = {});

  const std::filesystem::path& root() const { return root_; }

  std::optional<std::string> get(const std::string& key) const;
  // Writes to a temporary file and renames it into place, so concurrent
  // writers never expose a partial entry. Returns false (after printing a
  // warning to stderr) when the directory is not writable.
  bool put(const std::string& key, const std::string& value) const;

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path root_;
  std::string version_;
};

}  // namespace surgeon
