#pragma once

// On-disk cache of expensive results. One file per key:
//   {"key": ..., "crc32": ..., "payload": "<serialized JSON>"}
// A file whose key or checksum does not match is treated as absent.

#include <filesystem>
#include <optional>
#include <string>

namespace hsk {

inline constexpr const char* kCacheSchema = "v1";

class DiskCache {
 public:
  // An empty path disables the cache.
  explicit DiskCache(std::filesystem::path dir = {});

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& directory() const { return dir_; }

  std::optional<std::string> load(const std::string& key) const;
  // Write to a temporary file, then rename over the target. I/O failures are
  // swallowed: the cache is an optimization only.
  void store(const std::string& key, const std::string& payload) const;

  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

std::uint32_t crc32_of(const std::string& data);

}  // namespace hsk
