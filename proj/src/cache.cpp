#include "hsk/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>
#include <zlib.h>

#include "hsk/json_io.hpp"

namespace hsk {

namespace fs = std::filesystem;

std::uint32_t crc32_of(const std::string& data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size()));
  return static_cast<std::uint32_t>(crc);
}

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path DiskCache::path_for(const std::string& key) const {
  std::string name;
  for (char c : key) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '-' || c == '_';
    name += keep ? c : '_';
  }
  // Distinct keys can sanitize to the same name; the stored key disambiguates
  // on read, and the crc suffix makes collisions unlikely in the first place.
  std::ostringstream os;
  os << name << '-' << std::hex << crc32_of(key) << ".json";
  return dir_ / os.str();
}

std::optional<std::string> DiskCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    Json j = Json::parse(buf.str());
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    std::string payload = j.at("payload").get<std::string>();
    if (j.at("crc32").get<std::uint32_t>() != crc32_of(payload)) return std::nullopt;
    return payload;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void DiskCache::store(const std::string& key, const std::string& payload) const {
  if (!enabled()) return;
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  Json j;
  j["key"] = key;
  j["crc32"] = crc32_of(payload);
  j["payload"] = payload;
  const fs::path target = path_for(key);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << j.dump();
    if (!out) {
      out.close();
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace hsk
