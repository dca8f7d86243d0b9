#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "ghj/cli.hpp"

namespace ghj::cli {

namespace fs = std::filesystem;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Cache Cache::from_environment() {
  if (const char* d = std::getenv("GHJ_CACHE_DIR"); d && *d) return Cache(d);
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return Cache(fs::path(x) / "ghj");
  if (const char* home = std::getenv("HOME"); home && *home)
    return Cache(fs::path(home) / ".cache" / "ghj");
  return Cache(fs::temp_directory_path() / "ghj-cache");
}

fs::path Cache::path_for(const std::string& key) const {
  return dir_ / (key + ".v" + std::to_string(kCacheVersion) + ".json");
}

std::optional<json> Cache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const auto doc = json::parse(in);
    if (doc.at("key").get<std::string>() != key || doc.at("version").get<int>() != kCacheVersion)
      return std::nullopt;
    const auto& payload = doc.at("payload");
    if (doc.at("checksum").get<std::string>() != hex(fnv1a(payload.dump()))) return std::nullopt;
    return payload;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool Cache::store(const std::string& key, const json& payload) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return false;
  json doc;
  doc["key"] = key;
  doc["version"] = kCacheVersion;
  doc["checksum"] = hex(fnv1a(payload.dump()));
  doc["payload"] = payload;

  std::random_device rd;
  const auto tmp = dir_ / (key + ".tmp." + hex((static_cast<std::uint64_t>(rd()) << 32) | rd()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << doc.dump();
    if (!out.good()) {
      out.close();
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, path_for(key), ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

ConnectionSystem load_or_decompose(const EssPathTable& table, const Cache* cache) {
  const auto& g = table.graph();
  const auto key = g.name() + "-zsystem";
  if (cache) {
    if (auto payload = cache->load(key)) {
      try {
        auto sys = system_from_parts_json(g, *payload);
        zfusion_table(sys);
        return sys;
      } catch (const std::exception&) {
        // fall through and recompute
      }
    }
  }
  auto sys = decompose_zsystem(table);
  if (cache) cache->store(key, system_parts_json(sys));
  return sys;
}

}  // namespace ghj::cli
