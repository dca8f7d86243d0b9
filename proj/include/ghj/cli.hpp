#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghj/ghj.hpp"

namespace ghj::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kCacheVersion = 1;

using json = nlohmann::ordered_json;

// rendering
std::string esspath_text(const EssPathTable& table);
json esspath_json(const EssPathTable& table);
std::string graph_dot(const PrincipalGraphData& g, const std::string& name);
json graph_json(const PrincipalGraphData& g, const std::string& diagram, const std::string& vertex,
                bool dual);
std::string system_text(const ConnectionSystem& sys);
/// b_i * b_j in product form, e.g. "(1)^2 (3)^3 (5)".
std::string product_form(const FusionRing& ring, std::size_t i, std::size_t j);
std::string fusion_table_text(const FusionRing& ring);
json system_json(const ConnectionSystem& sys, const FusionRing& ring);
json report_json(const GHJReport& report);
std::string report_box(const GHJReport& report);
std::string subequivalence_text(const SubequivalenceReport& rep);

// integer payload of a system, for the cache
json system_parts_json(const ConnectionSystem& sys);
ConnectionSystem system_from_parts_json(const DynkinGraph& g, const json& payload);

std::uint64_t fnv1a(const std::string& bytes);

/// On-disk store of JSON payloads keyed by name. Writes go to a temporary
/// file that is renamed into place. Entries with a wrong key, version or
/// checksum read as missing.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// GHJ_CACHE_DIR, else $XDG_CACHE_HOME/ghj, else ~/.cache/ghj.
  static Cache from_environment();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;
  std::optional<json> load(const std::string& key) const;
  bool store(const std::string& key, const json& payload) const;

 private:
  std::filesystem::path dir_;
};

ConnectionSystem load_or_decompose(const EssPathTable& table, const Cache* cache);

// acceptance suite
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Shares tables and decompositions between checks.
class Workspace {
 public:
  explicit Workspace(const Cache* cache = nullptr) : cache_(cache) {}
  const EssPathTable& table(const std::string& spec);
  const ConnectionSystem& system(const std::string& spec);
  const FusionRing& ring(const std::string& spec);

 private:
  const Cache* cache_;
  std::map<std::string, std::unique_ptr<EssPathTable>> tables_;
  std::map<std::string, std::unique_ptr<ConnectionSystem>> systems_;
  std::map<std::string, std::unique_ptr<FusionRing>> rings_;
};

/// Runs the acceptance criteria in order. `progress` is called after each.
std::vector<CheckResult> run_acceptance(Workspace& ws,
                                        const std::function<void(const CheckResult&)>& progress = {});

}  // namespace ghj::cli
