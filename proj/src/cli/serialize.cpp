#include "ghj/cli.hpp"
#include "ghj/error.hpp"

namespace ghj::cli {

json system_parts_json(const ConnectionSystem& sys) {
  json out;
  out["diagram"] = sys.graph.name();
  out["route"] = sys.route;
  json ns = json::array(), aliases = json::array(), chiral = json::array();
  for (const auto& w : sys.irreducibles) {
    ns.push_back(w.n.data());
    aliases.push_back(w.alias);
    if (!w.chiral.empty()) chiral.push_back(w.chiral);
  }
  out["n"] = std::move(ns);
  out["aliases"] = std::move(aliases);
  out["chiral"] = std::move(chiral);
  out["constants"] = sys.structure ? json(sys.structure->constants) : json::array();
  out["epsilon"] = sys.epsilon ? json(*sys.epsilon) : json(nullptr);
  return out;
}

ConnectionSystem system_from_parts_json(const DynkinGraph& g, const json& payload) {
  if (payload.at("diagram").get<std::string>() != g.name())
    throw Error(ErrorKind::InvalidArgument, "cached system belongs to another diagram");
  SystemParts parts;
  const auto r = g.size();
  for (const auto& flat : payload.at("n")) {
    auto data = flat.get<std::vector<std::int64_t>>();
    if (data.size() != r * r) throw Error(ErrorKind::InvalidArgument, "cached matrix has the wrong size");
    IntMatrix m(r, r);
    for (std::size_t e = 0; e < data.size(); ++e) m(e / r, e % r) = data[e];
    parts.n.push_back(std::move(m));
  }
  parts.F = payload.at("constants").get<std::vector<std::int64_t>>();
  parts.aliases = payload.at("aliases").get<std::vector<std::string>>();
  parts.route = payload.at("route").get<std::string>();
  parts.chiral = payload.at("chiral").get<std::vector<std::vector<std::int64_t>>>();
  if (!payload.at("epsilon").is_null()) parts.epsilon = payload.at("epsilon").get<std::size_t>();
  return assemble_system(g, std::move(parts));
}

}  // namespace ghj::cli
