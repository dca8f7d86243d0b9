#pragma once

#include <map>
#include <string>
#include <vector>

#include "ghj/core.hpp"
#include "ghj/esspath.hpp"
#include "ghj/fusion_ring.hpp"
#include "ghj/int_matrix.hpp"

namespace ghj {

enum class SectorKind { AA, AK, KA, KK };

struct SectorLabel {
  SectorKind kind;
  std::size_t index;  // A-vertex, K-vertex or irreducible id
  auto operator<=>(const SectorLabel&) const = default;
};

/// A formal sum of sectors of one kind with positive multiplicities.
struct Decomposition {
  SectorKind kind;
  std::map<std::size_t, std::int64_t> terms;

  std::int64_t multiplicity(std::size_t index) const {
    auto it = terms.find(index);
    return it == terms.end() ? 0 : it->second;
  }
  bool empty() const { return terms.empty(); }
};

/// Fusion ring of A_l with [n]*[k] = sum_m E^{(n)}(A_l)_{k,m} [m].
FusionRing aa_fusion_ring(int l);

/// [n] * x for an A-A sector [n] acting on the A-K sector x.
Decomposition aa_times_ak(const EssPathTable& table, std::size_t n, std::size_t x);
/// y-bar * x as a sum of A-A sectors.
Decomposition ak_times_ka(const EssPathTable& table, std::size_t y, std::size_t x);

struct GraphVertex {
  std::string label;
  int depth = 0;
  std::size_t source = 0;  // index in the unpruned vertex set
};

/// A depth-layered bipartite multigraph. Even vertex 0 is the distinguished
/// vertex at depth 0.
struct PrincipalGraphData {
  std::vector<GraphVertex> evens;
  std::vector<GraphVertex> odds;
  IntMatrix adjacency;  // evens x odds
  std::vector<std::string> diagnostics;

  std::size_t distinguished() const { return 0; }
  std::size_t vertex_count() const { return evens.size() + odds.size(); }
};

/// Connected component of `start` in the bipartite multigraph B (rows even,
/// columns odd), with BFS depths. Within a depth, vertices keep their order
/// in the input.
PrincipalGraphData bipartite_component(const IntMatrix& B, const std::vector<std::string>& even_labels,
                                       const std::vector<std::string>& odd_labels, std::size_t start);

/// Principal graph of GHJ(K, x): even vertices are even A-vertices [n],
/// odd vertices are K-vertices, edge multiplicity E^{(n)}(K)_{x,y}.
PrincipalGraphData principal_graph(const EssPathTable& table, std::size_t x);

}  // namespace ghj
