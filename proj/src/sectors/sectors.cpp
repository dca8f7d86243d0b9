#include "ghj/sectors.hpp"

#include <algorithm>
#include <deque>

#include "ghj/error.hpp"

namespace ghj {

FusionRing aa_fusion_ring(int l) {
  if (l < 1) throw Error(ErrorKind::RankOutOfRange, "A_l needs l >= 1");
  const auto table = esspath_table(build_diagram(Family::A, l));
  const auto n = static_cast<std::size_t>(l);
  FusionRing ring;
  ring.identity = 0;
  ring.basis.resize(n);
  ring.constants.assign(n * n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    ring.basis[a] = "[" + std::to_string(a) + "]";
    ring.conjugate.push_back(a);
    ring.qdims.push_back(quantum_integer(static_cast<int>(a) + 1, l + 1));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m) ring.N(a, k, m) = table[a](k, m);
  }
  return ring;
}

Decomposition aa_times_ak(const EssPathTable& table, std::size_t n, std::size_t x) {
  Decomposition d{SectorKind::AK, {}};
  const auto size = table.graph().size();
  if (x >= size) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  for (std::size_t y = 0; y < size; ++y)
    if (auto m = table.dim(n, x, y)) d.terms[y] = m;
  return d;
}

Decomposition ak_times_ka(const EssPathTable& table, std::size_t y, std::size_t x) {
  Decomposition d{SectorKind::AA, {}};
  const auto size = table.graph().size();
  if (x >= size || y >= size) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  for (std::size_t n = 0; n < table.size(); ++n)
    if (auto m = table.dim(n, x, y)) d.terms[n] = m;
  return d;
}

PrincipalGraphData bipartite_component(const IntMatrix& B, const std::vector<std::string>& even_labels,
                                       const std::vector<std::string>& odd_labels, std::size_t start) {
  const auto ne = B.rows(), no = B.cols();
  std::vector<int> de(ne, -1), dodd(no, -1);
  std::deque<std::pair<bool, std::size_t>> queue{{true, start}};
  de.at(start) = 0;
  while (!queue.empty()) {
    auto [even, i] = queue.front();
    queue.pop_front();
    if (even) {
      for (std::size_t j = 0; j < no; ++j)
        if (B(i, j) && dodd[j] < 0) dodd[j] = de[i] + 1, queue.emplace_back(false, j);
    } else {
      for (std::size_t k = 0; k < ne; ++k)
        if (B(k, i) && de[k] < 0) de[k] = dodd[i] + 1, queue.emplace_back(true, k);
    }
  }
  auto collect = [](const std::vector<int>& depth, const std::vector<std::string>& labels) {
    std::vector<GraphVertex> out;
    for (std::size_t i = 0; i < depth.size(); ++i)
      if (depth[i] >= 0) out.push_back({labels[i], depth[i], i});
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.depth < b.depth; });
    return out;
  };
  PrincipalGraphData g;
  g.evens = collect(de, even_labels);
  g.odds = collect(dodd, odd_labels);
  g.adjacency = IntMatrix(g.evens.size(), g.odds.size());
  for (std::size_t a = 0; a < g.evens.size(); ++a)
    for (std::size_t b = 0; b < g.odds.size(); ++b)
      g.adjacency(a, b) = B(g.evens[a].source, g.odds[b].source);

  std::size_t dropped_even = 0, dropped_odd = 0, dropped_edges = 0;
  for (std::size_t i = 0; i < ne; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < no; ++j) any = any || B(i, j);
    if (de[i] < 0 && any) ++dropped_even;
  }
  for (std::size_t j = 0; j < no; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < ne; ++i) {
      any = any || B(i, j);
      if (B(i, j) && dodd[j] < 0) dropped_edges += static_cast<std::size_t>(B(i, j));
    }
    if (dodd[j] < 0 && any) ++dropped_odd;
  }
  if (dropped_even || dropped_odd)
    g.diagnostics.push_back("pruned " + std::to_string(dropped_even) + " even and " +
                            std::to_string(dropped_odd) + " odd vertices (" +
                            std::to_string(dropped_edges) + " edges) outside the component");
  return g;
}

PrincipalGraphData principal_graph(const EssPathTable& table, std::size_t x) {
  const auto& g = table.graph();
  if (x >= g.size()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  std::vector<std::string> evens;
  std::vector<std::size_t> lengths;
  for (std::size_t n = 0; n < table.size(); n += 2) {
    evens.push_back("[" + std::to_string(n) + "]");
    lengths.push_back(n);
  }
  IntMatrix B(evens.size(), g.size());
  for (std::size_t a = 0; a < lengths.size(); ++a)
    for (std::size_t y = 0; y < g.size(); ++y) B(a, y) = table.dim(lengths[a], x, y);
  return bipartite_component(B, evens, g.labels(), 0);
}

}  // namespace ghj
