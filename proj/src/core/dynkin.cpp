#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "ghj/core.hpp"
#include "ghj/error.hpp"

namespace ghj {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::LengthTooLarge: return "LengthTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::AmbiguousDecomposition: return "AmbiguousDecomposition";
    case ErrorKind::DependentRepresentation: return "DependentRepresentation";
    case ErrorKind::NonIntegerSolution: return "NonIntegerSolution";
    case ErrorKind::ClosureEscapesBasis: return "ClosureEscapesBasis";
    case ErrorKind::PremiseUnavailable: return "PremiseUnavailable";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Error";
}

namespace {

std::vector<int> two_colour(const IntMatrix& adj) {
  const std::size_t n = adj.rows();
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> stack{0};
  colour[0] = 0;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!adj(u, v)) continue;
      if (colour[v] < 0) {
        colour[v] = 1 - colour[u];
        stack.push_back(v);
      } else if (colour[v] == colour[u]) {
        throw Error(ErrorKind::InvalidArgument, "graph is not bipartite");
      }
    }
  }
  if (std::find(colour.begin(), colour.end(), -1) != colour.end())
    throw Error(ErrorKind::InvalidArgument, "graph is not connected");
  return colour;
}

IntMatrix from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix adj(n, n);
  for (auto [a, b] : edges) adj(a, b) = adj(b, a) = 1;
  return adj;
}

}  // namespace

DynkinGraph::DynkinGraph(Family family, int rank, std::vector<std::string> labels,
                         IntMatrix adjacency, int coxeter)
    : family_(family),
      rank_(rank),
      labels_(std::move(labels)),
      adjacency_(std::move(adjacency)),
      colour_(two_colour(adjacency_)),
      coxeter_(coxeter) {}

std::size_t DynkinGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < size(); ++u) d += adjacency_(v, u) ? 1 : 0;
  return d;
}

std::string DynkinGraph::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

std::optional<std::size_t> DynkinGraph::find(std::string_view label) const {
  std::string lowered(label);
  for (auto& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == lowered) return i;
  return std::nullopt;
}

std::size_t DynkinGraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorKind::UnknownVertex,
              "'" + std::string(label) + "' is not a vertex of " + name());
}

DynkinGraph build_diagram(Family family, int rank) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  int h = 0;
  switch (family) {
    case Family::A:
      if (rank < 1) throw Error(ErrorKind::RankOutOfRange, "A_n needs n >= 1");
      for (int i = 0; i < rank; ++i) labels.push_back("a" + std::to_string(i));
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      h = rank + 1;
      break;
    case Family::D: {
      if (rank < 4) throw Error(ErrorKind::RankOutOfRange, "D_n needs n >= 4");
      for (int i = 0; i < rank - 1; ++i) labels.push_back("d" + std::to_string(i));
      labels.push_back("d" + std::to_string(rank - 2) + "'");
      for (int i = 0; i + 1 < rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      h = 2 * rank - 2;
      break;
    }
    case Family::E:
      if (rank < 6 || rank > 8) throw Error(ErrorKind::RankOutOfRange, "E_n needs n in {6,7,8}");
      for (int i = 0; i < rank; ++i) labels.push_back("e" + std::to_string(i));
      if (rank == 6) {
        edges = {{0, 1}, {1, 2}, {2, 5}, {5, 4}, {2, 3}};
        h = 12;
      } else if (rank == 7) {
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 6}, {6, 5}, {3, 4}};
        h = 18;
      } else {
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 7}, {7, 6}, {4, 5}};
        h = 30;
      }
      break;
  }
  auto adj = from_edges(labels.size(), edges);
  return DynkinGraph(family, rank, std::move(labels), std::move(adj), h);
}

DynkinGraph build_diagram(std::string_view spec) {
  if (spec.empty()) throw Error(ErrorKind::UnknownFamily, "empty diagram spec");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(spec.front())));
  Family family;
  if (f == 'A') family = Family::A;
  else if (f == 'D') family = Family::D;
  else if (f == 'E') family = Family::E;
  else throw Error(ErrorKind::UnknownFamily, "'" + std::string(spec) + "'");

  auto digits = spec.substr(1);
  int rank = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorKind::RankOutOfRange, "bad rank in '" + std::string(spec) + "'");
  return build_diagram(family, rank);
}

double quantum_integer(int n, int h) {
  const double pi = std::numbers::pi;
  return std::sin(n * pi / h) / std::sin(pi / h);
}

PFData perron_data(const DynkinGraph& g) {
  const int h = g.coxeter_number();
  const std::size_t n = g.size();
  PFData pf;
  pf.beta = 2.0 * std::cos(std::numbers::pi / h);
  pf.mu.assign(n, 0.0);

  // Along an arm hanging off a leaf, the weights follow [k]_q scaled by the
  // leaf weight. Every ADE diagram has at most one branch vertex, so arms
  // from each leaf meet there and fix the relative scales.
  const auto& adj = g.adjacency();
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) >= 3) branch.push_back(v);

  auto walk_arm = [&](std::size_t leaf, double scale, std::optional<std::size_t> stop) {
    std::size_t prev = n, cur = leaf;
    int k = 1;
    while (true) {
      pf.mu[cur] = scale * quantum_integer(k, h);
      if (stop && cur == *stop) return;
      std::size_t next = n;
      for (std::size_t u = 0; u < n; ++u)
        if (adj(cur, u) && u != prev) {
          next = u;
          break;
        }
      if (next == n) return;
      if (stop && g.degree(cur) >= 3) return;
      prev = cur;
      cur = next;
      ++k;
    }
  };

  if (branch.empty()) {
    walk_arm(0, 1.0, std::nullopt);
  } else {
    const auto centre = branch.front();
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
      if (g.degree(leaf) != 1) continue;
      // distance from leaf to centre
      std::size_t prev = n, cur = leaf;
      int len = 1;
      while (cur != centre) {
        for (std::size_t u = 0; u < n; ++u)
          if (adj(cur, u) && u != prev) {
            prev = cur;
            cur = u;
            break;
          }
        ++len;
      }
      walk_arm(leaf, 1.0 / quantum_integer(len, h), centre);
    }
  }
  const double base = pf.mu[g.distinguished()];
  pf.total_mass = 0.0;
  for (auto& m : pf.mu) {
    m /= base;
    pf.total_mass += m * m;
  }
  return pf;
}

int coxeter_number(const DynkinGraph& g) {
  switch (g.family()) {
    case Family::A: return g.rank() + 1;
    case Family::D: return 2 * g.rank() - 2;
    case Family::E: return g.rank() == 6 ? 12 : g.rank() == 7 ? 18 : 30;
  }
  return 0;
}

int coxeter_number_by_recursion(const DynkinGraph& g) {
  const auto& adj = g.adjacency();
  IntMatrix prev = IntMatrix::identity(g.size());
  IntMatrix cur = adj;
  int n = 2;  // cur holds U_{n-1}
  while (!cur.is_zero()) {
    IntMatrix next = cur * adj - prev;
    prev = std::move(cur);
    cur = std::move(next);
    ++n;
    if (n > 4 * static_cast<int>(g.size()) + 8)
      throw Error(ErrorKind::InvalidArgument, "Chebyshev sequence does not vanish");
  }
  return n;
}

}  // namespace ghj
