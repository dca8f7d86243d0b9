#include <algorithm>

#include "ghj/ghj.hpp"

namespace ghj {

namespace {

struct Flat {
  std::size_t ne = 0;
  std::size_t no = 0;
  const IntMatrix* adj = nullptr;
  std::vector<std::vector<std::int64_t>> colour;  // per vertex, evens first

  std::int64_t edge(std::size_t e, std::size_t o) const { return (*adj)(e, o); }
};

Flat flatten(const PrincipalGraphData& g) {
  Flat f{g.evens.size(), g.odds.size(), &g.adjacency, {}};
  for (std::size_t e = 0; e < f.ne; ++e) {
    std::vector<std::int64_t> c{0, g.evens[e].depth};
    std::vector<std::int64_t> mults;
    for (std::size_t o = 0; o < f.no; ++o)
      if (f.edge(e, o)) mults.push_back(f.edge(e, o));
    std::sort(mults.begin(), mults.end());
    c.insert(c.end(), mults.begin(), mults.end());
    f.colour.push_back(std::move(c));
  }
  for (std::size_t o = 0; o < f.no; ++o) {
    std::vector<std::int64_t> c{1, g.odds[o].depth};
    std::vector<std::int64_t> mults;
    for (std::size_t e = 0; e < f.ne; ++e)
      if (f.edge(e, o)) mults.push_back(f.edge(e, o));
    std::sort(mults.begin(), mults.end());
    c.insert(c.end(), mults.begin(), mults.end());
    f.colour.push_back(std::move(c));
  }
  return f;
}

}  // namespace

bool graphs_isomorphic(const PrincipalGraphData& a, const PrincipalGraphData& b) {
  if (a.evens.size() != b.evens.size() || a.odds.size() != b.odds.size()) return false;
  if (a.evens.empty()) return true;
  const Flat fa = flatten(a), fb = flatten(b);
  {
    auto x = fa.colour, y = fb.colour;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  const auto ne = fa.ne, total = fa.ne + fa.no;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> f(total, unset);
  std::vector<char> used(total, 0);

  // An even and an odd vertex are adjacent with multiplicity edge(e, o).
  auto compatible = [&](std::size_t v, std::size_t c) {
    for (std::size_t u = 0; u < total; ++u) {
      if (f[u] == unset || (u < ne) == (v < ne)) continue;
      const auto ma = v < ne ? fa.edge(v, u - ne) : fa.edge(u, v - ne);
      const auto mb = c < ne ? fb.edge(c, f[u] - ne) : fb.edge(f[u], c - ne);
      if (ma != mb) return false;
    }
    return true;
  };
  std::vector<std::size_t> order(total);
  for (std::size_t v = 0; v < total; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return fa.colour[x][1] < fa.colour[y][1]; });
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == total) return true;
    const auto v = order[depth];
    const std::size_t lo = v < ne ? 0 : ne, hi = v < ne ? ne : total;
    for (std::size_t c = lo; c < hi; ++c) {
      if (used[c] || fa.colour[v] != fb.colour[c]) continue;
      if (v == 0 && c != 0) continue;  // distinguished vertex
      if (!compatible(v, c)) continue;
      f[v] = c;
      used[c] = 1;
      if (self(self, depth + 1)) return true;
      used[c] = 0;
      f[v] = unset;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace ghj
