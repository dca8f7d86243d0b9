#include <doctest.h>

#include <set>

#include "ghj/error.hpp"
#include "ghj/sectors.hpp"

using namespace ghj;

namespace {

std::set<std::string> labels(const std::vector<GraphVertex>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs) out.insert(v.label);
  return out;
}

}  // namespace

TEST_CASE("A_l fusion ring") {
  const auto r11 = aa_fusion_ring(11);
  CHECK(check_ring(r11).ok());
  CHECK(is_commutative(r11).commutative);
  CHECK(r11.identity == 0);
  for (std::size_t i = 0; i < r11.size(); ++i) CHECK(r11.conjugate[i] == i);
  const auto p = r11.product(1, 1);
  CHECK(p == std::vector<std::pair<std::size_t, std::int64_t>>{{0, 1}, {2, 1}});

  const auto r4 = aa_fusion_ring(4);
  CHECK(r4.product(3, 3) == std::vector<std::pair<std::size_t, std::int64_t>>{{0, 1}});
  for (int l = 1; l <= 6; ++l) {
    const auto r = aa_fusion_ring(l);
    for (std::size_t j = 0; j < r.size(); ++j)
      CHECK(r.product(0, j) == std::vector<std::pair<std::size_t, std::int64_t>>{{j, 1}});
  }
}

TEST_CASE("A-A acting on A-K") {
  const auto t = esspath_table(build_diagram("E6"));
  const auto& g = t.graph();
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto d = aa_times_ak(t, 0, x);
    CHECK(d.kind == SectorKind::AK);
    CHECK(d.terms == std::map<std::size_t, std::int64_t>{{x, 1}});
  }
  CHECK(aa_times_ak(t, 2, 0).terms == std::map<std::size_t, std::int64_t>{{g.index_of("e2"), 1}});
  CHECK(aa_times_ak(t, 4, 0).terms ==
        std::map<std::size_t, std::int64_t>{{g.index_of("e2"), 1}, {g.index_of("e4"), 1}});
}

TEST_CASE("K-A times A-K") {
  const auto t = esspath_table(build_diagram("E6"));
  const auto& g = t.graph();
  for (std::size_t x = 0; x < g.size(); ++x) CHECK(ak_times_ka(t, x, x).multiplicity(0) == 1);
  const auto d = ak_times_ka(t, g.index_of("e1"), 0);
  CHECK(d.kind == SectorKind::AA);
  CHECK(d.terms == std::map<std::size_t, std::int64_t>{{1, 1}, {5, 1}, {7, 1}});
  const auto a4 = esspath_table(build_diagram("A4"));
  CHECK(ak_times_ka(a4, 0, 0).terms == std::map<std::size_t, std::int64_t>{{0, 1}});
}

TEST_CASE("principal graph of D5 at d0 is a 3-vertex chain") {
  const auto t = esspath_table(build_diagram("D5"));
  const auto pg = principal_graph(t, 0);
  CHECK(pg.vertex_count() == 3);
  REQUIRE(pg.evens.size() == 2);
  REQUIRE(pg.odds.size() == 1);
  CHECK(pg.evens[0].label == "[0]");
  CHECK(pg.evens[1].label == "[6]");
  CHECK(pg.odds[0].label == "d0");
  CHECK(pg.adjacency(0, 0) == 1);
  CHECK(pg.adjacency(1, 0) == 1);
}

TEST_CASE("principal graph of E6 at e0") {
  const auto t = esspath_table(build_diagram("E6"));
  const auto pg = principal_graph(t, 0);
  CHECK(labels(pg.evens) == std::set<std::string>{"[0]", "[2]", "[4]", "[6]", "[8]", "[10]"});
  // only vertices of the colour of e0 can be joined to even-length classes
  CHECK(labels(pg.odds) == std::set<std::string>{"e0", "e2", "e4"});
  CHECK(pg.vertex_count() == 9);
  CHECK(pg.evens[0].label == "[0]");
  CHECK(pg.evens[0].depth == 0);
  std::int64_t edges = 0;
  for (auto v : pg.adjacency.data()) edges += v;
  CHECK(edges == 8);
}

TEST_CASE("principal graph depths increase by one along edges") {
  for (auto spec : {"A7", "D8", "E7", "E8"}) {
    const auto t = esspath_table(build_diagram(spec));
    const auto pg = principal_graph(t, 0);
    for (std::size_t i = 0; i < pg.evens.size(); ++i)
      for (std::size_t j = 0; j < pg.odds.size(); ++j)
        if (pg.adjacency(i, j))
          CHECK(std::abs(pg.evens[i].depth - pg.odds[j].depth) == 1);
  }
}

TEST_CASE("bipartite component keeps only the reachable part") {
  const IntMatrix b{{1, 0}, {0, 1}};
  const auto pg = bipartite_component(b, {"p", "q"}, {"u", "v"}, 0);
  CHECK(pg.evens.size() == 1);
  CHECK(pg.odds.size() == 1);
  CHECK_FALSE(pg.diagnostics.empty());
}
