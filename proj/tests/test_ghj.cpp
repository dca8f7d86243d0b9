#include <doctest.h>

#include <cmath>
#include <map>
#include <memory>

#include "ghj/error.hpp"
#include "ghj/ghj.hpp"

using namespace ghj;

namespace {

struct Loaded {
  EssPathTable table;
  ConnectionSystem sys;
  FusionRing ring;
};

const Loaded& load(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<Loaded>> memo;
  auto& slot = memo[spec];
  if (!slot) {
    auto t = esspath_table(build_diagram(spec));
    auto sys = decompose_zsystem(t);
    auto ring = zfusion_table(sys);
    slot = std::make_unique<Loaded>(Loaded{std::move(t), std::move(sys), std::move(ring)});
  }
  return *slot;
}

GHJReport report(const std::string& spec, const std::string& v) {
  const auto& l = load(spec);
  return ghj_report(l.table, l.sys, l.ring, l.table.graph().index_of(v));
}

}  // namespace

TEST_CASE("indices") {
  auto idx = [](const char* spec, const char* v) {
    const auto g = build_diagram(spec);
    return ghj_index(g, g.index_of(v));
  };
  CHECK(idx("E6", "e0") == doctest::Approx(3 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(std::abs(idx("E7", "e0") - 7.759) < 5e-4);
  CHECK(std::abs(idx("E8", "e0") - 19.48) < 5e-3);
  for (auto spec : {"D4", "D5", "D6", "D7", "D10"}) CHECK(idx(spec, "d0") == doctest::Approx(2.0));
  // for A the index is 1 at a0
  CHECK(idx("A7", "a0") == doctest::Approx(1.0));
}

TEST_CASE("A_n: principal and dual graphs coincide") {
  for (auto spec : {"A4", "A7"}) {
    const auto& l = load(spec);
    for (std::size_t x = 0; x < l.table.graph().size(); ++x) {
      const auto r = ghj_report(l.table, l.sys, l.ring, x);
      CHECK(r.graphs_isomorphic);
      CHECK(r.rings_isomorphic);
      CHECK(rings_isomorphic(r.rings.nn, r.rings.mm));
    }
  }
}

TEST_CASE("D5 at d0: index-2 chain on both sides") {
  const auto r = report("D5", "d0");
  CHECK(r.principal.vertex_count() == 3);
  CHECK(r.dual.vertex_count() == 3);
  CHECK(r.graphs_isomorphic);
}

TEST_CASE("D_odd: graphs and rings agree") {
  for (int n = 2; n <= 4; ++n) {
    const auto spec = "D" + std::to_string(2 * n + 1);
    const auto a_even = aa_fusion_ring(4 * n - 1);
    for (int k = 1; k <= 2 * n - 2; ++k) {
      CAPTURE(spec);
      CAPTURE(k);
      const auto r = report(spec, "d" + std::to_string(k));
      CHECK(r.graphs_isomorphic);
      CHECK(r.rings_isomorphic);
      CHECK(r.rings.nn.size() == 2 * static_cast<std::size_t>(n));
    }
    CHECK(a_even.size() == 4 * static_cast<std::size_t>(n) - 1);
  }
}

TEST_CASE("even-vertex counts") {
  for (int n = 3; n <= 6; ++n) {
    const auto r = report("D" + std::to_string(2 * n), "d1");
    CHECK(r.principal_evens() == static_cast<std::size_t>(2 * n - 1));
    CHECK(r.dual_evens() == static_cast<std::size_t>(2 * n + 2));
    CHECK_FALSE(r.mm_commutative);
  }
  const auto e7 = report("E7", "e0");
  CHECK(e7.principal_evens() == 9);
  CHECK(e7.dual_evens() == 9);
  const auto e8 = report("E8", "e0");
  CHECK(e8.principal_evens() == 15);
  CHECK(e8.dual_evens() == 16);
  CHECK(e8.mm_commutative);
}

TEST_CASE("E6 at e0: same graphs, different rings") {
  const auto r = report("E6", "e0");
  CHECK(r.principal_evens() == 6);
  CHECK(r.dual_evens() == 6);
  CHECK(r.graphs_isomorphic);
  CHECK_FALSE(r.rings_isomorphic);
  CHECK(r.nn_commutative);
  CHECK(r.rings.nn.size() == 6);
}

TEST_CASE("N-N ring is always commutative") {
  for (auto spec : {"A6", "D6", "D7", "E6", "E7", "E8"}) {
    const auto& l = load(spec);
    for (std::size_t x = 0; x < l.table.graph().size(); ++x)
      CHECK(ghj_report(l.table, l.sys, l.ring, x).nn_commutative);
  }
}

TEST_CASE("intermediate subfactors") {
  auto has = [](const char* spec, const char* v) {
    const auto& l = load(spec);
    return intermediate_decomposition(l.sys, l.table.graph().index_of(v)).has_value();
  };
  CHECK(has("E6", "e1"));
  CHECK_FALSE(has("E6", "e0"));
  CHECK_FALSE(has("E7", "e4"));
  CHECK(has("D7", "d3"));
  const auto& l = load("E6");
  const auto w = intermediate_decomposition(l.sys, l.table.graph().index_of("e1"));
  REQUIRE(w);
  const auto& n = l.sys.irreducibles[w->irreducible].n;
  for (std::size_t y = 0; y < n.cols(); ++y) CHECK(n(0, y) == (y == 1 ? 1 : 0));
  CHECK(l.sys.irreducibles[w->irreducible].qdim > 1.0);
}

TEST_CASE("graph isomorphism distinguishes") {
  const auto a = report("E6", "e0");
  const auto b = report("E7", "e0");
  CHECK(graphs_isomorphic(a.principal, a.principal));
  CHECK_FALSE(graphs_isomorphic(a.principal, b.principal));
}

TEST_CASE("subequivalence") {
  auto run = [](const char* spec) { return subequivalence_report(load(spec).table); };
  const auto e6 = run("E6");
  CHECK(e6.holds);
  CHECK(e6.larger == "A11");
  CHECK(e6.nn_size == 6);
  CHECK(e6.nn_commutative);
  CHECK_FALSE(e6.rings_isomorphic);
  const auto d6 = run("D6");
  CHECK(d6.holds);
  CHECK(d6.larger == "A9");
  CHECK_FALSE(d6.mm_commutative);
  const auto e8 = run("E8");
  CHECK(e8.holds);
  CHECK(e8.larger == "A29");
  const auto d4 = run("D4");
  CHECK(d4.vertices == std::vector<std::string>{"d0", "d2", "d2'"});
  try {
    run("E7");
    FAIL("E7 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}
