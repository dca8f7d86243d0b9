#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ghj/core.hpp"
#include "ghj/error.hpp"

using namespace ghj;

namespace {

std::vector<std::size_t> degrees(const DynkinGraph& g) {
  std::vector<std::size_t> d;
  for (std::size_t v = 0; v < g.size(); ++v) d.push_back(g.degree(v));
  return d;
}

ErrorKind kind_of(std::string_view spec) {
  try {
    build_diagram(spec);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << spec);
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("A4 is a chain with h = 5") {
  const auto g = build_diagram("A4");
  CHECK(g.size() == 4);
  CHECK(g.labels() == std::vector<std::string>{"a0", "a1", "a2", "a3"});
  CHECK(g.coxeter_number() == 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(g.adjacency()(i, j) == ((i + 1 == j || j + 1 == i) ? 1 : 0));
  CHECK(g.bipartition() == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("E6 degrees and triple point") {
  const auto g = build_diagram("e6");
  CHECK(g.name() == "E6");
  CHECK(degrees(g) == std::vector<std::size_t>{1, 2, 3, 1, 1, 2});
  auto d = degrees(g);
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::size_t>{1, 1, 1, 2, 2, 3});
  CHECK(g.degree(g.index_of("e2")) == 3);
  const auto along = std::vector<std::string>{"e0", "e1", "e2", "e5", "e4"};
  for (std::size_t i = 0; i + 1 < along.size(); ++i)
    CHECK(g.adjacency()(g.index_of(along[i]), g.index_of(along[i + 1])) == 1);
}

TEST_CASE("D6 fork") {
  const auto g = build_diagram("D6");
  CHECK(g.labels().back() == "d4'");
  CHECK(g.degree(g.index_of("d3")) == 3);
  CHECK(g.adjacency()(g.index_of("d3"), g.index_of("d4")) == 1);
  CHECK(g.adjacency()(g.index_of("d3"), g.index_of("d4'")) == 1);
  CHECK(g.is_d_even());
  CHECK_FALSE(build_diagram("D5").is_d_even());
}

TEST_CASE("adjacency is symmetric and properly 2-coloured") {
  for (auto spec : {"A1", "A7", "D4", "D9", "E6", "E7", "E8"}) {
    const auto g = build_diagram(spec);
    CHECK(g.adjacency().is_symmetric());
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        if (g.adjacency()(i, j)) CHECK(g.colour(i) != g.colour(j));
    CHECK(g.colour(g.distinguished()) == 0);
  }
}

TEST_CASE("Perron-Frobenius data") {
  for (auto spec : {"A3", "A11", "D5", "D8", "E6", "E7", "E8"}) {
    const auto g = build_diagram(spec);
    const auto pf = perron_data(g);
    CHECK(pf.beta == doctest::Approx(2 * std::cos(std::numbers::pi / g.coxeter_number())).epsilon(1e-12));
    CHECK(pf.mu[0] == doctest::Approx(1.0));
    double mass = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
      double s = 0;
      for (std::size_t w = 0; w < g.size(); ++w) s += g.adjacency()(v, w) * pf.mu[w];
      CHECK(std::abs(s - pf.beta * pf.mu[v]) < 1e-12);
      CHECK(pf.mu[v] >= 1.0 - 1e-12);
      mass += pf.mu[v] * pf.mu[v];
    }
    CHECK(pf.total_mass == doctest::Approx(mass));
  }
  CHECK(perron_data(build_diagram("A3")).beta == doctest::Approx(std::sqrt(2.0)));
  CHECK(perron_data(build_diagram("E6")).beta == doctest::Approx(1.93185165));
  CHECK(perron_data(build_diagram("A11")).total_mass == doctest::Approx(48 + 24 * std::sqrt(3.0)));
}

TEST_CASE("A_{h-1} has twice the mass of D") {
  for (int r = 4; r <= 10; ++r) {
    const auto d = build_diagram(Family::D, r);
    const auto a = build_diagram(Family::A, d.coxeter_number() - 1);
    CHECK(perron_data(a).total_mass == doctest::Approx(2 * perron_data(d).total_mass));
  }
}

TEST_CASE("Coxeter numbers agree with the recursion") {
  CHECK(coxeter_number(build_diagram("A4")) == 5);
  CHECK(coxeter_number(build_diagram("D5")) == 8);
  CHECK(coxeter_number(build_diagram("E6")) == 12);
  CHECK(coxeter_number(build_diagram("E7")) == 18);
  CHECK(coxeter_number(build_diagram("E8")) == 30);
  for (auto spec : {"A1", "A4", "A12", "D4", "D5", "D11", "E6", "E7", "E8"}) {
    const auto g = build_diagram(spec);
    CHECK(coxeter_number_by_recursion(g) == coxeter_number(g));
  }
}

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(1, 12) == doctest::Approx(1.0));
  CHECK(quantum_integer(2, 12) == doctest::Approx(2 * std::cos(std::numbers::pi / 12)));
  CHECK(quantum_integer(12, 12) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("bad specs") {
  CHECK(kind_of("X9") == ErrorKind::UnknownFamily);
  CHECK(kind_of("E9") == ErrorKind::RankOutOfRange);
  CHECK(kind_of("D3") == ErrorKind::RankOutOfRange);
  CHECK(kind_of("A0") == ErrorKind::RankOutOfRange);
  CHECK_THROWS_AS(build_diagram("E6").index_of("e9"), Error);
  try {
    build_diagram("E6").index_of("e9");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVertex);
  }
}
