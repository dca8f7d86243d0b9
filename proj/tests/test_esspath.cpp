#include <doctest.h>

#include <set>

#include "ghj/error.hpp"
#include "ghj/esspath.hpp"

using namespace ghj;

TEST_CASE("table has h-1 lengths and starts with I, adjacency") {
  for (auto spec : {"A4", "D6", "E6", "E8"}) {
    const auto g = build_diagram(spec);
    const auto t = esspath_table(g);
    CHECK(t.size() == static_cast<std::size_t>(g.coxeter_number() - 1));
    CHECK(t[0] == IntMatrix::identity(g.size()));
    CHECK(t[1] == g.adjacency());
    CHECK(t.at_length(t.size()).is_zero());
    for (const auto& m : t.matrices()) CHECK(m.nonnegative());
  }
}

TEST_CASE("A4 length 3 from a0 reaches only a3") {
  const auto t = esspath_table(build_diagram("A4"));
  for (std::size_t y = 0; y < 4; ++y) CHECK(t.dim(3, 0, y) == (y == 3 ? 1 : 0));
}

TEST_CASE("E6 row e0 supports") {
  const auto g = build_diagram("E6");
  const auto t = esspath_table(g);
  const std::vector<std::set<std::string>> want = {
      {"e0"}, {"e1"}, {"e2"}, {"e3", "e5"}, {"e2", "e4"}, {"e1", "e5"},
      {"e0", "e2"}, {"e1", "e3"}, {"e2"}, {"e5"}, {"e4"}};
  REQUIRE(t.size() == want.size());
  for (std::size_t n = 0; n < t.size(); ++n) {
    std::set<std::string> got;
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (t.dim(n, 0, y) == 0) continue;
      CHECK(t.dim(n, 0, y) == 1);
      got.insert(g.label(y));
    }
    CHECK(got == want[n]);
  }
}

TEST_CASE("Chebyshev sequence vanishes at h-1") {
  for (auto spec : {"A5", "D7", "E7"}) {
    const auto g = build_diagram(spec);
    const auto h = static_cast<std::size_t>(g.coxeter_number());
    const auto seq = chebyshev_sequence(g.adjacency(), h + 1);
    CHECK(seq[h - 1].is_zero());
    CHECK_FALSE(seq[h - 2].is_zero());
  }
}

TEST_CASE("oracle agrees with the recursion") {
  for (auto spec : {"A3", "A4", "A6", "D4", "D5", "D6", "E6", "E7"}) {
    const auto g = build_diagram(spec);
    const auto t = esspath_table(g);
    for (int n = 0; n <= kOracleMaxLength; ++n) CHECK(esspath_oracle(g, n) == t.at_length(n));
  }
}

TEST_CASE("D4 length 2") {
  const auto g = build_diagram("D4");
  const auto e2 = esspath_oracle(g, 2);
  CHECK(e2(0, g.index_of("d2")) == 1);
  CHECK(e2(0, 0) == 0);
  CHECK(esspath_oracle(g, 0) == IntMatrix::identity(4));
  CHECK(esspath_oracle(g, 1) == g.adjacency());
}

TEST_CASE("Jones projections are idempotent and satisfy Temperley-Lieb") {
  const auto g = build_diagram("E6");
  const PathSpace ps(g, 4);
  const double beta = perron_data(g).beta;
  const std::size_t x = 0, y = g.index_of("e2");
  const auto dim = ps.block(x, y).size();
  REQUIRE(dim > 0);
  auto mul = [&](const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += a[i * dim + k] * b[k * dim + j];
    return c;
  };
  for (int k = 1; k <= 3; ++k) {
    const auto e = ps.jones(x, y, k);
    const auto ee = mul(e, e);
    for (std::size_t i = 0; i < e.size(); ++i) CHECK(ee[i] == doctest::Approx(e[i]).epsilon(1e-12));
  }
  for (int k = 1; k <= 2; ++k) {
    const auto a = ps.jones(x, y, k), b = ps.jones(x, y, k + 1);
    const auto aba = mul(mul(a, b), a);
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(aba[i] == doctest::Approx(a[i] / (beta * beta)).epsilon(1e-12));
  }
}

TEST_CASE("oracle rejects long paths") {
  const auto g = build_diagram("A4");
  try {
    esspath_oracle(g, kOracleMaxLength + 1);
    FAIL("expected LengthTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthTooLarge);
  }
}
