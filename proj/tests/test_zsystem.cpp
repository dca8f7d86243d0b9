#include <doctest.h>

#include <algorithm>
#include <map>

#include "ghj/error.hpp"
#include "ghj/zsystem.hpp"

using namespace ghj;

namespace {

const std::map<std::string, std::size_t> kExpectedCount = {
    {"A3", 3}, {"A6", 6}, {"D4", 8}, {"D5", 7}, {"D6", 12}, {"D7", 11},
    {"D8", 16}, {"E6", 12}, {"E7", 17}, {"E8", 32}};

std::int64_t trace_square(const IntMatrix& z) {
  std::int64_t s = 0;
  for (auto v : z.data()) s += v * v;
  return s;
}

}  // namespace

TEST_CASE("product Gram entries") {
  const auto a = esspath_table(build_diagram("A5"));
  const auto ga = product_gram(a);
  CHECK(ga.G(ga.index(0, 0), ga.index(0, 0)) == 1);

  const auto t = esspath_table(build_diagram("E6"));
  const auto gram = product_gram(t);
  CHECK(gram.G.is_symmetric());
  // sum over n of E^n(x,x)^2 is the number of A-A sectors in x-bar x
  for (std::size_t x = 0; x < 6; ++x) {
    std::int64_t want = 0;
    for (std::size_t n = 0; n < t.size(); ++n) want += t.dim(n, x, x) * t.dim(n, x, x);
    CHECK(gram.G(gram.index(x, x), gram.index(x, x)) == want);
  }
  CHECK(gram.G(gram.index(0, 0), gram.index(0, 0)) == 2);
  CHECK(gram.G(gram.index(0, 1), gram.index(0, 1)) == 3);
}

TEST_CASE("modular invariants: trace of Z^T Z counts irreducibles") {
  for (const auto& [spec, count] : kExpectedCount) {
    const auto g = build_diagram(spec);
    const auto z = modular_invariant(g);
    CHECK(z.rows() == static_cast<std::size_t>(g.coxeter_number() - 1));
    CHECK(z.nonnegative());
    CHECK(z(0, 0) == 1);
    CHECK(trace_square(z) == static_cast<std::int64_t>(count));
    const auto ex = exponent_multiplicities(g);
    for (std::size_t i = 0; i < ex.size(); ++i) CHECK(z(i, i) == ex[i]);
  }
}

TEST_CASE("factor_gram on small inputs") {
  const IntMatrix g{{2, 1}, {1, 1}};
  const auto f = factor_gram(g, {0, 1});
  IntMatrix sum(2, 2);
  for (const auto& r : f.rows)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) sum(i, j) += r[i] * r[j];
  CHECK(sum == g);
  CHECK(f.rows.size() == 2);

  try {
    factor_gram(IntMatrix{{1, 2}, {2, 1}}, {0, 1});
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DecompositionFailed);
  }
  // 2 I = e1 e1 + e1 e1 + ... has two different factorizations over two rows
  try {
    factor_gram(IntMatrix{{2, 0, 1}, {0, 2, 1}, {1, 1, 2}}, {0, 1, 2});
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::AmbiguousDecomposition || e.kind() == ErrorKind::DecompositionFailed));
  }
}

TEST_CASE("A_m: irreducibles are the essential path matrices") {
  const auto t = esspath_table(build_diagram("A6"));
  const auto sys = decompose_zsystem(t);
  REQUIRE(sys.size() == 6);
  std::vector<IntMatrix> got, want(t.matrices());
  for (const auto& w : sys.irreducibles) got.push_back(w.n);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(sys.irreducibles[0].n == IntMatrix::identity(6));
  CHECK(sys.irreducibles[0].alias == "[0]");
}

TEST_CASE("decompositions validate and have the expected size") {
  for (const auto& [spec, count] : kExpectedCount) {
    CAPTURE(spec);
    const auto t = esspath_table(build_diagram(spec));
    const auto sys = decompose_zsystem(t);
    CHECK(sys.size() == count);
    const auto v = validate_system(sys, product_gram(t));
    CHECK_MESSAGE(v.ok(), v.detail);
    const auto ring = zfusion_table(sys);
    CHECK(check_ring(ring).ok());
    for (std::size_t i = 0; i < ring.size(); ++i)
      CHECK(ring.qdims[i] == doctest::Approx(sys.irreducibles[i].qdim));
  }
}

TEST_CASE("D_2n: epsilon") {
  for (auto spec : {"D4", "D6", "D8"}) {
    CAPTURE(spec);
    const auto t = esspath_table(build_diagram(spec));
    const auto& g = t.graph();
    const auto sys = decompose_zsystem(t);
    REQUIRE(sys.epsilon.has_value());
    const auto e = *sys.epsilon;
    const auto ring = zfusion_table(sys);
    CHECK(ring.product(e, e) == std::vector<std::pair<std::size_t, std::int64_t>>{{0, 1}});
    CHECK(sys.irreducibles[e].alias == "eps");
    const auto r = g.size();
    IntMatrix flip = IntMatrix::identity(r);
    flip(r - 1, r - 1) = flip(r - 2, r - 2) = 0;
    flip(r - 1, r - 2) = flip(r - 2, r - 1) = 1;
    CHECK(sys.irreducibles[e].n == flip);
    for (const auto& m : t.matrices()) CHECK(m != flip);
  }
}

TEST_CASE("D6 even part is noncommutative, E8 commutative") {
  const auto d6 = decompose_zsystem(esspath_table(build_diagram("D6")));
  CHECK_FALSE(is_commutative(zfusion_table(d6)).commutative);
  const auto e8 = decompose_zsystem(esspath_table(build_diagram("E8")));
  CHECK(is_commutative(zfusion_table(e8)).commutative);
  const auto a5 = decompose_zsystem(esspath_table(build_diagram("A5")));
  CHECK(is_commutative(zfusion_table(a5)).commutative);
}

TEST_CASE("E7 has a product with multiplicities 2, 3, 1") {
  const auto ring = zfusion_table(decompose_zsystem(esspath_table(build_diagram("E7"))));
  bool found = false;
  for (std::size_t i = 0; i < ring.size() && !found; ++i)
    for (std::size_t j = 0; j < ring.size() && !found; ++j) {
      std::vector<std::int64_t> m;
      for (const auto& [k, v] : ring.product(i, j)) m.push_back(v);
      std::sort(m.begin(), m.end());
      found = m == std::vector<std::int64_t>{1, 2, 3};
    }
  CHECK(found);
}

TEST_CASE("D_2n without the epsilon seed") {
  auto unseeded = [](const char* spec, std::size_t cap) {
    DecomposeOptions opt;
    opt.seed_epsilon = false;
    opt.node_cap = cap;
    try {
      zfusion_table(decompose_zsystem(esspath_table(build_diagram(spec)), opt));
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("unseeded " << spec << " produced a fusion table");
    return ErrorKind::InvalidArgument;
  };
  CHECK(unseeded("D4", 10'000'000) == ErrorKind::DependentRepresentation);
  CHECK(unseeded("D6", 100'000) == ErrorKind::DecompositionFailed);
}

TEST_CASE("assemble_system is independent of input order") {
  const auto t = esspath_table(build_diagram("E6"));
  const auto sys = decompose_zsystem(t);
  SystemParts parts;
  const auto k = sys.size();
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = k - 1 - i;
  for (auto p : perm) parts.n.push_back(sys.irreducibles[p].n);
  parts.F.assign(k * k * k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        parts.F[(a * k + b) * k + c] = sys.structure->N(perm[a], perm[b], perm[c]);
  for (auto p : perm) parts.chiral.push_back(sys.irreducibles[p].chiral);
  parts.route = sys.route;
  const auto again = assemble_system(t.graph(), parts);
  REQUIRE(again.size() == k);
  for (std::size_t i = 0; i < k; ++i) {
    CHECK(again.irreducibles[i].n == sys.irreducibles[i].n);
    CHECK(again.irreducibles[i].alias == sys.irreducibles[i].alias);
  }
  CHECK(again.structure->constants == sys.structure->constants);
}
