#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include "ghj/cli.hpp"
#include "ghj/error.hpp"

namespace ghj::cli {

const EssPathTable& Workspace::table(const std::string& spec) {
  auto& slot = tables_[spec];
  if (!slot) slot = std::make_unique<EssPathTable>(build_diagram(spec));
  return *slot;
}

const ConnectionSystem& Workspace::system(const std::string& spec) {
  auto& slot = systems_[spec];
  if (!slot) slot = std::make_unique<ConnectionSystem>(load_or_decompose(table(spec), cache_));
  return *slot;
}

const FusionRing& Workspace::ring(const std::string& spec) {
  auto& slot = rings_[spec];
  if (!slot) slot = std::make_unique<FusionRing>(zfusion_table(system(spec)));
  return *slot;
}

namespace {

std::string D(int n) { return "D" + std::to_string(n); }
std::string A(int n) { return "A" + std::to_string(n); }

std::vector<std::string> small_diagrams() {
  std::vector<std::string> out;
  for (int n = 1; n <= 8; ++n) out.push_back(A(n));
  for (int n = 4; n <= 8; ++n) out.push_back(D(n));
  out.insert(out.end(), {"E6", "E7", "E8"});
  return out;
}

// every diagram with Coxeter number at most 30
std::vector<std::string> all_diagrams() {
  std::vector<std::string> out;
  for (int n = 1; n <= 29; ++n) out.push_back(A(n));
  for (int n = 4; n <= 16; ++n) out.push_back(D(n));
  out.insert(out.end(), {"E6", "E7", "E8"});
  return out;
}

// diagrams whose K-K system is built by the suite
std::vector<std::string> system_diagrams() {
  std::vector<std::string> out;
  for (int n = 1; n <= 11; ++n) out.push_back(A(n));
  for (int n = 4; n <= 12; ++n) out.push_back(D(n));
  out.insert(out.end(), {"E6", "E7", "E8"});
  return out;
}

class Collector {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) msg_ += (msg_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& what) { notes_ += (notes_.empty() ? "" : ", ") + what; }
  CheckResult result(int id, std::string name) const {
    CheckResult r{id, std::move(name), failures_ == 0, {}};
    r.detail = failures_ ? std::to_string(failures_) + " failure(s): " + msg_ : notes_;
    return r;
  }

 private:
  int failures_ = 0;
  std::string msg_, notes_;
};

std::string fmt(double v, int digits = 9) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

CheckResult oracle_equivalence(Workspace& ws) {
  Collector c;
  std::size_t compared = 0;
  for (const auto& spec : small_diagrams()) {
    const auto& t = ws.table(spec);
    for (int n = 0; n <= 6; ++n) {
      ++compared;
      if (t.at_length(n) != esspath_oracle(t.graph(), n)) c.fail(spec + " n=" + std::to_string(n));
    }
  }
  c.note(std::to_string(compared) + " tables equal to the projector ranks");
  return c.result(1, "essential paths agree with the Wenzl-projector oracle");
}

CheckResult vanishing(Workspace& ws) {
  Collector c;
  for (const auto& spec : all_diagrams()) {
    const auto& t = ws.table(spec);
    const auto& g = t.graph();
    const auto h = g.coxeter_number();
    const auto seq = chebyshev_sequence(g.adjacency(), static_cast<std::size_t>(h));
    if (!seq.back().is_zero()) c.fail(spec + " E(h-1) != 0");
    for (int n = 0; n + 1 < h; ++n) {
      if (seq[n].is_zero()) c.fail(spec + " vanishes early at " + std::to_string(n));
      if (!seq[n].nonnegative()) c.fail(spec + " negative at " + std::to_string(n));
    }
    if (coxeter_number_by_recursion(g) != h || coxeter_number(g) != h) c.fail(spec + " Coxeter number");
  }
  c.note(std::to_string(all_diagrams().size()) + " diagrams up to h = 30");
  return c.result(2, "Pascal rule vanishes exactly at h-1 and stays nonnegative");
}

CheckResult indices(Workspace& ws) {
  Collector c;
  auto expect = [&](const std::string& spec, const std::string& v, double want, double tol) {
    const auto& g = ws.table(spec).graph();
    const double got = ghj_index(g, g.index_of(v));
    if (std::abs(got - want) > tol) c.fail(spec + "," + v + " = " + fmt(got) + " vs " + fmt(want));
    return got;
  };
  c.note("E6 " + fmt(expect("E6", "e0", 3.0 + std::sqrt(3.0), 1e-9), 7));
  c.note("E7 " + fmt(expect("E7", "e0", 7.759, 5e-3), 4));
  c.note("E8 " + fmt(expect("E8", "e0", 19.48, 5e-2), 3));
  for (int n = 2; n <= 6; ++n) {
    expect(D(2 * n + 1), "d0", 2.0, 1e-9);
    expect(D(2 * n), "d0", 2.0, 1e-9);
  }
  for (int n = 2; n <= 29; ++n) {
    const double cs = std::cos(std::numbers::pi / (n + 1));
    expect(A(n), "a1", 4.0 * cs * cs, 1e-9);
  }
  return c.result(3, "subfactor indices");
}

CheckResult even_counts(Workspace& ws) {
  Collector c;
  auto count = [&](const std::string& spec, const std::string& v, std::size_t p, std::size_t d) {
    const auto& t = ws.table(spec);
    const auto x = t.graph().index_of(v);
    const auto pe = principal_graph(t, x).evens.size();
    const auto de = dual_principal_graph(ws.system(spec), x).evens.size();
    if (pe != p || de != d)
      c.fail(spec + "," + v + " gave " + std::to_string(pe) + "/" + std::to_string(de) + " want " +
             std::to_string(p) + "/" + std::to_string(d));
  };
  for (int n = 3; n <= 6; ++n) {
    const auto spec = D(2 * n);
    for (const auto& v : ws.table(spec).graph().labels())
      if (v != "d0") count(spec, v, 2 * n - 1, 2 * n + 2);
  }
  for (const auto& v : ws.table("E7").graph().labels()) count("E7", v, 9, 9);
  for (const auto& v : ws.table("E8").graph().labels()) count("E8", v, 15, 16);
  c.note("D6..D12 at every x != d0: 2n-1 vs 2n+2; E7 9 = 9; E8 15 != 16");
  return c.result(4, "even vertex counts of principal and dual principal graphs");
}

CheckResult e6_split(Workspace& ws) {
  Collector c;
  const auto& t = ws.table("E6");
  const auto report = ghj_report(t, ws.system("E6"), ws.ring("E6"), t.graph().index_of("e0"));
  if (!report.graphs_isomorphic) c.fail("graphs differ");
  if (report.rings_isomorphic) c.fail("even rings are isomorphic");
  c.note("graphs isomorphic with " + std::to_string(report.principal.vertex_count()) +
         " vertices; N-N and M-M rings differ");
  return c.result(5, "E6: same graphs, different fusion rules");
}

CheckResult commutativity(Workspace& ws) {
  Collector c;
  auto want = [&](const std::string& spec, bool commutative) {
    const auto even = even_part(ws.system(spec), ws.ring(spec));
    const auto v = is_commutative(even);
    if (v.commutative != commutative) c.fail(spec + (commutative ? " not commutative" : " commutative"));
    if (!commutative && v.witness) {
      const auto [i, j] = *v.witness;
      bool differs = false;
      for (std::size_t k = 0; k < even.size(); ++k) differs = differs || even.N(i, j, k) != even.N(j, i, k);
      if (!differs) c.fail(spec + " witness does not witness");
      if (spec == "D6") c.note("D6 witness " + even.basis[i] + "," + even.basis[j]);
    }
  };
  for (int n = 1; n <= 11; ++n) want(A(n), true);
  for (int n = 2; n <= 5; ++n) want(D(2 * n + 1), true);
  for (auto e : {"E6", "E7", "E8"}) want(e, true);
  for (int n = 2; n <= 6; ++n) want(D(2 * n), false);
  return c.result(6, "commutativity of the even K-K fusion rings");
}

CheckResult coset_structure(Workspace& ws) {
  Collector c;
  for (int n = 2; n <= 6; ++n) {
    const auto spec = D(2 * n);
    const auto& sys = ws.system(spec);
    const auto& ring = ws.ring(spec);
    const auto& t = ws.table(spec);
    const auto r = t.graph().size();
    if (!sys.epsilon) {
      c.fail(spec + " has no eps");
      continue;
    }
    const auto e = *sys.epsilon;
    const auto sq = ring.product(e, e);
    if (sq.size() != 1 || sq[0].first != ring.identity || sq[0].second != 1) c.fail(spec + " eps^2 != id");
    IntMatrix flip = IntMatrix::identity(r);
    flip(r - 2, r - 2) = flip(r - 1, r - 1) = 0;
    flip(r - 2, r - 1) = flip(r - 1, r - 2) = 1;
    if (sys.irreducibles[e].n != flip) c.fail(spec + " eps is not the tail flip");
    for (const auto& E : t.matrices())
      if (E == sys.irreducibles[e].n) c.fail(spec + " eps is an essential-path matrix");

    // right multiplication by eps pairs the basis; look for a closed half H
    std::vector<std::size_t> partner(sys.size(), sys.size());
    for (std::size_t w = 0; w < sys.size(); ++w) {
      const auto p = ring.product(w, e);
      if (p.size() == 1 && p[0].second == 1) partner[w] = p[0].first;
    }
    std::vector<std::size_t> reps;
    bool paired = true;
    for (std::size_t w = 0; w < sys.size(); ++w) {
      if (partner[w] == sys.size() || partner[w] == w || partner[partner[w]] != w) paired = false;
      else if (w < partner[w] && w != ring.identity && partner[w] != ring.identity) reps.push_back(w);
    }
    if (!paired || reps.size() + 1 != sys.size() / 2) {
      c.fail(spec + " right multiplication by eps is not a fixed-point-free pairing");
      continue;
    }
    std::optional<std::vector<std::size_t>> half;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << reps.size()) && !half; ++mask) {
      std::vector<std::size_t> H{ring.identity};
      for (std::size_t b = 0; b < reps.size(); ++b)
        H.push_back(mask >> b & 1 ? partner[reps[b]] : reps[b]);
      std::sort(H.begin(), H.end());
      if (fusion_closure(ring, H) == H) half = H;
    }
    if (!half) c.fail(spec + " basis is not H + H eps for a subring H");
    else if (n == 3) {
      std::string names;
      for (auto w : *half) names += (names.empty() ? "" : " ") + ring.basis[w];
      c.note("D6: H = {" + names + "}, |H| = |H eps| = " + std::to_string(half->size()));
    }
  }
  return c.result(7, "D_2n: eps^2 = id and two eps-cosets of equal size");
}

CheckResult e7_pattern(Workspace& ws) {
  Collector c;
  const auto& ring = ws.ring("E7");
  std::size_t found = 0;
  std::string example;
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t j = 0; j < ring.size(); ++j) {
      if (i == j || i == ring.identity || j == ring.identity) continue;
      auto p = ring.product(i, j);
      std::vector<std::int64_t> m;
      for (auto [k, v] : p) m.push_back(v);
      std::sort(m.begin(), m.end());
      if (m == std::vector<std::int64_t>{1, 2, 3}) {
        if (!found++) example = ring.basis[i] + " . " + ring.basis[j] + " = " + product_form(ring, i, j);
      }
    }
  if (!found) c.fail("no product with multiplicities {1,2,3}");
  else c.note(example + " (" + std::to_string(found) + " ordered pairs)");
  return c.result(8, "E7 fusion contains a product with multiplicities 1, 2, 3");
}

CheckResult ring_axioms(Workspace& ws) {
  Collector c;
  std::size_t rings = 0;
  auto check = [&](const FusionRing& r, const std::string& what) {
    ++rings;
    const auto v = check_ring(r);
    if (!v.ok()) c.fail(what + ": " + v.detail);
  };
  for (int l = 1; l <= 29; ++l) check(aa_fusion_ring(l), A(l) + " A-A ring");
  for (const auto& spec : system_diagrams()) {
    check(ws.ring(spec), spec + " K-K ring");
    check(even_part(ws.system(spec), ws.ring(spec)), spec + " even K-K ring");
    const auto& t = ws.table(spec);
    for (std::size_t x = 0; x < t.graph().size(); ++x) {
      const auto rings2 = even_fusion_rings(t, ws.system(spec), ws.ring(spec), x);
      check(rings2.nn, spec + " N-N ring");
      check(rings2.mm, spec + " M-M ring");
    }
  }
  c.note(std::to_string(rings) + " rings");
  return c.result(9, "ring axioms for every fusion ring produced");
}

CheckResult self_consistency(Workspace& ws) {
  Collector c;
  for (int m = 1; m <= 11; ++m) {
    const auto spec = A(m);
    const auto& ring = ws.ring(spec);
    const auto aa = aa_fusion_ring(m);
    if (ring.size() != aa.size()) {
      c.fail(spec + " size");
      continue;
    }
    std::vector<std::size_t> to_aa(ring.size(), ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i)
      for (std::size_t k = 0; k < aa.size(); ++k)
        if (ring.basis[i] == aa.basis[k]) to_aa[i] = k;
    bool equal = std::find(to_aa.begin(), to_aa.end(), ring.size()) == to_aa.end();
    for (std::size_t i = 0; i < ring.size() && equal; ++i)
      for (std::size_t j = 0; j < ring.size() && equal; ++j)
        for (std::size_t k = 0; k < ring.size(); ++k)
          if (ring.N(i, j, k) != aa.N(to_aa[i], to_aa[j], to_aa[k])) equal = false;
    if (!equal) c.fail(spec + " K-K ring differs from the A-A ring");
  }
  std::size_t triples = 0;
  for (const auto& spec : all_diagrams()) {
    const auto& t = ws.table(spec);
    const auto size = t.graph().size();
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y) {
        const auto right = ak_times_ka(t, y, x);
        for (std::size_t n = 0; n < t.size(); ++n, ++triples)
          if (aa_times_ak(t, n, x).multiplicity(y) != right.multiplicity(n))
            c.fail(spec + " reciprocity at n=" + std::to_string(n));
      }
  }
  c.note("A1..A11 rings reproduced; reciprocity on " + std::to_string(triples) + " triples");
  return c.result(10, "A_m pipeline reproduces the A-A ring; Frobenius reciprocity");
}

CheckResult intermediates(Workspace& ws) {
  Collector c;
  auto expect = [&](const std::string& spec, const std::set<std::string>& absent) {
    const auto& sys = ws.system(spec);
    for (std::size_t x = 0; x < sys.graph.size(); ++x) {
      const bool has = intermediate_decomposition(sys, x).has_value();
      const bool want = !absent.count(sys.graph.label(x));
      if (has != want) c.fail(spec + "," + sys.graph.label(x) + (has ? " unexpected" : " missing"));
    }
  };
  for (int n = 2; n <= 5; ++n) {
    const auto r = 2 * n + 1;
    expect(D(r), {"d0", "d" + std::to_string(r - 2), "d" + std::to_string(r - 2) + "'"});
  }
  for (int n = 3; n <= 6; ++n) expect(D(2 * n), {"d0"});
  expect("E6", {"e0", "e4"});
  expect("E7", {"e0", "e4", "e5"});
  expect("E8", {"e0"});
  return c.result(11, "intermediate subfactors");
}

}  // namespace

std::vector<CheckResult> run_acceptance(Workspace& ws,
                                        const std::function<void(const CheckResult&)>& progress) {
  using Fn = CheckResult (*)(Workspace&);
  const std::vector<std::pair<int, Fn>> checks = {
      {1, oracle_equivalence}, {2, vanishing},     {3, indices},       {4, even_counts},
      {5, e6_split},           {6, commutativity}, {7, coset_structure}, {8, e7_pattern},
      {9, ring_axioms},        {10, self_consistency}, {11, intermediates},
  };
  std::vector<CheckResult> out;
  for (auto [id, fn] : checks) {
    CheckResult r;
    try {
      r = fn(ws);
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ghj::cli
