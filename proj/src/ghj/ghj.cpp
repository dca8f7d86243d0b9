#include "ghj/ghj.hpp"

#include <algorithm>
#include <cmath>

#include "ghj/error.hpp"

namespace ghj {

PrincipalGraphData dual_principal_graph(const ConnectionSystem& sys, std::size_t x) {
  const auto& g = sys.graph;
  if (x >= g.size()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  const auto evens = sys.even_indices();
  std::vector<std::string> labels;
  IntMatrix B(evens.size(), g.size());
  for (std::size_t a = 0; a < evens.size(); ++a) {
    labels.push_back(sys.irreducibles[evens[a]].alias);
    for (std::size_t y = 0; y < g.size(); ++y) B(a, y) = sys.irreducibles[evens[a]].n(x, y);
  }
  const auto start = static_cast<std::size_t>(
      std::find(evens.begin(), evens.end(), std::size_t{0}) - evens.begin());
  auto out = bipartite_component(B, labels, g.labels(), start);
  for (auto& v : out.evens) v.source = evens[v.source];
  return out;
}

double ghj_index(const DynkinGraph& g, std::size_t x) {
  if (x >= g.size()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  const auto a = perron_data(build_diagram(Family::A, g.coxeter_number() - 1));
  const auto k = perron_data(g);
  return a.total_mass / k.total_mass * k.mu[x] * k.mu[x];
}

std::optional<IntermediateWitness> intermediate_decomposition(const ConnectionSystem& sys,
                                                              std::size_t x) {
  const auto& g = sys.graph;
  const auto x0 = g.distinguished();
  if (x >= g.size()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  if (x == x0) return std::nullopt;
  for (std::size_t w = 1; w < sys.size(); ++w) {
    const auto& irr = sys.irreducibles[w];
    if (irr.qdim <= 1.0 + 1e-9) continue;
    bool indicator = true;
    for (std::size_t y = 0; y < g.size() && indicator; ++y)
      indicator = irr.n(x0, y) == (y == x ? 1 : 0);
    if (indicator) return IntermediateWitness{x0, w};
  }
  return std::nullopt;
}

FusionRing even_part(const ConnectionSystem& sys, const FusionRing& zring) {
  return based_subring(zring, sys.even_indices());
}

EvenRings even_fusion_rings(const EssPathTable& table, const ConnectionSystem& sys,
                            const FusionRing& zring, std::size_t x) {
  const auto& g = table.graph();
  EvenRings out;
  const auto aring = aa_fusion_ring(g.coxeter_number() - 1);
  const auto principal = principal_graph(table, x);
  for (const auto& v : principal.evens) out.nn_elements.push_back(2 * v.source);
  std::sort(out.nn_elements.begin(), out.nn_elements.end());
  out.nn = based_subring(aring, out.nn_elements);

  const auto dual = dual_principal_graph(sys, x);
  std::vector<std::size_t> seeds;
  for (const auto& v : dual.evens) seeds.push_back(v.source);
  out.mm_elements = fusion_closure(zring, seeds);
  for (auto w : out.mm_elements)
    if (!sys.irreducibles[w].even)
      throw Error(ErrorKind::ClosureEscapesBasis,
                  "closure of the dual even vertices reaches odd " + sys.irreducibles[w].alias);
  out.mm = based_subring(zring, out.mm_elements);
  return out;
}

GHJReport ghj_report(const EssPathTable& table, const ConnectionSystem& sys, const FusionRing& zring,
                     std::size_t x) {
  const auto& g = table.graph();
  GHJReport r;
  r.diagram = g.name();
  r.vertex = g.label(x);
  r.index = ghj_index(g, x);
  r.principal = principal_graph(table, x);
  r.dual = dual_principal_graph(sys, x);
  r.rings = even_fusion_rings(table, sys, zring, x);
  r.graphs_isomorphic = graphs_isomorphic(r.principal, r.dual);
  r.rings_isomorphic = rings_isomorphic(r.rings.nn, r.rings.mm);
  r.nn_commutative = is_commutative(r.rings.nn).commutative;
  r.mm_commutative = is_commutative(r.rings.mm).commutative;
  r.intermediate = intermediate_decomposition(sys, x);
  if (r.intermediate) r.intermediate_alias = sys.irreducibles[r.intermediate->irreducible].alias;
  return r;
}

SubequivalenceReport subequivalence_report(const EssPathTable& table) {
  const auto& g = table.graph();
  if (!(g.is_d_even() || (g.family() == Family::E && g.rank() != 7)))
    throw Error(ErrorKind::InvalidArgument, "subequivalence report needs D_2n, E6 or E8, not " + g.name());

  ConnectionSystem sys = [&] {
    try {
      return decompose_zsystem(table);
    } catch (const Error& e) {
      throw Error(ErrorKind::PremiseUnavailable, e.what());
    }
  }();
  FusionRing zring = [&] {
    try {
      return zfusion_table(sys);
    } catch (const Error& e) {
      throw Error(ErrorKind::PremiseUnavailable, e.what());
    }
  }();

  std::vector<std::size_t> marked;
  if (g.is_d_even() && g.rank() == 4) {
    marked = {g.index_of("d0"), g.index_of("d2"), g.index_of("d2'")};
  } else {
    for (std::size_t v = 0; v < g.size(); ++v)
      if (std::abs(ghj_index(g, v) - 2.0) > 1e-9) {
        marked.push_back(v);
        break;
      }
  }

  const int l = g.coxeter_number() - 1;
  const auto aring = aa_fusion_ring(l);
  std::vector<std::size_t> a_even;
  for (int n = 0; n < l; n += 2) a_even.push_back(static_cast<std::size_t>(n));
  const auto a_even_ring = based_subring(aring, a_even);

  SubequivalenceReport rep;
  rep.larger = "A" + std::to_string(l);
  rep.smaller = g.name();
  std::vector<std::size_t> nn_union, mm_seeds;
  for (auto x : marked) {
    rep.vertices.push_back(g.label(x));
    auto rings = even_fusion_rings(table, sys, zring, x);
    nn_union.insert(nn_union.end(), rings.nn_elements.begin(), rings.nn_elements.end());
    mm_seeds.insert(mm_seeds.end(), rings.mm_elements.begin(), rings.mm_elements.end());
  }
  std::sort(nn_union.begin(), nn_union.end());
  nn_union.erase(std::unique(nn_union.begin(), nn_union.end()), nn_union.end());
  const auto nn = based_subring(aring, fusion_closure(aring, nn_union));
  const auto mm_elements = fusion_closure(zring, mm_seeds);
  for (auto w : mm_elements)
    if (!sys.irreducibles[w].even)
      throw Error(ErrorKind::ClosureEscapesBasis, "even closure reaches an odd connection");
  const auto mm = based_subring(zring, mm_elements);

  rep.nn_size = nn.size();
  rep.mm_size = mm.size();
  rep.nn_is_a_even = rings_isomorphic(nn, a_even_ring);
  rep.nn_commutative = is_commutative(nn).commutative;
  const auto mm_verdict = is_commutative(mm);
  rep.mm_commutative = mm_verdict.commutative;
  rep.rings_isomorphic = rings_isomorphic(nn, mm);

  rep.evidence.push_back(std::string("N-N ring ") + (rep.nn_is_a_even ? "is" : "is not") + " " +
                         rep.larger + "^even (" + std::to_string(rep.nn_size) + " elements, " +
                         (rep.nn_commutative ? "commutative" : "noncommutative") + ")");
  rep.evidence.push_back("M-M ring has " + std::to_string(rep.mm_size) + " elements, " +
                         (rep.mm_commutative ? "commutative" : "noncommutative"));
  if (mm_verdict.witness)
    rep.evidence.push_back("noncommuting pair " + mm.basis[mm_verdict.witness->first] + ", " +
                           mm.basis[mm_verdict.witness->second]);
  if (rep.nn_size != rep.mm_size) rep.evidence.push_back("basis sizes differ");
  else if (!rep.rings_isomorphic) rep.evidence.push_back("rings of equal size are not isomorphic");
  rep.holds = rep.nn_is_a_even && !rep.rings_isomorphic;
  return rep;
}

}  // namespace ghj
