#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghj/core.hpp"
#include "ghj/esspath.hpp"
#include "ghj/fusion_ring.hpp"
#include "ghj/sectors.hpp"
#include "ghj/zsystem.hpp"

namespace ghj {

/// Dual principal graph of GHJ(K, x): even vertices are the even
/// irreducible K-K connections w, odd vertices the K-vertices y, edge
/// multiplicity n(w)_{x,y}.
PrincipalGraphData dual_principal_graph(const ConnectionSystem& sys, std::size_t x);

/// |A_{h-1}| / |K| * mu(x)^2, with |.| the total mass.
double ghj_index(const DynkinGraph& g, std::size_t x);

struct IntermediateWitness {
  std::size_t base = 0;         // the distinguished vertex x0
  std::size_t irreducible = 0;  // w with A x0 K . w = A x K
};

/// A connection w with d_w > 1 whose row x0 of n(w) is the indicator of x,
/// giving N < P < M with P != M. None for x = x0.
std::optional<IntermediateWitness> intermediate_decomposition(const ConnectionSystem& sys,
                                                              std::size_t x);

struct EvenRings {
  FusionRing nn;
  FusionRing mm;
  std::vector<std::size_t> nn_elements;  // A-vertices
  std::vector<std::size_t> mm_elements;  // irreducible ids
};

/// nn: subring of the A_{h-1} ring on the principal graph's even vertices.
/// mm: subring of the K-K ring generated by the dual graph's even vertices;
/// throws ClosureEscapesBasis if it leaves the even part.
EvenRings even_fusion_rings(const EssPathTable& table, const ConnectionSystem& sys,
                            const FusionRing& zring, std::size_t x);

/// Isomorphism of bipartite multigraphs that maps evens to evens and fixes
/// the distinguished vertex.
bool graphs_isomorphic(const PrincipalGraphData& a, const PrincipalGraphData& b);

/// Even part of a ring: elements whose n(w) preserves the bipartition.
FusionRing even_part(const ConnectionSystem& sys, const FusionRing& zring);

struct GHJReport {
  std::string diagram;
  std::string vertex;
  double index = 0.0;
  PrincipalGraphData principal;
  PrincipalGraphData dual;
  EvenRings rings;
  bool graphs_isomorphic = false;
  bool rings_isomorphic = false;
  bool nn_commutative = false;
  bool mm_commutative = false;
  std::optional<IntermediateWitness> intermediate;
  std::string intermediate_alias;

  std::size_t principal_evens() const { return principal.evens.size(); }
  std::size_t dual_evens() const { return dual.evens.size(); }
};

GHJReport ghj_report(const EssPathTable& table, const ConnectionSystem& sys, const FusionRing& zring,
                     std::size_t x);

/// Ring-level evidence for A_{h-1} > K. Not a proof of subequivalence of
/// paragroups.
struct SubequivalenceReport {
  std::string larger;
  std::string smaller;
  std::vector<std::string> vertices;
  std::size_t nn_size = 0;
  std::size_t mm_size = 0;
  bool nn_is_a_even = false;
  bool nn_commutative = false;
  bool mm_commutative = false;
  bool rings_isomorphic = false;
  std::vector<std::string> evidence;
  bool holds = false;
};

/// K must be D_{2n}, E6 or E8; otherwise throws InvalidArgument.
/// Decomposition problems upstream surface as PremiseUnavailable.
SubequivalenceReport subequivalence_report(const EssPathTable& table);

}  // namespace ghj
