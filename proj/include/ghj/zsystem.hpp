#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghj/core.hpp"
#include "ghj/esspath.hpp"
#include "ghj/fusion_ring.hpp"
#include "ghj/int_matrix.hpp"

namespace ghj {

/// Inner products of the A-K products x-bar * y over all vertex pairs:
///   G[(x,y),(x',y')] = sum_n E^{(n)}_{x,x'} E^{(n)}_{y,y'}.
struct ProductGram {
  std::size_t vertices = 0;
  IntMatrix G;

  std::size_t index(std::size_t x, std::size_t y) const { return x * vertices + y; }
  std::pair<std::size_t, std::size_t> pair(std::size_t p) const {
    return {p / vertices, p % vertices};
  }
};

ProductGram product_gram(const EssPathTable& table);

/// Exponents of the diagram: m with 2cos(pi m / h) an adjacency eigenvalue,
/// as a multiplicity vector indexed by m - 1.
std::vector<std::int64_t> exponent_multiplicities(const DynkinGraph& g);

/// The modular invariant attached to the diagram: the (h-1)x(h-1) matrix
/// commuting with the level h-2 S and T matrices whose diagonal lists the
/// exponent multiplicities.
IntMatrix modular_invariant(const DynkinGraph& g);

struct GramSearchOptions {
  std::size_t node_cap = 10'000'000;
  bool detect_ambiguity = true;
};

struct GramFactorization {
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t nodes = 0;
  std::size_t branch_points = 0;
};

/// Finds nonnegative integer vectors m_w with sum_w m_w m_w^T = gram.
/// Rows whose residual diagonal entry is 1 are peeled directly; otherwise
/// the search branches at the first unresolved index of `order`.
/// Throws DecompositionFailed (no factorization or node cap reached) or
/// AmbiguousDecomposition (two different multisets of rows).
GramFactorization factor_gram(const IntMatrix& gram, const std::vector<std::size_t>& order,
                              const GramSearchOptions& options = {});

struct Irreducible {
  IntMatrix n;
  double qdim = 1.0;
  std::size_t conjugate = 0;
  bool even = true;
  std::string alias;
  std::vector<std::int64_t> chiral;  // multiplicities over A-label pairs, if known
};

/// The irreducible K-K connections. Index 0 is the identity.
struct ConnectionSystem {
  DynkinGraph graph;
  std::vector<Irreducible> irreducibles;
  std::optional<FusionRing> structure;  // carried constants, in irreducible order
  std::optional<std::size_t> epsilon;
  std::string route;

  std::size_t size() const { return irreducibles.size(); }
  std::vector<std::size_t> even_indices() const;
};

struct DecomposeOptions {
  bool seed_epsilon = true;
  std::size_t node_cap = 10'000'000;
};

ConnectionSystem decompose_zsystem(const EssPathTable& table, const DecomposeOptions& options = {});

/// Integer data that determines a system; everything else is derived.
struct SystemParts {
  std::vector<IntMatrix> n;
  std::vector<std::int64_t> F;  // k^3 structure constants in the order of n
  std::vector<std::string> aliases;  // empty: derive
  std::optional<std::size_t> epsilon;
  std::string route;
  std::vector<std::vector<std::int64_t>> chiral;
};

/// Sorts irreducibles canonically (even before odd, identity first, then
/// d_w and n(w)) and derives dimensions, parities, conjugates and aliases.
ConnectionSystem assemble_system(const DynkinGraph& g, SystemParts parts);

/// Fusion ring of the system. Uses the carried structure constants after
/// checking them against n(w_i) n(w_j) = sum_k N n(w_k); without carried
/// constants solves that equation directly.
FusionRing zfusion_table(const ConnectionSystem& sys);

struct SystemCheck {
  bool gram = true;
  bool identity = true;
  bool transpose = true;
  bool commutes = true;
  bool eigenvector = true;
  bool parity = true;
  std::string detail;

  bool ok() const { return gram && identity && transpose && commutes && eigenvector && parity; }
};

SystemCheck validate_system(const ConnectionSystem& sys, const ProductGram& gram);

}  // namespace ghj
