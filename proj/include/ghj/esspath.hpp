#pragma once

#include <vector>

#include "ghj/core.hpp"
#include "ghj/int_matrix.hpp"

namespace ghj {

/// Dimensions of essential paths, E[n](x, y) = dim EssPath^{(n)}_{x,y},
/// for 0 <= n <= h-2. Built by the moderated Pascal rule
///   E[n+1] = E[n] * adjacency - E[n-1].
class EssPathTable {
 public:
  explicit EssPathTable(const DynkinGraph& g);

  const DynkinGraph& graph() const { return graph_; }
  const std::vector<IntMatrix>& matrices() const { return matrices_; }
  /// Number of stored lengths (h - 1).
  std::size_t size() const { return matrices_.size(); }
  const IntMatrix& operator[](std::size_t n) const { return matrices_.at(n); }
  /// Like operator[], but lengths >= h-1 give the zero matrix.
  IntMatrix at_length(std::size_t n) const;
  std::int64_t dim(std::size_t n, std::size_t x, std::size_t y) const;

 private:
  DynkinGraph graph_;
  std::vector<IntMatrix> matrices_;
};

EssPathTable esspath_table(const DynkinGraph& g);

/// The first `count` terms U_0, U_1, ... of the Chebyshev recursion in the
/// adjacency matrix, without stopping at the Coxeter number. Entries past
/// h-2 may be negative.
std::vector<IntMatrix> chebyshev_sequence(const IntMatrix& adjacency, std::size_t count);

/// Largest length accepted by esspath_oracle.
inline constexpr int kOracleMaxLength = 8;

/// dim EssPath^{(n)}_{x,y} computed from the Wenzl projector on the space of
/// length-n paths, with Jones projections built from Perron-Frobenius
/// weights. Does not use the Pascal recursion. Throws LengthTooLarge for n > 8.
IntMatrix esspath_oracle(const DynkinGraph& g, int n);

/// Length-n paths on a graph together with their Jones projections, one
/// (start, end) block at a time.
class PathSpace {
 public:
  PathSpace(const DynkinGraph& g, int length);

  int length() const { return length_; }
  /// All paths from x to y, as vertex sequences of size length+1.
  const std::vector<std::vector<std::size_t>>& block(std::size_t x, std::size_t y) const;
  /// Jones projection e_k (1 <= k <= length-1) restricted to block (x, y),
  /// as a dense row-major matrix.
  std::vector<double> jones(std::size_t x, std::size_t y, int k) const;
  /// Rank of e_1 v ... v e_{length-1} on block (x, y).
  std::size_t join_rank(std::size_t x, std::size_t y) const;

 private:
  const DynkinGraph* graph_;
  int length_;
  PFData pf_;
  std::vector<std::vector<std::vector<std::size_t>>> blocks_;  // index x * size + y
};

}  // namespace ghj
