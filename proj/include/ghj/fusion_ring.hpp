#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ghj {

/// A based ring with nonnegative integer structure constants
///   b_i * b_j = sum_k N(i, j, k) b_k.
struct FusionRing {
  std::vector<std::string> basis;
  std::size_t identity = 0;
  std::vector<std::size_t> conjugate;
  std::vector<std::int64_t> constants;  // size^3, index (i * size + j) * size + k
  std::vector<double> qdims;

  std::size_t size() const { return basis.size(); }
  std::int64_t N(std::size_t i, std::size_t j, std::size_t k) const {
    return constants[(i * size() + j) * size() + k];
  }
  std::int64_t& N(std::size_t i, std::size_t j, std::size_t k) {
    return constants[(i * size() + j) * size() + k];
  }
  /// Terms (k, multiplicity) of b_i * b_j in basis order.
  std::vector<std::pair<std::size_t, std::int64_t>> product(std::size_t i, std::size_t j) const;
};

/// Outcome of the ring-axiom suite. Each flag covers one axiom; `detail`
/// names the first violation found.
struct RingCheck {
  bool identity = true;
  bool conjugation = true;
  bool associativity = true;
  bool qdims = true;
  std::string detail;

  bool ok() const { return identity && conjugation && associativity && qdims; }
};

RingCheck check_ring(const FusionRing& ring, double tolerance = 1e-9);

struct CommutativityVerdict {
  bool commutative = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

CommutativityVerdict is_commutative(const FusionRing& ring);

/// Smallest set of basis elements containing `seeds` and closed under
/// products, in basis order.
std::vector<std::size_t> fusion_closure(const FusionRing& ring, const std::vector<std::size_t>& seeds);

/// Restriction of the ring to `elements`, which must contain the identity
/// and be closed under products and conjugation. Throws ClosureEscapesBasis
/// otherwise.
FusionRing based_subring(const FusionRing& ring, const std::vector<std::size_t>& elements);

/// Based-ring isomorphism: a bijection of bases fixing the identity and
/// preserving conjugation, quantum dimensions and all structure constants.
std::optional<std::vector<std::size_t>> ring_isomorphism(const FusionRing& a, const FusionRing& b);
inline bool rings_isomorphic(const FusionRing& a, const FusionRing& b) {
  return ring_isomorphism(a, b).has_value();
}

}  // namespace ghj
