#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghj/int_matrix.hpp"

namespace ghj {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

/// An ADE Dynkin diagram with the labelling used throughout the project.
///
/// Vertex order is part of the output format:
///   A_m : a0 - a1 - ... - a_{m-1}
///   D_m : d0 - d1 - ... - d_{m-3}, with the fork d_{m-2}, d_{m-2}' hanging off d_{m-3}
///   E6  : e0-e1-e2-e5-e4, e2-e3
///   E7  : e0-e1-e2-e3-e6-e5, e3-e4
///   E8  : e0-e1-e2-e3-e4-e7-e6, e4-e5
/// Vertex 0 is always the distinguished end vertex.
class DynkinGraph {
 public:
  DynkinGraph(Family family, int rank, std::vector<std::string> labels, IntMatrix adjacency,
              int coxeter);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const IntMatrix& adjacency() const { return adjacency_; }
  /// Proper 2-colouring; colour 0 contains the distinguished vertex.
  const std::vector<int>& bipartition() const { return colour_; }
  int colour(std::size_t v) const { return colour_.at(v); }
  int coxeter_number() const { return coxeter_; }
  std::size_t distinguished() const { return 0; }
  std::size_t degree(std::size_t v) const;

  /// Canonical name such as "A11", "D6", "E8".
  std::string name() const;

  std::optional<std::size_t> find(std::string_view label) const;
  /// Like find() but throws Error(UnknownVertex).
  std::size_t index_of(std::string_view label) const;

  /// True for D_{2n}; these carry the tail-flip symmetry.
  bool is_d_even() const { return family_ == Family::D && rank_ % 2 == 0; }

 private:
  Family family_;
  int rank_;
  std::vector<std::string> labels_;
  IntMatrix adjacency_;
  std::vector<int> colour_;
  int coxeter_;
};

/// Parses "A<n>", "D<n>", "E<6|7|8>" (case-insensitive) and builds the diagram.
DynkinGraph build_diagram(std::string_view spec);
DynkinGraph build_diagram(Family family, int rank);

struct PFData {
  double beta = 0.0;
  std::vector<double> mu;  // mu[distinguished] == 1
  double total_mass = 0.0;
};

PFData perron_data(const DynkinGraph& g);

/// Coxeter number from the classification table.
int coxeter_number(const DynkinGraph& g);

/// Least n with U_{n-1}(adjacency) = 0, found by running the Chebyshev
/// recursion. Independent of the table above.
int coxeter_number_by_recursion(const DynkinGraph& g);

/// [n]_q = sin(n pi / h) / sin(pi / h).
double quantum_integer(int n, int h);

}  // namespace ghj
