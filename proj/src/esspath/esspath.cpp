#include "ghj/esspath.hpp"

#include "ghj/error.hpp"

namespace ghj {

std::vector<IntMatrix> chebyshev_sequence(const IntMatrix& adjacency, std::size_t count) {
  std::vector<IntMatrix> seq;
  if (count == 0) return seq;
  seq.push_back(IntMatrix::identity(adjacency.rows()));
  if (count == 1) return seq;
  seq.push_back(adjacency);
  while (seq.size() < count) {
    const auto n = seq.size();
    seq.push_back(seq[n - 1] * adjacency - seq[n - 2]);
  }
  return seq;
}

EssPathTable::EssPathTable(const DynkinGraph& g) : graph_(g) {
  const auto h = static_cast<std::size_t>(g.coxeter_number());
  auto seq = chebyshev_sequence(g.adjacency(), h);
  if (!seq.back().is_zero())
    throw Error(ErrorKind::InvalidArgument, "essential paths do not vanish at length h-1");
  seq.pop_back();
  for (std::size_t n = 0; n < seq.size(); ++n)
    if (!seq[n].nonnegative())
      throw Error(ErrorKind::InvalidArgument,
                  "Pascal rule undershoots at length " + std::to_string(n));
  matrices_ = std::move(seq);
}

IntMatrix EssPathTable::at_length(std::size_t n) const {
  if (n < matrices_.size()) return matrices_[n];
  return IntMatrix(graph_.size(), graph_.size());
}

std::int64_t EssPathTable::dim(std::size_t n, std::size_t x, std::size_t y) const {
  return n < matrices_.size() ? matrices_[n](x, y) : 0;
}

EssPathTable esspath_table(const DynkinGraph& g) { return EssPathTable(g); }

}  // namespace ghj
