#include <Eigen/Dense>
#include <cmath>

#include "ghj/error.hpp"
#include "ghj/esspath.hpp"

namespace ghj {

PathSpace::PathSpace(const DynkinGraph& g, int length)
    : graph_(&g), length_(length), pf_(perron_data(g)) {
  if (length < 0) throw Error(ErrorKind::InvalidArgument, "negative path length");
  if (length > kOracleMaxLength)
    throw Error(ErrorKind::LengthTooLarge,
                "path length " + std::to_string(length) + " exceeds " +
                    std::to_string(kOracleMaxLength));
  const auto n = g.size();
  blocks_.assign(n * n, {});
  const auto& adj = g.adjacency();
  std::vector<std::size_t> path;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == length_ + 1) {
      blocks_[path.front() * n + path.back()].push_back(path);
      return;
    }
    const auto last = path.back();
    for (std::size_t v = 0; v < n; ++v)
      if (adj(last, v)) {
        path.push_back(v);
        self(self);
        path.pop_back();
      }
  };
  for (std::size_t x = 0; x < n; ++x) {
    path = {x};
    extend(extend);
  }
}

const std::vector<std::vector<std::size_t>>& PathSpace::block(std::size_t x, std::size_t y) const {
  return blocks_.at(x * graph_->size() + y);
}

std::vector<double> PathSpace::jones(std::size_t x, std::size_t y, int k) const {
  if (k < 1 || k >= length_) throw Error(ErrorKind::InvalidArgument, "Jones index out of range");
  const auto& paths = block(x, y);
  const auto m = paths.size();
  std::vector<double> e(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = paths[i];
    if (p[k - 1] != p[k + 1]) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const auto& q = paths[j];
      bool same = true;
      for (int t = 0; t <= length_ && same; ++t)
        if (t != k && p[t] != q[t]) same = false;
      if (!same) continue;
      e[i * m + j] = std::sqrt(pf_.mu[p[k]] * pf_.mu[q[k]]) / (pf_.beta * pf_.mu[p[k - 1]]);
    }
  }
  return e;
}

std::size_t PathSpace::join_rank(std::size_t x, std::size_t y) const {
  const auto m = block(x, y).size();
  if (m == 0 || length_ < 2) return 0;
  Eigen::MatrixXd images(m, m * (length_ - 1));
  for (int k = 1; k < length_; ++k) {
    const auto e = jones(x, y, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) images(i, (k - 1) * m + j) = e[i * m + j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(images);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-7) ++rank;
  return rank;
}

IntMatrix esspath_oracle(const DynkinGraph& g, int n) {
  if (n > kOracleMaxLength)
    throw Error(ErrorKind::LengthTooLarge,
                "oracle length " + std::to_string(n) + " exceeds " +
                    std::to_string(kOracleMaxLength));
  const auto size = g.size();
  IntMatrix out(size, size);
  PathSpace space(g, n);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      out(x, y) = static_cast<std::int64_t>(space.block(x, y).size() - space.join_rank(x, y));
  return out;
}

}  // namespace ghj
