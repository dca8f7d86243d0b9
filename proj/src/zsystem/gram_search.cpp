#include <algorithm>
#include <cmath>

#include "ghj/error.hpp"
#include "ghj/zsystem.hpp"

namespace ghj {

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::vector<std::size_t> support(const Row& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) s.push_back(i);
  return s;
}

// R -= v v^T on the support of v; false if an entry would go negative.
bool subtract(IntMatrix& R, const Row& v) {
  const auto s = support(v);
  for (auto a : s)
    for (auto b : s)
      if (R(a, b) < v[a] * v[b]) return false;
  for (auto a : s)
    for (auto b : s) R(a, b) -= v[a] * v[b];
  return true;
}

class Search {
 public:
  Search(const std::vector<std::size_t>& order, const GramSearchOptions& options)
      : order_(order), options_(options) {}

  std::vector<std::vector<Row>> solutions;
  std::size_t nodes = 0;
  std::size_t branch_points = 0;

  // Returns true when the search should stop.
  bool run(IntMatrix R, std::vector<Row> rows) {
    tick();
    if (!peel(R, rows)) return false;
    std::size_t p = R.rows();
    for (auto q : order_)
      if (R(q, q) > 0) {
        p = q;
        break;
      }
    if (p == R.rows()) {
      if (!R.is_zero()) return false;
      record(std::move(rows));
      return solutions.size() >= (options_.detect_ambiguity ? 2u : 1u);
    }
    ++branch_points;
    std::vector<std::size_t> others;
    for (std::size_t q = 0; q < R.cols(); ++q)
      if (q != p && R(p, q) > 0) others.push_back(q);
    for (std::int64_t s = isqrt(R(p, p)); s >= 1; --s) {
      Row v(R.rows(), 0);
      v[p] = s;
      if (assign(R, rows, v, others, 0)) return true;
    }
    return false;
  }

 private:
  const std::vector<std::size_t>& order_;
  const GramSearchOptions& options_;

  void tick() {
    if (++nodes > options_.node_cap)
      throw Error(ErrorKind::DecompositionFailed,
                  "node cap of " + std::to_string(options_.node_cap) + " reached");
  }

  bool peel(IntMatrix& R, std::vector<Row>& rows) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto p : order_) {
        if (R(p, p) != 1) continue;
        Row v(R.rows());
        for (std::size_t q = 0; q < R.cols(); ++q) v[q] = R(p, q);
        if (!subtract(R, v)) return false;
        rows.push_back(std::move(v));
        changed = true;
      }
    }
    for (std::size_t p = 0; p < R.rows(); ++p)
      if (R(p, p) < 0) return false;
    return true;
  }

  bool assign(const IntMatrix& R, const std::vector<Row>& rows, Row& v,
              const std::vector<std::size_t>& others, std::size_t k) {
    if (k == others.size()) {
      IntMatrix next = R;
      if (!subtract(next, v)) return false;
      auto more = rows;
      more.push_back(v);
      return run(std::move(next), std::move(more));
    }
    const auto q = others[k];
    std::int64_t ub = isqrt(R(q, q));
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j]) ub = std::min(ub, R(j, q) / v[j]);
    for (std::int64_t c = ub; c >= 0; --c) {
      v[q] = c;
      if (assign(R, rows, v, others, k + 1)) return true;
    }
    v[q] = 0;
    return false;
  }

  void record(std::vector<Row> rows) {
    std::sort(rows.begin(), rows.end());
    for (const auto& s : solutions)
      if (s == rows) return;
    solutions.push_back(std::move(rows));
  }
};

}  // namespace

GramFactorization factor_gram(const IntMatrix& gram, const std::vector<std::size_t>& order,
                              const GramSearchOptions& options) {
  if (!gram.is_symmetric() || !gram.nonnegative())
    throw Error(ErrorKind::InvalidArgument, "Gram matrix must be symmetric and nonnegative");
  Search search(order, options);
  search.run(gram, {});
  if (search.solutions.empty())
    throw Error(ErrorKind::DecompositionFailed,
                "no nonnegative integer factorization (" + std::to_string(search.nodes) + " nodes)");
  if (search.solutions.size() > 1)
    throw Error(ErrorKind::AmbiguousDecomposition,
                "two factorizations with " + std::to_string(search.solutions[0].size()) + " and " +
                    std::to_string(search.solutions[1].size()) + " rows");
  GramFactorization out;
  out.nodes = search.nodes;
  out.branch_points = search.branch_points;
  out.rows = std::move(search.solutions.front());
  return out;
}

}  // namespace ghj
