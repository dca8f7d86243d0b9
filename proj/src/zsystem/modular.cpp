#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "ghj/error.hpp"
#include "ghj/zsystem.hpp"

namespace ghj {

std::vector<std::int64_t> exponent_multiplicities(const DynkinGraph& g) {
  const int h = g.coxeter_number();
  const auto n = g.size();
  Eigen::MatrixXd adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(i, j) = static_cast<double>(g.adjacency()(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
  std::vector<std::int64_t> mult(h - 1, 0);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double c = std::clamp(solver.eigenvalues()(i) / 2.0, -1.0, 1.0);
    const double m = std::acos(c) * h / std::numbers::pi;
    const auto rounded = std::llround(m);
    if (std::abs(m - static_cast<double>(rounded)) > 1e-6 || rounded < 1 || rounded >= h)
      throw Error(ErrorKind::InvalidArgument, "eigenvalue is not of the form 2cos(pi m/h)");
    ++mult[rounded - 1];
  }
  return mult;
}

IntMatrix modular_invariant(const DynkinGraph& g) {
  const int h = g.coxeter_number();
  const int l = h - 1;
  const double pi = std::numbers::pi;
  Eigen::MatrixXd S(l, l);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) S(a, b) = std::sqrt(2.0 / h) * std::sin((a + 1) * (b + 1) * pi / h);

  auto t_compatible = [&](int a, int b) { return (a * (a + 2) - b * (b + 2)) % (4 * h) == 0; };
  std::vector<std::pair<int, int>> unknowns;
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      if (t_compatible(a, b)) unknowns.emplace_back(a, b);

  // ZS - SZ = 0, one equation per entry
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(l * l, static_cast<Eigen::Index>(unknowns.size()));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (std::size_t k = 0; k < unknowns.size(); ++k) {
        auto [a, b] = unknowns[k];
        if (a == i) M(i * l + j, k) += S(b, j);
        if (b == j) M(i * l + j, k) -= S(i, a);
      }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9) ++rank;
  const Eigen::MatrixXd null = svd.matrixV().rightCols(M.cols() - rank);

  const auto target = exponent_multiplicities(g);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(l, null.cols());
  Eigen::VectorXd rhs(l);
  for (int i = 0; i < l; ++i) rhs(i) = static_cast<double>(target[i]);
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    if (unknowns[k].first == unknowns[k].second)
      D.row(unknowns[k].first) += null.row(static_cast<Eigen::Index>(k));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(D);
  qr.setThreshold(1e-9);
  if (qr.rank() != D.cols())
    throw Error(ErrorKind::AmbiguousDecomposition,
                "modular invariant not fixed by its diagonal for " + g.name());
  const Eigen::VectorXd coeff = qr.solve(rhs);
  if ((D * coeff - rhs).norm() > 1e-8)
    throw Error(ErrorKind::DecompositionFailed, "no modular invariant with the exponents of " + g.name());
  const Eigen::VectorXd z = null * coeff;

  IntMatrix Z(l, l);
  Eigen::MatrixXd Zf = Eigen::MatrixXd::Zero(l, l);
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    auto [a, b] = unknowns[k];
    const auto v = z(static_cast<Eigen::Index>(k));
    const auto r = std::llround(v);
    if (std::abs(v - static_cast<double>(r)) > 1e-6 || r < 0)
      throw Error(ErrorKind::NonIntegerSolution, "modular invariant entry is not a natural number");
    Z(a, b) = r;
    Zf(a, b) = static_cast<double>(r);
  }
  if (Z(0, 0) != 1 || (Zf * S - S * Zf).cwiseAbs().maxCoeff() > 1e-9)
    throw Error(ErrorKind::DecompositionFailed, "modular invariant check failed for " + g.name());
  return Z;
}

}  // namespace ghj
