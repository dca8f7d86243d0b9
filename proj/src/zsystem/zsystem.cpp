#include "ghj/zsystem.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ghj/error.hpp"

namespace ghj {

namespace {

using Row = std::vector<std::int64_t>;

IntMatrix permutation_swap(std::size_t n, std::size_t a, std::size_t b) {
  IntMatrix P = IntMatrix::identity(n);
  P(a, a) = P(b, b) = 0;
  P(a, b) = P(b, a) = 1;
  return P;
}

struct Raw {
  std::vector<IntMatrix> n;
  std::vector<Row> chiral;
  std::vector<std::int64_t> F;  // k^3
  std::vector<std::string> aliases;
  std::optional<std::size_t> epsilon;
  std::string route;
};

Eigen::MatrixXd to_eigen(const std::vector<Row>& rows, std::size_t cols) {
  Eigen::MatrixXd m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<double>(rows[i][j]);
  return m;
}

std::int64_t round_checked(double v, const char* what) {
  const auto r = std::llround(v);
  if (std::abs(v - static_cast<double>(r)) > 1e-6)
    throw Error(ErrorKind::NonIntegerSolution, std::string(what) + " is not integral");
  return r;
}

// Irreducibles from the Gram matrix of products of left and right chiral
// A-sectors [a]+ [b]-, whose inner products are sum N N Z.
Raw chiral_route(const EssPathTable& table, const DecomposeOptions& options) {
  const auto& g = table.graph();
  const int h = g.coxeter_number();
  const auto l = static_cast<std::size_t>(h - 1);
  const auto r = g.size();
  const IntMatrix Z = modular_invariant(g);
  const auto A = esspath_table(build_diagram(Family::A, static_cast<int>(l)));

  struct Entry {
    std::size_t a, c;
    std::int64_t m;
  };
  std::vector<std::vector<Entry>> by_target(l);
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t c = 0; c < l; ++c)
      for (std::size_t x = 0; x < l; ++x)
        if (auto m = A[a](c, x)) by_target[x].push_back({a, c, m});

  const auto L = l * l;
  IntMatrix gamma(L, L);
  for (std::size_t x = 0; x < l; ++x)
    for (std::size_t y = 0; y < l; ++y) {
      const auto z = Z(x, y);
      if (!z) continue;
      for (const auto& p : by_target[x])
        for (const auto& q : by_target[y])
          gamma(p.a * l + q.a, p.c * l + q.c) += z * p.m * q.m;
    }

  std::vector<std::size_t> order(L);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::int64_t> key(L);
  for (std::size_t p = 0; p < L; ++p) {
    const double d = std::sin((p / l + 1) * std::numbers::pi / h) *
                     std::sin((p % l + 1) * std::numbers::pi / h);
    key[p] = std::llround(d * 1e9);
  }
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return key[a] < key[b]; });

  GramSearchOptions gso;
  gso.node_cap = options.node_cap;
  auto fac = factor_gram(gamma, order, gso);
  auto& V = fac.rows;
  const auto k = V.size();

  // n(w) from vec(E^a E^b) = sum_w V[w, (a,b)] vec n(w)
  std::vector<Row> Y(L, Row(r * r));
  for (std::size_t p = 0; p < L; ++p) {
    const IntMatrix prod = table.at_length(p / l) * table.at_length(p % l);
    Y[p] = prod.data();
  }
  const Eigen::MatrixXd Vf = to_eigen(V, L);
  const Eigen::MatrixXd C = Vf * Vf.transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(C);
  if (lu.rank() < static_cast<Eigen::Index>(k))
    throw Error(ErrorKind::DependentRepresentation,
                "chiral rows of " + g.name() + " are linearly dependent (rank " +
                    std::to_string(lu.rank()) + " of " + std::to_string(k) + ")");
  const Eigen::MatrixXd sol = lu.solve(Vf * to_eigen(Y, r * r));

  Raw raw;
  raw.route = "chiral";
  for (std::size_t w = 0; w < k; ++w) {
    IntMatrix n(r, r);
    for (std::size_t e = 0; e < r * r; ++e) {
      n(e / r, e % r) = round_checked(sol(w, e), "vertical-edge multiplicity");
    }
    if (!n.nonnegative()) throw Error(ErrorKind::NonIntegerSolution, "negative multiplicity");
    raw.n.push_back(std::move(n));
  }
  for (std::size_t p = 0; p < L; ++p) {
    Row sum(r * r, 0);
    for (std::size_t w = 0; w < k; ++w)
      if (V[w][p])
        for (std::size_t e = 0; e < r * r; ++e) sum[e] += V[w][p] * raw.n[w].data()[e];
    if (sum != Y[p])
      throw Error(ErrorKind::NonIntegerSolution, "chiral products are not reproduced");
  }

  // structure constants from a k-column invertible slice of V
  std::vector<std::size_t> S;
  for (auto p : order) {
    Eigen::MatrixXd trial(k, S.size() + 1);
    for (std::size_t j = 0; j < S.size(); ++j) trial.col(j) = Vf.col(S[j]);
    trial.col(S.size()) = Vf.col(p);
    if (Eigen::FullPivLU<Eigen::MatrixXd>(trial).rank() > static_cast<Eigen::Index>(S.size()))
      S.push_back(p);
    if (S.size() == k) break;
  }
  if (S.size() < k) throw Error(ErrorKind::DependentRepresentation, "chiral rows do not span");
  Eigen::MatrixXd VS(k, k);
  for (std::size_t j = 0; j < k; ++j) VS.col(j) = Vf.col(S[j]);
  const Eigen::MatrixXd VSi = VS.inverse();

  std::vector<Eigen::MatrixXd> R(k, Eigen::MatrixXd::Zero(k, k));  // R[m](pi, qi)
  for (std::size_t pi = 0; pi < k; ++pi)
    for (std::size_t qi = 0; qi < k; ++qi) {
      const auto a = S[pi] / l, b = S[pi] % l, c = S[qi] / l, d = S[qi] % l;
      for (std::size_t x = 0; x < l; ++x) {
        const auto nx = A[a](c, x);
        if (!nx) continue;
        for (std::size_t y = 0; y < l; ++y) {
          const auto ny = A[b](d, y);
          if (!ny) continue;
          for (std::size_t m = 0; m < k; ++m)
            R[m](pi, qi) += static_cast<double>(nx * ny * V[m][x * l + y]);
        }
      }
    }
  raw.F.assign(k * k * k, 0);
  for (std::size_t m = 0; m < k; ++m) {
    const Eigen::MatrixXd Fm = VSi.transpose() * R[m] * VSi;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const auto v = round_checked(Fm(i, j), "structure constant");
        if (v < 0) throw Error(ErrorKind::NonIntegerSolution, "negative structure constant");
        raw.F[(i * k + j) * k + m] = v;
      }
  }
  raw.chiral = std::move(V);
  return raw;
}

// D_{2n}: the graph algebra L of the diagram extended by the tail flip eps.
Raw crossed_route(const EssPathTable& table) {
  const auto& g = table.graph();
  const auto r = g.size();
  const auto t = r - 2, tp = r - 1;
  const auto& adj = g.adjacency();
  const IntMatrix& Et = table[r - 2];

  Row v(r, 0), u(r, 0);
  v[0] = 2;
  for (std::size_t k = 1; k + 1 <= r - 3; ++k) v[k + 1] = -v[k - 1];
  v[t] = v[tp] = -v[r - 4] / 2;
  u[t] = 1;
  u[tp] = -1;
  for (std::size_t i = 0; i < r; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < r; ++j) s += adj(i, j) * v[j];
    if (s) throw Error(ErrorKind::DecompositionFailed, "kernel vector check failed");
  }

  std::vector<IntMatrix> candidates;
  for (std::int64_t c = -64; c <= 64; ++c) {
    IntMatrix G(r, r);
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j) {
        const auto m = 8 * Et(i, j) + c * u[i] * v[j] + 4 * v[i] * u[j];
        if (m < 0 || m % 16) ok = false;
        else G(i, j) = m / 16;
      }
    if (ok && G * adj == adj * G) candidates.push_back(std::move(G));
  }
  if (candidates.empty())
    throw Error(ErrorKind::DecompositionFailed, "no tail connection for " + g.name());
  if (candidates.size() > 1)
    throw Error(ErrorKind::AmbiguousDecomposition, "several tail connections for " + g.name());

  const IntMatrix P = permutation_swap(r, t, tp);
  std::vector<IntMatrix> Lm;
  for (std::size_t k = 0; k + 2 < r; ++k) Lm.push_back(table[k]);
  Lm.push_back(candidates.front());
  Lm.push_back(P * candidates.front() * P);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t c = 0; c < r; ++c)
      if (Lm[a](0, c) != (a == c ? 1 : 0))
        throw Error(ErrorKind::DecompositionFailed, "graph algebra basis is not unitriangular");

  std::vector<std::int64_t> NL(r * r * r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const IntMatrix prod = Lm[a] * Lm[b];
      IntMatrix sum(r, r);
      for (std::size_t c = 0; c < r; ++c) {
        NL[(a * r + b) * r + c] = prod(0, c);
        if (prod(0, c)) sum += Lm[c] * prod(0, c);
      }
      if (sum != prod) throw Error(ErrorKind::DecompositionFailed, "graph algebra is not closed");
    }

  auto flip = [&](std::size_t a) { return a == t ? tp : a == tp ? t : a; };
  const auto k = 2 * r;
  Raw raw;
  raw.route = "crossed";
  raw.F.assign(k * k * k, 0);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) {
        auto F = [&](std::size_t i, std::size_t j, std::size_t m) -> std::int64_t& {
          return raw.F[(i * k + j) * k + m];
        };
        F(a, b, c) = NL[(a * r + b) * r + c];
        F(a, r + b, r + c) = NL[(a * r + b) * r + c];
        F(r + a, b, r + c) = NL[(a * r + flip(b)) * r + c];
        F(r + a, r + b, c) = NL[(a * r + flip(b)) * r + c];
      }
  for (std::size_t a = 0; a < r; ++a) {
    raw.n.push_back(Lm[a]);
    raw.aliases.push_back("[" + g.label(a) + "]");
  }
  for (std::size_t a = 0; a < r; ++a) {
    raw.n.push_back(Lm[a] * P);
    raw.aliases.push_back(a == 0 ? "eps" : "[" + g.label(a) + "]eps");
  }
  raw.epsilon = r;
  return raw;
}

bool preserves_colour(const DynkinGraph& g, const IntMatrix& n) {
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      if (n(x, y) && g.colour(x) != g.colour(y)) return false;
  return true;
}

double qdim_of(const IntMatrix& n, const std::vector<double>& mu) {
  double d = 0.0;
  for (std::size_t y = 0; y < n.cols(); ++y) d += static_cast<double>(n(0, y)) * mu[y];
  return d / mu[0];
}

}  // namespace

ProductGram product_gram(const EssPathTable& table) {
  const auto r = table.graph().size();
  ProductGram pg;
  pg.vertices = r;
  pg.G = IntMatrix(r * r, r * r);
  for (const auto& E : table.matrices())
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y) {
        if (!E(x, y)) continue;
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b)
            if (E(a, b)) pg.G(x * r + a, y * r + b) += E(x, y) * E(a, b);
      }
  return pg;
}

std::vector<std::size_t> ConnectionSystem::even_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (irreducibles[i].even) out.push_back(i);
  return out;
}

ConnectionSystem decompose_zsystem(const EssPathTable& table, const DecomposeOptions& options) {
  const auto& g = table.graph();
  Raw raw = g.is_d_even() && options.seed_epsilon ? crossed_route(table) : chiral_route(table, options);
  return assemble_system(g, {std::move(raw.n), std::move(raw.F), std::move(raw.aliases), raw.epsilon,
                             std::move(raw.route), std::move(raw.chiral)});
}

ConnectionSystem assemble_system(const DynkinGraph& g, SystemParts raw) {
  const auto k = raw.n.size();
  const auto r = g.size();
  const auto pf = perron_data(g);
  if (raw.F.size() != k * k * k) throw Error(ErrorKind::InvalidArgument, "structure constants have the wrong size");

  const IntMatrix I = IntMatrix::identity(r);
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> d(k);
  std::vector<char> even(k);
  for (std::size_t w = 0; w < k; ++w) {
    d[w] = qdim_of(raw.n[w], pf.mu);
    even[w] = preserves_colour(g, raw.n[w]);
  }
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) {
    const bool ida = raw.n[a] == I, idb = raw.n[b] == I;
    if (even[a] != even[b]) return even[a] > even[b];
    if (ida != idb) return ida > idb;
    if (std::abs(d[a] - d[b]) > 1e-9) return d[a] < d[b];
    if (raw.n[a] != raw.n[b]) return raw.n[a].data() < raw.n[b].data();
    if (!raw.chiral.empty()) return raw.chiral[a] < raw.chiral[b];
    return a < b;
  });
  if (k == 0 || raw.n[perm[0]] != I)
    throw Error(ErrorKind::DecompositionFailed, "no identity connection in the system of " + g.name());
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[perm[i]] = i;

  ConnectionSystem sys{g, {}, std::nullopt, std::nullopt, raw.route};
  FusionRing ring;
  ring.identity = 0;
  ring.basis.resize(k);
  ring.constants.assign(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t m = 0; m < k; ++m)
        ring.N(i, j, m) = raw.F[(perm[i] * k + perm[j]) * k + perm[m]];

  const auto A_table = g.family() == Family::A ? std::optional<EssPathTable>(esspath_table(g)) : std::nullopt;
  for (std::size_t i = 0; i < k; ++i) {
    const auto w = perm[i];
    Irreducible irr;
    irr.n = raw.n[w];
    irr.qdim = d[w];
    irr.even = even[w];
    if (!raw.chiral.empty()) irr.chiral = raw.chiral[w];
    irr.conjugate = k;
    for (std::size_t j = 0; j < k; ++j)
      if (ring.N(i, j, 0) == 1) irr.conjugate = j;
    if (irr.conjugate == k)
      throw Error(ErrorKind::DecompositionFailed, "connection without conjugate");
    if (!raw.aliases.empty()) {
      irr.alias = raw.aliases[w];
    } else if (A_table) {
      for (std::size_t n = 0; n < A_table->size(); ++n)
        if ((*A_table)[n] == irr.n) irr.alias = "[" + std::to_string(n) + "]";
    }
    if (irr.alias.empty()) irr.alias = "(" + std::to_string(i) + ")";
    ring.basis[i] = irr.alias;
    ring.conjugate.push_back(irr.conjugate);
    ring.qdims.push_back(irr.qdim);
    sys.irreducibles.push_back(std::move(irr));
  }
  if (raw.epsilon) sys.epsilon = pos[*raw.epsilon];
  sys.structure = std::move(ring);
  return sys;
}

FusionRing zfusion_table(const ConnectionSystem& sys) {
  const auto k = sys.size();
  const auto r = sys.graph.size();
  auto product_of = [&](std::size_t i, std::size_t j) { return sys.irreducibles[i].n * sys.irreducibles[j].n; };

  Eigen::MatrixXd M(r * r, k);
  for (std::size_t w = 0; w < k; ++w)
    for (std::size_t e = 0; e < r * r; ++e)
      M(e, w) = static_cast<double>(sys.irreducibles[w].n.data()[e]);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  const bool independent = lu.rank() == static_cast<Eigen::Index>(k);

  std::optional<FusionRing> solved;
  if (independent) {
    FusionRing ring;
    ring.identity = 0;
    ring.constants.assign(k * k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      ring.basis.push_back(sys.irreducibles[i].alias);
      ring.conjugate.push_back(sys.irreducibles[i].conjugate);
      ring.qdims.push_back(sys.irreducibles[i].qdim);
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const IntMatrix prod = product_of(i, j);
        Eigen::VectorXd b(r * r);
        for (std::size_t e = 0; e < r * r; ++e) b(e) = static_cast<double>(prod.data()[e]);
        const Eigen::VectorXd x = lu.solve(b);
        IntMatrix sum(r, r);
        for (std::size_t m = 0; m < k; ++m) {
          const auto c = round_checked(x(m), "structure constant");
          if (c < 0) throw Error(ErrorKind::NonIntegerSolution, "negative structure constant");
          ring.N(i, j, m) = c;
          if (c) sum += sys.irreducibles[m].n * c;
        }
        if (sum != prod) throw Error(ErrorKind::NonIntegerSolution, "product is not reproduced");
      }
    solved = std::move(ring);
  }

  if (!sys.structure) {
    if (!solved)
      throw Error(ErrorKind::DependentRepresentation,
                  "the " + std::to_string(k) + " vertical-edge matrices of " + sys.graph.name() +
                      " span only " + std::to_string(lu.rank()) + " dimensions");
    return *solved;
  }
  const auto& ring = *sys.structure;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      IntMatrix sum(r, r);
      for (std::size_t m = 0; m < k; ++m)
        if (auto c = ring.N(i, j, m)) sum += sys.irreducibles[m].n * c;
      if (sum != product_of(i, j))
        throw Error(ErrorKind::NonIntegerSolution,
                    "structure constants disagree with n(" + ring.basis[i] + ") n(" + ring.basis[j] + ")");
    }
  if (solved && solved->constants != ring.constants)
    throw Error(ErrorKind::NonIntegerSolution, "carried and solved structure constants differ");
  return ring;
}

SystemCheck validate_system(const ConnectionSystem& sys, const ProductGram& gram) {
  SystemCheck c;
  const auto& g = sys.graph;
  const auto r = g.size();
  const auto pf = perron_data(g);
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && c.detail.empty()) c.detail = why;
    flag = false;
  };
  IntMatrix sum(r * r, r * r);
  for (const auto& w : sys.irreducibles) {
    const auto& d = w.n.data();
    for (std::size_t p = 0; p < r * r; ++p)
      if (d[p])
        for (std::size_t q = 0; q < r * r; ++q) sum(p, q) += d[p] * d[q];
  }
  if (sum != gram.G) fail(c.gram, "Gram matrix is not reproduced");
  if (sys.irreducibles.empty() || sys.irreducibles[0].n != IntMatrix::identity(r))
    fail(c.identity, "first connection is not the identity");
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto& w = sys.irreducibles[i];
    if (w.conjugate >= sys.size() || sys.irreducibles[w.conjugate].n != w.n.transpose())
      fail(c.transpose, "conjugate of " + w.alias + " is not the transpose");
    if (w.n * g.adjacency() != g.adjacency() * w.n)
      fail(c.commutes, w.alias + " does not commute with the adjacency matrix");
    if (w.qdim < 1.0 - 1e-9) fail(c.eigenvector, w.alias + " has dimension below 1");
    for (std::size_t x = 0; x < r; ++x) {
      double s = 0.0;
      for (std::size_t y = 0; y < r; ++y) s += static_cast<double>(w.n(x, y)) * pf.mu[y];
      if (std::abs(s - w.qdim * pf.mu[x]) > 1e-9 * std::max(1.0, s))
        fail(c.eigenvector, "mu is not an eigenvector of " + w.alias);
    }
    if (w.even != preserves_colour(g, w.n)) fail(c.parity, "parity flag of " + w.alias + " is wrong");
  }
  return c;
}

}  // namespace ghj
