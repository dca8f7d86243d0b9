#include "ghj/fusion_ring.hpp"

#include <algorithm>
#include <cmath>

#include "ghj/error.hpp"

namespace ghj {

std::vector<std::pair<std::size_t, std::int64_t>> FusionRing::product(std::size_t i,
                                                                      std::size_t j) const {
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  for (std::size_t k = 0; k < size(); ++k)
    if (auto m = N(i, j, k)) out.emplace_back(k, m);
  return out;
}

RingCheck check_ring(const FusionRing& ring, double tolerance) {
  RingCheck c;
  const auto n = ring.size();
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && c.detail.empty()) c.detail = why;
    flag = false;
  };
  if (ring.constants.size() != n * n * n || ring.conjugate.size() != n || ring.qdims.size() != n ||
      ring.identity >= n) {
    c.identity = c.conjugation = c.associativity = c.qdims = false;
    c.detail = "malformed ring";
    return c;
  }
  const auto id = ring.identity;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t want = j == k;
      if (ring.N(id, j, k) != want || ring.N(j, id, k) != want)
        fail(c.identity, "identity fails at " + ring.basis[j]);
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.conjugate[i] >= n || ring.conjugate[ring.conjugate[i]] != i)
      fail(c.conjugation, "conjugation is not an involution at " + ring.basis[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t want = j == ring.conjugate[i];
      if (ring.N(i, j, id) != want)
        fail(c.conjugation, "pairing fails at " + ring.basis[i] + "*" + ring.basis[j]);
    }
  }
  for (std::size_t i = 0; i < n && c.associativity; ++i)
    for (std::size_t j = 0; j < n && c.associativity; ++j)
      for (std::size_t k = 0; k < n && c.associativity; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          std::int64_t left = 0, right = 0;
          for (std::size_t m = 0; m < n; ++m) {
            left += ring.N(i, j, m) * ring.N(m, k, l);
            right += ring.N(j, k, m) * ring.N(i, m, l);
          }
          if (left != right) {
            fail(c.associativity, "associativity fails at (" + ring.basis[i] + "," +
                                      ring.basis[j] + "," + ring.basis[k] + ")");
            break;
          }
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += static_cast<double>(ring.N(i, j, k)) * ring.qdims[k];
      if (std::abs(sum - ring.qdims[i] * ring.qdims[j]) > tolerance * std::max(1.0, sum))
        fail(c.qdims, "dimension not multiplicative at " + ring.basis[i] + "*" + ring.basis[j]);
    }
  for (auto v : ring.constants)
    if (v < 0) fail(c.associativity, "negative structure constant");
  return c;
}

CommutativityVerdict is_commutative(const FusionRing& ring) {
  const auto n = ring.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (ring.N(i, j, k) != ring.N(j, i, k)) return {false, std::make_pair(i, j)};
  return {};
}

std::vector<std::size_t> fusion_closure(const FusionRing& ring,
                                        const std::vector<std::size_t>& seeds) {
  std::vector<char> in(ring.size(), 0);
  in[ring.identity] = 1;
  for (auto s : seeds) in.at(s) = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (!in[i]) continue;
      for (std::size_t j = 0; j < ring.size(); ++j) {
        if (!in[j]) continue;
        for (std::size_t k = 0; k < ring.size(); ++k)
          if (ring.N(i, j, k) && !in[k]) in[k] = 1, grew = true;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

FusionRing based_subring(const FusionRing& ring, const std::vector<std::size_t>& elements) {
  std::vector<std::ptrdiff_t> pos(ring.size(), -1);
  for (std::size_t a = 0; a < elements.size(); ++a) pos.at(elements[a]) = static_cast<std::ptrdiff_t>(a);
  if (pos[ring.identity] < 0)
    throw Error(ErrorKind::ClosureEscapesBasis, "subring lacks the identity");
  FusionRing sub;
  const auto n = elements.size();
  sub.identity = static_cast<std::size_t>(pos[ring.identity]);
  sub.basis.resize(n);
  sub.constants.assign(n * n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto i = elements[a];
    sub.basis[a] = ring.basis[i];
    sub.qdims.push_back(ring.qdims[i]);
    if (pos[ring.conjugate[i]] < 0)
      throw Error(ErrorKind::ClosureEscapesBasis, "conjugate of " + ring.basis[i] + " escapes");
    sub.conjugate.push_back(static_cast<std::size_t>(pos[ring.conjugate[i]]));
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < ring.size(); ++k) {
        const auto m = ring.N(i, elements[b], k);
        if (!m) continue;
        if (pos[k] < 0)
          throw Error(ErrorKind::ClosureEscapesBasis,
                      ring.basis[i] + "*" + ring.basis[elements[b]] + " leaves the span");
        sub.N(a, b, static_cast<std::size_t>(pos[k])) = m;
      }
  }
  return sub;
}

namespace {

struct Signature {
  std::int64_t row_total = 0;
  std::vector<std::int64_t> square;
  bool self_conjugate = false;
  auto operator<=>(const Signature&) const = default;
};

Signature signature(const FusionRing& r, std::size_t i) {
  Signature s;
  for (std::size_t j = 0; j < r.size(); ++j)
    for (std::size_t k = 0; k < r.size(); ++k) s.row_total += r.N(i, j, k);
  for (std::size_t k = 0; k < r.size(); ++k) s.square.push_back(r.N(i, i, k));
  std::sort(s.square.begin(), s.square.end());
  s.self_conjugate = r.conjugate[i] == i;
  return s;
}

}  // namespace

std::optional<std::vector<std::size_t>> ring_isomorphism(const FusionRing& a, const FusionRing& b) {
  const auto n = a.size();
  if (n != b.size()) return std::nullopt;
  std::vector<Signature> sa, sb;
  for (std::size_t i = 0; i < n; ++i) sa.push_back(signature(a, i)), sb.push_back(signature(b, i));
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return (x == a.identity) > (y == a.identity);
  });

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> f(n, unset);
  std::vector<char> used(n, 0);
  std::vector<std::size_t> assigned;

  auto consistent = [&](std::size_t i) {
    const auto fi = f[i];
    if (f[a.conjugate[i]] != unset && f[a.conjugate[i]] != b.conjugate[fi]) return false;
    for (auto j : assigned)
      for (auto k : assigned) {
        const auto fj = f[j], fk = f[k];
        if (a.N(i, j, k) != b.N(fi, fj, fk) || a.N(j, i, k) != b.N(fj, fi, fk) ||
            a.N(j, k, i) != b.N(fj, fk, fi))
          return false;
      }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const auto i = order[depth];
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sa[i] != sb[c]) continue;
      if ((i == a.identity) != (c == b.identity)) continue;
      if (std::abs(a.qdims[i] - b.qdims[c]) > 1e-9 * std::max(1.0, a.qdims[i])) continue;
      f[i] = c;
      used[c] = 1;
      assigned.push_back(i);
      if (consistent(i) && self(self, depth + 1)) return true;
      assigned.pop_back();
      used[c] = 0;
      f[i] = unset;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return f;
}

}  // namespace ghj
