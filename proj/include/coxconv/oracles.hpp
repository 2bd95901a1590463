#pragma once

// Brute-force reference computations. They share only the arithmetic layer
// with the algorithms they are compared against.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxconv/affine.hpp"

namespace coxconv::oracle {

/// Distinct products of reflection matrices over all words of length <= L,
/// built by multiplying matrices rather than through enumerate_group.
inline std::size_t distinct_products(const ReflectionData& d, std::size_t L) {
  std::vector<Matrix> gens;
  for (std::size_t s = 0; s < d.rank(); ++s) {
    Matrix m = Matrix::identity(d.dim());
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < d.dim(); ++j) m(i, j) -= d.alpha_check(s)[i] * d.alpha(s)[j];
    gens.push_back(std::move(m));
  }
  std::set<std::vector<std::string>> seen;
  auto key = [](const Matrix& m) {
    std::vector<std::string> k;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j).get_str());
    return k;
  };
  std::vector<Matrix> layer{Matrix::identity(d.dim())};
  seen.insert(key(layer[0]));
  for (std::size_t len = 1; len <= L; ++len) {
    std::vector<Matrix> next;
    for (const auto& m : layer)
      for (const auto& g : gens) {
        Matrix p = m * g;
        if (seen.insert(key(p)).second) next.push_back(std::move(p));
      }
    layer = std::move(next);
  }
  return seen.size();
}

/// Lattice points reachable from 0 by +-generators without leaving the box
/// |x_j| <= R on the given support.
inline std::set<std::vector<long>> closure_in_box(const std::vector<SparseVector>& generators,
                                                  const std::vector<std::size_t>& support, long R) {
  std::vector<std::vector<long>> steps;
  for (const auto& g : generators) {
    std::vector<long> v(support.size(), 0);
    bool inside = true;
    for (const auto& [j, q] : g.values()) {
      auto it = std::find(support.begin(), support.end(), j);
      if (it == support.end() || !is_integer(q)) {
        inside = false;
        break;
      }
      v[static_cast<std::size_t>(it - support.begin())] = q.get_num().get_si();
    }
    if (!inside) continue;
    steps.push_back(v);
    for (auto& c : v) c = -c;
    steps.push_back(std::move(v));
  }
  std::set<std::vector<long>> seen{std::vector<long>(support.size(), 0)};
  std::deque<std::vector<long>> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : steps) {
      auto nxt = cur;
      bool ok = true;
      for (std::size_t i = 0; i < nxt.size() && ok; ++i) {
        nxt[i] += s[i];
        if (nxt[i] > R || nxt[i] < -R) ok = false;
      }
      if (ok && seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  }
  return seen;
}

/// Box radius ceil(max |bar_j| / lc) + 2.
inline long box_radius(const AffineWeight& w) {
  Rational m = 0;
  for (const auto& [j, q] : w.bar.values()) m = std::max(m, Rational(abs(q)));
  return ceil_of(m / w.lc).get_si() + 2;
}

/// min f over lattice points x with x_j in [-R, R] on supp(bar) and any
/// multiset of up to n*R + 2 extra coordinates with values in {-2,-1,1,2}.
/// Lattice membership is tested from the definition for each family.
inline Rational brute_minimize(AffineType type, const AffineWeight& w, long R) {
  const auto S = w.bar.support();
  const std::size_t n = S.size();
  const long N = static_cast<long>(n) * R + 2;

  // (aux sum, all aux even) -> min sum of squares
  std::map<std::pair<long, bool>, long> aux;
  for (long a = 0; a <= N; ++a)
    for (long b = 0; a + b <= N; ++b)
      for (long c = 0; a + b + c <= N; ++c)
        for (long e = 0; a + b + c + e <= N; ++e) {
          // a copies of -2, b of -1, c of +1, e of +2
          const std::pair<long, bool> key{-2 * a - b + c + 2 * e, b + c == 0};
          const long sq = 4 * (a + e) + b + c;
          auto it = aux.find(key);
          if (it == aux.end() || sq < it->second) aux[key] = sq;
        }

  std::vector<std::vector<Rational>> cost(n);
  for (std::size_t i = 0; i < n; ++i)
    for (long v = -R; v <= R; ++v) cost[i].push_back(w.lc * v * v / 2 + w.bar.get(S[i]) * v);

  // (support sum, all support even) -> min support cost
  std::map<std::pair<long, bool>, Rational> sup;
  auto rec = [&](auto&& self, std::size_t i, const Rational& acc, long sum, bool even) -> void {
    if (i == n) {
      const std::pair<long, bool> key{sum, even};
      auto it = sup.find(key);
      if (it == sup.end() || acc < it->second) sup[key] = acc;
      return;
    }
    for (long v = -R; v <= R; ++v)
      self(self, i + 1, acc + cost[i][static_cast<std::size_t>(v + R)], sum + v, even && v % 2 == 0);
  };
  rec(rec, 0, Rational(0), 0, true);

  auto member = [&](long total, bool all_even) {
    switch (type) {
      case AffineType::A1: return total == 0;
      case AffineType::B1:
      case AffineType::D1:
      case AffineType::C2: return total % 2 == 0;
      case AffineType::C1:
      case AffineType::BC2: return true;
      case AffineType::B2: return all_even;
    }
    return false;
  };

  bool found = false;
  Rational best;
  for (const auto& [sk, sc] : sup)
    for (const auto& [ak, asq] : aux) {
      if (!member(sk.first + ak.first, sk.second && ak.second)) continue;
      Rational v = sc + w.lc * asq / 2 + w.ld;
      if (!found || v < best) {
        best = v;
        found = true;
      }
    }
  return best;
}

}  // namespace coxconv::oracle
