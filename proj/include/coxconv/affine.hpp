#pragma once

// Locally affine root systems at finite support.
//
// Points of V^ = R x V x R are triples (z, x, t); weights are triples
// (lc, bar, ld) acting by lc*z + bar(x) + ld*t, so lambda(c) = lc and
// lambda(d) = ld for c = (1,0,0), d = (0,0,1). The affine root (0, alpha, n)
// is the weight (0, alpha, n) and its coroot is (-2n/(alpha,alpha), coroot(alpha), 0).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxconv/root_systems.hpp"

namespace coxconv {

enum class AffineType { A1, B1, C1, D1, B2, C2, BC2 };

inline constexpr AffineType kAllAffineTypes[] = {AffineType::A1, AffineType::B1, AffineType::C1, AffineType::D1,
                                                 AffineType::B2, AffineType::C2, AffineType::BC2};

inline const char* to_string(AffineType t) {
  switch (t) {
    case AffineType::A1: return "A1";
    case AffineType::B1: return "B1";
    case AffineType::C1: return "C1";
    case AffineType::D1: return "D1";
    case AffineType::B2: return "B2";
    case AffineType::C2: return "C2";
    case AffineType::BC2: return "BC2";
  }
  return "?";
}

inline AffineType parse_affine_type(const std::string& s) {
  for (auto t : kAllAffineTypes)
    if (s == to_string(t)) return t;
  throw ParseError("unknown affine type '" + s + "'");
}

inline int twist(AffineType t) { return (t == AffineType::B2 || t == AffineType::C2 || t == AffineType::BC2) ? 2 : 1; }

inline Family underlying_family(AffineType t) {
  switch (t) {
    case AffineType::A1: return Family::A;
    case AffineType::B1:
    case AffineType::B2: return Family::B;
    case AffineType::C1:
    case AffineType::C2: return Family::C;
    case AffineType::D1: return Family::D;
    case AffineType::BC2: return Family::BC;
  }
  return Family::A;
}

struct AffinePoint {
  Rational z;
  SparseVector x;
  Rational t;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

inline AffinePoint affine_c() { return {1, {}, 0}; }
inline AffinePoint affine_d() { return {0, {}, 1}; }

struct AffineWeight {
  Rational lc;
  SparseVector bar;
  Rational ld;
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

inline Rational evaluate(const AffineWeight& w, const AffinePoint& p) { return w.lc * p.z + dot(w.bar, p.x) + w.ld * p.t; }

/// Lorentzian form (x,x') - z t' - z' t.
inline Rational form(const AffinePoint& p, const AffinePoint& q) { return dot(p.x, q.x) - p.z * q.t - q.z * p.t; }

struct AffineRoot {
  SparseVector alpha;
  long level = 0;
  AffineWeight weight() const { return {0, alpha, level}; }
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// Delta_n for the family: the finite roots alpha over J with (0, alpha, n) a root.
inline std::vector<SparseVector> level_roots(AffineType t, const std::vector<std::size_t>& J, long n) {
  if (twist(t) == 1) return roots_over(underlying_family(t), J);
  const bool even = n % 2 == 0;
  switch (t) {
    case AffineType::B2: {
      if (even) return roots_over(Family::B, J);
      std::vector<SparseVector> out;
      for (auto j : J) {
        out.push_back(detail::eps_combo(j, 1));
        out.push_back(detail::eps_combo(j, -1));
      }
      return out;
    }
    case AffineType::C2: return roots_over(even ? Family::C : Family::D, J);
    case AffineType::BC2: return roots_over(even ? Family::B : Family::BC, J);
    default: break;
  }
  return {};
}

class EmptySupport : public Error {
 public:
  EmptySupport() : Error("affine roots need a nonempty support") {}
};

/// All (alpha, n) with |n| <= level_cap, ordered by level then root.
inline std::vector<AffineRoot> affine_roots(AffineType t, const std::vector<std::size_t>& support, long level_cap) {
  if (support.empty()) throw EmptySupport();
  std::vector<AffineRoot> out;
  for (long n = -level_cap; n <= level_cap; ++n)
    for (auto& a : level_roots(t, support, n)) out.push_back({std::move(a), n});
  return out;
}

inline AffinePoint affine_coroot(const AffineRoot& r) {
  const Rational len = norm2(r.alpha);
  return {Rational(-2 * r.level) / len, coroot(r.alpha), 0};
}

/// p - alpha^(p) coroot(alpha^)
inline AffinePoint affine_reflect(const AffineRoot& r, const AffinePoint& p) {
  const Rational k = evaluate(r.weight(), p);
  const AffinePoint c = affine_coroot(r);
  return {p.z - k * c.z, p.x - k * c.x, p.t - k * c.t};
}

/// tau_x(z, y, t) = (z + <y,x> + t|x|^2/2, y + t x, t)
inline AffinePoint translate(const SparseVector& x, const AffinePoint& p) {
  return {p.z + dot(p.x, x) + p.t * norm2(x) / 2, p.x + p.t * x, p.t};
}

// ---------------------------------------------------------------------------
// Translation lattices

enum class TransLattice { ZeroSum, EvenSum, All, Even };

inline const char* to_string(TransLattice l) {
  switch (l) {
    case TransLattice::ZeroSum: return "zero_sum";
    case TransLattice::EvenSum: return "even_sum";
    case TransLattice::All: return "all";
    case TransLattice::Even: return "even";
  }
  return "?";
}

inline TransLattice lattice(AffineType t) {
  switch (t) {
    case AffineType::A1: return TransLattice::ZeroSum;
    case AffineType::B1:
    case AffineType::D1:
    case AffineType::C2: return TransLattice::EvenSum;
    case AffineType::C1:
    case AffineType::BC2: return TransLattice::All;
    case AffineType::B2: return TransLattice::Even;
  }
  return TransLattice::All;
}

inline bool lattice_contains(TransLattice l, const SparseVector& x) {
  Integer sum = 0;
  for (const auto& [j, q] : x.values()) {
    if (!is_integer(q)) return false;
    if (l == TransLattice::Even && q.get_num() % 2 != 0) return false;
    sum += q.get_num();
  }
  if (l == TransLattice::ZeroSum) return sum == 0;
  if (l == TransLattice::EvenSum) return sum % 2 == 0;
  return true;
}

/// Generators n * coroot(alpha), alpha in Delta_n nonzero, n in {1, 2}.
inline std::vector<SparseVector> translation_generators(AffineType t, const std::vector<std::size_t>& support) {
  std::vector<SparseVector> out;
  for (long n = 1; n <= 2; ++n)
    for (const auto& a : level_roots(t, support, n)) {
      SparseVector g = Rational(n) * coroot(a);
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
    }
  return out;
}

/// f(x) = lc |x|^2 / 2 + bar(x) + ld = lambda(tau_x d)
inline Rational d_values(const AffineWeight& w, const SparseVector& x) {
  return w.lc * norm2(x) / 2 + dot(w.bar, x) + w.ld;
}

// ---------------------------------------------------------------------------
// d-minimality

/// The row-by-row characterization. The index set is infinite, so an index
/// outside supp(bar) with coordinate 0 is always available.
inline bool is_d_minimal_closed_form(AffineType t, const AffineWeight& w) {
  if (w.lc < 0) return false;
  if (w.lc == 0) return w.bar.empty();
  std::vector<Rational> vals{0, 0};
  for (const auto& [j, q] : w.bar.values()) vals.push_back(q);
  std::vector<Rational> abs_vals;
  for (const auto& q : vals) abs_vals.push_back(abs(q));
  std::sort(abs_vals.begin(), abs_vals.end(), std::greater<>());
  const Rational& max_abs = abs_vals[0];
  switch (t) {
    case AffineType::A1:
      return *std::max_element(vals.begin(), vals.end()) - *std::min_element(vals.begin(), vals.end()) <= w.lc;
    case AffineType::B1:
    case AffineType::D1:
    case AffineType::C2: return abs_vals[0] + abs_vals[1] <= w.lc;
    case AffineType::C1:
    case AffineType::BC2: return max_abs <= w.lc / 2;
    case AffineType::B2: return max_abs <= w.lc;
  }
  return false;
}

inline std::vector<std::size_t> support_with_spare(const SparseVector& bar, std::size_t spare = 1) {
  std::vector<std::size_t> J = bar.support();
  std::size_t next = J.empty() ? 1 : J.back() + 1;
  for (std::size_t k = 0; k < spare || J.size() < 2; ++k) J.push_back(next++);
  return J;
}

/// (alpha,alpha)/(2n) * bar(coroot(alpha)) <= lc for every affine root with
/// 0 < n <= 2 over supp(bar) plus one spare index.
inline bool is_d_minimal_generic(AffineType t, const AffineWeight& w) {
  if (w.lc <= 0) throw Error("is_d_minimal_generic requires lc > 0");
  const auto J = support_with_spare(w.bar);
  for (long n = 1; n <= 2; ++n)
    for (const auto& a : level_roots(t, J, n))
      if (norm2(a) / (2 * n) * dot(w.bar, coroot(a)) > w.lc) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Minimization of f over the translation lattice

enum class MinimizeStatus { Optimal, Unbounded };

inline const char* to_string(MinimizeStatus s) { return s == MinimizeStatus::Optimal ? "OPTIMAL" : "UNBOUNDED"; }

struct MinimizeResult {
  MinimizeStatus status = MinimizeStatus::Optimal;
  Rational min_value;        // Optimal only
  SparseVector argmin;       // Optimal only
  SparseVector direction;    // Unbounded only: f(k * direction) -> -inf as k -> inf
};

namespace detail {

/// Coordinate whose move from its nearest to its second nearest integer
/// costs least, i.e. minimizes 1 - 2|x_i - y_i|.
inline std::size_t cheapest_flip(const std::vector<Rational>& y, const std::vector<Integer>& x) {
  std::size_t best = 0;
  Rational best_cost;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Rational cost = 1 - 2 * abs(Rational(x[i]) - y[i]);
    if (i == 0 || cost < best_cost) {
      best = i;
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace detail

/// Exact minimum of f(x) = lc|x|^2/2 + bar(x) + ld over the translation
/// lattice of type t. Completing the square reduces this to the lattice point
/// closest to y = -bar/lc, where y vanishes off supp(bar).
inline MinimizeResult minimize_d(AffineType type, const AffineWeight& w) {
  const TransLattice L = lattice(type);
  const std::vector<std::size_t> S = w.bar.support();
  const std::size_t fresh = S.empty() ? 1 : S.back() + 1;
  MinimizeResult out;

  if (w.lc <= 0) {
    if (w.lc == 0 && w.bar.empty()) {
      out.min_value = w.ld;
      return out;
    }
    out.status = MinimizeStatus::Unbounded;
    const std::size_t j = S.empty() ? 1 : S.front();
    SparseVector g;
    switch (L) {
      case TransLattice::ZeroSum: g = detail::eps_combo(j, 1, S.empty() ? 2 : fresh, -1); break;
      case TransLattice::EvenSum:
      case TransLattice::Even: g = detail::eps_combo(j, 2); break;
      case TransLattice::All: g = detail::eps_combo(j, 1); break;
    }
    if (w.lc == 0 && dot(w.bar, g) > 0) g = -g;
    out.direction = std::move(g);
    return out;
  }

  std::vector<Rational> y;
  for (auto j : S) y.push_back(-w.bar.get(j) / w.lc);
  std::vector<Integer> x(y.size());
  SparseVector extra;

  switch (L) {
    case TransLattice::All:
      for (std::size_t i = 0; i < y.size(); ++i) x[i] = round_of(y[i]);
      break;
    case TransLattice::Even:
      for (std::size_t i = 0; i < y.size(); ++i) x[i] = 2 * round_of(y[i] / 2);
      break;
    case TransLattice::EvenSum: {
      Integer sum = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        x[i] = round_of(y[i]);
        sum += x[i];
      }
      if (sum % 2 != 0) {
        // y is nonempty here; the best single flip costs 1 - 2 delta <= 1,
        // which never loses to a +-1 on a fresh coordinate.
        const std::size_t i = detail::cheapest_flip(y, x);
        x[i] += Rational(x[i]) < y[i] ? 1 : -1;
      }
      break;
    }
    case TransLattice::ZeroSum: {
      // Off support the cheapest way to absorb a sum s is |s| coordinates
      // equal to -sign(s), costing |s|. Minimize |x - y|^2 + |sum x| by walking
      // the sum from the rounded value towards 0 with greedy unit moves.
      Integer sum = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        x[i] = round_of(y[i]);
        sum += x[i];
      }
      const int step = sgn(sum) > 0 ? -1 : 1;
      auto cur_cost = [&] {
        Rational c = abs(Rational(sum));
        for (std::size_t i = 0; i < y.size(); ++i) {
          const Rational dlt = Rational(x[i]) - y[i];
          c += dlt * dlt;
        }
        return c;
      };
      std::vector<Integer> best_x = x;
      Integer best_sum = sum;
      Rational best_cost = cur_cost();
      while (sum != 0) {
        std::size_t pick = 0;
        Rational pick_cost;
        for (std::size_t i = 0; i < y.size(); ++i) {
          const Rational dlt = Rational(x[i]) - y[i];
          const Rational inc = 1 + 2 * step * dlt;
          if (i == 0 || inc < pick_cost) {
            pick = i;
            pick_cost = inc;
          }
        }
        x[pick] += step;
        sum += step;
        const Rational c = cur_cost();
        if (c < best_cost) {
          best_cost = c;
          best_x = x;
          best_sum = sum;
        }
      }
      x = best_x;
      const int aux = sgn(best_sum) > 0 ? -1 : 1;
      Integer count = abs(best_sum);
      for (std::size_t k = 0; count > 0; ++k, --count) extra.set(fresh + k, aux);
      break;
    }
  }

  for (std::size_t i = 0; i < S.size(); ++i) out.argmin.set(S[i], Rational(x[i]));
  out.argmin += extra;
  if (!lattice_contains(L, out.argmin)) throw Error("minimize_d produced a point outside the lattice");
  out.min_value = d_values(w, out.argmin);
  return out;
}

// ---------------------------------------------------------------------------
// The weight with bounded orbit values but no minimum, truncated at 2m indices

struct Example47Report {
  std::size_t m = 0;
  AffineWeight weight;
  std::vector<SparseVector> witnesses;  // x_n, n = 1..m
  std::vector<Rational> values;         // f(x_n)
  std::vector<Rational> expected;       // -sum_{k<=n} 1/k^2
  bool strictly_decreasing = true;
  Rational lower_bound;                 // -2 (sum_{k<=m} 1/k^2 + 1/m), valid for the full weight
  MinimizeResult truncated_min;
};

inline AffineWeight example_47_weight(std::size_t m) {
  AffineWeight w{1, {}, 0};
  for (std::size_t k = 1; k <= m; ++k) w.bar.set(2 * k - 1, 1 + Rational(1, static_cast<unsigned long>(k * k)));
  return w;
}

inline Example47Report example_47(std::size_t m) {
  if (m == 0) throw Error("example_47 requires m >= 1");
  Example47Report rep;
  rep.m = m;
  rep.weight = example_47_weight(m);
  SparseVector x;
  Rational partial = 0;
  for (std::size_t n = 1; n <= m; ++n) {
    x.add(2 * n, 1);
    x.add(2 * n - 1, -1);
    partial += Rational(1, static_cast<unsigned long>(n * n));
    rep.witnesses.push_back(x);
    rep.values.push_back(d_values(rep.weight, x));
    rep.expected.push_back(-partial);
    if (n > 1 && !(rep.values[n - 1] < rep.values[n - 2])) rep.strictly_decreasing = false;
  }
  // sum_{k>m} 1/k^2 <= int_m^inf dk/k^2 = 1/m
  rep.lower_bound = -2 * (partial + Rational(1, static_cast<unsigned long>(m)));
  rep.truncated_min = minimize_d(AffineType::A1, rep.weight);
  return rep;
}

// ---------------------------------------------------------------------------
// Reflection data of the affine system at finite support

/// Dense coordinates of V^ over support {1..n}: (z, x_1..x_n, t).
inline Covector dense_weight(const AffineWeight& w, std::size_t n) {
  Covector f(n + 2);
  f[0] = w.lc;
  for (const auto& [j, q] : w.bar.values()) {
    if (j < 1 || j > n) throw Error("weight index outside support");
    f[j] = q;
  }
  f[n + 1] = w.ld;
  return f;
}

inline DenseVector dense_point(const AffinePoint& p, std::size_t n) {
  DenseVector v(n + 2);
  v[0] = p.z;
  for (const auto& [j, q] : p.x.values()) {
    if (j < 1 || j > n) throw Error("point index outside support");
    v[j] = q;
  }
  v[n + 1] = p.t;
  return v;
}

inline AffinePoint sparse_point(const DenseVector& v) {
  const std::size_t n = v.dim() - 2;
  AffinePoint p{v[0], {}, v[n + 1]};
  for (std::size_t j = 1; j <= n; ++j) p.x.set(j, v[j]);
  return p;
}

/// The root theta with (0, -theta, 1) the extra simple root.
inline SparseVector affine_theta(AffineType t, std::size_t n) {
  switch (t) {
    case AffineType::A1: return detail::eps_combo(1, 1, n, -1);
    case AffineType::B1:
    case AffineType::D1:
    case AffineType::C2: return detail::eps_combo(1, 1, 2, 1);
    case AffineType::C1:
    case AffineType::BC2: return detail::eps_combo(1, 2);
    case AffineType::B2: return detail::eps_combo(1, 1);
  }
  return {};
}

/// Simple system: the finite simple roots (level 0) plus (0, -theta, 1),
/// over support {1..n}. Carries the null root (0, 0, 1) as imaginary root.
inline ReflectionData affine_reflection_data(AffineType t, std::size_t n) {
  if (n < 2) throw UnsupportedRootSystem("affine systems need support size >= 2");
  const Family f = underlying_family(t);
  const std::size_t rank = f == Family::A ? n - 1 : n;
  std::vector<AffineRoot> simple;
  for (auto& a : simple_roots(f, rank)) simple.push_back({std::move(a), 0});
  simple.push_back({-affine_theta(t, n), 1});

  std::vector<std::string> names;
  std::vector<Covector> alphas;
  std::vector<DenseVector> checks;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    names.push_back("s" + std::to_string(i + 1 == simple.size() ? 0 : i + 1));
    alphas.push_back(dense_weight(simple[i].weight(), n));
    checks.push_back(dense_point(affine_coroot(simple[i]), n));
  }
  ReflectionData d(n + 2, std::move(names), std::move(alphas), std::move(checks));
  d.set_imaginary_root(dense_weight(AffineWeight{0, {}, 1}, n));
  return d;
}

}  // namespace coxconv
