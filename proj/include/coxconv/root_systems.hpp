#pragma once

// Finite-rank instances of the locally finite root systems A, B, C, D, BC.
// Roots are stored sparsely with 1-based coordinate indices; dense
// coordinate i corresponds to index i + 1.

#include <cstddef>
#include <string>
#include <vector>

#include "coxconv/convexity.hpp"

namespace coxconv {

enum class Family { A, B, C, D, BC };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "BC") return Family::BC;
  throw ParseError("unknown root system family '" + s + "'");
}

class UnsupportedRootSystem : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline SparseVector eps_combo(std::size_t j, int a, std::size_t k = 0, int b = 0) {
  SparseVector v;
  v.add(j, a);
  if (b != 0) v.add(k, b);
  return v;
}

}  // namespace detail

/// All roots of the family over the index set J, in a fixed order.
/// For A this is { eps_j - eps_k : j != k }.
inline std::vector<SparseVector> roots_over(Family f, const std::vector<std::size_t>& J) {
  using detail::eps_combo;
  std::vector<SparseVector> out;
  const bool shorts = f == Family::B || f == Family::BC;
  const bool longs = f == Family::C || f == Family::BC;
  for (std::size_t a = 0; a < J.size(); ++a) {
    const std::size_t j = J[a];
    if (shorts) {
      out.push_back(eps_combo(j, 1));
      out.push_back(eps_combo(j, -1));
    }
    if (longs) {
      out.push_back(eps_combo(j, 2));
      out.push_back(eps_combo(j, -2));
    }
    for (std::size_t b = a + 1; b < J.size(); ++b) {
      const std::size_t k = J[b];
      out.push_back(eps_combo(j, 1, k, -1));
      out.push_back(eps_combo(j, -1, k, 1));
      if (f != Family::A) {
        out.push_back(eps_combo(j, 1, k, 1));
        out.push_back(eps_combo(j, -1, k, -1));
      }
    }
  }
  return out;
}

/// coroot(alpha) = 2 alpha / (alpha, alpha) under the identification of V*
/// with V through the canonical scalar product.
inline SparseVector coroot(const SparseVector& alpha) {
  const Rational n = norm2(alpha);
  if (n == 0) throw Error("coroot of the zero vector");
  return (Rational(2) / n) * alpha;
}

inline std::size_t coordinate_count(Family f, std::size_t rank) { return f == Family::A ? rank + 1 : rank; }

/// Standard simple roots over J = {1..coordinate_count}.
inline std::vector<SparseVector> simple_roots(Family f, std::size_t rank) {
  using detail::eps_combo;
  if (rank < (f == Family::D ? 2u : 1u)) throw UnsupportedRootSystem("rank too small for a simple system");
  std::vector<SparseVector> out;
  const std::size_t n = rank;
  if (f == Family::A) {
    for (std::size_t i = 1; i <= n; ++i) out.push_back(eps_combo(i, 1, i + 1, -1));
    return out;
  }
  for (std::size_t i = 1; i < n; ++i) out.push_back(eps_combo(i, 1, i + 1, -1));
  switch (f) {
    case Family::B:
    case Family::BC: out.push_back(eps_combo(n, 1)); break;
    case Family::C: out.push_back(eps_combo(n, 2)); break;
    case Family::D: out.push_back(eps_combo(n - 1, 1, n, 1)); break;
    case Family::A: break;
  }
  return out;
}

struct FiniteRootSystem {
  Family family = Family::A;
  std::size_t rank = 0;
  std::size_t coordinates = 0;
  std::vector<SparseVector> roots;
  std::vector<SparseVector> simple;
  ReflectionData data;

  const SparseVector& root(std::size_t i) const { return roots.at(i); }
  Covector dense_root(const SparseVector& a) const { return densify<DualTag>(a, coordinates, 1); }
  DenseVector dense_coroot(const SparseVector& a) const { return densify<PrimalTag>(coroot(a), coordinates, 1); }
};

/// Coroot of a root of the system; throws if `alpha` is not a root.
inline SparseVector coroot(const FiniteRootSystem& sys, const SparseVector& alpha) {
  for (const auto& r : sys.roots)
    if (r == alpha) return coroot(alpha);
  throw Error("not a root of " + std::string(to_string(sys.family)) + std::to_string(sys.rank));
}

inline FiniteRootSystem build_root_system(Family f, std::size_t rank) {
  const std::size_t min_rank = (f == Family::A || f == Family::D) ? 2 : 1;
  if (rank < min_rank)
    throw UnsupportedRootSystem(std::string(to_string(f)) + " requires rank >= " + std::to_string(min_rank));
  FiniteRootSystem sys;
  sys.family = f;
  sys.rank = rank;
  sys.simple = simple_roots(f, rank);
  sys.coordinates = coordinate_count(f, rank);
  std::vector<std::size_t> J(sys.coordinates);
  for (std::size_t i = 0; i < J.size(); ++i) J[i] = i + 1;
  sys.roots = roots_over(f, J);

  std::vector<std::string> names;
  std::vector<Covector> alphas;
  std::vector<DenseVector> checks;
  for (std::size_t i = 0; i < sys.simple.size(); ++i) {
    names.push_back("s" + std::to_string(i + 1));
    alphas.push_back(sys.dense_root(sys.simple[i]));
    checks.push_back(sys.dense_coroot(sys.simple[i]));
  }
  sys.data = ReflectionData(sys.coordinates, std::move(names), std::move(alphas), std::move(checks));

  for (const auto& r : sys.roots) {
    auto coeffs = linalg::solve_in_span<DualTag>(sys.data.alphas(), sys.dense_root(r));
    if (!coeffs) throw Error("root outside the span of the simple roots");
    bool nonneg = true, nonpos = true;
    for (const auto& c : *coeffs) {
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) throw Error("root is neither positive nor negative for the simple system");
  }
  return sys;
}

/// Weyl group order from the classical formulas.
inline Integer weyl_group_order(Family f, std::size_t rank) {
  Integer fact = 1;
  for (std::size_t i = 2; i <= rank; ++i) fact *= static_cast<unsigned long>(i);
  Integer pow2 = 1;
  for (std::size_t i = 0; i < rank; ++i) pow2 *= 2;
  switch (f) {
    case Family::A: return fact * static_cast<unsigned long>(rank + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return pow2 * fact;
    case Family::D: return pow2 / 2 * fact;
  }
  return 0;
}

/// For a finite Weyl group every lambda lies in W C_S^*, so the dual
/// convexity check is unconditional.
inline ConvexityReport<DualTag> verify_locfin_convexity(Family f, std::size_t rank, const SparseVector& lambda,
                                                        std::size_t orbit_budget = kDefaultOrbitBudget) {
  const FiniteRootSystem sys = build_root_system(f, rank);
  auto rep = verify_dual(sys.data, densify<DualTag>(lambda, sys.coordinates, 1), orbit_budget);
  if (rep.truncated) throw TruncatedEnumeration("verify_locfin_convexity: enumeration overflow");
  return rep;
}

}  // namespace coxconv
