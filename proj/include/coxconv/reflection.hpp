#pragma once

// Reflection data (alpha_s, alpha_check_s) with alpha_s(alpha_check_s) = 2,
// the reflections r_s(v) = v - alpha_s(v) alpha_check_s, and the pairwise
// recognition criteria for linear Coxeter systems.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxconv/cone.hpp"
#include "coxconv/vector.hpp"

namespace coxconv {

class InvalidReflectionData : public Error {
 public:
  using Error::Error;
};

class ReflectionData {
 public:
  ReflectionData() = default;

  /// Throws unless every alpha_s(alpha_check_s) equals 2 and all dimensions agree.
  ReflectionData(std::size_t dim, std::vector<std::string> names, std::vector<Covector> alphas,
                 std::vector<DenseVector> alpha_checks)
      : dim_(dim), names_(std::move(names)), alphas_(std::move(alphas)), alpha_checks_(std::move(alpha_checks)) {
    if (names_.size() != alphas_.size() || names_.size() != alpha_checks_.size())
      throw InvalidReflectionData("generator names, alphas and alpha_checks differ in length");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (alphas_[i].dim() != dim_ || alpha_checks_[i].dim() != dim_)
        throw InvalidReflectionData("generator '" + names_[i] + "' has wrong dimension");
      if (pair(alphas_[i], alpha_checks_[i]) != 2)
        throw InvalidReflectionData("alpha(alpha_check) != 2 for generator '" + names_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[j] == names_[i]) throw InvalidReflectionData("duplicate generator name '" + names_[i] + "'");
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Covector>& alphas() const { return alphas_; }
  const std::vector<DenseVector>& alpha_checks() const { return alpha_checks_; }
  const Covector& alpha(std::size_t s) const { return alphas_.at(s); }
  const DenseVector& alpha_check(std::size_t s) const { return alpha_checks_.at(s); }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error("unknown generator '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
  }

  /// a_{st} = alpha_s(alpha_check_t)
  Rational cartan(std::size_t s, std::size_t t) const { return pair(alphas_.at(s), alpha_checks_.at(t)); }

  /// A W-invariant functional that is a strictly positive combination of the
  /// alpha_s. Built-in affine systems carry one (the null root); it certifies
  /// points outside the Tits cone. Re-verified before every use.
  const std::optional<Covector>& imaginary_root() const { return imaginary_root_; }
  void set_imaginary_root(Covector delta) {
    if (delta.dim() != dim_) throw DimensionMismatch(dim_, delta.dim());
    imaginary_root_ = std::move(delta);
  }

  VectorCone coroot_cone() const { return VectorCone(dim_, alpha_checks_); }  // C_S
  CovectorCone root_cone() const { return CovectorCone(dim_, alphas_); }      // Č_S

  friend bool operator==(const ReflectionData& a, const ReflectionData& b) {
    return a.dim_ == b.dim_ && a.names_ == b.names_ && a.alphas_ == b.alphas_ && a.alpha_checks_ == b.alpha_checks_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Covector> alphas_;
  std::vector<DenseVector> alpha_checks_;
  std::optional<Covector> imaginary_root_;
};

inline void check_generator(const ReflectionData& d, std::size_t s) {
  if (s >= d.rank()) throw Error("unknown generator index " + std::to_string(s));
}

inline DenseVector reflect(const ReflectionData& d, std::size_t s, const DenseVector& v) {
  check_generator(d, s);
  const Rational c = pair(d.alpha(s), v);
  if (c == 0) return v;
  return v - c * d.alpha_check(s);
}

/// Adjoint action on V*: f - f(alpha_check_s) alpha_s.
inline Covector reflect_dual(const ReflectionData& d, std::size_t s, const Covector& f) {
  check_generator(d, s);
  const Rational c = pair(f, d.alpha_check(s));
  if (c == 0) return f;
  return f - c * d.alpha(s);
}

/// Matrix of r_s acting on column vectors: I - alpha_check_s alpha_s^T.
inline Matrix reflection_matrix(const ReflectionData& d, std::size_t s) {
  check_generator(d, s);
  Matrix m = Matrix::identity(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) m(i, j) -= d.alpha_check(s)[i] * d.alpha(s)[j];
  return m;
}

enum class PairKind { Commuting, Finite, Affine, Hyperbolic, Invalid };

inline const char* to_string(PairKind k) {
  switch (k) {
    case PairKind::Commuting: return "commuting";
    case PairKind::Finite: return "finite";
    case PairKind::Affine: return "affine";
    case PairKind::Hyperbolic: return "hyperbolic";
    case PairKind::Invalid: return "invalid";
  }
  return "invalid";
}

struct LcsViolation {
  std::size_t s;
  std::size_t t;  // equals s for single-generator conditions
  std::string reason;
};

struct LcsReport {
  bool c1_ok = true;
  bool c2_ok = true;
  bool lcs1_ok = true;
  /// (C1) implies (LCS2); reported as such rather than tested separately.
  bool lcs2_implied = true;
  /// C_S pointed, i.e. the dual reflection data is itself a linear Coxeter system.
  bool dual_pointed = true;
  /// m(s,t); 0 encodes infinity. Diagonal entries are 1.
  std::vector<std::vector<unsigned>> coxeter_matrix;
  std::vector<std::vector<PairKind>> pair_kinds;
  std::vector<LcsViolation> violations;

  bool valid() const { return c1_ok && c2_ok && lcs1_ok; }
};

/// Pairwise (C1)/(C2) and pointedness of cone{alpha_s}. (LCS3) is not tested
/// directly: for data satisfying (LCS1) it is equivalent to (C1)+(C2).
inline LcsReport check_lcs(const ReflectionData& d) {
  LcsReport rep;
  const std::size_t n = d.rank();
  rep.coxeter_matrix.assign(n, std::vector<unsigned>(n, 1));
  rep.pair_kinds.assign(n, std::vector<PairKind>(n, PairKind::Finite));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      const Rational ast = d.cartan(s, t);
      const Rational ats = d.cartan(t, s);
      PairKind kind;
      unsigned m = 0;
      const bool both_zero = ast == 0 && ats == 0;
      const bool both_negative = ast < 0 && ats < 0;
      if (!both_zero && !both_negative) {
        rep.c1_ok = false;
        rep.violations.push_back({s, t, "C1: a_st=" + to_string(ast) + ", a_ts=" + to_string(ats) +
                                            " are not both negative or both zero"});
        kind = PairKind::Invalid;
      } else {
        // 4cos^2(pi/k) is rational only for k in {2,3,4,6}: values 0,1,2,3.
        const Rational p = ast * ats;
        if (p == 0) {
          m = 2;
          kind = PairKind::Commuting;
        } else if (p == 1) {
          m = 3;
          kind = PairKind::Finite;
        } else if (p == 2) {
          m = 4;
          kind = PairKind::Finite;
        } else if (p == 3) {
          m = 6;
          kind = PairKind::Finite;
        } else if (p == 4) {
          kind = PairKind::Affine;
        } else if (p > 4) {
          kind = PairKind::Hyperbolic;
        } else {
          rep.c2_ok = false;
          rep.violations.push_back({s, t, "C2: product " + to_string(p) + " is neither >= 4 nor 4cos^2(pi/k)"});
          kind = PairKind::Invalid;
        }
      }
      rep.coxeter_matrix[s][t] = rep.coxeter_matrix[t][s] = m;
      rep.pair_kinds[s][t] = rep.pair_kinds[t][s] = kind;
    }
  rep.lcs1_ok = d.root_cone().is_pointed();
  if (!rep.lcs1_ok) rep.violations.push_back({0, 0, "LCS1: cone{alpha_s} is not pointed"});
  rep.lcs2_implied = rep.c1_ok;
  rep.dual_pointed = d.coroot_cone().is_pointed();
  return rep;
}

inline bool is_linear_coxeter_system(const ReflectionData& d) { return check_lcs(d).valid(); }

/// Restriction of the families to the generators listed in `subset`
/// (indices into d, kept in the given order).
inline ReflectionData subsystem(const ReflectionData& d, const std::vector<std::size_t>& subset) {
  std::vector<std::string> names;
  std::vector<Covector> alphas;
  std::vector<DenseVector> checks;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const auto s = subset[k];
    check_generator(d, s);
    for (std::size_t j = 0; j < k; ++j)
      if (subset[j] == s) throw Error("subsystem: repeated generator index " + std::to_string(s));
    names.push_back(d.names()[s]);
    alphas.push_back(d.alpha(s));
    checks.push_back(d.alpha_check(s));
  }
  return ReflectionData(d.dim(), std::move(names), std::move(alphas), std::move(checks));
}

/// K = { v : alpha_s(v) >= 0 for all s } as the dual cone of cone{alpha_s}.
inline VectorCone fundamental_chamber(const ReflectionData& d,
                                      std::size_t dimension_bound = kDefaultDualDimensionBound) {
  return d.root_cone().dual(dimension_bound);
}

/// Sign test for membership in K.
inline bool in_chamber(const ReflectionData& d, const DenseVector& v) {
  for (const auto& a : d.alphas())
    if (pair(a, v) < 0) return false;
  return true;
}

/// Sign test for membership in C_S^* = { f : f(alpha_check_s) >= 0 }.
inline bool in_dual_chamber(const ReflectionData& d, const Covector& f) {
  for (const auto& c : d.alpha_checks())
    if (pair(f, c) < 0) return false;
  return true;
}

/// Reflection data on U = span(C_S^*) = H(C_S)^perp inside V*, expressed in
/// coordinates with respect to `basis_of_u`.
struct DualSystem {
  ReflectionData data;
  std::vector<DenseVector> lineality;   // basis of H(C_S)
  std::vector<Covector> basis_of_u;     // basis of U in V*
  std::vector<std::size_t> tilde_s;     // generators with alpha_check_s not in H(C_S)
};

inline DualSystem build_dual_system(const ReflectionData& d) {
  if (!check_lcs(d).valid()) throw InvalidReflectionData("build_dual_system: input is not a linear Coxeter system");
  DualSystem out;
  const VectorCone cs = d.coroot_cone();
  out.lineality = cs.lineality();
  out.basis_of_u = linalg::annihilator<PrimalTag>(out.lineality, d.dim());

  std::vector<std::string> names;
  std::vector<Covector> new_alphas;
  std::vector<DenseVector> new_checks;
  const std::size_t k = out.basis_of_u.size();
  for (std::size_t s = 0; s < d.rank(); ++s) {
    // alpha_check_s in H(C_S) iff it annihilates U.
    bool in_h = true;
    for (const auto& u : out.basis_of_u)
      if (pair(u, d.alpha_check(s)) != 0) in_h = false;
    if (in_h) continue;
    out.tilde_s.push_back(s);
    Covector q(k);  // q(alpha_check_s) as a functional on U
    for (std::size_t i = 0; i < k; ++i) q[i] = pair(out.basis_of_u[i], d.alpha_check(s));
    auto coords = linalg::solve_in_span<DualTag>(out.basis_of_u, d.alpha(s));
    if (!coords) throw InvalidReflectionData("build_dual_system: alpha_" + d.names()[s] + " does not lie in U");
    names.push_back(d.names()[s]);
    new_alphas.push_back(std::move(q));
    new_checks.push_back(DenseVector(std::move(*coords)));
  }
  out.data = ReflectionData(k, std::move(names), std::move(new_alphas), std::move(new_checks));
  return out;
}

/// Rank two system on R^2 with alpha_s, alpha_t the coordinate functionals
/// and alpha_check_s = (2, -a), alpha_check_t = (-a, 2). The Cartan product
/// is a^2, so a = 2 is affine and a > 2 hyperbolic.
inline ReflectionData rank_two_system(const Rational& a) {
  return ReflectionData(2, {"s", "t"}, {Covector{1, 0}, Covector{0, 1}},
                        {DenseVector{2, Rational(-a)}, DenseVector{Rational(-a), 2}});
}

}  // namespace coxconv
