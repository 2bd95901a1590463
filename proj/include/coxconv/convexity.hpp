#pragma once

// The cones C_v, C_lambda and machine checks of the orbit containments
//   W v      subset  v - C_v         (v in the Tits cone),
//   W lambda subset  lambda - C_lambda (lambda in W C_S^*),
// together with the consequences for extreme points, minimizing functionals
// and maximizer sets.
//
// Verification is exhaustive when the group is finite and the enumerations
// close; otherwise reports carry a truncation flag and say nothing beyond the
// enumerated part.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxconv/coxeter.hpp"

namespace coxconv {

inline constexpr std::size_t kDefaultRootDepth = 16;
inline constexpr std::size_t kDefaultOrbitBudget = 1000;
inline constexpr std::size_t kDefaultTitsCap = 10000;

template <class Tag>
struct OrbitCone {
  PolyhedralCone<Tag> cone;
  bool truncated = false;
};

/// C_v = cone{ coroot(alpha) : alpha(v) > 0 } over the generated roots.
inline OrbitCone<PrimalTag> cone_Cv(const ReflectionData& d, const DenseVector& v,
                                    std::size_t root_depth = kDefaultRootDepth) {
  const RootTables roots = generate_roots(d, root_depth);
  std::vector<DenseVector> gens;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (pair(roots.roots[i], v) > 0) gens.push_back(roots.coroots[i]);
  return {VectorCone(d.dim(), std::move(gens)), roots.truncated};
}

/// C_lambda = cone{ alpha : lambda(coroot(alpha)) > 0 }.
inline OrbitCone<DualTag> cone_Clambda(const ReflectionData& d, const Covector& lambda,
                                       std::size_t root_depth = kDefaultRootDepth) {
  const RootTables roots = generate_roots(d, root_depth);
  std::vector<Covector> gens;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (pair(lambda, roots.coroots[i]) > 0) gens.push_back(roots.roots[i]);
  return {CovectorCone(d.dim(), std::move(gens)), roots.truncated};
}

template <class Tag>
struct ConvexityFailure {
  GroupElement element;
  BasicVector<Tag> point;
};

template <class Tag>
struct ConvexityReport {
  BasicVector<Tag> base;
  PolyhedralCone<Tag> cone{0};
  std::size_t checked = 0;
  std::vector<ConvexityFailure<Tag>> failures;
  bool truncated = false;
  /// Whether the base point was shown to lie in the (dual) Tits cone. When
  /// false the report is advisory: failures are then expected to be possible.
  bool precondition_met = false;
  std::string precondition_note;

  bool ok() const { return failures.empty(); }
};

namespace detail {

template <class Tag>
void check_orbit_against_cone(const OrbitTable<Tag>& orbit, ConvexityReport<Tag>& rep) {
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    ++rep.checked;
    if (!rep.cone.contains(rep.base - orbit.points[i])) rep.failures.push_back({orbit.elements[i], orbit.points[i]});
  }
  rep.truncated = rep.truncated || orbit.truncated;
}

}  // namespace detail

/// Checks v - w v in C_v for every enumerated orbit point. Inputs outside the
/// Tits cone are accepted and labelled; they serve as negative controls.
inline ConvexityReport<PrimalTag> verify_primal(const ReflectionData& d, const DenseVector& v,
                                                std::size_t orbit_budget = kDefaultOrbitBudget,
                                                std::size_t root_depth = kDefaultRootDepth,
                                                std::size_t tits_cap = kDefaultTitsCap) {
  ConvexityReport<PrimalTag> rep;
  rep.base = v;
  const TitsVerdict verdict = tits_cone_member(d, v, tits_cap);
  rep.precondition_met = verdict.status == TitsStatus::Yes;
  rep.precondition_note = std::string("tits_cone_member: ") + to_string(verdict.status);
  auto cv = cone_Cv(d, v, root_depth);
  rep.cone = std::move(cv.cone);
  rep.truncated = cv.truncated;
  detail::check_orbit_against_cone(enumerate_orbit(d, v, orbit_budget), rep);
  return rep;
}

/// Checks lambda - w lambda in C_lambda for every enumerated orbit point.
inline ConvexityReport<DualTag> verify_dual(const ReflectionData& d, const Covector& lambda,
                                            std::size_t orbit_budget = kDefaultOrbitBudget,
                                            std::size_t root_depth = kDefaultRootDepth,
                                            std::size_t tits_cap = kDefaultTitsCap) {
  ConvexityReport<DualTag> rep;
  rep.base = lambda;
  const auto descent = dual_tits_descent(d, lambda, tits_cap);
  rep.precondition_met = descent.has_value();
  rep.precondition_note = descent ? "dual descent reached C_S^*" : "dual descent did not reach C_S^* within cap";
  auto cl = cone_Clambda(d, lambda, root_depth);
  rep.cone = std::move(cl.cone);
  rep.truncated = cl.truncated;
  detail::check_orbit_against_cone(enumerate_orbit(d, lambda, orbit_budget), rep);
  return rep;
}

/// cone{ w v - v }.
template <class Tag>
OrbitCone<Tag> cone_of_differences(const ReflectionData& d, const BasicVector<Tag>& v,
                                   std::size_t orbit_budget = kDefaultOrbitBudget) {
  const auto orbit = enumerate_orbit(d, v, orbit_budget);
  std::vector<BasicVector<Tag>> gens;
  for (const auto& p : orbit.points) gens.push_back(p - v);
  return {PolyhedralCone<Tag>(d.dim(), std::move(gens)), orbit.truncated};
}

/// v is an extreme point of conv(W v) iff C_v is pointed.
inline bool is_extreme(const ReflectionData& d, const DenseVector& v, std::size_t root_depth = kDefaultRootDepth) {
  return cone_Cv(d, v, root_depth).cone.is_pointed();
}

/// lambda(v) = min lambda(W v) iff lambda in -C_v^*, i.e. lambda <= 0 on C_v.
inline bool is_minimizing(const ReflectionData& d, const Covector& lambda, const DenseVector& v,
                          std::size_t root_depth = kDefaultRootDepth) {
  const auto cv = cone_Cv(d, v, root_depth);
  return std::all_of(cv.cone.generators().begin(), cv.cone.generators().end(),
                     [&](const DenseVector& g) { return pair(lambda, g) <= 0; });
}

/// min over the enumerated orbit of lambda(w v).
inline Rational orbit_minimum(const ReflectionData& d, const Covector& lambda, const DenseVector& v,
                              std::size_t orbit_budget = kDefaultOrbitBudget) {
  const auto orbit = enumerate_orbit(d, v, orbit_budget);
  Rational best = pair(lambda, v);
  for (const auto& p : orbit.points) best = std::min(best, pair(lambda, p));
  return best;
}

struct MaximizerReport {
  Rational max_value;
  std::vector<DenseVector> maximizers;  // distinct points w v attaining the max, sorted
  bool equals_stabilizer_orbit = false; // maximizers == W_lambda v
  bool dual_condition = false;          // every maximizing g has g^{-1} lambda in W_v lambda
};

class TruncatedEnumeration : public Error {
 public:
  using Error::Error;
};

/// Exhaustive maximizer set of lambda on W v for lambda in C_S^*, v in K.
inline MaximizerReport maximizer_set(const ReflectionData& d, const Covector& lambda, const DenseVector& v,
                                     std::size_t group_budget = kDefaultOrbitBudget) {
  if (!in_dual_chamber(d, lambda)) throw PreconditionViolated("maximizer_set: lambda not in C_S^*");
  if (!in_chamber(d, v)) throw PreconditionViolated("maximizer_set: v not in K");
  const GroupEnumeration group = enumerate_group(d, group_budget);
  if (group.truncated) throw TruncatedEnumeration("maximizer_set: group enumeration truncated");

  MaximizerReport rep;
  rep.max_value = pair(lambda, v);
  for (const auto& g : group.elements) rep.max_value = std::max(rep.max_value, pair(lambda, g.apply(v)));

  std::set<DenseVector> maxpts;
  std::vector<const GroupElement*> maximizing;
  for (const auto& g : group.elements) {
    DenseVector p = g.apply(v);
    if (pair(lambda, p) == rep.max_value) {
      maxpts.insert(std::move(p));
      maximizing.push_back(&g);
    }
  }
  rep.maximizers.assign(maxpts.begin(), maxpts.end());

  const auto stab_lambda = stabilizer_dual(d, lambda, group_budget);
  std::set<DenseVector> stab_orbit;
  for (const auto& h : stab_lambda.group.elements) stab_orbit.insert(h.apply(v));
  rep.equals_stabilizer_orbit = stab_orbit == maxpts;

  const auto stab_v = stabilizer(d, v, group_budget);
  std::set<Covector> v_orbit_of_lambda;
  for (const auto& h : stab_v.group.elements) v_orbit_of_lambda.insert(h.apply_dual(lambda));
  rep.dual_condition = std::all_of(maximizing.begin(), maximizing.end(), [&](const GroupElement* g) {
    // g^{-1} lambda = lambda o g
    return v_orbit_of_lambda.count(g->matrix.apply_right(lambda)) != 0;
  });
  return rep;
}

}  // namespace coxconv
