#pragma once

// Polyhedral cones given by finite generator lists.
//
// Membership is decided by exact LP feasibility, which scales with the number
// of generators rather than the number of facets. The dual cone is computed by
// the double description method and is gated behind a dimension bound.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coxconv/simplex.hpp"
#include "coxconv/vector.hpp"

namespace coxconv {

inline constexpr std::size_t kDefaultDualDimensionBound = 12;

class DimensionBoundExceeded : public Error {
 public:
  DimensionBoundExceeded(std::size_t dim, std::size_t bound)
      : Error("cone dimension " + std::to_string(dim) + " exceeds dual computation bound " + std::to_string(bound)) {}
};

/// cone(generators). Zero and duplicate generators are removed on
/// construction; the remaining ones are scaled to primitive integer vectors
/// and sorted, so equal generator sets compare equal.
template <class Tag>
class PolyhedralCone {
 public:
  using Vector = BasicVector<Tag>;

  explicit PolyhedralCone(std::size_t dim) : dim_(dim) {}
  PolyhedralCone(std::size_t dim, std::vector<Vector> generators) : dim_(dim) {
    for (auto& g : generators) {
      if (g.dim() != dim_) throw DimensionMismatch(dim_, g.dim());
      if (g.is_zero()) continue;
      generators_.push_back(primitive(g));
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& generators() const { return generators_; }
  bool is_origin() const { return generators_.empty(); }

  /// Nonnegative coefficients (aligned with generators()) representing x.
  std::optional<std::vector<Rational>> combination_for(const Vector& x) const {
    if (x.dim() != dim_) throw DimensionMismatch(dim_, x.dim());
    if (x.is_zero()) return std::vector<Rational>(generators_.size(), Rational(0));
    std::vector<std::vector<Rational>> columns;
    columns.reserve(generators_.size());
    for (const auto& g : generators_) columns.push_back(g.data());
    return lp::feasible_nonnegative(columns, x.entries());
  }

  bool contains(const Vector& x) const { return combination_for(x).has_value(); }

  bool contains_cone(const PolyhedralCone& other) const {
    return std::all_of(other.generators_.begin(), other.generators_.end(),
                       [&](const Vector& g) { return contains(g); });
  }

  /// Same point set (mutual generator membership).
  bool equals_as_set(const PolyhedralCone& other) const {
    return dim_ == other.dim_ && contains_cone(other) && other.contains_cone(*this);
  }

  /// Basis of the lineality space H(C) = C cap -C. A nonnegative combination
  /// lying in H(C) only uses generators whose negatives are in C, so H(C) is
  /// spanned by exactly those generators.
  std::vector<Vector> lineality() const {
    std::vector<Vector> reversible;
    for (const auto& g : generators_)
      if (contains(-g)) reversible.push_back(g);
    std::vector<Vector> basis;
    for (auto i : linalg::independent_subset<Tag>(reversible)) basis.push_back(reversible[i]);
    return basis;
  }

  bool is_pointed() const { return lineality().empty(); }

  PolyhedralCone negated() const {
    std::vector<Vector> g;
    for (const auto& v : generators_) g.push_back(-v);
    return PolyhedralCone(dim_, std::move(g));
  }

  /// Generators of the dual cone { y : <y, g> >= 0 for all generators g }.
  PolyhedralCone<DualOf<Tag>> dual(std::size_t dimension_bound = kDefaultDualDimensionBound) const;

  friend bool operator==(const PolyhedralCone& a, const PolyhedralCone& b) {
    return a.dim_ == b.dim_ && a.generators_ == b.generators_;
  }

 private:
  std::size_t dim_;
  std::vector<Vector> generators_;
};

using VectorCone = PolyhedralCone<PrimalTag>;
using CovectorCone = PolyhedralCone<DualTag>;

namespace detail {

/// Double description method: intersects halfspaces { y : <h_k, y> >= 0 }
/// starting from the whole space, maintaining a lineality basis plus a
/// minimal set of extreme rays (with their sets of tight constraints).
template <class Out>
std::vector<BasicVector<Out>> double_description(std::size_t dim,
                                                 std::span<const BasicVector<DualOf<Out>>> constraints) {
  using Vec = BasicVector<Out>;
  auto eval = [](const BasicVector<DualOf<Out>>& h, const Vec& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < y.dim(); ++i) s += h[i] * y[i];
    return s;
  };
  struct Ray {
    Vec v;
    std::vector<bool> tight;  // indexed by processed constraint
  };
  std::vector<Vec> lines;
  for (std::size_t i = 0; i < dim; ++i) lines.push_back(Vec::unit(dim, i));
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const auto& h = constraints[k];
    for (auto& r : rays) r.tight.push_back(false);

    std::size_t pivot = lines.size();
    Rational pivot_value;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      Rational val = eval(h, lines[i]);
      if (val != 0) {
        pivot = i;
        pivot_value = std::move(val);
        break;
      }
    }
    if (pivot < lines.size()) {
      Vec l = lines[pivot];
      if (pivot_value < 0) {
        l = -l;
        pivot_value = -pivot_value;
      }
      lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (auto& other : lines) {
        const Rational c = eval(h, other) / pivot_value;
        if (c != 0) other -= c * l;
      }
      for (auto& r : rays) {
        const Rational c = eval(h, r.v) / pivot_value;
        if (c != 0) r.v -= c * l;
        r.tight[k] = true;
      }
      Ray fresh{l, std::vector<bool>(k + 1, true)};
      fresh.tight[k] = false;
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<Rational> values(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      values[i] = eval(h, rays[i].v);
      if (values[i] > 0)
        pos.push_back(i);
      else if (values[i] < 0)
        neg.push_back(i);
      else
        rays[i].tight[k] = true;
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (values[i] >= 0) next.push_back(rays[i]);
    for (auto p : pos)
      for (auto n : neg) {
        // Combinatorial adjacency: no third ray is tight on every constraint
        // that is tight on both p and n.
        std::vector<bool> common(k, false);
        for (std::size_t c = 0; c < k; ++c) common[c] = rays[p].tight[c] && rays[n].tight[c];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          bool covers = true;
          for (std::size_t c = 0; c < k && covers; ++c)
            if (common[c] && !rays[r].tight[c]) covers = false;
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        Vec combo = values[p] * rays[n].v - values[n] * rays[p].v;
        std::vector<bool> tight = common;
        tight.push_back(true);
        next.push_back(Ray{primitive(combo), std::move(tight)});
      }
    rays = std::move(next);
  }

  std::vector<Vec> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  for (auto& l : lines) {
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

}  // namespace detail

template <class Tag>
PolyhedralCone<DualOf<Tag>> PolyhedralCone<Tag>::dual(std::size_t dimension_bound) const {
  if (dim_ > dimension_bound) throw DimensionBoundExceeded(dim_, dimension_bound);
  std::vector<BasicVector<Tag>> constraints = generators_;
  return PolyhedralCone<DualOf<Tag>>(dim_, detail::double_description<DualOf<Tag>>(dim_, constraints));
}

}  // namespace coxconv
