#pragma once

// Group enumeration, orbits, descent tests, roots and coroots, Tits cone
// membership and stabilizers for a linear Coxeter system.
//
// All enumerations are breadth first with generators taken in S order and the
// first-found word kept, so every table is deterministic. A word
// [s_1, ..., s_k] always denotes the product r_{s_1} r_{s_2} ... r_{s_k}.

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxconv/reflection.hpp"

namespace coxconv {

class InvalidBudget : public Error {
 public:
  InvalidBudget() : Error("budget must be positive") {}
};

using Word = std::vector<std::size_t>;

struct GroupElement {
  Matrix matrix;   // action on V
  Matrix inverse;  // matrix of the inverse element on V
  Word word;       // reduced when produced by enumerate_group

  static GroupElement identity(std::size_t dim) { return {Matrix::identity(dim), Matrix::identity(dim), {}}; }

  std::size_t length() const { return word.size(); }
  DenseVector apply(const DenseVector& v) const { return matrix.apply(v); }
  /// (w f)(v) = f(w^{-1} v)
  Covector apply_dual(const Covector& f) const { return inverse.apply_right(f); }

  template <class Tag>
  BasicVector<Tag> act(const BasicVector<Tag>& x) const {
    if constexpr (std::is_same_v<Tag, PrimalTag>)
      return apply(x);
    else
      return apply_dual(x);
  }

  /// this * r_s
  GroupElement times_generator(const ReflectionData& d, std::size_t s) const {
    const Matrix r = reflection_matrix(d, s);
    Word w = word;
    w.push_back(s);
    return {matrix * r, r * inverse, std::move(w)};
  }
  /// r_s * this
  GroupElement generator_times(const ReflectionData& d, std::size_t s) const {
    const Matrix r = reflection_matrix(d, s);
    Word w;
    w.reserve(word.size() + 1);
    w.push_back(s);
    w.insert(w.end(), word.begin(), word.end());
    return {r * matrix, inverse * r, std::move(w)};
  }
};

/// Product of generator matrices along a word.
inline GroupElement element_from_word(const ReflectionData& d, const Word& word) {
  GroupElement g = GroupElement::identity(d.dim());
  for (auto s : word) g = g.times_generator(d, s);
  return g;
}

struct GroupEnumeration {
  std::vector<GroupElement> elements;  // BFS order; elements[0] is the identity
  bool truncated = false;
  std::unordered_map<Matrix, std::size_t, MatrixHash> index;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> find(const Matrix& m) const {
    auto it = index.find(m);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  std::size_t max_length() const { return elements.empty() ? 0 : elements.back().length(); }
};

/// Breadth-first enumeration of the Cayley graph, right multiplication by
/// generators, deduplicated by matrix. BFS depth equals reduced length.
inline GroupEnumeration enumerate_group(const ReflectionData& d, std::size_t budget) {
  if (budget == 0) throw InvalidBudget();
  GroupEnumeration out;
  out.elements.push_back(GroupElement::identity(d.dim()));
  out.index.emplace(out.elements.front().matrix, 0);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t s = 0; s < d.rank(); ++s) {
      GroupElement next = out.elements[head].times_generator(d, s);
      if (out.index.count(next.matrix)) continue;
      if (out.elements.size() == budget) {
        out.truncated = true;
        return out;
      }
      out.index.emplace(next.matrix, out.elements.size());
      out.elements.push_back(std::move(next));
    }
  }
  return out;
}

template <class Tag>
struct OrbitTable {
  using Vector = BasicVector<Tag>;
  Vector base_point;
  std::vector<Vector> points;          // BFS order; points[0] is the base point
  std::vector<GroupElement> elements;  // elements[i] maps base_point to points[i]
  std::unordered_map<Vector, std::size_t, VectorHash<Tag>> index;
  bool truncated = false;
  std::size_t budget = 0;

  std::size_t size() const { return points.size(); }
  bool contains(const Vector& p) const { return index.count(p) != 0; }
};

template <class Tag>
BasicVector<Tag> act_generator(const ReflectionData& d, std::size_t s, const BasicVector<Tag>& x) {
  if constexpr (std::is_same_v<Tag, PrimalTag>)
    return reflect(d, s, x);
  else
    return reflect_dual(d, s, x);
}

/// Orbit of `base` under W (dual action for covectors), at most `budget` points.
template <class Tag>
OrbitTable<Tag> enumerate_orbit(const ReflectionData& d, const BasicVector<Tag>& base, std::size_t budget) {
  if (budget == 0) throw InvalidBudget();
  if (base.dim() != d.dim()) throw DimensionMismatch(d.dim(), base.dim());
  OrbitTable<Tag> out;
  out.base_point = base;
  out.budget = budget;
  out.points.push_back(base);
  out.elements.push_back(GroupElement::identity(d.dim()));
  out.index.emplace(base, 0);
  for (std::size_t head = 0; head < out.points.size(); ++head) {
    for (std::size_t s = 0; s < d.rank(); ++s) {
      BasicVector<Tag> next = act_generator(d, s, out.points[head]);
      if (out.index.count(next)) continue;
      if (out.points.size() == budget) {
        out.truncated = true;
        return out;
      }
      out.index.emplace(next, out.points.size());
      out.points.push_back(std::move(next));
      out.elements.push_back(out.elements[head].generator_times(d, s));
    }
  }
  return out;
}

enum class Descent { Ascent, Descent };

class DescentError : public Error {
 public:
  using Error::Error;
};

/// Ascent iff g alpha_s lies in cone{alpha_t}; descent iff in its negative.
/// cone{alpha_t} is pointed for a linear Coxeter system, so this side always
/// decides. The coroot side (g alpha_check_s in +-C_S) is checked for
/// consistency; when C_S has a lineality space both signs may hold there.
inline Descent descent_test(const ReflectionData& d, const GroupElement& g, std::size_t s) {
  check_generator(d, s);
  const CovectorCone roots = d.root_cone();
  const VectorCone coroots = d.coroot_cone();
  const Covector ga = g.apply_dual(d.alpha(s));
  const DenseVector gc = g.apply(d.alpha_check(s));
  const bool pos = roots.contains(ga);
  const bool neg = roots.contains(-ga);
  if (pos == neg)
    throw DescentError(pos ? "g alpha_s lies in both cone{alpha} and its negative"
                           : "g alpha_s lies in neither cone{alpha} nor its negative");
  if (pos && !coroots.contains(gc)) throw DescentError("root ascent but g alpha_check_s not in C_S");
  if (neg && !coroots.contains(-gc)) throw DescentError("root descent but g alpha_check_s not in -C_S");
  return pos ? Descent::Ascent : Descent::Descent;
}

class CorootInconsistency : public Error {
 public:
  using Error::Error;
};

struct RootTables {
  std::vector<Covector> roots;          // BFS order, simple roots first
  std::vector<DenseVector> coroots;     // coroot_of(roots[i])
  std::vector<bool> positive;           // roots[i] in cone{alpha_s}
  std::vector<Word> words;              // roots[i] = w alpha_s with w = word[..-1], s = word.back()
  std::vector<std::size_t> depth;
  std::unordered_map<Covector, std::size_t, VectorHash<DualTag>> index;
  bool truncated = false;
  std::size_t budget = 0;

  std::size_t size() const { return roots.size(); }
  std::size_t positive_count() const {
    std::size_t n = 0;
    for (bool p : positive) n += p ? 1 : 0;
    return n;
  }
  std::optional<DenseVector> coroot_of(const Covector& root) const {
    auto it = index.find(root);
    if (it == index.end()) return std::nullopt;
    return coroots[it->second];
  }
  /// The reflection r_alpha as a group element (w r_s w^{-1}).
  GroupElement reflection(const ReflectionData& d, std::size_t i) const {
    Word w = words.at(i);
    const std::size_t s = w.back();
    w.pop_back();
    Word full = w;
    full.push_back(s);
    full.insert(full.end(), w.rbegin(), w.rend());
    return element_from_word(d, full);
  }
};

/// Breadth-first closure of {alpha_s} under the dual action, carrying coroots
/// equivariantly, up to `max_depth` generator applications. A root reached
/// twice must carry the same coroot both times; otherwise the data cannot be
/// a linear Coxeter system and CorootInconsistency is thrown.
inline RootTables generate_roots(const ReflectionData& d, std::size_t max_depth) {
  if (max_depth == 0) throw InvalidBudget();
  RootTables out;
  out.budget = max_depth;
  auto add = [&](Covector root, DenseVector coroot, Word word, std::size_t depth) {
    auto it = out.index.find(root);
    if (it != out.index.end()) {
      if (out.coroots[it->second] != coroot)
        throw CorootInconsistency("root reached with two different coroots");
      return;
    }
    out.index.emplace(root, out.roots.size());
    out.roots.push_back(std::move(root));
    out.coroots.push_back(std::move(coroot));
    out.words.push_back(std::move(word));
    out.depth.push_back(depth);
  };
  for (std::size_t s = 0; s < d.rank(); ++s) add(d.alpha(s), d.alpha_check(s), Word{s}, 0);
  for (std::size_t head = 0; head < out.roots.size(); ++head) {
    if (out.depth[head] == max_depth) {
      // Anything not yet closed at the frontier means the table is truncated.
      for (std::size_t t = 0; t < d.rank() && !out.truncated; ++t)
        if (!out.index.count(reflect_dual(d, t, out.roots[head]))) out.truncated = true;
      continue;
    }
    for (std::size_t t = 0; t < d.rank(); ++t) {
      Covector r = reflect_dual(d, t, out.roots[head]);
      DenseVector c = reflect(d, t, out.coroots[head]);
      Word w;
      w.push_back(t);
      w.insert(w.end(), out.words[head].begin(), out.words[head].end());
      add(std::move(r), std::move(c), std::move(w), out.depth[head] + 1);
    }
  }
  const CovectorCone positive_cone = d.root_cone();
  out.positive.reserve(out.roots.size());
  for (const auto& r : out.roots) {
    const bool pos = positive_cone.contains(r);
    const bool neg = positive_cone.contains(-r);
    if (pos == neg) throw DescentError("root violates the sign dichotomy");
    out.positive.push_back(pos);
  }
  return out;
}

enum class TitsStatus { Yes, NoProof, Unknown };

inline const char* to_string(TitsStatus s) {
  switch (s) {
    case TitsStatus::Yes: return "YES";
    case TitsStatus::NoProof: return "NO_PROOF";
    case TitsStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

struct TitsVerdict {
  TitsStatus status = TitsStatus::Unknown;
  Word word;                  // v = w k with k in K, w the product along word
  DenseVector chamber_point;  // k, when status is Yes
  std::size_t steps = 0;
  std::string certificate;
};

/// Positive coefficients a_s with delta = sum a_s alpha_s, when delta is a
/// W-invariant strictly positive combination of the simple roots.
inline bool certified_imaginary_root(const ReflectionData& d, const Covector& delta) {
  for (const auto& c : d.alpha_checks())
    if (pair(delta, c) != 0) return false;
  auto coeffs = linalg::solve_in_span<DualTag>(d.alphas(), delta);
  if (!coeffs) return false;
  for (const auto& a : *coeffs)
    if (a <= 0) return false;
  return true;
}

/// Descent iteration: while some alpha_s(v) < 0, apply r_s for the least such
/// s. NO_PROOF is only reported with a certificate: a W-invariant positive
/// combination delta of the simple roots is >= 0 on T and vanishes on T only
/// at W-fixed points.
inline TitsVerdict tits_cone_member(const ReflectionData& d, const DenseVector& v, std::size_t cap) {
  if (cap == 0) throw InvalidBudget();
  if (v.dim() != d.dim()) throw DimensionMismatch(d.dim(), v.dim());
  TitsVerdict out;
  if (const auto& delta = d.imaginary_root(); delta && certified_imaginary_root(d, *delta)) {
    const Rational dv = pair(*delta, v);
    if (dv < 0) {
      out.status = TitsStatus::NoProof;
      out.certificate = "invariant imaginary root is negative on v";
      return out;
    }
    if (dv == 0) {
      bool fixed = true;
      for (const auto& a : d.alphas())
        if (pair(a, v) != 0) fixed = false;
      if (!fixed) {
        out.status = TitsStatus::NoProof;
        out.certificate = "invariant imaginary root vanishes on v but v is not W-fixed";
        return out;
      }
    }
  }
  DenseVector cur = v;
  for (std::size_t step = 0; step <= cap; ++step) {
    std::size_t neg = d.rank();
    for (std::size_t s = 0; s < d.rank(); ++s)
      if (pair(d.alpha(s), cur) < 0) {
        neg = s;
        break;
      }
    if (neg == d.rank()) {
      out.status = TitsStatus::Yes;
      out.chamber_point = cur;
      out.steps = step;
      return out;
    }
    if (step == cap) break;
    cur = reflect(d, neg, cur);
    out.word.push_back(neg);
  }
  out.status = TitsStatus::Unknown;
  out.steps = cap;
  out.word.clear();
  return out;
}

/// Dual descent into C_S^*: while some f(alpha_check_s) < 0 apply r_s^*.
/// Returns the word w with f = w mu, mu in C_S^*, or nullopt at the cap.
struct DualDescent {
  Word word;
  Covector chamber_point;
};
inline std::optional<DualDescent> dual_tits_descent(const ReflectionData& d, const Covector& f, std::size_t cap) {
  if (cap == 0) throw InvalidBudget();
  Covector cur = f;
  Word word;
  for (std::size_t step = 0; step <= cap; ++step) {
    std::size_t neg = d.rank();
    for (std::size_t s = 0; s < d.rank(); ++s)
      if (pair(cur, d.alpha_check(s)) < 0) {
        neg = s;
        break;
      }
    if (neg == d.rank()) return DualDescent{std::move(word), std::move(cur)};
    if (step == cap) break;
    cur = reflect_dual(d, neg, cur);
    word.push_back(neg);
  }
  return std::nullopt;
}

struct StabilizerResult {
  std::vector<std::size_t> generators;  // I
  GroupEnumeration group;               // the parabolic subgroup W_I
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// For v in K the stabilizer is the parabolic subgroup generated by the r_s
/// with alpha_s(v) = 0.
inline StabilizerResult stabilizer(const ReflectionData& d, const DenseVector& v, std::size_t budget) {
  if (!in_chamber(d, v)) throw PreconditionViolated("stabilizer: v is not in the fundamental chamber");
  StabilizerResult out;
  for (std::size_t s = 0; s < d.rank(); ++s)
    if (pair(d.alpha(s), v) == 0) out.generators.push_back(s);
  out.group = enumerate_group(subsystem(d, out.generators), budget);
  for (const auto& g : out.group.elements)
    if (g.apply(v) != v) throw Error("stabilizer: parabolic element does not fix v");
  return out;
}

/// For lambda in C_S^* the stabilizer is generated by the r_s with
/// lambda(alpha_check_s) = 0.
inline StabilizerResult stabilizer_dual(const ReflectionData& d, const Covector& lambda, std::size_t budget) {
  if (!in_dual_chamber(d, lambda))
    throw PreconditionViolated("stabilizer_dual: lambda is not in the dual chamber C_S^*");
  StabilizerResult out;
  for (std::size_t s = 0; s < d.rank(); ++s)
    if (pair(lambda, d.alpha_check(s)) == 0) out.generators.push_back(s);
  out.group = enumerate_group(subsystem(d, out.generators), budget);
  for (const auto& g : out.group.elements)
    if (g.apply_dual(lambda) != lambda) throw Error("stabilizer_dual: parabolic element does not fix lambda");
  return out;
}

}  // namespace coxconv
