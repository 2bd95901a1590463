#pragma once

// JSON encodings. Rationals are always strings ("p/q" or "p"); dense vectors
// are arrays; sparse vectors are objects keyed by the 1-based index.
//
// System format:
//   {"dim": n, "S": ["s", "t"], "alpha": {"s": [...], ...},
//    "alpha_check": {"s": [...], ...}, "imaginary_root": [...]?}

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxconv/affine.hpp"

namespace coxconv {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational as string or integer, got " + j.dump());
}

template <class Tag>
Json to_json(const BasicVector<Tag>& v) {
  Json a = Json::array();
  for (const auto& q : v.entries()) a.push_back(to_json(q));
  return a;
}

template <class Tag>
BasicVector<Tag> vector_from_json(const Json& j, std::optional<std::size_t> dim = std::nullopt) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  std::vector<Rational> e;
  for (const auto& x : j) e.push_back(rational_from_json(x));
  if (dim && e.size() != *dim) throw ParseError("vector has " + std::to_string(e.size()) + " entries, expected " +
                                                std::to_string(*dim));
  return BasicVector<Tag>(std::move(e));
}

inline Json to_json(const SparseVector& x) {
  Json o = Json::object();
  for (const auto& [k, q] : x.values()) o[std::to_string(k)] = to_json(q);
  return o;
}

/// Accepts {"index": q, ...} or a dense array read as indices 1, 2, ...
inline SparseVector sparse_from_json(const Json& j) {
  SparseVector x;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) x.set(i + 1, rational_from_json(j[i]));
    return x;
  }
  if (!j.is_object()) throw ParseError("expected a sparse vector object, got " + j.dump());
  for (const auto& [k, v] : j.items()) {
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("sparse vector key '" + k + "' is not an index");
    x.set(std::stoul(k), rational_from_json(v));
  }
  return x;
}

inline Json to_json(const ReflectionData& d) {
  Json j;
  j["dim"] = d.dim();
  j["S"] = d.names();
  Json a = Json::object(), c = Json::object();
  for (std::size_t s = 0; s < d.rank(); ++s) {
    a[d.names()[s]] = to_json(d.alpha(s));
    c[d.names()[s]] = to_json(d.alpha_check(s));
  }
  j["alpha"] = a;
  j["alpha_check"] = c;
  if (d.imaginary_root()) j["imaginary_root"] = to_json(*d.imaginary_root());
  return j;
}

inline ReflectionData system_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("system must be a JSON object");
  for (const char* key : {"dim", "S", "alpha", "alpha_check"})
    if (!j.contains(key)) throw ParseError(std::string("system is missing '") + key + "'");
  if (!j["dim"].is_number_unsigned()) throw ParseError("'dim' must be a nonnegative integer");
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<std::string> names;
  std::vector<Covector> alphas;
  std::vector<DenseVector> checks;
  for (const auto& n : j["S"]) {
    if (!n.is_string()) throw ParseError("generator names must be strings");
    const auto name = n.get<std::string>();
    if (!j["alpha"].contains(name) || !j["alpha_check"].contains(name))
      throw ParseError("generator '" + name + "' lacks alpha or alpha_check");
    names.push_back(name);
    alphas.push_back(vector_from_json<DualTag>(j["alpha"][name], dim));
    checks.push_back(vector_from_json<PrimalTag>(j["alpha_check"][name], dim));
  }
  ReflectionData d(dim, std::move(names), std::move(alphas), std::move(checks));
  if (j.contains("imaginary_root")) d.set_imaginary_root(vector_from_json<DualTag>(j["imaginary_root"], dim));
  return d;
}

template <class Tag>
Json to_json(const PolyhedralCone<Tag>& c) {
  Json g = Json::array();
  for (const auto& v : c.generators()) g.push_back(to_json(v));
  return {{"dim", c.dim()}, {"generators", g}};
}

template <class Tag>
PolyhedralCone<Tag> cone_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators")) throw ParseError("cone needs dim and generators");
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<BasicVector<Tag>> g;
  for (const auto& v : j["generators"]) g.push_back(vector_from_json<Tag>(v, dim));
  return PolyhedralCone<Tag>(dim, std::move(g));
}

inline Json word_to_json(const ReflectionData& d, const Word& w) {
  Json a = Json::array();
  for (auto s : w) a.push_back(d.names().at(s));
  return a;
}

inline Json to_json(const ReflectionData& d, const LcsReport& r) {
  Json m = Json::array(), kinds = Json::object(), viol = Json::array();
  for (const auto& row : r.coxeter_matrix) {
    Json jr = Json::array();
    for (auto x : row) jr.push_back(x == 0 ? Json("inf") : Json(x));
    m.push_back(jr);
  }
  for (std::size_t s = 0; s < d.rank(); ++s)
    for (std::size_t t = s + 1; t < d.rank(); ++t)
      kinds[d.names()[s] + "," + d.names()[t]] = to_string(r.pair_kinds[s][t]);
  for (const auto& v : r.violations)
    viol.push_back({{"s", d.names().empty() ? "" : d.names()[v.s]},
                    {"t", d.names().empty() ? "" : d.names()[v.t]},
                    {"reason", v.reason}});
  return {{"valid", r.valid()},         {"C1", r.c1_ok},
          {"C2", r.c2_ok},              {"LCS1", r.lcs1_ok},
          {"LCS2_implied", r.lcs2_implied}, {"dual_pointed", r.dual_pointed},
          {"coxeter_matrix", m},        {"pair_kinds", kinds},
          {"violations", viol}};
}

template <class Tag>
Json to_json(const ReflectionData& d, const OrbitTable<Tag>& o) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < o.size(); ++i)
    pts.push_back({{"point", to_json(o.points[i])}, {"word", word_to_json(d, o.elements[i].word)}});
  return {{"base", to_json(o.base_point)}, {"size", o.size()}, {"truncated", o.truncated},
          {"budget", o.budget},            {"points", pts}};
}

inline Json to_json(const ReflectionData& d, const TitsVerdict& v) {
  Json j{{"status", to_string(v.status)}, {"steps", v.steps}};
  if (v.status == TitsStatus::Yes) {
    j["word"] = word_to_json(d, v.word);
    j["chamber_point"] = to_json(v.chamber_point);
  }
  if (!v.certificate.empty()) j["certificate"] = v.certificate;
  return j;
}

inline Json to_json(const ReflectionData& d, const StabilizerResult& r) {
  Json gens = Json::array(), elems = Json::array();
  for (auto s : r.generators) gens.push_back(d.names()[s]);
  // words of the parabolic subgroup refer to the subsystem's own indices
  for (const auto& g : r.group.elements) {
    Json w = Json::array();
    for (auto k : g.word) w.push_back(d.names()[r.generators[k]]);
    elems.push_back(w);
  }
  return {{"generators", gens}, {"order", r.group.size()}, {"truncated", r.group.truncated}, {"elements", elems}};
}

inline Json to_json(const DualSystem& s) {
  Json lin = Json::array(), basis = Json::array(), tilde = Json::array();
  for (const auto& v : s.lineality) lin.push_back(to_json(v));
  for (const auto& u : s.basis_of_u) basis.push_back(to_json(u));
  for (auto i : s.tilde_s) tilde.push_back(i);
  return {{"system", to_json(s.data)}, {"lineality", lin}, {"basis_of_U", basis}, {"tilde_S_indices", tilde}};
}

template <class Tag>
Json to_json(const ReflectionData& d, const ConvexityReport<Tag>& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back({{"word", word_to_json(d, f.element.word)}, {"point", to_json(f.point)}});
  return {{"base", to_json(r.base)},
          {"cone", to_json(r.cone)},
          {"checked", r.checked},
          {"failures", fails},
          {"truncated", r.truncated},
          {"precondition_met", r.precondition_met},
          {"precondition", r.precondition_note}};
}

inline Json to_json(const AffineWeight& w) { return {{"lc", to_json(w.lc)}, {"bar", to_json(w.bar)}, {"ld", to_json(w.ld)}}; }
inline Json to_json(const AffinePoint& p) { return {{"z", to_json(p.z)}, {"x", to_json(p.x)}, {"t", to_json(p.t)}}; }

inline Json to_json(const AffineRoot& r) { return {{"alpha", to_json(r.alpha)}, {"level", r.level}}; }

inline Json to_json(const MinimizeResult& r) {
  Json j{{"status", to_string(r.status)}};
  if (r.status == MinimizeStatus::Optimal) {
    j["min"] = to_json(r.min_value);
    j["argmin"] = to_json(r.argmin);
  } else {
    j["direction"] = to_json(r.direction);
  }
  return j;
}

inline Json to_json(const Example47Report& r) {
  Json wit = Json::array();
  for (std::size_t n = 0; n < r.witnesses.size(); ++n)
    wit.push_back({{"n", n + 1},
                   {"x", to_json(r.witnesses[n])},
                   {"f", to_json(r.values[n])},
                   {"expected", to_json(r.expected[n])}});
  return {{"m", r.m},
          {"weight", to_json(r.weight)},
          {"witnesses", wit},
          {"strictly_decreasing", r.strictly_decreasing},
          {"lower_bound", to_json(r.lower_bound)},
          {"truncated_minimum", to_json(r.truncated_min)}};
}

}  // namespace coxconv
