#pragma once

// The verification suites. Each check returns a pass flag plus a JSON detail
// record; the records contain no timings so that runs with the same seed are
// byte-identical.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxconv/json_io.hpp"
#include "coxconv/oracles.hpp"

namespace coxconv::suite {

struct Check {
  int criterion = 0;
  std::string name;
  bool passed = false;
  Json detail;
};

inline Json to_json(const Check& c) {
  return {{"criterion", c.criterion}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}
using coxconv::to_json;

/// Raw 64-bit draws reduced by modulus: the sequence depends only on the seed,
/// not on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }
  Rational rational(long num_bound, long max_den) {
    return ratio(uniform(-num_bound, num_bound), uniform(1, max_den));
  }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 eng_;
};

inline constexpr std::size_t kGroupBudget = 100000;

struct FiniteCase {
  Family family;
  std::size_t rank;
};

inline std::vector<FiniteCase> finite_cases(std::size_t lo, std::size_t hi) {
  std::vector<FiniteCase> out;
  for (auto f : {Family::A, Family::B, Family::C, Family::D, Family::BC})
    for (std::size_t n = lo; n <= hi; ++n) {
      const std::size_t min_rank = (f == Family::A || f == Family::D) ? 2 : 1;
      if (n >= min_rank) out.push_back({f, n});
    }
  return out;
}

inline std::string case_name(const FiniteCase& c) { return std::string(to_string(c.family)) + std::to_string(c.rank); }

inline DenseVector random_vector(std::size_t dim, Rng& rng) {
  DenseVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rng.coin() ? Rational(rng.uniform(-3, 3)) : rng.rational(6, 4);
  return v;
}

inline Covector random_covector(std::size_t dim, Rng& rng) { return random_vector(dim, rng).transpose(); }

/// A random point of K for a finite group: random vector moved into K.
inline DenseVector random_chamber_point(const ReflectionData& d, Rng& rng) {
  const auto verdict = tits_cone_member(d, random_vector(d.dim(), rng), kDefaultTitsCap);
  if (verdict.status != TitsStatus::Yes) throw Error("random_chamber_point: descent did not terminate");
  return verdict.chamber_point;
}

inline Covector random_dual_chamber_point(const ReflectionData& d, Rng& rng) {
  const auto r = dual_tits_descent(d, random_covector(d.dim(), rng), kDefaultTitsCap);
  if (!r) throw Error("random_dual_chamber_point: descent did not terminate");
  return r->chamber_point;
}

/// Integer points of the box [-R, R]^dim, in lexicographic order.
inline std::vector<DenseVector> box_points(std::size_t dim, long R) {
  std::vector<DenseVector> out;
  std::vector<long> cur(dim, -R);
  for (;;) {
    DenseVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = cur[i];
    out.push_back(std::move(v));
    std::size_t i = dim;
    while (i > 0 && cur[i - 1] == R) cur[--i] = -R;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linear Coxeter system validation

inline Check lcs_finite() {
  Check c{1, "lcs_finite", true, Json::object()};
  Json bad = Json::array();
  std::size_t n = 0;
  for (const auto& fc : finite_cases(2, 4)) {
    ++n;
    if (!check_lcs(build_root_system(fc.family, fc.rank).data).valid()) bad.push_back(case_name(fc));
  }
  c.passed = bad.empty();
  c.detail = {{"systems", n}, {"invalid", bad}};
  return c;
}

inline Check lcs_affine() {
  Check c{1, "lcs_affine", true, Json::object()};
  Json bad = Json::array();
  std::size_t n = 0;
  for (auto t : kAllAffineTypes)
    for (std::size_t k = 2; k <= 4; ++k) {
      ++n;
      if (!check_lcs(affine_reflection_data(t, k)).valid())
        bad.push_back(std::string(to_string(t)) + "/" + std::to_string(k));
    }
  c.passed = bad.empty();
  c.detail = {{"systems", n}, {"invalid", bad}};
  return c;
}

inline Check lcs_rank_two() {
  Check c{1, "lcs_rank_two", true, Json::object()};
  const auto a = check_lcs(rank_two_system(2));
  const auto b = check_lcs(rank_two_system(3));
  const std::string ka = to_string(a.pair_kinds[0][1]);
  const std::string kb = to_string(b.pair_kinds[0][1]);
  c.passed = a.valid() && b.valid() && ka == "affine" && kb == "hyperbolic";
  c.detail = {{"a2_valid", a.valid()}, {"a2_pair", ka}, {"a3_valid", b.valid()}, {"a3_pair", kb}};
  return c;
}

// ---------------------------------------------------------------------------
// Group orders

inline Check group_orders() {
  Check c{2, "group_orders", true, Json::array()};
  const std::vector<FiniteCase> cases{{Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3},
                                      {Family::B, 4}, {Family::D, 2}, {Family::D, 3}, {Family::D, 4}};
  for (const auto& fc : cases) {
    const auto g = enumerate_group(build_root_system(fc.family, fc.rank).data, kGroupBudget);
    const Integer expected = weyl_group_order(fc.family, fc.rank);
    const bool ok = !g.truncated && Integer(static_cast<unsigned long>(g.size())) == expected;
    c.passed = c.passed && ok;
    c.detail.push_back({{"system", case_name(fc)}, {"order", g.size()}, {"expected", expected.get_str()}, {"ok", ok}});
  }
  return c;
}

// ---------------------------------------------------------------------------
// Descent dichotomy

inline Check descent_dichotomy() {
  Check c{3, "descent_dichotomy", true, Json::array()};
  for (const FiniteCase fc : {FiniteCase{Family::A, 3}, FiniteCase{Family::B, 3}}) {
    const auto d = build_root_system(fc.family, fc.rank).data;
    const auto group = enumerate_group(d, kGroupBudget);
    const VectorCone cs = d.coroot_cone();
    const CovectorCone cs_check = d.root_cone();
    std::size_t pairs = 0, violations = 0;
    for (const auto& g : group.elements)
      for (std::size_t s = 0; s < d.rank(); ++s) {
        ++pairs;
        const auto h = group.find(g.times_generator(d, s).matrix);
        const bool longer = h && group.elements[*h].length() > g.length();
        const bool coroot_pos = cs.contains(g.apply(d.alpha_check(s)));
        const bool root_pos = cs_check.contains(g.apply_dual(d.alpha(s)));
        const bool test_ascent = descent_test(d, g, s) == Descent::Ascent;
        if (!h || longer != coroot_pos || longer != root_pos || longer != test_ascent) ++violations;
      }
    c.passed = c.passed && violations == 0 && !group.truncated;
    c.detail.push_back({{"system", case_name(fc)}, {"pairs", pairs}, {"violations", violations}});
  }
  return c;
}

// ---------------------------------------------------------------------------
// Orbit containment in both spaces

inline Check convexity_finite(Rng& rng, std::size_t samples = 50) {
  Check c{4, "convexity_finite", true, Json::array()};
  for (const auto& fc : finite_cases(1, 3)) {
    const auto d = build_root_system(fc.family, fc.rank).data;
    std::size_t checked = 0, failures = 0, bad = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const auto rp = verify_primal(d, random_chamber_point(d, rng), kGroupBudget);
      const auto rd = verify_dual(d, random_dual_chamber_point(d, rng), kGroupBudget);
      checked += rp.checked + rd.checked;
      failures += rp.failures.size() + rd.failures.size();
      if (rp.truncated || rd.truncated || !rp.precondition_met || !rd.precondition_met) ++bad;
    }
    c.passed = c.passed && failures == 0 && bad == 0;
    c.detail.push_back(
        {{"system", case_name(fc)}, {"orbit_points", checked}, {"failures", failures}, {"incomplete", bad}});
  }
  return c;
}

/// Affine rank two data with orbit and root levels <= 3. The dual chamber is
/// the W-fixed line through alpha_s + alpha_t.
inline Check convexity_rank_two_affine(Rng& rng, std::size_t samples = 50) {
  Check c{4, "convexity_rank_two_affine", true, Json::object()};
  const auto d = rank_two_system(2);
  std::size_t checked = 0, failures = 0, unmet = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const DenseVector v{ratio(rng.uniform(1, 12), rng.uniform(1, 4)),
                        ratio(rng.uniform(1, 12), rng.uniform(1, 4))};
    const auto rp = verify_primal(d, v, 7, 3);
    const Rational k = ratio(rng.uniform(0, 12), rng.uniform(1, 4));
    const auto rd = verify_dual(d, Covector{k, k}, 7, 3);
    checked += rp.checked + rd.checked;
    failures += rp.failures.size() + rd.failures.size();
    if (!rp.precondition_met || !rd.precondition_met) ++unmet;
  }
  c.passed = failures == 0 && unmet == 0;
  c.detail = {{"samples", samples}, {"orbit_points", checked}, {"failures", failures}, {"precondition_unmet", unmet}};
  return c;
}

// ---------------------------------------------------------------------------
// Hyperbolic rank two negative control

inline Check negative_control() {
  Check c{5, "negative_control", true, Json::object()};
  const auto d = rank_two_system(3);
  const DenseVector& as = d.alpha_check(0);
  const DenseVector& at = d.alpha_check(1);
  const auto rep = verify_primal(d, as, 7, 3);
  const DenseVector st = element_from_word(d, {0, 1}).apply(as);
  const DenseVector ts = element_from_word(d, {1, 0}).apply(as);
  const bool st_ok = st == Rational(8) * as + Rational(3) * at;
  const bool ts_ok = ts == -as - Rational(3) * at;
  const bool mean_ok = Rational(1, 2) * (st + ts) == Rational(7, 2) * as;
  c.passed = !rep.failures.empty() && st_ok && ts_ok && mean_ok;
  c.detail = {{"failures", rep.failures.size()},
              {"precondition", rep.precondition_note},
              {"rs_rt", to_json(st)},
              {"rt_rs", to_json(ts)},
              {"rs_rt_identity", st_ok},
              {"rt_rs_identity", ts_ok},
              {"midpoint_identity", mean_ok}};
  return c;
}

// ---------------------------------------------------------------------------
// Cone of differences and minimizing functionals

inline Check difference_cones(Rng& rng, std::size_t per_system = 3) {
  Check c{6, "difference_cones", true, Json::array()};
  for (const auto& fc : finite_cases(2, 4)) {
    const auto d = build_root_system(fc.family, fc.rank).data;
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < per_system; ++i) {
      const auto v = random_chamber_point(d, rng);
      const auto diff = cone_of_differences(d, v, kGroupBudget);
      const auto cv = cone_Cv(d, v);
      if (diff.truncated || cv.truncated || !diff.cone.equals_as_set(cv.cone.negated())) ++mismatches;
    }
    c.passed = c.passed && mismatches == 0;
    c.detail.push_back({{"system", case_name(fc)}, {"points", per_system}, {"mismatches", mismatches}});
  }
  return c;
}

inline Check minimizing_agreement(Rng& rng, std::size_t pairs = 100) {
  Check c{6, "minimizing_agreement", true, Json::object()};
  const auto cases = finite_cases(1, 3);
  std::size_t agree = 0, minimizing = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto& fc = cases[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cases.size()) - 1))];
    const auto d = build_root_system(fc.family, fc.rank).data;
    const auto v = random_chamber_point(d, rng);
    const Covector lambda = rng.coin() ? Covector(-random_dual_chamber_point(d, rng)) : random_covector(d.dim(), rng);
    const bool claim = is_minimizing(d, lambda, v);
    const bool truth = pair(lambda, v) == orbit_minimum(d, lambda, v, kGroupBudget);
    if (claim == truth) ++agree;
    if (truth) ++minimizing;
  }
  c.passed = agree == pairs;
  c.detail = {{"pairs", pairs}, {"agree", agree}, {"minimizing", minimizing}};
  return c;
}

// ---------------------------------------------------------------------------
// Stabilizers and maximizer sets

namespace detail {

inline std::set<std::vector<std::string>> matrix_keys(const std::vector<const Matrix*>& ms) {
  std::set<std::vector<std::string>> out;
  for (const auto* m : ms) {
    std::vector<std::string> k;
    for (const auto& q : m->data()) k.push_back(q.get_str());
    out.insert(std::move(k));
  }
  return out;
}

/// One chamber point per pattern of vanishing simple roots, from a small box.
template <class Tag, class Pairing>
std::vector<BasicVector<Tag>> wall_representatives(const ReflectionData& d, Pairing zero_pattern) {
  std::set<std::vector<bool>> seen;
  std::vector<BasicVector<Tag>> out;
  for (const auto& p : box_points(d.dim(), 2)) {
    BasicVector<Tag> x(std::vector<Rational>(p.entries().begin(), p.entries().end()));
    auto pattern = zero_pattern(x);
    if (!pattern) continue;
    if (seen.insert(*pattern).second) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail

inline Check stabilizers() {
  Check c{7, "stabilizers", true, Json::array()};
  for (const FiniteCase fc : {FiniteCase{Family::B, 2}, FiniteCase{Family::A, 3}}) {
    const auto d = build_root_system(fc.family, fc.rank).data;
    const auto group = enumerate_group(d, kGroupBudget);
    std::size_t primal = 0, dual = 0, mismatches = 0;

    auto primal_pattern = [&](const DenseVector& v) -> std::optional<std::vector<bool>> {
      if (!in_chamber(d, v)) return std::nullopt;
      std::vector<bool> z;
      for (const auto& a : d.alphas()) z.push_back(pair(a, v) == 0);
      return z;
    };
    for (const auto& v : detail::wall_representatives<PrimalTag>(d, primal_pattern)) {
      ++primal;
      std::vector<const Matrix*> fix, para;
      for (const auto& g : group.elements)
        if (g.apply(v) == v) fix.push_back(&g.matrix);
      const auto st = stabilizer(d, v, kGroupBudget);
      for (const auto& g : st.group.elements) para.push_back(&g.matrix);
      if (detail::matrix_keys(fix) != detail::matrix_keys(para)) ++mismatches;
    }

    auto dual_pattern = [&](const Covector& f) -> std::optional<std::vector<bool>> {
      if (!in_dual_chamber(d, f)) return std::nullopt;
      std::vector<bool> z;
      for (const auto& a : d.alpha_checks()) z.push_back(pair(f, a) == 0);
      return z;
    };
    for (const auto& f : detail::wall_representatives<DualTag>(d, dual_pattern)) {
      ++dual;
      std::vector<const Matrix*> fix, para;
      for (const auto& g : group.elements)
        if (g.apply_dual(f) == f) fix.push_back(&g.matrix);
      const auto st = stabilizer_dual(d, f, kGroupBudget);
      for (const auto& g : st.group.elements) para.push_back(&g.matrix);
      if (detail::matrix_keys(fix) != detail::matrix_keys(para)) ++mismatches;
    }
    c.passed = c.passed && mismatches == 0 && primal == (std::size_t{1} << d.rank()) &&
               dual == (std::size_t{1} << d.rank());
    c.detail.push_back(
        {{"system", case_name(fc)}, {"primal_points", primal}, {"dual_points", dual}, {"mismatches", mismatches}});
  }

  // maximizer sets on B2 with lambda on each wall
  const auto d = build_root_system(Family::B, 2).data;
  std::size_t cases = 0, bad = 0;
  const Covector walls[] = {Covector{1, 1}, Covector{1, 0}};  // lambda(check s1) = 0, lambda(check s2) = 0
  const DenseVector points[] = {DenseVector{2, 1}, DenseVector{1, 1}, DenseVector{1, 0}, DenseVector{3, 1}};
  for (const auto& lambda : walls)
    for (const auto& v : points) {
      ++cases;
      const auto r = maximizer_set(d, lambda, v, kGroupBudget);
      bool regular = true;
      for (const auto& a : d.alphas())
        if (pair(a, v) == 0) regular = false;
      if (!r.equals_stabilizer_orbit || !r.dual_condition || (regular && r.maximizers.size() != 2)) ++bad;
    }
  c.passed = c.passed && bad == 0;
  c.detail.push_back({{"system", "B2"}, {"maximizer_cases", cases}, {"violations", bad}});
  return c;
}

// ---------------------------------------------------------------------------
// Translation lattices

inline Check lattices() {
  Check c{8, "lattices", true, Json::array()};
  constexpr long R = 3;
  for (auto t : kAllAffineTypes) {
    std::size_t mismatches = 0, points = 0;
    for (std::size_t k = 2; k <= 4; ++k) {
      std::vector<std::size_t> J(k);
      for (std::size_t i = 0; i < k; ++i) J[i] = i + 1;
      const auto closure = oracle::closure_in_box(translation_generators(t, J), J, R);
      for (const auto& p : box_points(k, R)) {
        ++points;
        std::vector<long> key;
        for (const auto& q : p.entries()) key.push_back(q.get_num().get_si());
        if ((closure.count(key) != 0) != lattice_contains(lattice(t), sparsify(p, 1))) ++mismatches;
      }
    }
    c.passed = c.passed && mismatches == 0;
    c.detail.push_back({{"type", to_string(t)},
                        {"lattice", to_string(lattice(t))},
                        {"box_points", points},
                        {"mismatches", mismatches}});
  }
  return c;
}

// ---------------------------------------------------------------------------
// d-minimality, closed form against the root-by-root test

inline AffineWeight random_weight(Rng& rng, std::size_t max_support, long ratio_bound) {
  AffineWeight w;
  w.lc = ratio(rng.uniform(1, 6), rng.uniform(1, 3));
  const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_support)));
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_support) + 2));
    const long den = rng.uniform(1, 4);
    w.bar.set(j, w.lc * ratio(rng.uniform(-ratio_bound * den, ratio_bound * den), den));
  }
  w.ld = rng.rational(5, 3);
  return w;
}

inline Check dmin_agreement(Rng& rng, std::size_t samples = 1000) {
  Check c{9, "dmin_agreement", true, Json::array()};
  for (auto t : kAllAffineTypes) {
    std::size_t agree = 0, minimal = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const auto w = random_weight(rng, 5, 2);
      const bool a = is_d_minimal_closed_form(t, w);
      if (a == is_d_minimal_generic(t, w)) ++agree;
      if (a) ++minimal;
    }
    c.passed = c.passed && agree == samples;
    c.detail.push_back({{"type", to_string(t)}, {"samples", samples}, {"agree", agree}, {"minimal", minimal}});
  }
  struct Fixed {
    AffineType t;
    AffineWeight w;
    bool expected;
  };
  const std::vector<Fixed> fixed{
      {AffineType::A1, {1, SparseVector{{1, 1}}, 0}, true},
      {AffineType::C1, {2, SparseVector{{1, Rational(11, 10)}}, 0}, false},
      {AffineType::B2, {1, SparseVector{{1, 1}}, 0}, true},
      {AffineType::BC2, {1, SparseVector{{1, Rational(1, 2)}}, 0}, true},
      {AffineType::B1, {1, SparseVector{{1, Rational(1, 2)}, {2, Rational(-1, 2)}}, 0}, true},
      {AffineType::D1, {1, SparseVector{{1, Rational(1, 2)}, {2, Rational(3, 5)}}, 0}, false},
      {AffineType::C2, {1, SparseVector{}, 0}, true},
  };
  std::size_t fixed_ok = 0;
  for (const auto& f : fixed)
    if (is_d_minimal_closed_form(f.t, f.w) == f.expected && is_d_minimal_generic(f.t, f.w) == f.expected) ++fixed_ok;
  c.passed = c.passed && fixed_ok == fixed.size();
  c.detail.push_back({{"fixed_examples", fixed.size()}, {"fixed_ok", fixed_ok}});
  return c;
}

// ---------------------------------------------------------------------------
// minimize_d against brute force

inline Check minimize_agreement(Rng& rng, std::size_t samples = 200) {
  Check c{10, "minimize_agreement", true, Json::array()};
  for (auto t : kAllAffineTypes) {
    std::size_t agree = 0, consistent = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const auto w = random_weight(rng, 4, 2);
      const auto r = minimize_d(t, w);
      const Rational brute = oracle::brute_minimize(t, w, oracle::box_radius(w));
      if (r.status == MinimizeStatus::Optimal && r.min_value == brute) ++agree;
      if (is_d_minimal_closed_form(t, w) == (r.min_value == w.ld)) ++consistent;
    }
    c.passed = c.passed && agree == samples && consistent == samples;
    c.detail.push_back(
        {{"type", to_string(t)}, {"samples", samples}, {"agree", agree}, {"dmin_consistent", consistent}});
  }
  return c;
}

// ---------------------------------------------------------------------------
// Bounded orbit values without a minimum

inline Check example47_check() {
  Check c{11, "example47", true, Json::object()};
  const auto rep = example_47(8);
  bool values_ok = true;
  Rational partial = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    partial += Rational(1, static_cast<unsigned long>(n * n));
    if (rep.values[n - 1] != -partial) values_ok = false;
  }
  const Rational bound = -2 * (partial + Rational(1, 8));
  const bool bound_ok = rep.lower_bound >= bound && rep.lower_bound <= rep.truncated_min.min_value &&
                        rep.lower_bound <= rep.values.back();
  Json trunc = Json::array();
  bool trunc_ok = true;
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto w = example_47_weight(m);
    const auto r = minimize_d(AffineType::A1, w);
    const Rational brute = oracle::brute_minimize(AffineType::A1, w, oracle::box_radius(w));
    const bool ok = r.status == MinimizeStatus::Optimal && r.min_value == brute;
    trunc_ok = trunc_ok && ok;
    trunc.push_back({{"m", m}, {"min", to_json(r.min_value)}, {"brute", to_json(brute)}, {"ok", ok}});
  }
  c.passed = values_ok && rep.strictly_decreasing && bound_ok && trunc_ok;
  c.detail = {{"values_ok", values_ok},
              {"strictly_decreasing", rep.strictly_decreasing},
              {"lower_bound", to_json(rep.lower_bound)},
              {"lower_bound_ok", bound_ok},
              {"truncated_minima", trunc}};
  return c;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"finite", "affine", "examples"};
  return names;
}

inline std::vector<Check> run_checks(const std::string& name, std::uint64_t seed) {
  auto rng = [&](int k) { return Rng(seed * 1000003ULL + static_cast<std::uint64_t>(k)); };
  std::vector<Check> out;
  if (name == "finite") {
    out.push_back(lcs_finite());
    out.push_back(group_orders());
    out.push_back(descent_dichotomy());
    auto r4 = rng(4);
    out.push_back(convexity_finite(r4));
    auto r6 = rng(6), r6b = rng(60);
    out.push_back(difference_cones(r6));
    out.push_back(minimizing_agreement(r6b));
    out.push_back(stabilizers());
  } else if (name == "affine") {
    out.push_back(lcs_affine());
    out.push_back(lattices());
    auto r9 = rng(9);
    out.push_back(dmin_agreement(r9));
    auto r10 = rng(10);
    out.push_back(minimize_agreement(r10));
    out.push_back(example47_check());
  } else if (name == "examples") {
    out.push_back(lcs_rank_two());
    auto r4 = rng(40);
    out.push_back(convexity_rank_two_affine(r4));
    out.push_back(negative_control());
  } else {
    throw Error("unknown suite '" + name + "'");
  }
  return out;
}

inline Json run_suite(const std::string& name, std::uint64_t seed) {
  const auto checks = run_checks(name, seed);
  Json arr = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back(to_json(c));
    all = all && c.passed;
  }
  return {{"suite", name}, {"seed", seed}, {"passed", all}, {"checks", arr}};
}

}  // namespace coxconv::suite
