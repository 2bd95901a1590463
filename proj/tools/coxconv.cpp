// coxconv: command line front end.
//
// Exit codes: 0 success / verified / true, 1 violated / false,
// 2 unknown or truncated, 64 malformed input.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "coxconv/coxconv.hpp"
#include "coxconv/suites.hpp"

namespace {

using coxconv::Json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUnknown = 2;
constexpr int kBadInput = 64;

/// A file path, or an inline JSON literal when the argument starts like one.
Json load_json(const std::string& arg) {
  std::string text;
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[' || arg[first] == '"')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw coxconv::ParseError("cannot read '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw coxconv::ParseError("invalid JSON in '" + arg + "': " + e.what());
  }
}

std::size_t env_budget(std::size_t fallback) {
  if (const char* v = std::getenv("COXCONV_BUDGET")) {
    try {
      const auto n = std::stoull(v);
      if (n > 0) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
    throw coxconv::ParseError(std::string("COXCONV_BUDGET must be a positive integer, got '") + v + "'");
  }
  return fallback;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct PointArgs {
  std::string vector;
  std::string covector;
  void add_to(CLI::App* cmd) {
    auto* v = cmd->add_option("--vector", vector, "point of V (file or inline JSON array)");
    auto* c = cmd->add_option("--covector", covector, "point of V* (file or inline JSON array)");
    v->excludes(c);
  }
  bool dual() const { return !covector.empty(); }
  const std::string& source() const { return dual() ? covector : vector; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for linear Coxeter systems, their orbits and convexity properties"};
  app.footer(
      "Exit codes: 0 success/verified, 1 violated/false, 2 unknown/truncated, 64 malformed input.\n"
      "Arguments naming JSON inputs accept a file path or an inline JSON literal.\n"
      "COXCONV_BUDGET overrides the default orbit/group budget (explicit options take precedence).");
  app.require_subcommand(1);
  int exit_code = kOk;

  // lcs check
  auto* lcs = app.add_subcommand("lcs", "linear Coxeter system validation");
  lcs->require_subcommand(1);
  std::string lcs_system;
  auto* lcs_check = lcs->add_subcommand("check", "check (C1), (C2), (LCS1); exit 0 iff valid");
  lcs_check->add_option("system", lcs_system, "reflection data JSON")->required();
  lcs_check->callback([&] {
    const auto d = coxconv::system_from_json(load_json(lcs_system));
    const auto rep = coxconv::check_lcs(d);
    emit(coxconv::to_json(d, rep));
    exit_code = rep.valid() ? kOk : kFalse;
  });

  // rootsys build
  auto* rootsys = app.add_subcommand("rootsys", "finite root systems A, B, C, D, BC");
  rootsys->require_subcommand(1);
  std::string rs_family, rs_out;
  std::size_t rs_rank = 0;
  auto* rs_build = rootsys->add_subcommand("build", "emit the reflection data of a finite root system");
  rs_build->add_option("--family", rs_family, "A, B, C, D or BC")->required();
  rs_build->add_option("--rank", rs_rank, "number of simple roots")->required();
  rs_build->add_option("--out", rs_out, "write to this file instead of stdout");
  rs_build->callback([&] {
    const auto sys = coxconv::build_root_system(coxconv::parse_family(rs_family), rs_rank);
    const Json j = coxconv::to_json(sys.data);
    if (rs_out.empty()) {
      emit(j);
    } else {
      std::ofstream out(rs_out);
      if (!out) throw coxconv::Error("cannot write '" + rs_out + "'");
      out << j.dump(2) << '\n';
    }
  });

  // orbit enumerate
  auto* orbit = app.add_subcommand("orbit", "orbit enumeration");
  orbit->require_subcommand(1);
  std::string orbit_system;
  PointArgs orbit_point;
  std::optional<std::size_t> orbit_budget;
  auto* orbit_enum = orbit->add_subcommand("enumerate", "breadth-first orbit; exit 2 if truncated");
  orbit_enum->add_option("system", orbit_system, "reflection data JSON")->required();
  orbit_point.add_to(orbit_enum);
  orbit_enum->add_option("--budget", orbit_budget, "maximal number of orbit points");
  orbit_enum->callback([&] {
    const auto d = coxconv::system_from_json(load_json(orbit_system));
    const std::size_t budget = orbit_budget ? *orbit_budget : env_budget(coxconv::kDefaultOrbitBudget);
    const Json x = load_json(orbit_point.source());
    bool truncated = false;
    if (orbit_point.dual()) {
      const auto o = coxconv::enumerate_orbit(d, coxconv::vector_from_json<coxconv::DualTag>(x, d.dim()), budget);
      emit(coxconv::to_json(d, o));
      truncated = o.truncated;
    } else {
      const auto o = coxconv::enumerate_orbit(d, coxconv::vector_from_json<coxconv::PrimalTag>(x, d.dim()), budget);
      emit(coxconv::to_json(d, o));
      truncated = o.truncated;
    }
    exit_code = truncated ? kUnknown : kOk;
  });

  // titscone test
  auto* tits = app.add_subcommand("titscone", "Tits cone membership");
  tits->require_subcommand(1);
  std::string tits_system, tits_vector;
  std::size_t tits_cap = coxconv::kDefaultTitsCap;
  auto* tits_test = tits->add_subcommand("test", "descent test; exit 0 YES, 1 NO_PROOF, 2 UNKNOWN");
  tits_test->add_option("system", tits_system, "reflection data JSON")->required();
  tits_test->add_option("--vector", tits_vector, "point of V")->required();
  tits_test->add_option("--cap", tits_cap, "maximal number of descent steps");
  tits_test->callback([&] {
    const auto d = coxconv::system_from_json(load_json(tits_system));
    const auto v = coxconv::vector_from_json<coxconv::PrimalTag>(load_json(tits_vector), d.dim());
    const auto verdict = coxconv::tits_cone_member(d, v, tits_cap);
    emit(coxconv::to_json(d, verdict));
    exit_code = verdict.status == coxconv::TitsStatus::Yes       ? kOk
                : verdict.status == coxconv::TitsStatus::NoProof ? kFalse
                                                                 : kUnknown;
  });

  // stabilizer
  auto* stab = app.add_subcommand("stabilizer", "stabilizer of a chamber point (parabolic subgroup)");
  std::string stab_system;
  PointArgs stab_point;
  std::optional<std::size_t> stab_budget;
  stab->add_option("system", stab_system, "reflection data JSON")->required();
  stab_point.add_to(stab);
  stab->add_option("--budget", stab_budget, "maximal subgroup size");
  stab->callback([&] {
    const auto d = coxconv::system_from_json(load_json(stab_system));
    const std::size_t budget = stab_budget ? *stab_budget : env_budget(coxconv::kDefaultOrbitBudget);
    const Json x = load_json(stab_point.source());
    const auto r = stab_point.dual()
                       ? coxconv::stabilizer_dual(d, coxconv::vector_from_json<coxconv::DualTag>(x, d.dim()), budget)
                       : coxconv::stabilizer(d, coxconv::vector_from_json<coxconv::PrimalTag>(x, d.dim()), budget);
    emit(coxconv::to_json(d, r));
    exit_code = r.group.truncated ? kUnknown : kOk;
  });

  // dual
  auto* dual = app.add_subcommand("dual", "dual reflection data on span(C_S^*)");
  std::string dual_system;
  dual->add_option("system", dual_system, "reflection data JSON")->required();
  dual->callback([&] {
    const auto d = coxconv::system_from_json(load_json(dual_system));
    const auto s = coxconv::build_dual_system(d);
    emit(coxconv::to_json(s));
    exit_code = coxconv::check_lcs(s.data).valid() ? kOk : kFalse;
  });

  // convexity verify
  auto* conv = app.add_subcommand("convexity", "orbit containment checks");
  conv->require_subcommand(1);
  std::string conv_system;
  PointArgs conv_point;
  bool conv_dual = false;
  std::optional<std::size_t> conv_orbit_budget;
  std::size_t conv_root_budget = coxconv::kDefaultRootDepth;
  auto* conv_verify = conv->add_subcommand("verify", "check w x in x - C_x over the orbit; exit 0 iff no failure");
  conv_verify->add_option("system", conv_system, "reflection data JSON")->required();
  conv_point.add_to(conv_verify);
  conv_verify->add_flag("--dual", conv_dual, "treat the input as a point of V*");
  conv_verify->add_option("--orbit-budget", conv_orbit_budget, "maximal number of orbit points");
  conv_verify->add_option("--root-budget", conv_root_budget, "root generation depth");
  conv_verify->callback([&] {
    const auto d = coxconv::system_from_json(load_json(conv_system));
    const std::size_t budget = conv_orbit_budget ? *conv_orbit_budget : env_budget(coxconv::kDefaultOrbitBudget);
    const Json x = load_json(conv_point.source());
    bool ok = false;
    if (conv_point.dual() || conv_dual) {
      const auto rep = coxconv::verify_dual(d, coxconv::vector_from_json<coxconv::DualTag>(x, d.dim()), budget,
                                            conv_root_budget);
      emit(coxconv::to_json(d, rep));
      ok = rep.ok();
    } else {
      const auto rep = coxconv::verify_primal(d, coxconv::vector_from_json<coxconv::PrimalTag>(x, d.dim()), budget,
                                              conv_root_budget);
      emit(coxconv::to_json(d, rep));
      ok = rep.ok();
    }
    exit_code = ok ? kOk : kFalse;
  });

  // affine
  auto* affine = app.add_subcommand("affine", "locally affine root systems at finite support");
  affine->require_subcommand(1);
  std::string a_type, a_lc, a_ld = "0", a_bar = "{}";
  auto weight = [&] {
    return coxconv::AffineWeight{coxconv::parse_rational(a_lc), coxconv::sparse_from_json(load_json(a_bar)),
                                 coxconv::parse_rational(a_ld)};
  };
  auto* a_dmin = affine->add_subcommand("dmin", "d-minimality; exit 0 minimal, 1 not");
  auto* a_min = affine->add_subcommand("minimize", "exact minimum of lambda over the d-orbit; exit 1 if unbounded");
  for (auto* cmd : {a_dmin, a_min}) {
    cmd->add_option("--type", a_type, "A1, B1, C1, D1, B2, C2 or BC2")->required();
    cmd->add_option("--lc", a_lc, "lambda(c) as a rational")->required();
    cmd->add_option("--bar", a_bar, "finite part as a sparse vector JSON {\"index\": \"p/q\"}");
    cmd->add_option("--ld", a_ld, "lambda(d) as a rational");
  }
  a_dmin->callback([&] {
    const auto t = coxconv::parse_affine_type(a_type);
    const auto w = weight();
    const bool closed = coxconv::is_d_minimal_closed_form(t, w);
    Json j{{"type", a_type}, {"weight", coxconv::to_json(w)}, {"d_minimal", closed}};
    if (w.lc > 0) j["generic_check"] = coxconv::is_d_minimal_generic(t, w);
    emit(j);
    exit_code = closed ? kOk : kFalse;
  });
  a_min->callback([&] {
    const auto t = coxconv::parse_affine_type(a_type);
    const auto r = coxconv::minimize_d(t, weight());
    Json j = coxconv::to_json(r);
    j["lattice"] = coxconv::to_string(coxconv::lattice(t));
    emit(j);
    exit_code = r.status == coxconv::MinimizeStatus::Optimal ? kOk : kFalse;
  });
  std::size_t a_m = 1;
  auto* a_ex = affine->add_subcommand("example47", "weight with bounded d-values and no minimum, truncated");
  a_ex->add_option("--m", a_m, "truncation level (indices <= 2m)")->required()->check(CLI::PositiveNumber);
  a_ex->callback([&] { emit(coxconv::to_json(coxconv::example_47(a_m))); });
  std::size_t a_support = 2;
  long a_cap = 1;
  auto* a_roots = affine->add_subcommand("roots", "affine roots over support {1..n} with |level| <= cap");
  a_roots->add_option("--type", a_type, "A1, B1, C1, D1, B2, C2 or BC2")->required();
  a_roots->add_option("--support", a_support, "support size n");
  a_roots->add_option("--level-cap", a_cap, "maximal |level|");
  a_roots->callback([&] {
    const auto t = coxconv::parse_affine_type(a_type);
    std::vector<std::size_t> J(a_support);
    for (std::size_t i = 0; i < a_support; ++i) J[i] = i + 1;
    Json roots = Json::array();
    for (const auto& r : coxconv::affine_roots(t, J, a_cap))
      roots.push_back({{"root", coxconv::to_json(r)}, {"coroot", coxconv::to_json(coxconv::affine_coroot(r))}});
    emit({{"type", a_type}, {"support", a_support}, {"level_cap", a_cap}, {"count", roots.size()}, {"roots", roots}});
  });
  std::size_t a_sys_support = 2;
  auto* a_system = affine->add_subcommand("system", "reflection data of the affine system over support {1..n}");
  a_system->add_option("--type", a_type, "A1, B1, C1, D1, B2, C2 or BC2")->required();
  a_system->add_option("--support", a_sys_support, "support size n >= 2");
  a_system->callback([&] {
    emit(coxconv::to_json(coxconv::affine_reflection_data(coxconv::parse_affine_type(a_type), a_sys_support)));
  });

  // suite
  auto* suite = app.add_subcommand("suite", "run a verification suite; exit 0 iff every check passes");
  std::string suite_name;
  std::uint64_t seed = 1;
  suite->add_option("name", suite_name, "finite, affine or examples")
      ->required()
      ->check(CLI::IsMember(coxconv::suite::suite_names()));
  suite->add_option("--seed", seed, "seed for the randomized checks");
  suite->callback([&] {
    const Json j = coxconv::suite::run_suite(suite_name, seed);
    emit(j);
    exit_code = j["passed"].get<bool>() ? kOk : kFalse;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  } catch (const coxconv::ParseError& e) {
    std::cerr << "coxconv: " << e.what() << '\n';
    return kBadInput;
  } catch (const coxconv::InvalidReflectionData& e) {
    std::cerr << "coxconv: invalid reflection data: " << e.what() << '\n';
    return kBadInput;
  } catch (const coxconv::InvalidBudget& e) {
    std::cerr << "coxconv: " << e.what() << '\n';
    return kBadInput;
  } catch (const coxconv::DimensionMismatch& e) {
    std::cerr << "coxconv: " << e.what() << '\n';
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "coxconv: malformed JSON input: " << e.what() << '\n';
    return kBadInput;
  } catch (const coxconv::TruncatedEnumeration& e) {
    std::cerr << "coxconv: " << e.what() << '\n';
    return kUnknown;
  } catch (const coxconv::Error& e) {
    std::cerr << "coxconv: " << e.what() << '\n';
    return kFalse;
  }
  return exit_code;
}
