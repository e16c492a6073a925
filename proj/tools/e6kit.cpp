// e6kit command-line front end: verify | fixed | kac | classify.
//
// Exit codes: 0 success, 1 invariant failure, 2 configuration error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "e6kit/e6kit.hpp"

namespace {

using namespace e6kit;

constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kConfigError = 2;

struct RunConfig {
  std::string field = "Fp:7";
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  bool json = false;
};

bool is_config_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidFieldSpec:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NonArithmeticField:
    case ErrorCode::ParseError:
    case ErrorCode::ArityMismatch:
    case ErrorCode::ModelMismatch:
    case ErrorCode::ZeroParameter:
    case ErrorCode::NotOrderTwo:
    case ErrorCode::UnrecognizedType:
      return true;
    default:
      return false;
  }
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  SuiteConfig sc{FieldSpec::parse(cfg.field), cfg.seed, cfg.samples};
  auto reports = run_suites(suite, sc);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.pass();
    if (cfg.json) {
      arr.push_back(r.to_json());
    } else {
      std::cout << r.to_text();
    }
  }
  if (cfg.json) std::cout << Json{{"pass", ok}, {"suites", arr}}.dump(2) << "\n";
  return ok ? kOk : kInvariantFailure;
}

std::string albert_fixed_shape(std::size_t dim) {
  switch (dim) {
    case 27: return "J";
    case 11: return "J^s";
    case 15: return "J^t";
    default: return "other";
  }
}

int cmd_fixed(const RunConfig& cfg, const std::string& descriptor, const std::string& space_name) {
  if (space_name != "J" && space_name != "B") fail(ErrorCode::InvalidArgument, "space must be J or B");
  const Space space = space_name == "J" ? Space::J : Space::B;
  InvolutionCatalog cat(FieldSpec::parse(cfg.field));
  LinMap phi = cat.realize(descriptor, space);
  if (!phi.squares_to_identity()) fail(ErrorCode::NotOrderTwo, "'" + descriptor + "' does not have order dividing 2");
  FixedReport r;
  std::string shape;
  if (space == Space::J) {
    bool tits = cat.uses_tits(parse_descriptor(cat.field(), descriptor));
    r = fixed_subalgebra(tits ? cat.tits() : cat.hermitian(), phi);
    shape = albert_fixed_shape(r.dimension);
  } else {
    const BrownAlgebra& B = cat.brown(cat.uses_tits(parse_descriptor(cat.field(), descriptor)));
    r = fixed_subalgebra(B, phi);
    shape = brown_fixed_shape(B, r.basis);
  }
  if (cfg.json) {
    Json out{{"descriptor", descriptor}, {"space", space_name}, {"field", cfg.field}, {"dimension", r.dimension},
             {"closed", r.closed}, {"shape", shape}};
    if (space == Space::B) out["binv_closed"] = r.binv_closed;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "descriptor " << descriptor << " on " << space_name << " over " << cfg.field << "\n"
              << "  dimension: " << r.dimension << "\n"
              << "  closed: " << (r.closed ? "yes" : "no") << "\n";
    if (space == Space::B) std::cout << "  binv closed: " << (r.binv_closed ? "yes" : "no") << "\n";
    std::cout << "  shape: " << shape << "\n";
  }
  return r.closed && r.binv_closed ? kOk : kInvariantFailure;
}

MarkedDiagram load_diagram(const std::string& name) {
  if (name == "e6~" || name == "e6~2") return builtin_diagram(name);
  std::ifstream in(name);
  if (!in) fail(ErrorCode::ParseError, "no built-in diagram or readable file '" + name + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("diagram file: ") + ex.what());
  }
  return diagram_from_json(j);
}

int cmd_kac(const RunConfig& cfg, const std::string& diagram, int m, bool gcd, bool folded, bool orbits) {
  MarkedDiagram d = load_diagram(diagram);
  auto sols = enumerate(d, m, gcd, folded);
  if (orbits) sols = reduce_by_symmetry(d, sols);
  if (cfg.json) {
    Json rows = Json::array();
    for (const auto& s : sols) rows.push_back(to_json(s));
    std::cout << Json{{"diagram", to_json(d)}, {"m", m}, {"gcd", gcd}, {"folded", folded}, {"orbits", orbits},
                      {"count", sols.size()}, {"solutions", rows}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << d.name << " m=" << m << (folded ? " folded" : "") << (gcd ? "" : " no-gcd") << (orbits ? " orbits" : "")
            << ": " << sols.size() << " solution(s)\n";
  for (const auto& s : sols) {
    std::cout << "  (";
    for (std::size_t i = 0; i < s.s.size(); ++i) std::cout << (i ? "," : "") << s.s[i];
    std::cout << ")  " << s.residual_type() << "\n";
  }
  return kOk;
}

int cmd_classify(const RunConfig& cfg, const std::vector<std::string>& args) {
  std::string field = cfg.field, level = "E6";
  if (args.size() == 1) {
    level = args[0];
  } else if (args.size() == 2) {
    field = args[0];
    level = args[1];
  } else if (args.size() > 2) {
    fail(ErrorCode::InvalidArgument, "classify takes [field] level");
  }
  ClassReport r = class_report(FieldSpec::parse(field), parse_level(level));
  if (cfg.json) {
    std::cout << to_json(r).dump(2) << "\n";
    return kOk;
  }
  std::cout << to_string(r.level) << " over " << r.field.to_string() << "\n";
  for (const auto& [kind, c] : r.classes) std::cout << "  " << kind << ": " << c.to_string() << "\n";
  std::cout << "  total: " << r.total.to_string() << "\n  representatives:";
  for (const auto& rep : r.representatives) std::cout << " " << rep;
  std::cout << "\n";
  if (!r.family.empty()) {
    std::cout << "  family:";
    for (const auto& q : r.family) std::cout << " " << q;
    std::cout << " ...\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with octonions, Albert and Brown algebras, and their involutions"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field", cfg.field, "Q, Fp:<p>, R, Kbar or Qp:<p>")->capture_default_str();
  app.add_option("--seed", cfg.seed, "sampler seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "samples per randomized check")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "JSON output");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("suite", suite, "composition, albert, brown, involutions or all")
      ->check(CLI::IsMember({"composition", "albert", "brown", "involutions", "all"}));

  std::string descriptor, space = "B";
  auto* fixed = app.add_subcommand("fixed", "fixed subalgebra of an order-2 map");
  fixed->add_option("descriptor", descriptor, "e.g. s, t, varpi, t.varpi, t:1,1,1,1,-1,1")->required();
  fixed->add_option("--space", space, "J or B")->capture_default_str();

  std::string diagram;
  int m = 0;
  bool gcd = true, folded = false, orbits = false;
  auto* kac = app.add_subcommand("kac", "enumerate Kac coordinates");
  kac->add_option("diagram", diagram, "e6~, e6~2 or a JSON file")->required();
  kac->add_option("m", m, "order")->required();
  kac->add_flag("--gcd,!--no-gcd", gcd, "keep only tuples with gcd 1 (default)");
  kac->add_flag("--folded", folded, "twisted mode on the folded diagram");
  kac->add_flag("--orbits", orbits, "one row per diagram-symmetry orbit");

  std::vector<std::string> classify_args;
  auto* classify = app.add_subcommand("classify", "class counts of k-involutions");
  classify->add_option("args", classify_args, "[field] level (G2, F4, E6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*verify) return cmd_verify(cfg, suite);
    if (*fixed) return cmd_fixed(cfg, descriptor, space);
    if (*kac) return cmd_kac(cfg, diagram, m, gcd, folded, orbits);
    if (*classify) return cmd_classify(cfg, classify_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_config_error(e.code()) ? kConfigError : kInvariantFailure;
  }
  return kConfigError;
}
