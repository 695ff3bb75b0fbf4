#include "steenrodlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "steenrodlab/cyclotomic.hpp"
#include "steenrodlab/error.hpp"
#include "steenrodlab/expression.hpp"
#include "steenrodlab/extraspecial.hpp"
#include "steenrodlab/independence.hpp"
#include "steenrodlab/parallel.hpp"
#include "steenrodlab/relations.hpp"
#include "steenrodlab/steenrod.hpp"
#include "steenrodlab/suite.hpp"
#include "steenrodlab/symplectic.hpp"

namespace steenrodlab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kMaxInvariantDegree = 8;
constexpr std::size_t kMaxThetaDim = 49;

enum class OutputFormat { Json, Text };

struct RunConfig {
  std::uint64_t p = 3;
  std::uint64_t r = 1;
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::Json;
  bool unicode = false;
  std::size_t threads = 0;
  std::uint64_t budget = kDefaultEnumerationCap;

  AlgebraParams params() const { return AlgebraParams::make(p, r); }
  // Element rendering for payloads; JSON always stays parseable ASCII.
  Notation notation() const {
    return output == OutputFormat::Text && unicode ? Notation::Unicode : Notation::Ascii;
  }
};

struct UsageError : std::runtime_error {
  UsageError(std::string code, const std::string& msg) : std::runtime_error(msg), code(std::move(code)) {}
  std::string code;
};

Json header(const std::string& command, const RunConfig& cfg) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["p"] = cfg.p;
  j["r"] = cfg.r;
  return j;
}

Json render_all(const std::vector<GradedElement>& xs, Notation n) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(render(x, n));
  return arr;
}

void print_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (key == "schema") continue;
    if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          out << indent << "  -\n";
          print_text(item, out, indent + "    ");
        } else {
          out << indent << "  - " << item.dump() << "\n";
        }
      }
    } else if (value.is_array()) {
      out << indent << key << ":";
      if (value.empty()) out << " (none)";
      out << "\n";
      for (const auto& item : value) out << indent << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
    } else if (value.is_object()) {
      out << indent << key << ":\n";
      print_text(value, out, indent + "  ");
    } else {
      out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

void emit(const Json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output == OutputFormat::Json) {
    out << j.dump(2) << "\n";
  } else {
    print_text(j, out);
  }
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "odd prime p")->capture_default_str();
  sub->add_option("--r", cfg.r, "rank parameter r")->capture_default_str();
}

// ---------------------------------------------------------------------------

Json cmd_basis(const RunConfig& cfg, std::uint64_t deg, const std::string& space) {
  const auto params = cfg.params();
  std::vector<Monomial> basis;
  if (space == "full") {
    basis = basis_of_degree(params, deg);
  } else if (space == "exterior") {
    basis = exterior_basis_of_degree(params, deg);
  } else {
    throw UsageError("usage", "--space must be full or exterior");
  }
  Json j = header("basis", cfg);
  j["deg"] = deg;
  j["space"] = space;
  j["dim"] = basis.size();
  Json arr = Json::array();
  for (const auto& m : basis) arr.push_back(render(m, params, cfg.notation()));
  j["basis"] = std::move(arr);
  return j;
}

Json cmd_apply(const RunConfig& cfg, const std::string& word_text, const std::string& expr) {
  const auto params = cfg.params();
  const auto word = SteenrodWord::parse(word_text);
  const auto x = parse_expression(expr, params);
  const auto y = apply_word(word, x);
  Json j = header("apply", cfg);
  j["word"] = word.render();
  j["input"] = render(x, cfg.notation());
  j["result"] = render(y, cfg.notation());
  j["degree_shift"] = word.degree_shift(params.p);
  if (const auto d = y.degree()) j["degree"] = *d; else j["degree"] = nullptr;
  return j;
}

Json cmd_yclass(const RunConfig& cfg, std::uint32_t k, bool verify) {
  const auto params = cfg.params();
  const auto y = y_image(params, k);
  Json j = header("yclass", cfg);
  j["k"] = k;
  j["element"] = render(y.element, cfg.notation());
  j["degree"] = y.degree;
  j["chow_degree"] = y.chow_degree;
  if (verify) {
    const auto rep = verify_chain(params, k);
    j["word"] = rep.word.render();
    j["chain_ok"] = rep.ok;
    j["computed"] = render(rep.computed, cfg.notation());
    if (rep.unit_factor) j["unit_factor"] = *rep.unit_factor; else j["unit_factor"] = nullptr;
  }
  return j;
}

Json cmd_invariants(const RunConfig& cfg, std::uint64_t deg, const std::string& space_name, bool certify,
                    bool sweep) {
  const auto params = cfg.params();
  if (deg > kMaxInvariantDegree) {
    throw Error(ErrorCode::Budget, "invariant degree " + std::to_string(deg) + " above the cap " +
                                       std::to_string(kMaxInvariantDegree));
  }
  InvariantSpace space;
  if (space_name == "full") space = InvariantSpace::Full;
  else if (space_name == "exterior") space = InvariantSpace::Exterior;
  else if (space_name == "integral3") space = InvariantSpace::Integral3;
  else throw UsageError("usage", "--space must be full, exterior or integral3");

  Json j = header("invariants", cfg);
  j["deg"] = deg;
  j["space"] = space_name;
  const auto gens = symplectic_generators(params.p, params.r);
  j["generators"] = gens.size();
  if (certify || sweep) {
    const auto cert = certify_generators(params.p, params.r, cfg.budget);
    j["certificate"] = {{"expected_order", cert.expected_order},
                        {"reached_order", cert.reached_order},
                        {"ok", cert.ok()}};
    if (!cert.ok()) {
      throw Error(ErrorCode::Certification, "transvections generate a subgroup of order " +
                                                std::to_string(cert.reached_order) + ", expected " +
                                                std::to_string(cert.expected_order));
    }
  }
  const auto inv = invariant_subspace(params, deg, gens, space);
  j["dim"] = inv.size();
  j["basis"] = render_all(inv, cfg.notation());
  if (sweep) {
    const auto group = enumerate_group(gens, cfg.budget);
    const auto full = invariant_subspace(params, deg, group, space);
    j["sweep"] = {{"group_order", group.size()}, {"dim", full.size()}, {"agrees", full == inv}};
  }
  return j;
}

Json cmd_relations(const RunConfig& cfg, const std::string& pattern_text) {
  const auto params = cfg.params();
  const auto patterns = parse_patterns(pattern_text);
  const auto top = max_class_index(patterns);
  std::vector<GradedElement> ys;
  for (std::size_t k = 0; k <= top.value_or(0); ++k) ys.push_back(y_image(params, static_cast<std::uint32_t>(k)).element);
  const auto res = relation_search(ys, patterns);
  Json j = header("relations", cfg);
  Json pats = Json::array();
  for (const auto& pt : res.patterns) pats.push_back(render_pattern(pt));
  j["patterns"] = std::move(pats);
  j["degree"] = res.degree;
  j["monomials"] = res.monomial_count;
  j["kernel_dim"] = res.kernel_dim;
  Json vecs = Json::array();
  Json rels = Json::array();
  bool residual_zero = true;
  for (const auto& v : res.kernel_vectors) {
    vecs.push_back(v);
    residual_zero = residual_zero && substitute(ys, res.patterns, v).is_zero();
    std::string rel;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!rel.empty()) rel += " + ";
      if (v[i] != 1) rel += std::to_string(v[i]) + "*";
      rel += render_pattern(res.patterns[i]);
    }
    rels.push_back(rel + " = 0");
  }
  j["kernel_vectors"] = std::move(vecs);
  j["relations"] = std::move(rels);
  j["resubstitution_zero"] = residual_zero;
  j["paper_vector_in_kernel"] = res.paper_vector_in_kernel;
  return j;
}

std::vector<GradedElement> read_polys(const std::string& path, AlgebraParams params) {
  std::ifstream in(path);
  if (!in) throw UsageError("io", "cannot open " + path);
  std::vector<GradedElement> polys;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      polys.push_back(parse_expression(line, params));
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what(), lineno, e.column());
    }
  }
  return polys;
}

Json cmd_jacobian(const RunConfig& cfg, const std::string& family, std::uint32_t kmax, const std::string& polys_path,
                  std::size_t points, const std::string& method, bool dickson) {
  const auto params = cfg.params();
  std::vector<GradedElement> polys;
  if (!polys_path.empty()) {
    polys = read_polys(polys_path, params);
    if (polys.empty()) throw UsageError("usage", "no polynomials in " + polys_path);
  } else if (family == "y") {
    for (std::uint32_t k = 0; k <= kmax; ++k) polys.push_back(y_image(params, k).element);
  } else {
    throw UsageError("usage", "give --family y or --polys <file>");
  }
  JacobianOptions opts;
  opts.seed = cfg.seed;
  opts.points = points;
  if (method == "auto") opts.method = RankMethod::Auto;
  else if (method == "symbolic") opts.method = RankMethod::Symbolic;
  else if (method == "evaluation") opts.method = RankMethod::RandomEvaluation;
  else throw UsageError("usage", "--method must be auto, symbolic or evaluation");

  const auto vars = all_variables(params);
  const auto result = certify_independence(polys, vars, opts);
  Json j = header("jacobian", cfg);
  j["polys"] = render_all(polys, cfg.notation());
  Json names = Json::array();
  for (auto v : vars) names.push_back(variable_name(params, v));
  j["vars"] = std::move(names);
  j["m"] = result.m;
  j["n"] = result.n;
  j["rank"] = result.rank;
  j["verdict"] = to_string(result.verdict);
  j["independent"] = result.independent();
  j["caveat"] = "full rank proves independence; a rank deficit proves nothing in characteristic p";
  if (const auto& rep = result.report) {
    Json mat = Json::array();
    for (const auto& row : rep->matrix) mat.push_back(render_all(row, cfg.notation()));
    j["matrix"] = std::move(mat);
    j["certified_by"] = to_string(rep->certified_by);
    if (rep->determinant) j["determinant"] = render(*rep->determinant, cfg.notation());
    if (rep->certified_by == Certification::RandomEvaluation) {
      j["seed"] = rep->seed;
      j["extension_degree"] = rep->extension_degree;
      j["field_modulus"] = rep->field_modulus;
      j["evaluation_points"] = rep->evaluation_points;
      j["point_ranks"] = rep->point_ranks;
    }
  }
  if (dickson) {
    const auto d = dickson_monomial_check(params, cfg.budget);
    j["dickson"] = {{"ok", d.ok},
                    {"distinguished", render(d.distinguished, params, cfg.notation())},
                    {"coefficient", d.coefficient},
                    {"expansion_terms", d.expansion_terms}};
  }
  if (family == "y" && polys_path.empty()) j["closed_form_entries"] = y_jacobian_matches_closed_form(params, kmax);
  return j;
}

Json cmd_group(const RunConfig& cfg, const std::string& element, const std::string& other, bool theta) {
  const ExtraspecialGroup g(cfg.p, cfg.r);
  Json j = header("group", cfg);
  j["order"] = g.order();
  if (g.order() <= cfg.budget) {
    const auto elems = g.elements(cfg.budget);
    std::uint64_t exponent = 1;
    for (const auto& x : elems) exponent = std::max(exponent, g.element_order(x));
    const auto z = center(g, cfg.budget);
    Json zs = Json::array();
    for (const auto& x : z) zs.push_back(g.render(x));
    const auto comm = commutator_subgroup(g, cfg.budget);
    j["enumerated"] = elems.size();
    j["center"] = std::move(zs);
    j["commutator_subgroup_order"] = std::count(comm.begin(), comm.end(), true);
    j["abelianization"] = abelianization(g, cfg.budget).render();
    j["exponent"] = exponent;
    j["quotient_kernel_is_center"] = quotient_kernel(g, cfg.budget) == z;
  } else {
    j["enumerated"] = nullptr;
  }
  if (!element.empty()) {
    const auto x = g.parse(element);
    j["element"] = {{"normal_form", g.render(x)}, {"order", g.element_order(x)}, {"inverse", g.render(g.inverse(x))}};
    if (!other.empty()) {
      const auto y = g.parse(other);
      j["element"]["commutator_with"] = g.render(y);
      j["element"]["commutator"] = g.render(g.commutator(x, y));
    }
    if (theta) {
      std::uint64_t dim = 1;
      for (std::uint64_t k = 0; k < cfg.r; ++k) dim *= cfg.p;
      if (dim > kMaxThetaDim) throw Error(ErrorCode::Budget, "theta matrix of size p^r above 49");
      const auto m = theta_bar(g, x);
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(i, c).render());
        rows.push_back(std::move(row));
      }
      j["element"]["theta"] = std::move(rows);
    }
  }
  if (theta) {
    std::uint64_t dim = 1;
    for (std::uint64_t k = 0; k < cfg.r; ++k) dim *= cfg.p;
    if (dim > kMaxThetaDim) throw Error(ErrorCode::Budget, "theta matrix of size p^r above 49");
    Json checks = Json::array();
    bool all = true;
    for (const auto& c : check_theta_relations(g)) {
      checks.push_back({{"name", c.name}, {"holds", c.holds}});
      all = all && c.holds;
    }
    j["theta_relations"] = std::move(checks);
    j["theta_ok"] = all;
  }
  return j;
}

Json cmd_suite(const RunConfig& cfg, std::size_t cases, bool& all_ok) {
  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.cap = cfg.budget;
  opts.property_cases = cases;
  const auto rep = run_suite(cfg.params(), opts);
  Json j = header("suite", cfg);
  j["seed"] = cfg.seed;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["passed"] = rep.count(CheckStatus::Pass);
  j["failed"] = rep.count(CheckStatus::Fail);
  j["skipped"] = rep.count(CheckStatus::Skipped);
  j["ok"] = rep.ok();
  all_ok = rep.ok();
  return j;
}

void print_suite_text(const Json& j, std::ostream& out) {
  out << "suite p=" << j["p"].get<std::uint64_t>() << " r=" << j["r"].get<std::uint64_t>()
      << " seed=" << j["seed"].get<std::uint64_t>() << "\n";
  for (const auto& c : j["checks"]) {
    std::string status = c["status"].get<std::string>();
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << "[" << status << "] " << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
  }
  out << j["passed"].get<std::size_t>() << " passed, " << j["failed"].get<std::size_t>() << " failed, "
      << j["skipped"].get<std::size_t>() << " skipped\n";
}

void report_error(std::ostream& err, const std::string& code, const std::string& message,
                  const ParseError* parse = nullptr) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["error"] = {{"code", code}, {"message", message}};
  if (parse) {
    j["error"]["line"] = parse->line();
    j["error"]["column"] = parse->column();
  }
  err << j.dump(2) << "\n";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPrime:
    case ErrorCode::Parameter:
    case ErrorCode::Parse:
      return kExitUsage;
    default:
      return kExitComputation;
  }
}

std::uint64_t budget_from_env() {
  const char* env = std::getenv("STEENRODLAB_BUDGET");
  if (!env || !*env) return kDefaultEnumerationCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError("invalid_budget", "STEENRODLAB_BUDGET must be a positive integer");
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kCommands{"basis", "apply", "yclass", "invariants",
                                                  "relations", "jacobian", "group", "suite"};
  RunConfig cfg;
  CLI::App app{"Exact Steenrod operations, symplectic invariants and relations among the y classes"};
  app.name("steenrodlab");
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "json";
  std::optional<std::uint64_t> budget_flag;
  app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--unicode", cfg.unicode, "use ξ/η glyphs in text output");
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)");
  app.add_option("--budget", budget_flag, "enumeration cap (overrides STEENRODLAB_BUDGET)");

  std::function<Json()> action;
  bool suite_ok = true;
  bool is_suite = false;

  std::uint64_t deg = 0;
  std::string space = "full";
  auto* basis = app.add_subcommand("basis", "monomial basis of a degree");
  add_common(basis, cfg);
  basis->add_option("--deg", deg, "degree")->required();
  basis->add_option("--space", space, "full or exterior")->capture_default_str();
  basis->callback([&] { action = [&] { return cmd_basis(cfg, deg, space); }; });

  std::string word, expr;
  auto* apply = app.add_subcommand("apply", "apply a Steenrod word to an element");
  add_common(apply, cfg);
  apply->add_option("--word", word, "e.g. \"b P3 P1\", applied right to left")->required();
  apply->add_option("--expr", expr, "element, e.g. \"a1*b1\"")->required();
  apply->callback([&] { action = [&] { return cmd_apply(cfg, word, expr); }; });

  std::uint32_t k = 0;
  bool verify = false;
  auto* yclass = app.add_subcommand("yclass", "closed form of Y_k");
  add_common(yclass, cfg);
  yclass->add_option("--k", k, "index k")->required();
  yclass->add_flag("--verify-chain", verify, "compare with the Steenrod word evaluation");
  yclass->callback([&] { action = [&] { return cmd_yclass(cfg, k, verify); }; });

  std::string inv_space = "full";
  bool certify = false, sweep = false;
  auto* invariants = app.add_subcommand("invariants", "Sp-invariant subspace of a degree");
  add_common(invariants, cfg);
  invariants->add_option("--deg", deg, "degree")->required();
  invariants->add_option("--space", inv_space, "full, exterior or integral3")->capture_default_str();
  invariants->add_flag("--certify-group", certify, "check that the generators reach |Sp|");
  invariants->add_flag("--sweep", sweep, "also solve against every group element");
  invariants->callback([&] { action = [&] { return cmd_invariants(cfg, deg, inv_space, certify, sweep); }; });

  std::string patterns;
  auto* relations = app.add_subcommand("relations", "linear relations among products of the Y_k");
  add_common(relations, cfg);
  relations->add_option("--patterns", patterns, "e.g. \"Y0^10,Y1^4,Y0^3*Y2\"")->required();
  relations->callback([&] { action = [&] { return cmd_relations(cfg, patterns); }; });

  std::string family, polys_path, method = "auto";
  std::uint32_t kmax = 0;
  std::size_t points = 8;
  bool dickson = false;
  auto* jacobian = app.add_subcommand("jacobian", "Jacobian independence certificate");
  add_common(jacobian, cfg);
  jacobian->add_option("--family", family, "y");
  jacobian->add_option("--kmax", kmax, "largest k in the family")->capture_default_str();
  jacobian->add_option("--polys", polys_path, "file with one polynomial per line");
  jacobian->add_option("--seed", cfg.seed, "evaluation seed")->capture_default_str();
  jacobian->add_option("--points", points, "random evaluation points")->capture_default_str();
  jacobian->add_option("--method", method, "auto, symbolic or evaluation")->capture_default_str();
  jacobian->add_flag("--dickson", dickson, "expand the Moore determinant");
  jacobian->callback(
      [&] { action = [&] { return cmd_jacobian(cfg, family, kmax, polys_path, points, method, dickson); }; });

  std::string element, other;
  bool theta = false;
  auto* group = app.add_subcommand("group", "extraspecial group structure");
  add_common(group, cfg);
  group->add_option("--element", element, "word such as \"e1*f1^2*z\"");
  group->add_option("--commutator-with", other, "second element for a commutator");
  group->add_flag("--theta", theta, "check the representation relations");
  group->callback([&] { action = [&] { return cmd_group(cfg, element, other, theta); }; });

  std::size_t cases = 200;
  auto* suite = app.add_subcommand("suite", "acceptance battery for one (p, r)");
  add_common(suite, cfg);
  suite->add_option("--seed", cfg.seed, "property seed")->capture_default_str();
  suite->add_option("--cases", cases, "random cases per property")->capture_default_str();
  suite->callback([&] {
    is_suite = true;
    action = [&] { return cmd_suite(cfg, cases, suite_ok); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    const bool unknown = !args.empty() && args.front().rfind("-", 0) != 0 &&
                         std::find(kCommands.begin(), kCommands.end(), args.front()) == kCommands.end();
    if (unknown) {
      report_error(err, "unknown_subcommand", "unknown subcommand '" + args.front() + "'");
    } else {
      report_error(err, "usage", e.what());
    }
    return kExitUsage;
  }

  try {
    cfg.output = output == "text" ? OutputFormat::Text : OutputFormat::Json;
    cfg.budget = budget_flag ? *budget_flag : budget_from_env();
    if (cfg.budget == 0) throw UsageError("invalid_budget", "budget must be positive");
    set_worker_threads(cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads);
    const Json result = action();
    if (is_suite && cfg.output == OutputFormat::Text) {
      print_suite_text(result, out);
    } else {
      emit(result, cfg, out);
    }
    return is_suite && !suite_ok ? kExitComputation : kExitOk;
  } catch (const UsageError& e) {
    report_error(err, e.code, e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    report_error(err, std::string(to_string(e.code())), e.what(), &e);
    return kExitUsage;
  } catch (const Error& e) {
    report_error(err, std::string(to_string(e.code())), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kExitComputation;
  }
}

}  // namespace steenrodlab::cli
