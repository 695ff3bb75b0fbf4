#include "steenrodlab/suite.hpp"

#include <algorithm>
#include <functional>

#include "steenrodlab/cyclotomic.hpp"
#include "steenrodlab/error.hpp"
#include "steenrodlab/properties.hpp"
#include "steenrodlab/relations.hpp"
#include "steenrodlab/steenrod.hpp"
#include "steenrodlab/symplectic.hpp"

namespace steenrodlab {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

std::size_t SuiteReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const SuiteCheck& c) { return c.status == s; }));
}

bool spans_exactly(const std::vector<GradedElement>& xs, const GradedElement& target) {
  if (xs.size() != 1 || target.is_zero()) return false;
  for (std::uint32_t u = 1; u < target.p(); ++u)
    if (target.scaled(u) == xs.front()) return true;
  return false;
}

GradedElement symplectic_class(AlgebraParams params) {
  GradedElement s(params);
  for (std::uint32_t i = 1; i <= params.r; ++i) s += GradedElement::a(params, i) * GradedElement::b(params, i);
  return s;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

SuiteCheck verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

SuiteCheck chain_check(AlgebraParams params) {
  std::vector<std::string> parts;
  bool ok = true;
  for (std::uint32_t k = 0; k <= 2; ++k) {
    const auto rep = verify_chain(params, k);
    ok = ok && rep.ok;
    parts.push_back("k=" + std::to_string(k) + (rep.ok ? " ok" : " mismatch"));
  }
  return verdict("steenrod_chain", ok, join(parts));
}

SuiteCheck lambda2_check(AlgebraParams params, std::uint64_t cap) {
  const auto target = symplectic_class(params);
  const auto gens = symplectic_generators(params.p, params.r);
  const auto by_gens = invariant_subspace(params, 2, gens, InvariantSpace::Exterior);
  bool ok = spans_exactly(by_gens, target);
  std::string detail = "generators: dim " + std::to_string(by_gens.size());
  if (symplectic_group_order(params.p, params.r) <= cap) {
    const auto cert = certify_generators(params.p, params.r, cap);
    const auto group = enumerate_group(gens, cap);
    const auto by_sweep = invariant_subspace(params, 2, group, InvariantSpace::Exterior);
    ok = ok && cert.ok() && spans_exactly(by_sweep, target);
    detail += "; full group of order " + std::to_string(cert.reached_order) + ": dim " +
              std::to_string(by_sweep.size());
  } else {
    detail += "; full-group sweep skipped, |Sp| above the enumeration cap";
  }
  return verdict("lambda2_invariants", ok, detail);
}

SuiteCheck h3_check(AlgebraParams params) {
  const auto gens = symplectic_generators(params.p, params.r);
  const auto inv = invariant_subspace(params, 3, gens, InvariantSpace::Integral3);
  return verdict("h3_invariants", spans_exactly(inv, bockstein(symplectic_class(params))),
                 "dim " + std::to_string(inv.size()));
}

SuiteCheck independence_check(AlgebraParams params, std::uint64_t seed, std::uint64_t cap) {
  std::vector<std::string> parts;
  const std::uint32_t k_max = 2 * params.r - 1;
  JacobianOptions opts;
  opts.seed = seed;
  const auto ind = independence_check_y(params, k_max, opts);
  parts.push_back("jacobian rank " + std::to_string(ind.rank) + " of " + std::to_string(ind.m));
  bool ok = ind.independent();
  const bool closed = y_jacobian_matches_closed_form(params, k_max);
  parts.push_back(closed ? "entries match closed form" : "entries differ from closed form");
  ok = ok && closed;
  std::uint64_t fact = 1;
  for (std::uint64_t k = 2; k <= params.num_vars(); ++k) fact *= k;
  if (fact <= cap) {
    const auto d = dickson_monomial_check(params, cap);
    parts.push_back("distinguished coefficient " + std::to_string(d.coefficient));
    ok = ok && d.ok;
  } else {
    parts.push_back("determinant expansion skipped");
  }
  return verdict("algebraic_independence", ok, join(parts));
}

std::vector<GradedElement> y_images(AlgebraParams params, std::uint32_t count) {
  std::vector<GradedElement> ys;
  for (std::uint32_t k = 0; k < count; ++k) ys.push_back(y_image(params, k).element);
  return ys;
}

SuiteCheck relation_check(AlgebraParams params) {
  if (params.r != 1) return {"relation_discovery", CheckStatus::Skipped, "stated for r = 1"};
  const std::uint64_t p = params.p;
  const std::vector<Pattern> patterns{{p * p + 1}, {0, p + 1}, {p, 0, 1}};
  const auto ys = y_images(params, 3);
  const auto res = relation_search(ys, patterns);
  bool ok = res.kernel_dim == 1;
  std::string detail = "kernel_dim " + std::to_string(res.kernel_dim);
  if (ok) {
    const auto& v = res.kernel_vectors.front();
    ok = std::all_of(v.begin(), v.end(), [p](std::uint32_t c) { return c == 1 || c == p - 1; });
    ok = ok && substitute(ys, patterns, v).is_zero();
    detail += "; vector (";
    for (std::size_t j = 0; j < v.size(); ++j) detail += (j ? "," : "") + std::to_string(v[j]);
    detail += ")";
  }
  detail += std::string("; all-ones vector ") + (res.paper_vector_in_kernel ? "in" : "not in") + " kernel";
  return verdict("relation_discovery", ok, detail);
}

SuiteCheck no_lower_relation_check(AlgebraParams params) {
  if (params.r != 1) return {"no_lower_relation", CheckStatus::Skipped, "stated for r = 1"};
  const std::uint64_t p = params.p;
  const auto ys = y_images(params, 2);
  const std::vector<std::uint64_t> weights{p + 1, p * p + 1};
  const std::uint64_t top = (p + 1) * (p * p + 1);
  std::size_t degrees = 0;
  bool ok = true;
  for (std::uint64_t d = 1; d <= top; ++d) {
    const auto patterns = patterns_of_weight(weights, d);
    if (patterns.empty()) continue;
    ++degrees;
    if (relation_search(ys, patterns).kernel_dim != 0) ok = false;
  }
  return verdict("no_lower_relation", ok,
                 std::to_string(degrees) + " Chow degrees up to " + std::to_string(top) + " in Y0, Y1");
}

SuiteCheck group_check(AlgebraParams params, std::uint64_t cap) {
  const ExtraspecialGroup g(params.p, params.r);
  if (g.order() > cap) return {"group_structure", CheckStatus::Skipped, "group order above the enumeration cap"};
  const auto elems = g.elements(cap);
  const auto z = center(g, cap);
  const auto ab = abelianization(g, cap);
  const auto ker = quotient_kernel(g, cap);
  bool exponent_p = std::all_of(elems.begin(), elems.end(),
                                [&](const ExtraspecialElement& x) { return g.is_identity(g.power(x, params.p)); });
  bool center_ok = z.size() == params.p &&
                   std::all_of(z.begin(), z.end(), [&](const ExtraspecialElement& x) {
                     return std::all_of(x.alpha.begin(), x.alpha.end(), [](auto a) { return a == 0; }) &&
                            std::all_of(x.beta.begin(), x.beta.end(), [](auto b) { return b == 0; });
                   });
  bool ok = elems.size() == g.order() && center_ok && ab.is_homogeneous(params.p) && ab.rank() == params.num_vars() &&
            ker == z && exponent_p;
  return verdict("group_structure", ok,
                 "order " + std::to_string(elems.size()) + ", center of order " + std::to_string(z.size()) +
                     ", abelianization " + ab.render());
}

SuiteCheck theta_check(AlgebraParams params) {
  if (params.r > 2) return {"theta_relations", CheckStatus::Skipped, "matrix size p^r limited to r <= 2"};
  const ExtraspecialGroup g(params.p, params.r);
  const auto checks = check_theta_relations(g);
  std::vector<std::string> failed;
  for (const auto& c : checks)
    if (!c.holds) failed.push_back(c.name);
  return verdict("theta_relations", failed.empty(),
                 std::to_string(checks.size() - failed.size()) + "/" + std::to_string(checks.size()) +
                     " relations hold" + (failed.empty() ? "" : "; failed: " + join(failed)));
}

SuiteCheck guarded(const std::string& name, const std::function<SuiteCheck()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Budget) return {name, CheckStatus::Skipped, e.what()};
    return {name, CheckStatus::Fail, e.what()};
  }
}

}  // namespace

SuiteReport run_suite(AlgebraParams params, const SuiteOptions& options) {
  SuiteReport report{.params = params, .seed = options.seed, .checks = {}};
  auto& out = report.checks;
  out.push_back(guarded("steenrod_chain", [&] { return chain_check(params); }));
  out.push_back(guarded("lambda2_invariants", [&] { return lambda2_check(params, options.cap); }));
  out.push_back(guarded("h3_invariants", [&] { return h3_check(params); }));
  out.push_back(guarded("algebraic_independence",
                        [&] { return independence_check(params, options.seed, options.cap); }));
  out.push_back(guarded("relation_discovery", [&] { return relation_check(params); }));
  out.push_back(guarded("no_lower_relation", [&] { return no_lower_relation_check(params); }));
  out.push_back(guarded("group_structure", [&] { return group_check(params, options.cap); }));
  out.push_back(guarded("theta_relations", [&] { return theta_check(params); }));
  for (const auto& prop : run_properties(options.seed, options.property_cases)) {
    out.push_back({"property_" + prop.name, prop.ok() ? CheckStatus::Pass : CheckStatus::Fail,
                   std::to_string(prop.cases - prop.failures) + "/" + std::to_string(prop.cases) + " cases" +
                       (prop.first_failure.empty() ? "" : "; " + prop.first_failure)});
  }
  return report;
}

}  // namespace steenrodlab
