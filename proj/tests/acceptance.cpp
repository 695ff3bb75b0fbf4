// Acceptance gate: one [PASS]/[FAIL] line per criterion, nonzero exit on failure.

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "steenrodlab/cli.hpp"
#include "steenrodlab/cyclotomic.hpp"
#include "steenrodlab/extraspecial.hpp"
#include "steenrodlab/independence.hpp"
#include "steenrodlab/properties.hpp"
#include "steenrodlab/relations.hpp"
#include "steenrodlab/steenrod.hpp"
#include "steenrodlab/suite.hpp"
#include "steenrodlab/symplectic.hpp"

using namespace steenrodlab;

namespace {

using PR = std::pair<std::uint32_t, std::uint32_t>;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& what) {
  if (o.ok) o.detail = what;
  o.ok = false;
}

std::string tag(std::uint32_t p, std::uint32_t r) {
  return "(p=" + std::to_string(p) + ",r=" + std::to_string(r) + ")";
}

Outcome steenrod_chain() {
  Outcome o;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> cases;
  for (std::uint32_t p : {3u, 5u})
    for (std::uint32_t r : {1u, 2u})
      for (std::uint32_t k : {0u, 1u}) cases.emplace_back(p, r, k);
  cases.emplace_back(3, 1, 2);
  for (const auto& [p, r, k] : cases) {
    const auto rep = verify_chain(AlgebraParams::make(p, r), k);
    if (!rep.ok) fail(o, "chain mismatch at " + tag(p, r) + " k=" + std::to_string(k));
  }
  if (o.ok) o.detail = std::to_string(cases.size()) + " chains agree with Y_k";
  return o;
}

Outcome lambda2_invariants() {
  Outcome o;
  for (const auto& [p, r] : std::vector<PR>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto params = AlgebraParams::make(p, r);
    const auto gens = symplectic_generators(p, r);
    const auto s = symplectic_class(params);
    if (!spans_exactly(invariant_subspace(params, 2, gens, InvariantSpace::Exterior), s))
      fail(o, "generator invariants differ at " + tag(p, r));
    const auto group = enumerate_group(gens);
    if (group.size() != symplectic_group_order(p, r)) fail(o, "group order mismatch at " + tag(p, r));
    if (!spans_exactly(invariant_subspace(params, 2, group, InvariantSpace::Exterior), s))
      fail(o, "sweep invariants differ at " + tag(p, r));
  }
  if (o.ok) o.detail = "span(sum a_i b_i) by generators and full sweep";
  return o;
}

Outcome h3_invariants() {
  Outcome o;
  for (const auto& [p, r] : std::vector<PR>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto params = AlgebraParams::make(p, r);
    const auto inv = invariant_subspace(params, 3, symplectic_generators(p, r), InvariantSpace::Integral3);
    if (!spans_exactly(inv, bockstein(symplectic_class(params)))) fail(o, "H^3 invariants differ at " + tag(p, r));
  }
  if (o.ok) o.detail = "span(beta of sum a_i b_i)";
  return o;
}

Outcome algebraic_independence() {
  Outcome o;
  for (const auto& [p, r] : std::vector<PR>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto params = AlgebraParams::make(p, r);
    const auto res = independence_check_y(params, 2 * r - 1);
    if (!res.independent() || res.rank != 2 * r) fail(o, "Jacobian rank deficient at " + tag(p, r));
    if (!y_jacobian_matches_closed_form(params, 2 * r - 1)) fail(o, "closed form mismatch at " + tag(p, r));
    const auto dk = dickson_monomial_check(params);
    if (!dk.ok) fail(o, "distinguished monomial vanishes at " + tag(p, r));
  }
  if (o.ok) o.detail = "full Jacobian rank, closed-form entries, unit Dickson coefficient";
  return o;
}

Outcome relation_discovery() {
  Outcome o;
  std::ostringstream all_ones;
  for (std::uint32_t p : {3u, 5u}) {
    const auto params = AlgebraParams::make(p, 1);
    std::vector<GradedElement> ys;
    for (std::uint32_t k = 0; k < 3; ++k) ys.push_back(y_image(params, k).element);
    const std::vector<Pattern> patterns{{p * p + 1}, {0, p + 1}, {p, 0, 1}};
    const auto res = relation_search(ys, patterns);
    if (res.kernel_dim != 1) {
      fail(o, "kernel dimension " + std::to_string(res.kernel_dim) + " at p=" + std::to_string(p));
      continue;
    }
    const auto& v = res.kernel_vectors[0];
    if (!std::all_of(v.begin(), v.end(), [p](std::uint32_t c) { return c == 1 || c == p - 1; }))
      fail(o, "coordinates outside {1, p-1} at p=" + std::to_string(p));
    if (!substitute(ys, patterns, v).is_zero()) fail(o, "resubstitution nonzero at p=" + std::to_string(p));
    all_ones << " p=" << p << ":" << (res.paper_vector_in_kernel ? "yes" : "no");
  }
  if (o.ok) o.detail = "one-dimensional kernel, unit coordinates; all-ones in kernel" + all_ones.str();
  return o;
}

Outcome no_lower_relation() {
  Outcome o;
  const std::uint64_t p = 3;
  const auto params = AlgebraParams::make(3, 1);
  const std::vector<GradedElement> ys{y_image(params, 0).element, y_image(params, 1).element};
  const std::vector<std::uint64_t> weights{p + 1, p * p + 1};
  std::size_t degrees = 0;
  for (std::uint64_t d = 1; d <= 40; ++d) {
    const auto patterns = patterns_of_weight(weights, d);
    if (patterns.empty()) continue;
    ++degrees;
    if (relation_search(ys, patterns).kernel_dim != 0) fail(o, "relation in Chow degree " + std::to_string(d));
  }
  if (o.ok) o.detail = std::to_string(degrees) + " Chow degrees up to 40, all kernels zero";
  return o;
}

Outcome group_structure() {
  Outcome o;
  for (const auto& [p, r] : std::vector<PR>{{3, 1}, {3, 2}, {5, 1}}) {
    const ExtraspecialGroup g(p, r);
    const auto elems = g.elements();
    std::uint64_t order = p;
    for (std::uint32_t k = 0; k < 2 * r; ++k) order *= p;
    if (elems.size() != order) fail(o, "order mismatch at " + tag(p, r));
    if (!std::all_of(elems.begin(), elems.end(), [&](const auto& x) { return g.is_identity(g.power(x, p)); }))
      fail(o, "exponent exceeds p at " + tag(p, r));
    const auto z = center(g);
    if (z.size() != p) fail(o, "center has wrong size at " + tag(p, r));
    if (quotient_kernel(g) != z) fail(o, "quotient kernel differs from center at " + tag(p, r));
    const auto ab = abelianization(g);
    if (!ab.is_homogeneous(p) || ab.rank() != 2 * r) fail(o, "abelianization wrong at " + tag(p, r));
    const auto comm = commutator_subgroup(g);
    if (static_cast<std::uint64_t>(std::count(comm.begin(), comm.end(), true)) != p)
      fail(o, "commutator subgroup wrong at " + tag(p, r));
  }
  if (o.ok) o.detail = "order p^(1+2r), exponent p, Z = [G,G] of order p, G/Z elementary abelian";
  return o;
}

Outcome theta_relations() {
  Outcome o;
  std::size_t total = 0;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t r : {1u, 2u}) {
      const auto checks = check_theta_relations(ExtraspecialGroup(p, r));
      if (checks.empty()) fail(o, "no relations checked at " + tag(p, r));
      for (const auto& c : checks) {
        ++total;
        if (!c.holds) fail(o, c.name + " fails at " + tag(p, r));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(total) + " defining relations hold";
  return o;
}

Outcome properties() {
  Outcome o;
  const auto results = run_properties(42, 200);
  for (const auto& r : results) {
    if (r.cases < 200) fail(o, r.name + " ran only " + std::to_string(r.cases) + " cases");
    if (!r.ok()) fail(o, r.name + ": " + r.first_failure);
  }
  if (o.ok) o.detail = std::to_string(results.size()) + " properties, 200 cases each";
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const std::vector<std::string> args{"suite", "--p", "3", "--r", "1", "--seed", "42"};
  std::ostringstream out1, out2, err1, err2;
  const int c1 = cli::run(args, out1, err1);
  const int c2 = cli::run(args, out2, err2);
  if (c1 != 0 || c2 != 0) fail(o, "suite exited with " + std::to_string(c1) + "/" + std::to_string(c2));
  if (out1.str() != out2.str()) fail(o, "outputs differ");
  if (o.ok) o.detail = "two runs byte-identical (" + std::to_string(out1.str().size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"steenrod_chain", steenrod_chain},
      {"lambda2_invariants", lambda2_invariants},
      {"h3_invariants", h3_invariants},
      {"algebraic_independence", algebraic_independence},
      {"relation_discovery", relation_discovery},
      {"no_lower_relation", no_lower_relation},
      {"group_structure", group_structure},
      {"theta_relations", theta_relations},
      {"properties", properties},
      {"cli_determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << ": " << o.detail << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
