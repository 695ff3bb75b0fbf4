#include "steenrodlab/relations.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "steenrodlab/error.hpp"
#include "steenrodlab/parallel.hpp"

namespace steenrodlab {

namespace {

std::uint64_t checked_power(std::uint32_t p, std::uint32_t e, std::uint64_t limit) {
  std::uint64_t q = 1;
  for (std::uint32_t j = 0; j < e; ++j) {
    q *= p;
    if (q > limit) {
      throw Error(ErrorCode::Budget, std::to_string(p) + "^" + std::to_string(e) +
                                         " exceeds the exponent budget " + std::to_string(limit));
    }
  }
  return q;
}

GradedElement sum_ab(AlgebraParams params) {
  GradedElement s(params);
  for (std::uint32_t i = 1; i <= params.r; ++i) s += GradedElement::a(params, i) * GradedElement::b(params, i);
  return s;
}

std::uint64_t max_exponent_of(const GradedElement& x) {
  std::uint64_t best = 0;
  for (const auto& [m, c] : x.terms())
    for (auto e : m.powers) best = std::max<std::uint64_t>(best, e);
  return best;
}

}  // namespace

YClass y_image(AlgebraParams params, std::uint32_t k, std::uint64_t max_exponent) {
  const std::uint64_t q = checked_power(params.p, k + 1, max_exponent);
  GradedElement y(params);
  for (std::uint32_t i = 1; i <= params.r; ++i) {
    const auto xi = GradedElement::xi(params, i);
    const auto eta = GradedElement::eta(params, i);
    y += xi.pow(q) * eta - xi * eta.pow(q);
  }
  return YClass{.params = params, .k = k, .element = std::move(y), .degree = 2 * q + 2,
                .chow_degree = q + 1};
}

ChainReport verify_chain(AlgebraParams params, std::uint32_t k) {
  auto word = SteenrodWord::y_chain(params.p, k);
  GradedElement computed = apply_word(word, sum_ab(params));
  GradedElement expected = y_image(params, k).element;
  ChainReport report{.ok = computed == expected, .word = std::move(word), .computed = computed,
                     .expected = expected, .unit_factor = std::nullopt};
  if (report.ok) {
    report.unit_factor = 1;
  } else if (!expected.is_zero()) {
    for (std::uint32_t u = 2; u < params.p; ++u) {
      if (expected.scaled(u) == computed) {
        report.unit_factor = u;
        break;
      }
    }
  }
  return report;
}

std::vector<Pattern> parse_patterns(std::string_view text) {
  std::vector<Pattern> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, 1, pos + 1); };
  auto read_uint = [&]() -> std::uint64_t {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("expected a number");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
      if (v > kExponentLimit) throw fail("number too large");
    }
    return v;
  };
  skip_ws();
  if (pos == text.size()) throw fail("empty pattern list");
  for (;;) {
    Pattern pattern;
    for (;;) {
      skip_ws();
      if (pos >= text.size() || (text[pos] != 'Y' && text[pos] != 'y')) throw fail("expected Y<k>");
      ++pos;
      const std::uint64_t k = read_uint();
      if (k > 64) throw fail("class index above 64");
      std::uint64_t e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = read_uint();
      }
      if (pattern.size() <= k) pattern.resize(k + 1, 0);
      pattern[k] += e;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    out.push_back(std::move(pattern));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw fail(std::string("unexpected character '") + text[pos] + "'");
    ++pos;
  }
  return out;
}

std::string render_pattern(const Pattern& pattern) {
  std::string out;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (pattern[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += "Y" + std::to_string(k);
    if (pattern[k] != 1) out += "^" + std::to_string(pattern[k]);
  }
  return out.empty() ? "1" : out;
}

GradedElement expand_pattern(std::span<const GradedElement> images, const Pattern& pattern,
                             std::uint64_t max_exponent) {
  if (images.empty()) throw Error(ErrorCode::Parameter, "no images to substitute");
  std::uint64_t bound = 0;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (pattern[k] == 0) continue;
    if (k >= images.size()) {
      throw Error(ErrorCode::Parameter, "pattern uses Y" + std::to_string(k) + " but only " +
                                            std::to_string(images.size()) + " classes are given");
    }
    bound += pattern[k] * max_exponent_of(images[k]);
    if (bound > max_exponent) {
      throw Error(ErrorCode::Budget, "pattern " + render_pattern(pattern) + " exceeds the exponent budget " +
                                         std::to_string(max_exponent));
    }
  }
  GradedElement out = GradedElement::scalar(images.front().params(), 1);
  for (std::size_t k = 0; k < pattern.size(); ++k)
    if (pattern[k] != 0) out = out * images[k].pow(pattern[k]);
  return out;
}

std::optional<std::size_t> max_class_index(std::span<const Pattern> patterns) {
  std::optional<std::size_t> best;
  for (const auto& pattern : patterns)
    for (std::size_t k = 0; k < pattern.size(); ++k)
      if (pattern[k] != 0 && (!best || k > *best)) best = k;
  return best;
}

RelationSearchResult relation_search(std::span<const GradedElement> images,
                                     std::span<const Pattern> patterns) {
  if (patterns.empty()) throw Error(ErrorCode::Parameter, "no patterns given");
  RelationSearchResult result;
  result.patterns.assign(patterns.begin(), patterns.end());

  // Degrees are settled from the images before any expansion.
  std::optional<std::uint64_t> common;
  for (const auto& pattern : patterns) {
    std::uint64_t d = 0;
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      if (pattern[k] == 0) continue;
      if (k >= images.size()) {
        throw Error(ErrorCode::Parameter, "pattern uses Y" + std::to_string(k) + " but only " +
                                              std::to_string(images.size()) + " classes are given");
      }
      const auto dk = images[k].degree();
      if (!dk) throw Error(ErrorCode::Degree, "Y" + std::to_string(k) + " is zero or inhomogeneous");
      d += pattern[k] * *dk;
    }
    if (common && *common != d) {
      throw Error(ErrorCode::Degree, "pattern " + render_pattern(pattern) + " has degree " + std::to_string(d) +
                                         ", expected " + std::to_string(*common));
    }
    common = d;
  }
  result.degree = *common;

  std::vector<GradedElement> expanded(patterns.size(), GradedElement(images.front().params()));
  parallel_for(patterns.size(), [&](std::size_t j) { expanded[j] = expand_pattern(images, patterns[j]); });

  std::map<Monomial, std::size_t, CanonicalOrder> row_of;
  for (const auto& e : expanded)
    for (const auto& t : e.terms()) row_of.emplace(t.first, 0);
  std::size_t next = 0;
  for (auto& [m, row] : row_of) row = next++;
  result.monomial_count = row_of.size();

  const std::uint32_t p = images.front().p();
  FpMatrix mat(row_of.size(), patterns.size(), p);
  for (std::size_t j = 0; j < expanded.size(); ++j)
    for (const auto& [m, c] : expanded[j].terms()) mat.set(row_of.at(m), j, c);

  for (auto v : kernel_basis(mat)) {
    const auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
    const std::uint32_t s = fp::inv(*lead, p);
    for (auto& c : v) c = fp::mul(c, s, p);
    result.kernel_vectors.push_back(std::move(v));
  }
  result.kernel_dim = result.kernel_vectors.size();
  result.paper_vector_in_kernel = (mat * FpVector(patterns.size(), 1)) == FpVector(mat.rows(), 0);
  return result;
}

GradedElement substitute(std::span<const GradedElement> images, std::span<const Pattern> patterns,
                         std::span<const std::uint32_t> coefficients) {
  if (coefficients.size() != patterns.size()) throw Error(ErrorCode::Shape, "one coefficient per pattern required");
  GradedElement out(images.front().params());
  for (std::size_t j = 0; j < patterns.size(); ++j)
    if (coefficients[j] != 0) out += expand_pattern(images, patterns[j]).scaled(coefficients[j]);
  return out;
}

std::vector<Pattern> patterns_of_weight(std::span<const std::uint64_t> weights, std::uint64_t total) {
  std::vector<Pattern> out;
  Pattern cur(weights.size(), 0);
  auto rec = [&](auto&& self, std::size_t k, std::uint64_t rest) -> void {
    if (k + 1 == weights.size()) {
      if (rest % weights[k] == 0) {
        cur[k] = rest / weights[k];
        out.push_back(cur);
      }
      return;
    }
    for (std::uint64_t e = rest / weights[k] + 1; e-- > 0;) {
      cur[k] = e;
      self(self, k + 1, rest - e * weights[k]);
    }
    cur[k] = 0;
  };
  if (!weights.empty()) {
    if (std::find(weights.begin(), weights.end(), 0u) != weights.end()) {
      throw Error(ErrorCode::Parameter, "weights must be positive");
    }
    rec(rec, 0, total);
  }
  return out;
}

IndependenceResult independence_check_y(AlgebraParams params, std::uint32_t k_max,
                                        const JacobianOptions& options) {
  std::vector<GradedElement> polys;
  for (std::uint32_t k = 0; k <= k_max; ++k) polys.push_back(y_image(params, k).element);
  const auto vars = all_variables(params);
  return certify_independence(polys, vars, options);
}

bool y_jacobian_matches_closed_form(AlgebraParams params, std::uint32_t k_max) {
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    const auto y = y_image(params, k);
    const std::uint64_t q = y.chow_degree - 1;
    for (std::uint32_t j = 1; j <= params.r; ++j) {
      if (partial_derivative(y.element, j - 1) != -GradedElement::eta(params, j).pow(q)) return false;
      if (partial_derivative(y.element, params.r + j - 1) != GradedElement::xi(params, j).pow(q)) return false;
    }
  }
  return true;
}

}  // namespace steenrodlab
