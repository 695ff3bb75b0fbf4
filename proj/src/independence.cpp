#include "steenrodlab/independence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <unordered_map>

#include "extension_field.hpp"
#include "steenrodlab/error.hpp"
#include "steenrodlab/parallel.hpp"

namespace steenrodlab {

std::string_view to_string(Certification c) {
  return c == Certification::Symbolic ? "symbolic" : "random-evaluation";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Independent: return "independent";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Dependent: return "dependent";
  }
  return "unknown";
}

std::string variable_name(AlgebraParams params, std::size_t v) {
  return (v < params.r ? "x" : "y") + std::to_string(v % params.r + 1);
}

std::vector<std::size_t> all_variables(AlgebraParams params) {
  std::vector<std::size_t> v(params.num_vars());
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

namespace {

// Laplace expansion along the first unused row, memoized on the set of used columns.
GradedElement minor_det(const PolyMatrix& m, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols, std::uint32_t used, std::size_t depth,
                        std::unordered_map<std::uint32_t, GradedElement>& memo) {
  const auto& params = m.front().front().params();
  if (depth == rows.size()) return GradedElement::scalar(params, 1);
  if (auto it = memo.find(used); it != memo.end()) return it->second;
  GradedElement acc(params);
  std::size_t position = 0;  // index among the still-unused columns
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if ((used >> c) & 1u) continue;
    const GradedElement& entry = m[rows[depth]][cols[c]];
    if (!entry.is_zero()) {
      GradedElement term = entry * minor_det(m, rows, cols, used | (1u << c), depth + 1, memo);
      if (position % 2 == 0) acc += term; else acc -= term;
    }
    ++position;
  }
  memo.emplace(used, acc);
  return acc;
}

GradedElement submatrix_det(const PolyMatrix& m, std::span<const std::size_t> rows,
                            std::span<const std::size_t> cols) {
  std::unordered_map<std::uint32_t, GradedElement> memo;
  return minor_det(m, rows, cols, 0, 0, memo);
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order until it returns true.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n) return false;
  for (;;) {
    if (fn(std::span<const std::size_t>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t symbolic_rank(const PolyMatrix& m, std::size_t rows, std::size_t cols) {
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    const bool found = for_each_subset(rows, k, [&](std::span<const std::size_t> rs) {
      return for_each_subset(cols, k, [&](std::span<const std::size_t> cs) {
        return !submatrix_det(m, rs, cs).is_zero();
      });
    });
    if (found) return k;
  }
  return 0;
}

detail::ExtElem evaluate_ext(const detail::ExtensionField& field, const GradedElement& f,
                             const std::vector<detail::ExtElem>& point) {
  detail::ExtElem acc = field.zero();
  for (const auto& [mono, c] : f.terms()) {
    detail::ExtElem t = field.from_base(c);
    for (std::size_t k = 0; k < point.size(); ++k) {
      if (mono.powers[k] != 0) t = field.mul(t, field.pow(point[k], mono.powers[k]));
    }
    acc = field.add(acc, t);
  }
  return acc;
}

}  // namespace

GradedElement polynomial_determinant(const PolyMatrix& m) {
  if (m.empty()) throw Error(ErrorCode::Shape, "determinant of an empty matrix");
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::Shape, "determinant of a non-square matrix");
  }
  if (n > 20) throw Error(ErrorCode::Budget, "cofactor expansion limited to 20x20");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return submatrix_det(m, idx, idx);
}

JacobianReport jacobian(std::span<const GradedElement> polys, std::span<const std::size_t> vars,
                        const JacobianOptions& options) {
  if (polys.empty()) throw Error(ErrorCode::Parameter, "jacobian of an empty family");
  JacobianReport report;
  report.params = polys.front().params();
  report.vars.assign(vars.begin(), vars.end());
  for (const auto& f : polys) {
    if (!(f.params() == report.params)) throw Error(ErrorCode::Parameter, "polynomials over different (p, r)");
    if (!f.in_polynomial_subring()) {
      throw Error(ErrorCode::Domain, "jacobian input has exterior terms: " + render(f));
    }
    std::vector<GradedElement> row;
    for (auto v : vars) row.push_back(partial_derivative(f, v));
    report.matrix.push_back(std::move(row));
  }
  const std::size_t m = polys.size(), n = vars.size();
  if (n == 0) return report;

  const bool symbolic = options.method == RankMethod::Symbolic ||
                        (options.method == RankMethod::Auto && m == n && n <= 4);
  if (symbolic) {
    if (std::max(m, n) > 8) throw Error(ErrorCode::Budget, "symbolic rank limited to 8x8");
    report.certified_by = Certification::Symbolic;
    if (m == n) {
      report.determinant = polynomial_determinant(report.matrix);
      report.rank = report.determinant->is_zero() ? symbolic_rank(report.matrix, m, n) : m;
    } else {
      report.rank = symbolic_rank(report.matrix, m, n);
    }
    return report;
  }

  // A nonzero k×k minor at a point certifies a nonzero minor polynomial. The
  // field is sized well beyond the minors' degree bound so a nonzero minor
  // rarely vanishes at a random point.
  report.certified_by = Certification::RandomEvaluation;
  report.seed = options.seed;
  std::vector<std::uint64_t> row_degree(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& entry : report.matrix[j])
      for (const auto& t : entry.terms()) row_degree[j] = std::max(row_degree[j], t.first.polynomial_degree());
  std::sort(row_degree.rbegin(), row_degree.rend());
  std::uint64_t bound = 1;
  for (std::size_t j = 0; j < std::min(m, n); ++j) bound += row_degree[j];
  const auto field = detail::ExtensionField::with_min_size(report.params.p, std::max<std::uint64_t>(1u << 20, bound << 10));
  report.extension_degree = field.degree();
  report.field_modulus = field.modulus();

  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<detail::ExtElem>> points(options.points);
  for (auto& pt : points) {
    pt.resize(report.params.num_vars());
    for (auto& coord : pt) coord = field.random(rng);
  }
  report.point_ranks.assign(points.size(), 0);
  parallel_for(points.size(), [&](std::size_t k) {
    std::vector<std::vector<detail::ExtElem>> numeric(m, std::vector<detail::ExtElem>(n));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) numeric[j][i] = evaluate_ext(field, report.matrix[j][i], points[k]);
    report.point_ranks[k] = field.rank(std::move(numeric));
  });
  for (auto& pt : points) report.evaluation_points.push_back(std::move(pt));
  report.rank = report.point_ranks.empty()
                    ? 0
                    : *std::max_element(report.point_ranks.begin(), report.point_ranks.end());
  return report;
}

IndependenceResult certify_independence(std::span<const GradedElement> polys,
                                        std::span<const std::size_t> vars,
                                        const JacobianOptions& options) {
  IndependenceResult out;
  out.m = polys.size();
  out.n = vars.size();
  if (out.m > out.n) {
    // More polynomials than the transcendence degree allows.
    out.verdict = Verdict::Dependent;
    return out;
  }
  out.report = jacobian(polys, vars, options);
  out.rank = out.report->rank;
  out.verdict = out.rank == out.m ? Verdict::Independent : Verdict::Inconclusive;
  return out;
}

PolyMatrix moore_matrix(AlgebraParams params) {
  const std::uint32_t r = params.r;
  PolyMatrix m;
  std::uint64_t q = 1;
  for (std::uint32_t i = 1; i <= 2 * r; ++i) {
    q *= params.p;
    if (q > kExponentLimit) throw Error(ErrorCode::Budget, "Moore matrix exponent exceeds 2^30");
    std::vector<GradedElement> row;
    for (std::uint32_t j = 1; j <= r; ++j) row.push_back(GradedElement::eta(params, j).pow(q));
    for (std::uint32_t j = 1; j <= r; ++j) row.push_back(GradedElement::xi(params, j).pow(q));
    m.push_back(std::move(row));
  }
  return m;
}

DicksonReport dickson_monomial_check(AlgebraParams params, std::uint64_t cap) {
  const std::size_t n = params.num_vars();
  std::uint64_t fact = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    fact *= k;
    if (fact > cap) {
      throw Error(ErrorCode::Budget, "(2r)! = " + std::to_string(n) + "! exceeds the expansion cap " +
                                         std::to_string(cap));
    }
  }
  const PolyMatrix moore = moore_matrix(params);
  DicksonReport report{.ok = false, .distinguished = {}, .coefficient = 0, .expansion_terms = 0,
                       .determinant = GradedElement(params)};

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    // Sign from the inversion count.
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    GradedElement term = GradedElement::scalar(params, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * moore[i][perm[i]];
    report.determinant += term;
    ++report.expansion_terms;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::uint64_t q = 1;
  for (std::uint32_t i = 1; i <= params.r; ++i) {
    q *= params.p;
    report.distinguished.powers[i - 1] = static_cast<std::uint32_t>(q);
  }
  for (std::uint32_t i = 1; i <= params.r; ++i) {
    q *= params.p;
    report.distinguished.powers[params.r + i - 1] = static_cast<std::uint32_t>(q);
  }
  report.coefficient = report.determinant.coefficient(report.distinguished);
  report.ok = report.coefficient == 1 || report.coefficient == params.p - 1;
  return report;
}

}  // namespace steenrodlab
