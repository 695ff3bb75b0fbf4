#include "steenrodlab/graded.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "steenrodlab/error.hpp"

namespace steenrodlab {

AlgebraParams AlgebraParams::make(std::uint64_t p, std::uint64_t r) {
  require_odd_prime(p);
  if (r < 1 || r > kMaxRank) {
    throw Error(ErrorCode::Parameter,
                "r = " + std::to_string(r) + " outside [1, " + std::to_string(kMaxRank) + "]");
  }
  return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(r)};
}

std::uint64_t Monomial::exterior_degree() const noexcept {
  return static_cast<std::uint64_t>(std::popcount(exterior));
}

std::uint64_t Monomial::polynomial_degree() const noexcept {
  std::uint64_t s = 0;
  for (auto e : powers) s += e;
  return s;
}

bool CanonicalOrder::operator()(const Monomial& x, const Monomial& y) const noexcept {
  if (x.exterior != y.exterior) {
    // First position where the flags differ; the monomial holding it comes first.
    const std::uint32_t diff = x.exterior ^ y.exterior;
    const int pos = std::countr_zero(diff);
    return (x.exterior >> pos) & 1u;
  }
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (x.powers[k] != y.powers[k]) return x.powers[k] > y.powers[k];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ m.exterior;
  for (auto e : m.powers) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

int multiply(const Monomial& x, const Monomial& y, Monomial& out) {
  if (x.exterior & y.exterior) return 0;
  // Each generator of y moves left past the generators of x that sit above it.
  int inversions = 0;
  for (std::uint32_t rest = y.exterior; rest != 0; rest &= rest - 1) {
    const int t = std::countr_zero(rest);
    const std::uint32_t above = t >= 31 ? 0u : (x.exterior >> (t + 1));
    inversions += std::popcount(above);
  }
  out.exterior = x.exterior | y.exterior;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    const std::uint64_t e = static_cast<std::uint64_t>(x.powers[k]) + y.powers[k];
    if (e > kExponentLimit) {
      throw Error(ErrorCode::Budget, "exponent " + std::to_string(e) + " exceeds the limit 2^30");
    }
    out.powers[k] = static_cast<std::uint32_t>(e);
  }
  return (inversions & 1) ? -1 : 1;
}

// ---------------------------------------------------------------------------

GradedElement GradedElement::scalar(AlgebraParams params, std::int64_t c) {
  return monomial(params, Monomial{}, c);
}

GradedElement GradedElement::monomial(AlgebraParams params, const Monomial& m, std::int64_t c) {
  GradedElement x(params);
  x.add_term(m, fp::reduce(c, params.p));
  return x;
}

namespace {

void check_index(AlgebraParams params, std::uint32_t i) {
  if (i < 1 || i > params.r) {
    throw Error(ErrorCode::Parameter,
                "generator index " + std::to_string(i) + " outside [1, " + std::to_string(params.r) + "]");
  }
}

}  // namespace

GradedElement GradedElement::a(AlgebraParams params, std::uint32_t i) {
  check_index(params, i);
  Monomial m;
  m.exterior = 1u << (i - 1);
  return monomial(params, m);
}

GradedElement GradedElement::b(AlgebraParams params, std::uint32_t i) {
  check_index(params, i);
  Monomial m;
  m.exterior = 1u << (params.r + i - 1);
  return monomial(params, m);
}

GradedElement GradedElement::xi(AlgebraParams params, std::uint32_t i) {
  check_index(params, i);
  Monomial m;
  m.powers[i - 1] = 1;
  return monomial(params, m);
}

GradedElement GradedElement::eta(AlgebraParams params, std::uint32_t i) {
  check_index(params, i);
  Monomial m;
  m.powers[params.r + i - 1] = 1;
  return monomial(params, m);
}

std::uint32_t GradedElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void GradedElement::add_term(const Monomial& m, std::uint32_t c) {
  c %= params_.p;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = fp::add(it->second, c, params_.p);
  if (it->second == 0) terms_.erase(it);
}

bool GradedElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::optional<std::uint64_t> GradedElement::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool GradedElement::in_polynomial_subring() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_polynomial(); });
}

void GradedElement::check_compatible(const GradedElement& o) const {
  if (!(params_ == o.params_)) {
    throw Error(ErrorCode::Parameter, "elements over different (p, r): (" +
                                          std::to_string(params_.p) + ", " + std::to_string(params_.r) +
                                          ") vs (" + std::to_string(o.params_.p) + ", " +
                                          std::to_string(o.params_.r) + ")");
  }
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, fp::neg(c, params_.p));
  return *this;
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
  GradedElement out = *this;
  out += o;
  return out;
}

GradedElement GradedElement::operator-(const GradedElement& o) const {
  GradedElement out = *this;
  out -= o;
  return out;
}

GradedElement GradedElement::operator-() const { return scaled(params_.p - 1); }

GradedElement GradedElement::scaled(std::uint32_t c) const {
  GradedElement out(params_);
  c %= params_.p;
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, fp::mul(v, c, params_.p));
  return out;
}

GradedElement GradedElement::operator*(const GradedElement& o) const {
  check_compatible(o);
  const std::uint32_t p = params_.p;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  Monomial prod;
  for (const auto& [mx, cx] : terms_) {
    for (const auto& [my, cy] : o.terms_) {
      const int sign = multiply(mx, my, prod);
      if (sign == 0) continue;
      std::uint32_t c = fp::mul(cx, cy, p);
      if (sign < 0) c = fp::neg(c, p);
      auto& slot = acc[prod];
      slot = fp::add(slot, c, p);
    }
  }
  GradedElement out(params_);
  for (const auto& [m, c] : acc) {
    if (c != 0) out.terms_.emplace(m, c);
  }
  return out;
}

GradedElement GradedElement::pow(std::uint64_t n) const {
  GradedElement result = scalar(params_, 1);
  GradedElement base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

GradedElement mul(const GradedElement& x, const GradedElement& y) { return x * y; }

// ---------------------------------------------------------------------------

namespace {

void exponent_vectors(std::size_t nvars, std::uint64_t total, std::size_t k, Monomial& cur,
                      std::vector<Monomial>& out) {
  if (k + 1 == nvars) {
    cur.powers[k] = static_cast<std::uint32_t>(total);
    out.push_back(cur);
    cur.powers[k] = 0;
    return;
  }
  for (std::uint64_t e = 0; e <= total; ++e) {
    cur.powers[k] = static_cast<std::uint32_t>(e);
    exponent_vectors(nvars, total - e, k + 1, cur, out);
  }
  cur.powers[k] = 0;
}

}  // namespace

std::vector<Monomial> basis_of_degree(AlgebraParams params, std::uint64_t d) {
  const std::size_t n = params.num_vars();
  std::vector<Monomial> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto e = static_cast<std::uint64_t>(std::popcount(mask));
    if (e > d || (d - e) % 2 != 0) continue;
    Monomial cur;
    cur.exterior = mask;
    exponent_vectors(n, (d - e) / 2, 0, cur, out);
  }
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

std::vector<Monomial> exterior_basis_of_degree(AlgebraParams params, std::uint64_t d) {
  std::vector<Monomial> out;
  for (std::uint32_t mask = 0; mask < (1u << params.num_vars()); ++mask) {
    if (static_cast<std::uint64_t>(std::popcount(mask)) != d) continue;
    Monomial m;
    m.exterior = mask;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

GradedElement partial_derivative(const GradedElement& x, std::size_t v) {
  const auto& params = x.params();
  if (v >= params.num_vars()) {
    throw Error(ErrorCode::Parameter, "variable index " + std::to_string(v) + " out of range");
  }
  GradedElement out(params);
  for (const auto& [m, c] : x.terms()) {
    if (!m.is_polynomial()) {
      throw Error(ErrorCode::Domain, "partial derivative of a term with exterior part: " +
                                         render(m, params));
    }
    const std::uint32_t e = m.powers[v];
    if (e == 0) continue;
    const std::uint32_t factor = fp::mul(c, e % params.p, params.p);
    if (factor == 0) continue;
    Monomial d = m;
    d.powers[v] = e - 1;
    out.add_term(d, factor);
  }
  return out;
}

std::uint32_t evaluate(const GradedElement& x, std::span<const std::uint32_t> point) {
  const auto& params = x.params();
  if (point.size() != params.num_vars()) throw Error(ErrorCode::Shape, "evaluation point has wrong length");
  std::uint32_t acc = 0;
  for (const auto& [m, c] : x.terms()) {
    if (!m.is_polynomial()) throw Error(ErrorCode::Domain, "evaluation of a term with exterior part");
    std::uint32_t t = c;
    for (std::size_t k = 0; k < params.num_vars(); ++k) {
      if (m.powers[k] != 0) t = fp::mul(t, fp::pow(point[k], m.powers[k], params.p), params.p);
    }
    acc = fp::add(acc, t, params.p);
  }
  return acc;
}

// ---------------------------------------------------------------------------

std::string render(const Monomial& m, AlgebraParams params, Notation notation) {
  std::ostringstream os;
  bool first = true;
  auto factor = [&](std::string_view name, std::uint32_t index, std::uint32_t e) {
    if (!first) os << '*';
    first = false;
    os << name << index;
    if (e > 1) os << '^' << e;
  };
  for (std::uint32_t k = 0; k < 2 * params.r; ++k) {
    if ((m.exterior >> k) & 1u) factor(k < params.r ? "a" : "b", k % params.r + 1, 1);
  }
  const bool uni = notation == Notation::Unicode;
  for (std::uint32_t k = 0; k < 2 * params.r; ++k) {
    if (m.powers[k] == 0) continue;
    std::string_view name = k < params.r ? (uni ? "ξ" : "x") : (uni ? "η" : "y");
    factor(name, k % params.r + 1, m.powers[k]);
  }
  if (first) os << '1';
  return os.str();
}

std::string render(const GradedElement& x, Notation notation) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool unit_monomial = m.exterior == 0 && m.polynomial_degree() == 0;
    if (unit_monomial) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << render(m, x.params(), notation);
    }
  }
  return os.str();
}

FpVector coordinates(const GradedElement& x, const std::vector<Monomial>& basis) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  index.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  FpVector v(basis.size(), 0);
  for (const auto& [m, c] : x.terms()) {
    auto it = index.find(m);
    if (it == index.end()) {
      throw Error(ErrorCode::Domain, "term " + render(m, x.params()) + " outside the coordinate basis");
    }
    v[it->second] = c;
  }
  return v;
}

GradedElement from_coordinates(AlgebraParams params, const std::vector<Monomial>& basis,
                               std::span<const std::uint32_t> coords) {
  if (coords.size() != basis.size()) throw Error(ErrorCode::Shape, "coordinate vector length mismatch");
  GradedElement x(params);
  for (std::size_t i = 0; i < basis.size(); ++i) x.add_term(basis[i], coords[i]);
  return x;
}

}  // namespace steenrodlab
