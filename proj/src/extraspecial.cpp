#include "steenrodlab/extraspecial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "steenrodlab/error.hpp"
#include "steenrodlab/fp.hpp"

namespace steenrodlab {

ExtraspecialGroup::ExtraspecialGroup(std::uint64_t p, std::uint64_t r) {
  require_odd_prime(p);
  if (r < 1 || r > 16) throw Error(ErrorCode::Parameter, "r = " + std::to_string(r) + " outside [1, 16]");
  p_ = static_cast<std::uint32_t>(p);
  r_ = static_cast<std::uint32_t>(r);
  // Saturate rather than overflow; only enumeration cares about the exact value.
  order_ = 1;
  for (std::uint64_t k = 0; k < 1 + 2 * r; ++k) {
    if (order_ > (1ull << 62) / p) {
      order_ = ~0ull;
      break;
    }
    order_ *= p;
  }
}

ExtraspecialElement ExtraspecialGroup::identity() const {
  return {0, std::vector<std::uint32_t>(r_, 0), std::vector<std::uint32_t>(r_, 0)};
}

ExtraspecialElement ExtraspecialGroup::z() const {
  auto g = identity();
  g.c = 1;
  return g;
}

ExtraspecialElement ExtraspecialGroup::e(std::uint32_t i) const {
  if (i < 1 || i > r_) throw Error(ErrorCode::Parameter, "e index " + std::to_string(i) + " out of range");
  auto g = identity();
  g.alpha[i - 1] = 1;
  return g;
}

ExtraspecialElement ExtraspecialGroup::f(std::uint32_t i) const {
  if (i < 1 || i > r_) throw Error(ErrorCode::Parameter, "f index " + std::to_string(i) + " out of range");
  auto g = identity();
  g.beta[i - 1] = 1;
  return g;
}

void ExtraspecialGroup::check(const ExtraspecialElement& g) const {
  if (g.alpha.size() != r_ || g.beta.size() != r_) {
    throw Error(ErrorCode::Parameter, "element has rank " + std::to_string(g.alpha.size()) +
                                          ", group has rank " + std::to_string(r_));
  }
}

ExtraspecialElement ExtraspecialGroup::mul(const ExtraspecialElement& g,
                                           const ExtraspecialElement& h) const {
  check(g);
  check(h);
  // z^c1 e^α1 f^β1 · z^c2 e^α2 f^β2: moving f_i^{β1} past e_i^{α2} costs z^{-α2 β1}.
  std::int64_t c = static_cast<std::int64_t>(g.c) + h.c;
  ExtraspecialElement out = identity();
  for (std::uint32_t i = 0; i < r_; ++i) {
    c -= static_cast<std::int64_t>(g.beta[i]) * h.alpha[i];
    out.alpha[i] = (g.alpha[i] + h.alpha[i]) % p_;
    out.beta[i] = (g.beta[i] + h.beta[i]) % p_;
  }
  out.c = fp::reduce(c, p_);
  return out;
}

ExtraspecialElement ExtraspecialGroup::inverse(const ExtraspecialElement& g) const {
  check(g);
  // (z^c e^α f^β)^{-1} = z^{-c - Σ α_i β_i} e^{-α} f^{-β}.
  std::int64_t c = -static_cast<std::int64_t>(g.c);
  ExtraspecialElement out = identity();
  for (std::uint32_t i = 0; i < r_; ++i) {
    c -= static_cast<std::int64_t>(g.alpha[i]) * g.beta[i];
    out.alpha[i] = (p_ - g.alpha[i]) % p_;
    out.beta[i] = (p_ - g.beta[i]) % p_;
  }
  out.c = fp::reduce(c, p_);
  return out;
}

ExtraspecialElement ExtraspecialGroup::power(const ExtraspecialElement& g, std::uint64_t n) const {
  ExtraspecialElement result = identity();
  ExtraspecialElement base = g;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

ExtraspecialElement ExtraspecialGroup::commutator(const ExtraspecialElement& g,
                                                  const ExtraspecialElement& h) const {
  return mul(mul(g, h), mul(inverse(g), inverse(h)));
}

bool ExtraspecialGroup::is_identity(const ExtraspecialElement& g) const { return g == identity(); }

std::uint64_t ExtraspecialGroup::element_order(const ExtraspecialElement& g) const {
  ExtraspecialElement cur = g;
  std::uint64_t n = 1;
  while (!is_identity(cur)) {
    cur = mul(cur, g);
    ++n;
  }
  return n;
}

std::uint64_t ExtraspecialGroup::index_of(const ExtraspecialElement& g) const {
  check(g);
  std::uint64_t idx = 0;
  for (std::uint32_t i = r_; i-- > 0;) idx = idx * p_ + g.beta[i];
  for (std::uint32_t i = r_; i-- > 0;) idx = idx * p_ + g.alpha[i];
  return idx * p_ + g.c;
}

ExtraspecialElement ExtraspecialGroup::element_at(std::uint64_t index) const {
  ExtraspecialElement g = identity();
  g.c = static_cast<std::uint32_t>(index % p_);
  index /= p_;
  for (std::uint32_t i = 0; i < r_; ++i, index /= p_) g.alpha[i] = static_cast<std::uint32_t>(index % p_);
  for (std::uint32_t i = 0; i < r_; ++i, index /= p_) g.beta[i] = static_cast<std::uint32_t>(index % p_);
  return g;
}

std::vector<ExtraspecialElement> ExtraspecialGroup::elements(std::uint64_t cap) const {
  if (order_ > cap) {
    throw Error(ErrorCode::Budget, "group order " + std::to_string(order_) +
                                       " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<ExtraspecialElement> out;
  out.reserve(order_);
  for (std::uint64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

ExtraspecialElement ExtraspecialGroup::parse(std::string_view text) const {
  ExtraspecialElement acc = identity();
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&](const char* what) -> std::uint64_t {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(std::string("expected ") + what, 1, pos + 1);
    }
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = std::min<std::uint64_t>(v * 10 + static_cast<std::uint64_t>(text[pos] - '0'), 1ull << 40);
      ++pos;
    }
    return v;
  };
  bool expect_factor = true;
  skip();
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw ParseError("empty group word", 1, 1);
  }
  while (pos < text.size()) {
    skip();
    if (!expect_factor) {
      if (text[pos] != '*') throw ParseError("expected '*'", 1, pos + 1);
      ++pos;
      expect_factor = true;
      continue;
    }
    const char c = text[pos];
    ExtraspecialElement gen;
    if (c == 'z') {
      ++pos;
      gen = z();
    } else if (c == 'e' || c == 'f' || c == '1') {
      ++pos;
      if (c == '1') {
        gen = identity();
      } else {
        const std::uint64_t i = number("generator index");
        if (i < 1 || i > r_) {
          throw Error(ErrorCode::Parameter, "generator index " + std::to_string(i) + " outside [1, " +
                                                std::to_string(r_) + "]");
        }
        gen = c == 'e' ? e(static_cast<std::uint32_t>(i)) : f(static_cast<std::uint32_t>(i));
      }
    } else {
      throw ParseError(std::string("unexpected '") + c + "'", 1, pos + 1);
    }
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      gen = power(gen, number("exponent"));
    }
    acc = mul(acc, gen);
    expect_factor = false;
    skip();
  }
  if (expect_factor) throw ParseError("dangling '*'", 1, text.size() + 1);
  return acc;
}

std::string ExtraspecialGroup::render(const ExtraspecialElement& g) const {
  check(g);
  std::ostringstream os;
  bool first = true;
  auto factor = [&](const std::string& name, std::uint32_t e) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << name;
    if (e > 1) os << '^' << e;
  };
  factor("z", g.c);
  for (std::uint32_t i = 0; i < r_; ++i) factor("e" + std::to_string(i + 1), g.alpha[i]);
  for (std::uint32_t i = 0; i < r_; ++i) factor("f" + std::to_string(i + 1), g.beta[i]);
  if (first) os << '1';
  return os.str();
}

// ---------------------------------------------------------------------------

std::uint64_t AbelianStructure::order() const {
  std::uint64_t n = 1;
  for (auto q : invariant_factors) n *= q;
  return n;
}

bool AbelianStructure::is_homogeneous(std::uint64_t q) const {
  return std::all_of(invariant_factors.begin(), invariant_factors.end(),
                     [q](std::uint64_t f) { return f == q; });
}

std::string AbelianStructure::render() const {
  if (invariant_factors.empty()) return "0";
  if (is_homogeneous(invariant_factors.front())) {
    std::string s = "(Z/" + std::to_string(invariant_factors.front()) + ")";
    if (invariant_factors.size() > 1) s += "^" + std::to_string(invariant_factors.size());
    return s;
  }
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += " + ";
    s += "Z/" + std::to_string(invariant_factors[i]);
  }
  return s;
}

namespace {

std::vector<ExtraspecialElement> generators(const ExtraspecialGroup& g) {
  std::vector<ExtraspecialElement> gens{g.z()};
  for (std::uint32_t i = 1; i <= g.r(); ++i) {
    gens.push_back(g.e(i));
    gens.push_back(g.f(i));
  }
  return gens;
}

}  // namespace

std::vector<ExtraspecialElement> center(const ExtraspecialGroup& g, std::uint64_t cap) {
  const auto gens = generators(g);
  std::vector<ExtraspecialElement> out;
  for (const auto& x : g.elements(cap)) {
    const bool central = std::all_of(gens.begin(), gens.end(), [&](const auto& s) {
      return g.mul(x, s) == g.mul(s, x);
    });
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<bool> commutator_subgroup(const ExtraspecialGroup& g, std::uint64_t cap) {
  const auto all = g.elements(cap);
  std::vector<bool> member(g.order(), false);
  std::vector<ExtraspecialElement> commutators;
  std::vector<bool> seen(g.order(), false);
  // [x, st] = [x, s] · s[x, t]s^{-1} and s[x, t]s^{-1} = [sx, t][s, t]^{-1}, so the
  // commutators [x, s] with s a generator already generate [G, G].
  const auto gens = generators(g);
  for (const auto& x : all) {
    for (const auto& y : gens) {
      const auto c = g.commutator(x, y);
      const auto idx = g.index_of(c);
      if (!seen[idx]) {
        seen[idx] = true;
        commutators.push_back(c);
      }
    }
  }
  // Close the commutator set under multiplication.
  std::vector<ExtraspecialElement> frontier{g.identity()};
  member[g.index_of(g.identity())] = true;
  while (!frontier.empty()) {
    std::vector<ExtraspecialElement> next;
    for (const auto& x : frontier) {
      for (const auto& c : commutators) {
        const auto y = g.mul(x, c);
        const auto idx = g.index_of(y);
        if (!member[idx]) {
          member[idx] = true;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return member;
}

AbelianStructure abelianization(const ExtraspecialGroup& g, std::uint64_t cap) {
  const auto member = commutator_subgroup(g, cap);
  const auto comm_order = static_cast<std::uint64_t>(std::count(member.begin(), member.end(), true));
  const std::uint64_t quotient_order = g.order() / comm_order;
  const std::uint32_t p = g.p();

  // omega[j] = #{cosets x : x^{p^j} = 1 in the quotient}.
  std::vector<std::uint64_t> omega{1};
  std::uint64_t pj = 1;
  while (omega.back() < quotient_order) {
    pj *= p;
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      if (member[g.index_of(g.power(g.element_at(i), pj))]) ++count;
    }
    omega.push_back(count / comm_order);
  }
  // Number of cyclic factors of order >= p^j is log_p(omega[j] / omega[j-1]).
  std::vector<std::size_t> at_least;
  for (std::size_t j = 1; j < omega.size(); ++j) {
    std::uint64_t ratio = omega[j] / omega[j - 1];
    std::size_t k = 0;
    while (ratio > 1) {
      ratio /= p;
      ++k;
    }
    at_least.push_back(k);
  }
  AbelianStructure s;
  for (std::size_t j = at_least.size(); j-- > 0;) {
    const std::size_t exactly = at_least[j] - (j + 1 < at_least.size() ? at_least[j + 1] : 0);
    std::uint64_t q = 1;
    for (std::size_t t = 0; t <= j; ++t) q *= p;
    for (std::size_t t = 0; t < exactly; ++t) s.invariant_factors.push_back(q);
  }
  return s;
}

std::vector<ExtraspecialElement> quotient_kernel(const ExtraspecialGroup& g, std::uint64_t cap) {
  std::vector<ExtraspecialElement> out;
  for (const auto& x : g.elements(cap)) {
    const bool trivial_image =
        std::all_of(x.alpha.begin(), x.alpha.end(), [](auto v) { return v == 0; }) &&
        std::all_of(x.beta.begin(), x.beta.end(), [](auto v) { return v == 0; });
    if (trivial_image) out.push_back(x);
  }
  return out;
}

}  // namespace steenrodlab
