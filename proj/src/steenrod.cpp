#include "steenrodlab/steenrod.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "steenrodlab/error.hpp"

namespace steenrodlab {

std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint32_t result = 1;
  while (n > 0 || k > 0) {
    const auto nd = static_cast<std::uint32_t>(n % p);
    const auto kd = static_cast<std::uint32_t>(k % p);
    if (kd > nd) return 0;
    // C(nd, kd) for single digits, computed directly in F_p.
    std::uint32_t num = 1, den = 1;
    for (std::uint32_t j = 0; j < kd; ++j) {
      num = fp::mul(num, nd - j, p);
      den = fp::mul(den, j + 1, p);
    }
    result = fp::mul(result, fp::mul(num, fp::inv(den, p), p), p);
    n /= p;
    k /= p;
  }
  return result;
}

GradedElement bockstein(const GradedElement& x) {
  const auto& params = x.params();
  const std::uint32_t p = params.p;
  GradedElement out(params);
  for (const auto& [m, c] : x.terms()) {
    int j = 0;
    for (std::uint32_t rest = m.exterior; rest != 0; rest &= rest - 1, ++j) {
      const int pos = std::countr_zero(rest);
      Monomial d = m;
      d.exterior &= ~(1u << pos);
      d.powers[pos] += 1;
      out.add_term(d, (j % 2 == 0) ? c : fp::neg(c, p));
    }
  }
  return out;
}

namespace {

struct PowerKey {
  std::uint32_t p;
  std::uint64_t i;
  Monomial m;
  bool operator==(const PowerKey&) const = default;
};

struct PowerKeyHash {
  std::size_t operator()(const PowerKey& k) const noexcept {
    std::size_t h = MonomialHash{}(k.m);
    h ^= std::hash<std::uint64_t>{}(k.i * 1000003u + k.p) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

using TermList = std::vector<std::pair<Monomial, std::uint32_t>>;

constexpr std::size_t kCacheLimit = 1u << 20;

thread_local std::unordered_map<PowerKey, TermList, PowerKeyHash> power_cache;

// P^i on a purely polynomial monomial. Peels off the first variable:
// P^i(v^n m') = Σ_k C(n,k) v^{n+k(p-1)} P^{i-k}(m').
const TermList& power_on_monomial(std::uint32_t p, std::uint64_t i, const Monomial& m) {
  PowerKey key{p, i, m};
  if (auto it = power_cache.find(key); it != power_cache.end()) return it->second;

  TermList result;
  std::size_t v = 0;
  while (v < kMaxVars && m.powers[v] == 0) ++v;
  if (i == 0) {
    result.emplace_back(m, 1);
  } else if (v == kMaxVars || i > m.polynomial_degree()) {
    // Unstable range: nothing survives.
  } else {
    const std::uint64_t n = m.powers[v];
    Monomial rest = m;
    rest.powers[v] = 0;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    for (std::uint64_t k = 0; k <= std::min<std::uint64_t>(n, i); ++k) {
      const std::uint32_t binom = binomial_mod_p(n, k, p);
      if (binom == 0) continue;
      const std::uint64_t e = n + k * (p - 1);
      if (e > kExponentLimit) throw Error(ErrorCode::Budget, "exponent exceeds the limit 2^30");
      // Copy: the recursive call may rehash the cache.
      const TermList tail = power_on_monomial(p, i - k, rest);
      for (const auto& [tm, tc] : tail) {
        Monomial prod = tm;
        prod.powers[v] = static_cast<std::uint32_t>(e);
        auto& slot = acc[prod];
        slot = fp::add(slot, fp::mul(binom, tc, p), p);
      }
    }
    for (const auto& [mm, cc] : acc) {
      if (cc != 0) result.emplace_back(mm, cc);
    }
  }
  if (power_cache.size() >= kCacheLimit) power_cache.clear();
  return power_cache.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

void clear_power_cache() { power_cache.clear(); }

GradedElement power_op(std::uint64_t i, const GradedElement& x) {
  if (i == 0) return x;
  const auto& params = x.params();
  const std::uint32_t p = params.p;
  GradedElement out(params);
  for (const auto& [m, c] : x.terms()) {
    Monomial poly = m;
    poly.exterior = 0;
    const TermList terms = power_on_monomial(p, i, poly);
    for (const auto& [tm, tc] : terms) {
      Monomial full = tm;
      full.exterior = m.exterior;
      out.add_term(full, fp::mul(c, tc, p));
    }
  }
  return out;
}

GradedElement total_power(const GradedElement& x) {
  GradedElement out(x.params());
  std::uint64_t top = 0;
  for (const auto& t : x.terms()) top = std::max(top, t.first.polynomial_degree());
  for (std::uint64_t i = 0; i <= top; ++i) out += power_op(i, x);
  return out;
}

// ---------------------------------------------------------------------------

SteenrodWord::SteenrodWord(std::vector<SteenrodLetter> letters) {
  for (const auto& l : letters) {
    if (l.kind == SteenrodLetter::Kind::Power && l.index == 0) continue;
    letters_.push_back(l);
  }
}

SteenrodWord SteenrodWord::parse(std::string_view text) {
  std::vector<SteenrodLetter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view tok = text.substr(start, pos - start);
    if (tok == "b") {
      letters.push_back(SteenrodLetter::beta());
      continue;
    }
    if (tok.size() >= 2 && tok[0] == 'P') {
      std::uint64_t v = 0;
      bool ok = true;
      for (char ch : tok.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          ok = false;
          break;
        }
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
        if (v > kExponentLimit) throw Error(ErrorCode::Budget, "operation index too large");
      }
      if (ok) {
        letters.push_back(SteenrodLetter::power(v));
        continue;
      }
    }
    throw ParseError("unknown Steenrod letter '" + std::string(tok) + "'", 1, start + 1);
  }
  return SteenrodWord(std::move(letters));
}

SteenrodWord SteenrodWord::y_chain(std::uint32_t p, std::uint32_t k) {
  std::vector<SteenrodLetter> letters{SteenrodLetter::beta()};
  std::uint64_t pk = 1;
  for (std::uint32_t j = 0; j < k; ++j) pk *= p;
  for (std::uint64_t q = pk; q >= 1; q /= p) {
    letters.push_back(SteenrodLetter::power(q));
    if (q == 1) break;
  }
  letters.push_back(SteenrodLetter::beta());
  return SteenrodWord(std::move(letters));
}

std::uint64_t SteenrodWord::degree_shift(std::uint32_t p) const {
  std::uint64_t s = 0;
  for (const auto& l : letters_) s += l.degree_shift(p);
  return s;
}

std::string SteenrodWord::render() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    if (letters_[i].kind == SteenrodLetter::Kind::Beta) os << 'b'; else os << 'P' << letters_[i].index;
  }
  return os.str();
}

GradedElement apply_word(const SteenrodWord& w, const GradedElement& x) {
  GradedElement cur = x;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    cur = it->kind == SteenrodLetter::Kind::Beta ? bockstein(cur) : power_op(it->index, cur);
  }
  return cur;
}

}  // namespace steenrodlab
