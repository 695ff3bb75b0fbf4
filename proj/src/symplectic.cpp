#include "steenrodlab/symplectic.hpp"

#include <map>
#include <string>
#include <unordered_set>

#include "steenrodlab/error.hpp"
#include "steenrodlab/parallel.hpp"
#include "steenrodlab/steenrod.hpp"

namespace steenrodlab {

FpMatrix symplectic_form(std::uint32_t p, std::uint32_t r) {
  FpMatrix omega(2 * r, 2 * r, p);
  for (std::uint32_t i = 0; i < r; ++i) {
    omega.set(i, r + i, 1);
    omega.set(r + i, i, -1);
  }
  return omega;
}

bool is_symplectic(const FpMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) return false;
  const auto omega = symplectic_form(m.modulus(), static_cast<std::uint32_t>(m.rows() / 2));
  return m.transpose() * omega * m == omega;
}

SymplecticMatrix::SymplecticMatrix(FpMatrix m) : m_(std::move(m)) {
  if (!is_symplectic(m_)) throw Error(ErrorCode::Domain, "matrix does not preserve the symplectic form");
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& o) const {
  return SymplecticMatrix(m_ * o.m_);
}

namespace {

// Images of the degree-1 and degree-2 generators under one group element, with
// powers of the polynomial images memoized.
class ActionImages {
 public:
  ActionImages(const SymplecticMatrix& g, AlgebraParams params) : params_(params), g_(g.matrix()) {
    if (g.p() != params.p || g.r() != params.r) {
      throw Error(ErrorCode::Parameter, "symplectic matrix and algebra have different (p, r)");
    }
    const std::size_t n = params.num_vars();
    for (std::size_t k = 0; k < n; ++k) {
      GradedElement ext(params);
      for (std::size_t i = 0; i < n; ++i) {
        Monomial m;
        m.exterior = 1u << i;
        ext.add_term(m, g_(i, k));
      }
      exterior_.push_back(std::move(ext));
    }
  }

  GradedElement apply(const Monomial& m) {
    GradedElement out = GradedElement::scalar(params_, 1);
    for (std::size_t k = 0; k < params_.num_vars(); ++k) {
      if ((m.exterior >> k) & 1u) out = out * exterior_[k];
    }
    for (std::size_t k = 0; k < params_.num_vars(); ++k) {
      if (m.powers[k] != 0) out = out * polynomial_power(k, m.powers[k]);
    }
    return out;
  }

 private:
  // (Σ_i c_i v_i)^{p^d} = Σ_i c_i v_i^{p^d} over F_p.
  GradedElement frobenius_image(std::size_t k, std::uint64_t pd) const {
    GradedElement out(params_);
    for (std::size_t i = 0; i < params_.num_vars(); ++i) {
      Monomial m;
      m.powers[i] = static_cast<std::uint32_t>(pd);
      out.add_term(m, g_(i, k));
    }
    return out;
  }

  const GradedElement& polynomial_power(std::size_t k, std::uint32_t n) {
    auto key = std::make_pair(k, n);
    if (auto it = powers_.find(key); it != powers_.end()) return it->second;
    GradedElement out = GradedElement::scalar(params_, 1);
    std::uint64_t pd = 1;
    for (std::uint32_t rest = n; rest > 0; rest /= params_.p, pd *= params_.p) {
      const std::uint32_t digit = rest % params_.p;
      if (digit) out = out * frobenius_image(k, pd).pow(digit);
    }
    return powers_.emplace(key, std::move(out)).first->second;
  }

  AlgebraParams params_;
  const FpMatrix& g_;
  std::vector<GradedElement> exterior_;
  std::map<std::pair<std::size_t, std::uint32_t>, GradedElement> powers_;
};

std::string matrix_key(const FpMatrix& m) {
  std::string key;
  key.reserve(m.rows() * m.cols() * 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto v : m.row(i)) {
      key.push_back(static_cast<char>(v & 0xff));
      key.push_back(static_cast<char>(v >> 8));
    }
  return key;
}

}  // namespace

GradedElement act(const SymplecticMatrix& g, const GradedElement& x) {
  ActionImages images(g, x.params());
  GradedElement out(x.params());
  for (const auto& [m, c] : x.terms()) out += images.apply(m).scaled(c);
  return out;
}

std::uint64_t symplectic_group_order(std::uint32_t p, std::uint32_t r) {
  std::uint64_t order = 1;
  for (std::uint32_t k = 0; k < r * r; ++k) order *= p;
  std::uint64_t p2i = 1;
  for (std::uint32_t i = 1; i <= r; ++i) {
    p2i *= static_cast<std::uint64_t>(p) * p;
    order *= (p2i - 1);
  }
  return order;
}

std::vector<SymplecticMatrix> symplectic_generators(std::uint32_t p, std::uint32_t r) {
  require_odd_prime(p);
  const std::uint32_t n = 2 * r;
  const FpMatrix omega = symplectic_form(p, r);
  std::vector<FpVector> vs;
  for (std::uint32_t k = 0; k < n; ++k) {
    FpVector v(n, 0);
    v[k] = 1;
    vs.push_back(std::move(v));
  }
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < r; ++j) {
      FpVector v(n, 0);
      v[i] = 1;
      v[r + j] = 1;
      vs.push_back(std::move(v));
    }
  std::vector<SymplecticMatrix> gens;
  for (const auto& v : vs) {
    // ⟨u, v⟩ = u^T Ω v = Σ_j u_j (Ωv)_j, so T = I + v (Ωv)^T.
    const FpVector ov = omega * v;
    FpMatrix t = FpMatrix::identity(n, p);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        t.set(i, j, static_cast<std::int64_t>(t(i, j)) + fp::mul(v[i], ov[j], p));
    gens.emplace_back(std::move(t));
  }
  return gens;
}

std::vector<SymplecticMatrix> enumerate_group(std::span<const SymplecticMatrix> gens,
                                              std::uint64_t cap) {
  if (gens.empty()) return {};
  const auto& first = gens.front().matrix();
  std::vector<SymplecticMatrix> elements{SymplecticMatrix(FpMatrix::identity(first.rows(), first.modulus()))};
  std::unordered_set<std::string> seen{matrix_key(elements.front().matrix())};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : gens) {
      FpMatrix prod = s.matrix() * elements[head].matrix();
      auto key = matrix_key(prod);
      if (seen.insert(std::move(key)).second) {
        if (elements.size() >= cap) {
          throw Error(ErrorCode::Budget, "group closure exceeds the enumeration cap " + std::to_string(cap));
        }
        elements.emplace_back(std::move(prod));
      }
    }
  }
  return elements;
}

GenerationCertificate certify_generators(std::uint32_t p, std::uint32_t r, std::uint64_t cap) {
  GenerationCertificate cert;
  cert.expected_order = symplectic_group_order(p, r);
  if (cert.expected_order > cap) {
    throw Error(ErrorCode::Budget, "|Sp| = " + std::to_string(cert.expected_order) +
                                       " exceeds the enumeration cap " + std::to_string(cap));
  }
  const auto gens = symplectic_generators(p, r);
  cert.reached_order = enumerate_group(gens, cap).size();
  return cert;
}

std::vector<GradedElement> invariant_subspace(AlgebraParams params, std::uint64_t d,
                                              std::span<const SymplecticMatrix> group_elements,
                                              InvariantSpace space) {
  std::vector<Monomial> basis;
  switch (space) {
    case InvariantSpace::Full: basis = basis_of_degree(params, d); break;
    case InvariantSpace::Exterior: basis = exterior_basis_of_degree(params, d); break;
    case InvariantSpace::Integral3:
      if (d != 3) {
        throw Error(ErrorCode::Degree, "the integral model is implemented for degree 3 only, got " +
                                           std::to_string(d));
      }
      // H^2(F_p)/span(ξ, η) has the exterior pairs as a basis.
      basis = exterior_basis_of_degree(params, 2);
      break;
  }
  const std::size_t n = basis.size();
  if (n == 0) return {};

  // Rows of (A_g - I) for each g, computed independently per element.
  std::vector<std::vector<FpVector>> rows(group_elements.size());
  parallel_for(group_elements.size(), [&](std::size_t gi) {
    ActionImages images(group_elements[gi], params);
    FpMatrix a(n, n, params.p);
    for (std::size_t j = 0; j < n; ++j) {
      GradedElement image = images.apply(basis[j]);
      if (space == InvariantSpace::Integral3) {
        GradedElement projected(params);
        for (const auto& [m, c] : image.terms())
          if (!m.is_polynomial()) projected.add_term(m, c);
        image = std::move(projected);
      }
      const FpVector col = coordinates(image, basis);
      for (std::size_t i = 0; i < n; ++i) a.set(i, j, col[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      FpVector row(a.row(i).begin(), a.row(i).end());
      row[i] = fp::sub(row[i], 1, params.p);
      rows[gi].push_back(std::move(row));
    }
  });

  RowSpaceAccumulator acc(n, params.p);
  for (const auto& block : rows) {
    for (const auto& row : block) acc.add_row(row);
    if (acc.rank() == n) break;
  }
  std::vector<GradedElement> out;
  for (const auto& v : acc.kernel_basis()) {
    GradedElement w = from_coordinates(params, basis, v);
    out.push_back(space == InvariantSpace::Integral3 ? bockstein(w) : std::move(w));
  }
  return out;
}

}  // namespace steenrodlab
