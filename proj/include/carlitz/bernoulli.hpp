#pragma once

/**
 * @file bernoulli.hpp
 * @brief Carlitz exponential coefficients, Bernoulli-Carlitz numbers modulo a
 * prime p of A, the p-torsion polynomial and the irregular index set.
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "carlitz/residue.hpp"
#include "carlitz/series.hpp"
#include "carlitz/twisted.hpp"

namespace carlitz {

/**
 * Reductions mod p of the Carlitz exponential coefficients e_0..e_{count-1}.
 *
 * Comparing z^{q^i} coefficients in e(tz) = e(z)^q + t e(z) gives
 *   e_i t^{q^i} = e_{i-1}^q + t e_i,  i.e.  e_i = e_{i-1}^q / (t^{q^i} - t).
 * t^{q^i} - t is divisible by p exactly when d | i, so the recursion stays
 * inside A/p for i < d.
 */
inline std::vector<ResidueElem> exp_coeffs(const ResidueFieldPtr& field, std::optional<unsigned> count = std::nullopt) {
  const unsigned d = field->degree();
  const unsigned n = count.value_or(d);
  if (n > d) throw std::domain_error("exp_coeffs: e_i is not p-integral for i >= deg p");
  const auto& f = *field;
  const ResidueElem t = f.t_bar();
  std::vector<ResidueElem> e;
  if (n == 0) return e;
  e.push_back(f.one());
  ResidueElem t_pow = t;  // t^{q^i}
  for (unsigned i = 1; i < n; ++i) {
    t_pow = f.frobenius(t_pow);
    e.push_back(f.mul(f.frobenius(e.back()), f.inv(f.sub(t_pow, t))));
  }
  return e;
}

inline std::vector<ResidueElem> exp_coeffs(const Poly& prime, std::optional<unsigned> count = std::nullopt) {
  return exp_coeffs(residue_field(prime), count);
}

/// BC_n mod p for 0 <= n <= q^d - 2.
struct BCVector {
  ResidueFieldPtr field;
  std::vector<ResidueElem> values;

  const Poly& prime() const { return field->prime(); }
  ResidueElem operator[](std::size_t n) const { return values.at(n); }
  std::size_t size() const { return values.size(); }
};

/**
 * z/e(z) = sum BC_n z^n, truncated at z^{q^d - 1}. Only e_i with i < d can
 * reach those orders: e(z)/z = sum_{i<d} e_i z^{q^i - 1} + O(z^{q^d - 1}).
 */
inline BCVector bc_numbers(const ResidueFieldPtr& field) {
  const std::size_t order = field->size() - 1;
  const auto e = exp_coeffs(field);
  TruncSeries<ResidueField> e_over_z(field, order);
  std::size_t qi = 1;
  for (const auto& ei : e) {
    if (qi - 1 < order) e_over_z.set_coeff(qi - 1, ei);
    qi *= field->base()->q();
  }
  const auto inv = series_inverse(e_over_z);
  return BCVector{field, std::vector<ResidueElem>(inv.coefficients().begin(), inv.coefficients().end())};
}

inline BCVector bc_numbers(const Poly& prime) { return bc_numbers(residue_field(prime)); }

/// { n : 0 < n < q^d - 1, (q-1) | n, BC_n = 0 mod p }, ascending.
inline std::vector<std::uint32_t> irregular_indices(const BCVector& bc) {
  const std::uint32_t q1 = bc.field->base()->q() - 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = q1; n < bc.size(); n += q1)
    if (bc.field->is_zero(bc[n])) out.push_back(n);
  return out;
}

/// Polynomials in X with coefficients in A.
using APolynomial = Polynomial<PolyRing>;

/**
 * Phi(X) = phi(f)(X) / X for the monic generator f of p: degree q^d - 1,
 * coefficient of X^{q^i - 1} equal to b_i where phi(f) = sum b_i F^i, and
 * constant term f. Its roots are the nonzero p-torsion points.
 */
inline APolynomial cyclotomic_poly(const Poly& prime) {
  if (!prime.is_monic() || !is_irreducible(prime)) throw std::invalid_argument("cyclotomic_poly: prime must be monic irreducible");
  const auto phi = carlitz_action(prime);
  const auto& ring = phi.ring_ptr();
  const std::size_t q = prime.ring().q();
  std::vector<Poly> coeffs;
  std::size_t qi = 1;
  for (const auto& b : phi.coefficients()) {
    coeffs.resize(qi, ring->zero());
    coeffs[qi - 1] = b;
    qi *= q;
  }
  return APolynomial(ring, std::move(coeffs));
}

}  // namespace carlitz
