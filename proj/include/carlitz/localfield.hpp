#pragma once

/**
 * @file localfield.hpp
 * @brief The completed local ring at the prime above p, truncated mod lambda^N
 * with N = q^d.
 *
 * A nonzero p-torsion point lambda generates the prime above p, and the
 * completion is a power series ring in lambda over A/p. The image of t is
 * the series t(lambda) solving phi(f)(lambda) = 0, found by Newton iteration
 * in the t-direction. The Galois element with character value g sends lambda
 * to phi(a)(lambda) for any a representing g.
 */

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "carlitz/bernoulli.hpp"
#include "carlitz/residue.hpp"
#include "carlitz/series.hpp"
#include "carlitz/twisted.hpp"

namespace carlitz {

using LocalSeries = TruncSeries<ResidueField>;

/// A differential u dlambda, stored through its coefficient series u.
struct LocalDifferential {
  LocalSeries u;
  bool is_zero() const { return u.is_zero(); }
  friend bool operator==(const LocalDifferential&, const LocalDifferential&) = default;
};

struct EigenUniformizer {
  LocalSeries pi;
  LocalSeries derivative;
};

/**
 * u'/u dlambda. The coefficient of lambda^{N-1} in u' is N u_N, which is
 * zero when p | N, so in that case the result keeps the order N of u;
 * otherwise it is known to order N - 1.
 */
inline LocalDifferential dlog(const LocalSeries& u) {
  if (u.order() == 0) return {u};
  if (u.ring().is_zero(u.coeff(0))) throw std::domain_error("dlog: series is not a unit");
  const std::size_t n = u.order();
  const LocalSeries du = u.derivative();
  if (n % u.ring().characteristic() != 0) return {du * series_inverse(u.truncated(n - 1))};
  const LocalSeries padded(u.ring_ptr(), n, std::vector<ResidueElem>(du.coefficients().begin(), du.coefficients().end()));
  return {padded * series_inverse(u)};
}

namespace detail {

/// c(x) for c in A, by Horner over the F_q coefficients of c.
inline LocalSeries eval_poly_at(const Poly& c, const LocalSeries& x) {
  const auto& f = x.ring();
  LocalSeries acc(x.ring_ptr(), x.order());
  for (std::size_t j = c.size(); j-- > 0;) {
    acc = acc * x;
    acc.set_coeff(0, f.add(acc.coeff(0), f.from_fq(c.coeff(j))));
  }
  return acc;
}

/// Pads (or truncates) to a new order with zero coefficients.
inline LocalSeries resized(const LocalSeries& s, std::size_t order) {
  return LocalSeries(s.ring_ptr(), order, std::vector<ResidueElem>(s.coefficients().begin(), s.coefficients().end()));
}

}  // namespace detail

class LocalModel {
 public:
  explicit LocalModel(const Poly& prime) : LocalModel(carlitz::residue_field(prime)) {}

  explicit LocalModel(ResidueFieldPtr field)
      : field_(std::move(field)), n_(field_->size()), t_(solve_t(field_, n_, residuals_)) {
    build_basis();
  }

  const ResidueFieldPtr& residue_field() const { return field_; }
  const Poly& prime() const { return field_->prime(); }
  /// Truncation order N = q^d.
  std::size_t order() const { return n_; }

  /// lambda mod lambda^N.
  LocalSeries lambda() const { return LocalSeries::variable(field_, n_); }

  /// t(lambda) mod lambda^N.
  LocalSeries t_series() const { return t_.truncated(n_); }

  /// t(lambda) mod lambda^{N+1}.
  const LocalSeries& t_series_extended() const { return t_; }

  /// Number of Newton steps taken and the residual valuations observed.
  const std::vector<std::size_t>& newton_residual_valuations() const { return residuals_; }

  /// F(t(lambda), lambda) = phi(f)(lambda) / lambda, mod lambda^N.
  LocalSeries eisenstein_residual() const {
    const auto phi = apply_f(resized(t_, n_ + 1), n_ + 1);
    return phi.shift_down(1).truncated(n_);
  }

  /// phi(a)(lambda) mod lambda^{N+1}, through the cached basis phi(t^j)(lambda).
  LocalSeries galois_image_extended(ResidueElem g) const {
    if (g.code == 0) throw std::domain_error("galois_image: class is zero");
    LocalSeries acc(field_, n_ + 1);
    for (unsigned j = 0; j < field_->degree(); ++j) {
      const FqElem c = field_->coefficient(g, j);
      if (c.code == 0) continue;
      acc += basis_[j].scale(field_->from_fq(c));
    }
    return acc;
  }

  /// phi(a)(lambda) mod lambda^N.
  LocalSeries galois_image(ResidueElem g) const { return galois_image_extended(g).truncated(n_); }

  /// The same image computed from the twisted coefficients of phi(a) evaluated at t(lambda).
  LocalSeries galois_image_direct(const Poly& a) const {
    if (field_->is_zero(field_->from_poly(a))) throw std::domain_error("galois_image: representative lies in p");
    const auto op = carlitz_action(a);
    const LocalSeries x = LocalSeries::variable(field_, n_ + 1);
    return twisted_apply(op, x, [&](const Poly& c) { return detail::eval_poly_at(c, t_); }).truncated(n_);
  }

  /// g lambda / lambda mod lambda^N, a unit with constant term g.
  LocalSeries unit_ratio(ResidueElem g) const { return galois_image_extended(g).shift_down(1); }

 private:
  static LocalSeries resized(const LocalSeries& s, std::size_t order) { return detail::resized(s, order); }

  // phi(f)(lambda) = sum_j f_j B_j with B_0 = lambda, B_{j+1} = T B_j + B_j^q.
  LocalSeries apply_f(const LocalSeries& t, std::size_t order) const {
    const Poly& f = prime();
    LocalSeries b = LocalSeries::variable(field_, order);
    LocalSeries acc(field_, order);
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j > 0) b = t * b + b.frobenius_power(1);
      const FqElem c = f.coeff(j);
      if (c.code != 0) acc += b.scale(field_->from_fq(c));
    }
    return acc;
  }

  /**
   * Newton on F(T, lambda) = phi_T(f)(lambda) / lambda from T = t-bar.
   * d/dT B_{j+1} = B_j + T d/dT B_j since d/dT B_j^q = 0.
   * Both F and dF/dT mod lambda^P only need T mod lambda^P, so T is padded
   * by one zero coefficient before evaluating at order P + 1.
   */
  static LocalSeries solve_t(const ResidueFieldPtr& field, std::size_t n, std::vector<std::size_t>& residuals) {
    const std::size_t p_order = n + 1;
    const Poly& f = field->prime();
    LocalSeries t = LocalSeries::monomial(field, p_order, field->t_bar(), 0);
    std::size_t last = 0;
    for (unsigned iter = 0; iter < 64; ++iter) {
      const LocalSeries t_ext = resized(t, p_order + 1);
      LocalSeries b = LocalSeries::variable(field, p_order + 1);
      LocalSeries db(field, p_order + 1);
      LocalSeries phi(field, p_order + 1);
      LocalSeries dphi(field, p_order + 1);
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (j > 0) {
          db = b + t_ext * db;
          b = t_ext * b + b.frobenius_power(1);
        }
        const FqElem c = f.coeff(j);
        if (c.code == 0) continue;
        const ResidueElem cc = field->from_fq(c);
        phi += b.scale(cc);
        dphi += db.scale(cc);
      }
      const LocalSeries residual = phi.shift_down(1);
      const std::size_t v = residual.valuation();
      residuals.push_back(v);
      if (v >= p_order) return t;
      if (iter > 0 && v < std::min(2 * last, p_order)) throw std::logic_error("Newton iteration lost quadratic convergence");
      last = v;
      t = t - residual * series_inverse(dphi.shift_down(1));
    }
    throw std::logic_error("Newton iteration did not converge");
  }

  // basis_[j] = phi(t^j)(lambda) mod lambda^{N+1}: phi(t^{j+1}) = phi(t) phi(t^j).
  void build_basis() {
    basis_.clear();
    LocalSeries b = LocalSeries::variable(field_, n_ + 1);
    for (unsigned j = 0; j < field_->degree(); ++j) {
      if (j > 0) b = t_ * b + b.frobenius_power(1);
      basis_.push_back(b);
    }
  }

  ResidueFieldPtr field_;
  std::size_t n_;
  std::vector<std::size_t> residuals_;
  LocalSeries t_;
  std::vector<LocalSeries> basis_;
};

/// e-bar(z) = sum_{i<d} e_i z^{q^i} applied to a series x with x(0) = 0.
inline LocalSeries truncated_exponential(const std::vector<ResidueElem>& e, const LocalSeries& x) {
  LocalSeries acc(x.ring_ptr(), x.order());
  for (std::size_t i = 0; i < e.size(); ++i) acc += x.frobenius_power(static_cast<unsigned>(i)).scale(e[i]);
  return acc;
}

/**
 * pi = e-bar^{-1}(lambda). From e-bar(pi) = lambda,
 *   pi = lambda - sum_{i>=1} e_i pi^{q^i},
 * and each pass fixes at least one more coefficient.
 */
inline EigenUniformizer eigen_uniformizer(const LocalModel& m) {
  const auto e = exp_coeffs(m.residue_field());
  const LocalSeries lambda = m.lambda();
  LocalSeries pi = lambda;
  for (std::size_t iter = 0; iter <= m.order(); ++iter) {
    LocalSeries next = lambda;
    for (std::size_t i = 1; i < e.size(); ++i) next -= pi.frobenius_power(static_cast<unsigned>(i)).scale(e[i]);
    if (next == pi) {
      if (!(truncated_exponential(e, pi) == lambda)) throw std::logic_error("eigen_uniformizer: e-bar(pi) != lambda");
      LocalSeries d = detail::resized(pi.derivative(), m.order());
      return {pi, d};
    }
    pi = std::move(next);
  }
  throw std::logic_error("eigen_uniformizer: fixed-point iteration did not converge");
}

/**
 * The dlog images of the components lambda_n = -sum_g chi(g)^{-n} (x) g lambda,
 * taken on g lambda / lambda, for all n in 1 .. N-2 at once.
 */
class LocalDlogTable {
 public:
  explicit LocalDlogTable(const LocalModel& m) : model_(&m) {
    const auto& f = *m.residue_field();
    const std::uint32_t order = f.size() - 1;
    dlogs_.reserve(order);
    logs_.reserve(order);
    for (std::uint32_t code = 1; code <= order; ++code) {
      const ResidueElem g{code};
      dlogs_.push_back(dlog(m.unit_ratio(g)).u);
      logs_.push_back(f.log(g));
    }
  }

  const LocalModel& model() const { return *model_; }

  /// dlog(g lambda / lambda) for the class g.
  const LocalSeries& unit_dlog(ResidueElem g) const { return dlogs_.at(g.code - 1); }

  /// -sum_g chi(g)^{-n} dlog(g lambda / lambda).
  LocalDifferential component(unsigned n) const {
    const auto& f = *model_->residue_field();
    const std::uint32_t order = f.size() - 1;
    if (n < 1 || n + 1 >= f.size())
      throw std::out_of_range("dlog component index " + std::to_string(n) + " outside 1 .. q^d - 2");
    const std::size_t len = model_->order();
    std::vector<ResidueElem> acc(len, f.zero());
    const std::uint64_t shift = order - n % order;
    for (std::uint32_t i = 0; i < order; ++i) {
      const ResidueElem w = f.exp(static_cast<std::uint64_t>(logs_[i]) * shift);
      const auto coeffs = dlogs_[i].coefficients();
      for (std::size_t k = 0; k < len; ++k)
        if (!f.is_zero(coeffs[k])) acc[k] = f.add(acc[k], f.mul(w, coeffs[k]));
    }
    for (auto& c : acc) c = f.neg(c);
    return {LocalSeries(model_->residue_field(), len, std::move(acc))};
  }

 private:
  const LocalModel* model_;
  std::vector<LocalSeries> dlogs_;
  std::vector<std::uint32_t> logs_;
};

inline LocalDifferential dlog_lambda_component(const LocalModel& m, unsigned n) { return LocalDlogTable(m).component(n); }

/**
 * The expansion dlog lambda_n = (BC_n pi^n + delta) dlog pi with delta of
 * order at least n + N - 1 reads, mod lambda^N and for n >= 2,
 *   dlog lambda_n = BC_n pi^{n-1} pi' dlambda.
 * Since pi^{n-1} pi' = lambda^{n-1} + ..., BC_n is the lambda^{n-1}
 * coefficient; the rest of the identity is checked.
 */
class LocalBernoulli {
 public:
  LocalBernoulli(const LocalDlogTable& table, const EigenUniformizer& pi) : table_(&table), pi_(pi) {}

  ResidueElem bc(unsigned n) const {
    if (n < 2) throw std::out_of_range("bc_from_local requires n >= 2");
    const auto comp = table_->component(n);
    const ResidueElem c = comp.u.coeff(n - 1);
    const auto& m = table_->model();
    LocalSeries expected = pi_.derivative;
    for (unsigned i = 1; i < n; ++i) expected = expected * pi_.pi;
    if (!(comp.u == expected.scale(c)))
      throw std::logic_error("dlog component of " + std::to_string(n) + " does not match c pi^(n-1) pi' at order " +
                             std::to_string(m.order()));
    return c;
  }

  /// BC_n for every 2 <= n <= N-2, index n in the result (entries 0, 1 unused).
  std::vector<ResidueElem> all() const {
    const auto& m = table_->model();
    const auto& f = *m.residue_field();
    const std::size_t top = f.size() - 2;
    std::vector<ResidueElem> out(top + 1, f.zero());
    LocalSeries power = pi_.derivative * pi_.pi;
    for (std::size_t n = 2; n <= top; ++n) {
      const auto comp = table_->component(static_cast<unsigned>(n));
      const ResidueElem c = comp.u.coeff(n - 1);
      if (!(comp.u == power.scale(c)))
        throw std::logic_error("dlog component of " + std::to_string(n) + " does not match c pi^(n-1) pi'");
      out[n] = c;
      power = power * pi_.pi;
    }
    return out;
  }

 private:
  const LocalDlogTable* table_;
  EigenUniformizer pi_;
};

inline ResidueElem bc_from_local(const LocalModel& m, unsigned n) {
  const LocalDlogTable table(m);
  return LocalBernoulli(table, eigen_uniformizer(m)).bc(n);
}

}  // namespace carlitz
