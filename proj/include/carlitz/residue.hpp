#pragma once

/**
 * @file residue.hpp
 * @brief Residue fields A/p = F_q[t]/(p) for a monic irreducible p.
 *
 * Elements are codes sum_j c_j q^j where c_j (an F_q code) is the
 * coefficient of t^j in the unique representative of degree < d. Since
 * F_q codes are themselves base-p digit strings, a residue code is the
 * base-p digit string of all coordinates, and addition is digitwise.
 */

#include <memory>
#include <stdexcept>
#include <vector>

#include "carlitz/field.hpp"
#include "carlitz/poly_fq.hpp"

namespace carlitz {

struct ResidueElem {
  std::uint32_t code = 0;
  friend bool operator==(ResidueElem, ResidueElem) = default;
  friend auto operator<=>(ResidueElem, ResidueElem) = default;
};

class ResidueField {
 public:
  using value_type = ResidueElem;

  static constexpr std::uint64_t kMaxOrder = 1U << 22;

  /// p must be monic irreducible of positive degree with q^d <= 2^22.
  explicit ResidueField(Poly prime) : prime_(std::move(prime)), base_(prime_.ring_ptr()) {
    if (prime_.degree() < 1 || !prime_.is_monic()) throw std::invalid_argument("residue field: prime must be monic of positive degree");
    d_ = static_cast<unsigned>(prime_.degree());
    q_ = base_->q();
    std::uint64_t order = 1;
    for (unsigned i = 0; i < d_; ++i) {
      order *= q_;
      if (order > kMaxOrder) throw std::invalid_argument("residue field: q^d exceeds 2^22");
    }
    if (!is_irreducible(prime_)) throw std::invalid_argument("residue field: polynomial is reducible");
    size_ = static_cast<std::uint32_t>(order);
    digits_ = detail::DigitArithmetic(base_->p(), base_->r() * d_);
    qpow_.resize(d_ + 1);
    for (unsigned j = 0; j <= d_; ++j) qpow_[j] = static_cast<std::uint32_t>(detail::ipow(q_, j));
    tables_ = detail::LogTables(size_, [this](std::uint32_t a, std::uint32_t b) { return slow_mul(a, b); });
  }

  const Poly& prime() const { return prime_; }
  const FieldPtr& base() const { return base_; }
  unsigned degree() const { return d_; }
  /// q^d.
  std::uint32_t size() const { return size_; }
  std::uint32_t characteristic() const { return base_->p(); }

  ResidueElem zero() const { return {}; }
  ResidueElem one() const { return {1}; }
  ResidueElem add(ResidueElem a, ResidueElem b) const { return {digits_.add(a.code, b.code)}; }
  ResidueElem sub(ResidueElem a, ResidueElem b) const { return {digits_.sub(a.code, b.code)}; }
  ResidueElem neg(ResidueElem a) const { return {digits_.neg(a.code)}; }
  ResidueElem mul(ResidueElem a, ResidueElem b) const { return {tables_.mul(a.code, b.code)}; }
  ResidueElem inv(ResidueElem a) const { return {tables_.inv(a.code)}; }
  ResidueElem pow(ResidueElem a, std::uint64_t e) const { return {tables_.pow(a.code, e)}; }
  bool is_zero(ResidueElem a) const { return a.code == 0; }
  ResidueElem from_int(std::int64_t n) const { return {base_->from_int(n).code}; }
  /// x -> x^q.
  ResidueElem frobenius(ResidueElem a) const { return pow(a, q_); }
  std::size_t frobenius_degree() const { return q_; }

  std::uint32_t log(ResidueElem a) const { return tables_.log(a.code); }
  ResidueElem exp(std::uint64_t i) const { return {tables_.exp(i)}; }
  ResidueElem primitive_element() const { return {tables_.generator()}; }

  ResidueElem from_fq(FqElem c) const { return {c.code}; }

  /// Coefficient of t^j in the representative of degree < d.
  FqElem coefficient(ResidueElem a, unsigned j) const { return FqElem{(a.code / qpow_[j]) % q_}; }

  /// Degree of the representative in A^{<d} (kDegreeOfZero for 0).
  int rep_degree(ResidueElem a) const {
    for (unsigned j = d_; j-- > 0;)
      if (coefficient(a, j).code != 0) return static_cast<int>(j);
    return kDegreeOfZero;
  }

  ResidueElem from_poly(const Poly& f) const {
    require_same_ring(f.ring_ptr(), base_, "residue from_poly");
    const Poly r = f.degree() >= static_cast<int>(d_) ? f % prime_ : f;
    std::uint32_t code = 0;
    for (std::size_t j = r.size(); j-- > 0;) code = code * q_ + r.coeff(j).code;
    return {code};
  }

  Poly to_poly(ResidueElem a) const {
    std::vector<FqElem> v(d_);
    for (unsigned j = 0; j < d_; ++j) v[j] = coefficient(a, j);
    return Poly(base_, std::move(v));
  }

  /// The class of t.
  ResidueElem t_bar() const { return from_poly(poly_t(base_)); }

  /// The base-p digits of a code (coordinates of t^j a^i at index r*j + i).
  std::vector<std::uint32_t> prime_coordinates(ResidueElem a) const { return digits_.unpack(a.code); }
  ResidueElem from_prime_coordinates(const std::vector<std::uint32_t>& c) const { return {digits_.pack(c)}; }

  friend bool operator==(const ResidueField& a, const ResidueField& b) { return a.prime_ == b.prime_; }

 private:
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const auto& f = *base_;
    std::vector<FqElem> x(d_), y(d_);
    for (unsigned j = 0; j < d_; ++j) {
      x[j] = FqElem{(a / qpow_[j]) % q_};
      y[j] = FqElem{(b / qpow_[j]) % q_};
    }
    std::vector<FqElem> prod(2 * d_, f.zero());
    for (unsigned i = 0; i < d_; ++i)
      for (unsigned j = 0; j < d_; ++j) prod[i + j] = f.add(prod[i + j], f.mul(x[i], y[j]));
    for (unsigned k = 2 * d_ - 1; k >= d_; --k) {
      const FqElem c = prod[k];
      if (c.code == 0) continue;
      prod[k] = f.zero();
      for (unsigned j = 0; j < d_; ++j) prod[k - d_ + j] = f.sub(prod[k - d_ + j], f.mul(c, prime_.coeff(j)));
    }
    std::uint32_t code = 0;
    for (unsigned j = d_; j-- > 0;) code = code * q_ + prod[j].code;
    return code;
  }

  Poly prime_;
  FieldPtr base_;
  unsigned d_ = 1;
  std::uint32_t q_ = 2;
  std::uint32_t size_ = 2;
  detail::DigitArithmetic digits_;
  std::vector<std::uint32_t> qpow_;
  detail::LogTables tables_;
};

using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

inline ResidueFieldPtr residue_field(const Poly& prime) { return std::make_shared<const ResidueField>(prime); }

}  // namespace carlitz
