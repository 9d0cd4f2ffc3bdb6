#pragma once

/**
 * @file text.hpp
 * @brief Text format for elements of F_q and polynomials over F_q.
 *
 * Rendering (descending degree, terms joined by " + " / " - "):
 *   prime q            t^3 - t + 1, t^2 + 2*t - 2   (signed residues)
 *   q = p^r, a primitive  t^3 + a^2*t^2 + a*t + a     (powers of a)
 *   q = p^r, otherwise    t^2 + (a + 1)*t + a         (polynomials in a)
 *
 * The parser accepts any arithmetic expression in the variable, the
 * generator "a" (alias "α"), integers, + - * ^ and parentheses, so
 * parse(render(f)) == f and render(parse(s)) == s for rendered s.
 */

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "carlitz/poly_fq.hpp"

namespace carlitz {

namespace detail {

inline std::string signed_residue(std::uint32_t c, std::uint32_t p, bool& negative) {
  negative = p != 2 && c > p / 2;
  return std::to_string(negative ? p - c : c);
}

inline std::string monomial_text(std::size_t k, std::string_view var) {
  if (k == 0) return "";
  if (k == 1) return std::string(var);
  return std::string(var) + "^" + std::to_string(k);
}

struct CoeffText {
  bool negative = false;
  std::string body;     // empty when the coefficient is an implicit 1
  bool compound = false;  // needs parentheses next to a monomial
};

/// Exponent k with c = a^k, for a primitive generator a.
inline std::uint64_t log_base_generator(const FieldDescriptor& f, FqElem c) {
  const std::uint64_t order = f.q() - 1;
  const std::uint64_t la = f.log(f.generator());
  const std::uint64_t lc = f.log(c);
  return mulmod(lc, inverse_mod(la, order), order);
}

inline CoeffText coefficient_text(const FieldDescriptor& f, FqElem c, bool standalone) {
  CoeffText out;
  if (f.is_prime_field()) {
    std::string s = signed_residue(c.code, f.p(), out.negative);
    out.body = (s == "1" && !standalone) ? "" : s;
    return out;
  }
  if (c == f.one()) {
    out.body = standalone ? "1" : "";
    return out;
  }
  if (f.generator_is_primitive()) {
    const auto k = log_base_generator(f, c);
    out.body = k == 1 ? "a" : "a^" + std::to_string(k);
    return out;
  }
  // Polynomial in a over F_p, with a nonnegative leading digit.
  for (unsigned i = f.r(); i-- > 0;) {
    const std::uint32_t dgt = f.digit(c, i);
    if (dgt == 0) continue;
    bool neg = false;
    signed_residue(dgt, f.p(), neg);
    if (neg) {
      out = coefficient_text(f, f.neg(c), standalone);
      out.negative = true;
      return out;
    }
    break;
  }
  std::string s;
  unsigned terms = 0;
  for (unsigned i = f.r(); i-- > 0;) {
    const std::uint32_t dgt = f.digit(c, i);
    if (dgt == 0) continue;
    bool neg = false;
    std::string num = signed_residue(dgt, f.p(), neg);
    std::string mono = monomial_text(i, "a");
    std::string term = mono.empty() ? num : (num == "1" ? mono : num + "*" + mono);
    if (terms == 0)
      s += (neg ? "-" : "") + term;
    else
      s += (neg ? " - " : " + ") + term;
    ++terms;
  }
  out.body = s;
  out.compound = terms > 1;
  return out;
}

}  // namespace detail

/// Text of a single F_q element (as it would appear as a constant term).
inline std::string render_fq(const FieldDescriptor& f, FqElem c) {
  if (c.code == 0) return "0";
  const auto ct = detail::coefficient_text(f, c, true);
  if (ct.negative && ct.compound) return "-(" + ct.body + ")";
  return (ct.negative ? "-" : "") + ct.body;
}

/// Polynomial text in descending degree; "0" for the zero polynomial.
inline std::string render_poly(const Poly& f, std::string_view var = "t") {
  if (f.is_zero()) return "0";
  const auto& fld = f.ring();
  std::string out;
  bool first = true;
  for (std::size_t k = f.size(); k-- > 0;) {
    const FqElem c = f.coeff(k);
    if (c.code == 0) continue;
    auto ct = detail::coefficient_text(fld, c, k == 0);
    const std::string mono = detail::monomial_text(k, var);
    std::string body = ct.body;
    if (ct.compound && (!mono.empty() || ct.negative)) body = "(" + body + ")";
    std::string term = body.empty() ? mono : (mono.empty() ? body : body + "*" + mono);
    if (first)
      out += (ct.negative ? "-" : "") + term;
    else
      out += (ct.negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(const FieldPtr& f, std::string_view text, std::string_view var)
      : f_(f), text_(text), var_(var) {}

  Poly parse() {
    Poly v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                                std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
           static_cast<unsigned char>(c) == 0xCE;
  }

  Poly expr() {
    skip_ws();
    bool neg = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      neg = true;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::uint64_t e = integer_literal(false);
      Poly acc = Poly::constant(f_, f_->one());
      for (std::uint64_t i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  std::uint64_t integer_literal(bool reduce) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t dgt = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (reduce) {
        v = (v * 10 + dgt) % f_->p();
      } else {
        v = v * 10 + dgt;
        if (v > 1000000) fail("exponent too large");
      }
      ++pos_;
    }
    return v;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto v = integer_literal(true);
      return Poly::constant(f_, f_->from_int(static_cast<std::int64_t>(v)));
    }
    // "α" is U+03B1, encoded CE B1.
    if (text_.substr(pos_, 2) == "\xCE\xB1") {
      pos_ += 2;
      return generator();
    }
    if (text_.substr(pos_, var_.size()) == var_ && !continues_identifier(pos_ + var_.size())) {
      pos_ += var_.size();
      return Poly::variable(f_);
    }
    if (c == 'a' && !continues_identifier(pos_ + 1)) {
      ++pos_;
      return generator();
    }
    fail("unknown symbol");
  }

  bool continues_identifier(std::size_t at) const {
    return at < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[at])) || text_[at] == '_');
  }

  Poly generator() {
    if (f_->is_prime_field()) fail("generator 'a' used over a prime field");
    return Poly::constant(f_, f_->generator());
  }

  const FieldPtr& f_;
  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(const FieldPtr& f, std::string_view text, std::string_view var = "t") {
  return detail::PolyParser(f, text, var).parse();
}

/// Parses a polynomial over F_p in x (used for user-supplied field moduli);
/// returns ascending coefficients.
inline std::vector<std::uint32_t> parse_prime_modulus(std::uint32_t p, std::string_view text) {
  const FieldPtr fp = detail::prime_field(p);
  const Poly m = parse_poly(fp, text, "x");
  std::vector<std::uint32_t> out;
  for (const auto& c : m.coefficients()) out.push_back(c.code);
  return out;
}

/// Text of the modulus of a field, as a polynomial in x over F_p.
inline std::string render_modulus(const FieldDescriptor& f) {
  const FieldPtr fp = detail::prime_field(f.p());
  std::vector<std::int64_t> ints(f.modulus().begin(), f.modulus().end());
  return render_poly(poly_from_ints(fp, ints), "x");
}

}  // namespace carlitz
