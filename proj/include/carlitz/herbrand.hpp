#pragma once

/**
 * @file herbrand.hpp
 * @brief Per-prime eigenspace classification and the irregular prime scan.
 *
 * For (q-1) | n the classification is
 *   p does not divide BC_n                -> dim H^1(chi^{n-1}) = 0
 *   p | BC_n and L(1, w^{-n}) a unit      -> dim = 1
 *   p | BC_n and L(1, w^{-n}) non-unit    -> dim >= 1
 * Indices with (q-1) not dividing n are outside the classification and only
 * carry raw diagnostics.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "carlitz/bernoulli.hpp"
#include "carlitz/localfield.hpp"
#include "carlitz/lseries.hpp"
#include "carlitz/text.hpp"

namespace carlitz {

enum class H1Dim { exact_zero, exact_one, at_least_one, out_of_scope };

inline std::string_view to_string(H1Dim d) {
  switch (d) {
    case H1Dim::exact_zero: return "exact_0";
    case H1Dim::exact_one: return "exact_1";
    case H1Dim::at_least_one: return "at_least_1";
    case H1Dim::out_of_scope: return "out_of_scope";
  }
  return "out_of_scope";
}

inline std::optional<H1Dim> h1_dim_from_string(std::string_view s) {
  for (auto d : {H1Dim::exact_zero, H1Dim::exact_one, H1Dim::at_least_one, H1Dim::out_of_scope})
    if (to_string(d) == s) return d;
  return std::nullopt;
}

struct IndexClassification {
  unsigned n = 0;
  bool divisible_by_q_minus_1 = false;
  bool bc_divisible = false;
  /// Valuation of L(1, w^{-n}); only when (q-1) | n.
  std::optional<unsigned> pic_length;
  H1Dim h1_dim = H1Dim::out_of_scope;
  /// Whether dlog lambda_n vanishes mod lambda^{q^d}; only with local checks.
  std::optional<bool> local_dlog_vanished;
  /// Valuation of S_n(1) for (q-1) not dividing n, capped at the Witt precision.
  std::optional<unsigned> raw_numerator_valuation;

  friend bool operator==(const IndexClassification&, const IndexClassification&) = default;
};

struct Timings {
  double bernoulli_ms = 0;
  double lseries_ms = 0;
  double local_ms = 0;
  friend bool operator==(const Timings&, const Timings&) = default;
};

struct PrimeReport {
  unsigned q = 0;
  std::string prime;
  unsigned degree = 0;
  std::vector<unsigned> irregular;
  std::vector<IndexClassification> indices;
  unsigned witt_precision = 0;
  bool local_checked = false;
  /// Indices n with dlog lambda_n nonzero and a positive L-valuation.
  std::vector<unsigned> bridge_exceptions;
  /// Cross-module disagreements; nonempty means an internal inconsistency.
  std::vector<std::string> failures;
  std::optional<Timings> timings;

  /// Number of indices with a nonzero eigenspace.
  unsigned dim_count() const {
    return static_cast<unsigned>(std::count_if(indices.begin(), indices.end(), [](const auto& c) {
      return c.h1_dim == H1Dim::exact_one || c.h1_dim == H1Dim::at_least_one;
    }));
  }
  /// Whether any such index only has a lower bound.
  bool dim_is_lower_bound() const {
    return std::any_of(indices.begin(), indices.end(), [](const auto& c) { return c.h1_dim == H1Dim::at_least_one; });
  }

  friend bool operator==(const PrimeReport&, const PrimeReport&) = default;
};

struct ClassifyOptions {
  unsigned precision = WittRing::kDefaultPrecision;
  WittRing::Lift lift = WittRing::Lift::naive;
  /// Recover BC_n from the local dlog expansion and compare.
  bool check_local = false;
  /// Evaluate L(1) both by the closed formula and through Q_n(1).
  bool cross_check_l = false;
  bool record_timings = false;
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

inline H1Dim deduce_h1(bool divisible, bool bc_divisible, std::optional<unsigned> pic_length) {
  if (!divisible) return H1Dim::out_of_scope;
  if (!bc_divisible) return H1Dim::exact_zero;
  return pic_length.value_or(1) == 0 ? H1Dim::exact_one : H1Dim::at_least_one;
}

}  // namespace detail

inline PrimeReport classify_prime(const Poly& prime, const ClassifyOptions& options = {}) {
  using clock = std::chrono::steady_clock;
  if (!prime.is_monic() || prime.degree() < 1) throw std::invalid_argument("classify_prime: prime must be monic of positive degree");
  const auto field = residue_field(prime);
  const unsigned q = field->base()->q();
  const std::uint32_t top = field->size() - 2;

  PrimeReport report;
  report.q = q;
  report.prime = render_poly(prime);
  report.degree = field->degree();
  Timings timings;

  auto start = clock::now();
  const BCVector bc = bc_numbers(field);
  report.irregular = irregular_indices(bc);
  timings.bernoulli_ms = detail::elapsed_ms(start);

  start = clock::now();
  std::vector<std::optional<unsigned>> lengths(top + 1);
  std::vector<std::optional<unsigned>> raw(top + 1);
  unsigned precision = options.precision;
  for (;;) {
    const CharacterContext ctx(field, precision, options.lift);
    bool saturated = false;
    for (std::uint32_t n = 1; n <= top; ++n) {
      if (n % (q - 1) != 0) {
        raw[n] = raw_numerator_valuation(ctx, n);
        continue;
      }
      const WittElem value = l_value_at_one(ctx, n);
      const unsigned v = valuation(value, ctx.witt());
      if (v >= precision) saturated = true;
      lengths[n] = v;
      if (options.cross_check_l) {
        const LReport lr = l_char_sum(ctx, n);
        const WittElem via_quotient = ctx.witt().neg(lr.quotient->eval(ctx.witt().one()));
        if (!(via_quotient == value))
          report.failures.push_back("n=" + std::to_string(n) + ": closed-form L(1) differs from -Q_n(1)");
        if (!ctx.witt().is_zero(lr.numerator.eval(ctx.witt().one())))
          report.failures.push_back("n=" + std::to_string(n) + ": S_n(1) is nonzero");
      }
    }
    if (!saturated) break;
    const auto next = next_precision(precision, field->characteristic());
    if (!next)
      throw PrecisionError("L-value valuation saturates at the maximal Witt precision for " + report.prime);
    precision = *next;
    report.failures.clear();
  }
  report.witt_precision = precision;
  timings.lseries_ms = detail::elapsed_ms(start);

  std::vector<std::optional<bool>> dlog_vanished(top + 1);
  if (options.check_local && top >= 1) {
    start = clock::now();
    const LocalModel model(field);
    const LocalDlogTable table(model);
    const auto pi = eigen_uniformizer(model);
    for (std::uint32_t n = 1; n <= top; ++n) dlog_vanished[n] = table.component(n).is_zero();
    try {
      const auto local_bc = LocalBernoulli(table, pi).all();
      for (std::uint32_t n = 2; n <= top; ++n)
        if (!(local_bc[n] == bc[n]))
          report.failures.push_back("n=" + std::to_string(n) + ": BC_n from the local expansion differs");
    } catch (const std::logic_error& e) {
      report.failures.push_back(e.what());
    }
    for (std::uint32_t n = 2; n <= top; ++n)
      if (*dlog_vanished[n] != field->is_zero(bc[n]))
        report.failures.push_back("n=" + std::to_string(n) + ": dlog vanishing disagrees with p | BC_n");
    report.local_checked = true;
    timings.local_ms = detail::elapsed_ms(start);
  }

  for (std::uint32_t n = 1; n <= top; ++n) {
    IndexClassification c;
    c.n = n;
    c.divisible_by_q_minus_1 = n % (q - 1) == 0;
    c.bc_divisible = field->is_zero(bc[n]);
    c.pic_length = lengths[n];
    c.raw_numerator_valuation = raw[n];
    c.local_dlog_vanished = dlog_vanished[n];
    c.h1_dim = detail::deduce_h1(c.divisible_by_q_minus_1, c.bc_divisible, c.pic_length);
    if (c.divisible_by_q_minus_1 && c.local_dlog_vanished == false && c.pic_length.value_or(0) > 0)
      report.bridge_exceptions.push_back(n);
    report.indices.push_back(c);
  }
  if (options.record_timings) report.timings = timings;
  return report;
}

/// Independent re-check of the classification rules; returns the violations found.
inline std::vector<std::string> validate_report(const PrimeReport& r) {
  std::vector<std::string> problems;
  auto fail = [&](unsigned n, const std::string& what) { problems.push_back(r.prime + " n=" + std::to_string(n) + ": " + what); };
  if (r.q < 2) {
    problems.push_back(r.prime + ": invalid q");
    return problems;
  }
  std::uint64_t size = 1;
  for (unsigned i = 0; i < r.degree; ++i) size *= r.q;
  if (r.indices.size() != (size >= 2 ? size - 2 : 0)) problems.push_back(r.prime + ": index list does not cover 1 .. q^d - 2");
  std::vector<unsigned> irregular;
  for (std::size_t i = 0; i < r.indices.size(); ++i) {
    const auto& c = r.indices[i];
    if (c.n != i + 1) fail(c.n, "indices out of order");
    if (c.divisible_by_q_minus_1 != (c.n % (r.q - 1) == 0)) fail(c.n, "wrong divisibility flag");
    if (!c.divisible_by_q_minus_1) {
      if (c.h1_dim != H1Dim::out_of_scope) fail(c.n, "classified although q-1 does not divide n");
      if (c.bc_divisible == false) fail(c.n, "BC_n must vanish when q-1 does not divide n");
      if (c.pic_length) fail(c.n, "L-value length outside its domain");
      continue;
    }
    if (!c.pic_length) fail(c.n, "missing L-value length");
    if ((c.h1_dim == H1Dim::exact_zero) != !c.bc_divisible) fail(c.n, "exact 0 must coincide with p not dividing BC_n");
    if (c.h1_dim == H1Dim::exact_one && !(c.bc_divisible && c.pic_length == 0u)) fail(c.n, "exact 1 needs p | BC_n and length 0");
    if (c.h1_dim == H1Dim::at_least_one && !(c.bc_divisible && c.pic_length.value_or(0) > 0))
      fail(c.n, "lower bound needs p | BC_n and positive length");
    if (c.h1_dim == H1Dim::out_of_scope) fail(c.n, "divisible index left unclassified");
    if (c.bc_divisible) irregular.push_back(c.n);
  }
  if (irregular != r.irregular) problems.push_back(r.prime + ": irregular set disagrees with the per-index flags");
  for (const auto& f : r.failures) problems.push_back(r.prime + ": " + f);
  return problems;
}

struct ScanOptions {
  ClassifyOptions classify;
  /// Worker threads; 0 reads CARLITZ_THREADS, then the hardware concurrency.
  unsigned threads = 0;
};

struct ScanResult {
  unsigned q = 0;
  /// Modulus of F_q over F_p in x; empty for prime q.
  std::string field_modulus;
  unsigned max_degree = 0;
  std::vector<std::uint64_t> primes_per_degree;
  /// Irregular primes only, by degree then canonical order.
  std::vector<PrimeReport> reports;
  /// Validator findings over every classified prime (regular ones included).
  std::vector<std::string> failures;
  /// Count of (prime, n) with dlog lambda_n nonzero and a positive L-valuation.
  std::uint64_t bridge_exceptions = 0;

  std::uint64_t primes_examined() const {
    std::uint64_t s = 0;
    for (auto c : primes_per_degree) s += c;
    return s;
  }
  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

inline unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CARLITZ_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, count) over a worker pool; rethrows the first failure.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          const std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

inline ScanResult scan(const FieldPtr& field, unsigned max_degree, const ScanOptions& options = {}) {
  if (max_degree < 1) throw std::invalid_argument("scan: max_degree must be at least 1");
  ScanResult result;
  result.q = field->q();
  result.field_modulus = field->is_prime_field() ? "" : render_modulus(*field);
  result.max_degree = max_degree;
  std::vector<Poly> primes;
  for (unsigned d = 1; d <= max_degree; ++d) {
    auto batch = monic_irreducibles(field, d);
    result.primes_per_degree.push_back(batch.size());
    primes.insert(primes.end(), batch.begin(), batch.end());
  }
  // Without cross-checks only irregular primes are classified in full.
  const bool check_all = options.classify.check_local || options.classify.cross_check_l;
  std::vector<std::optional<PrimeReport>> slots(primes.size());
  parallel_for(primes.size(), thread_count(options.threads), [&](std::size_t i) {
    if (!check_all && irregular_indices(bc_numbers(primes[i])).empty()) return;
    slots[i] = classify_prime(primes[i], options.classify);
  });
  for (auto& s : slots) {
    if (!s) continue;
    for (auto& problem : validate_report(*s)) result.failures.push_back(std::move(problem));
    result.bridge_exceptions += s->bridge_exceptions.size();
    if (!s->irregular.empty()) result.reports.push_back(std::move(*s));
  }
  return result;
}

inline ScanResult scan(unsigned q, unsigned max_degree, const ScanOptions& options = {},
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
  const auto [p, r] = split_prime_power(q);
  return scan(fq_make(p, r, std::move(modulus)), max_degree, options);
}

}  // namespace carlitz
