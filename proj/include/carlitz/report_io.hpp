#pragma once

/**
 * @file report_io.hpp
 * @brief Table, JSON and CSV renderings of scan results.
 *
 * JSON layout (schema_version "1"):
 *
 *   { "schema_version": "1", "q": 3, "field_modulus": "", "max_degree": 4,
 *     "primes_per_degree": [3, 3, 8, 18], "primes_examined": 32,
 *     "bridge_exceptions": 0, "failures": [],
 *     "reports": [ { "prime": "t^3 - t + 1", "degree": 3, "irregular": [10],
 *                    "dim": "1", "witt_precision": 12, "local_checked": false,
 *                    "bridge_exceptions": [], "failures": [],
 *                    "indices": [ { "n": 2, "divisible_by_q_minus_1": true,
 *                                   "bc_divisible": false, "pic_length": 3,
 *                                   "h1_dim": "exact_0",
 *                                   "local_dlog_vanished": null,
 *                                   "raw_numerator_valuation": null }, ... ],
 *                    "timings": { ... }   // only when recorded
 *                  } ] }
 */

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "carlitz/herbrand.hpp"

namespace carlitz {

inline constexpr const char* kSchemaVersion = "1";

/// The dim column: count of nonzero eigenspaces, prefixed by "≥" when any is a lower bound.
inline std::string dim_text(const PrimeReport& r) {
  return (r.dim_is_lower_bound() ? "≥" : "") + std::to_string(r.dim_count());
}

inline std::string index_set_text(const std::vector<unsigned>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + "}";
}

namespace detail {

inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

inline std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return s + std::string(width > w ? width - w : 0, ' ');
}

inline std::string field_line(const ScanResult& s) {
  if (s.field_modulus.empty()) return "";
  const auto [p, r] = split_prime_power(s.q);
  (void)r;
  return "F_" + std::to_string(s.q) + " = F_" + std::to_string(p) + "(a), minimal polynomial of a: " + s.field_modulus + "\n";
}

inline std::string timing_text(const Timings& t) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << (t.bernoulli_ms + t.lseries_ms + t.local_ms);
  return os.str();
}

}  // namespace detail

inline void emit_table(const ScanResult& s, std::ostream& os, bool timings = false) {
  os << "Irregular primes in F_" << s.q << "[t] of degree at most " << s.max_degree << "\n" << detail::field_line(s);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"prime", "{ n : p | BC_n }", "dim H^1"};
  if (timings) header.push_back("ms");
  rows.push_back(header);
  bool lower_bound = false;
  for (const auto& r : s.reports) {
    std::vector<std::string> row{r.prime, index_set_text(r.irregular), dim_text(r)};
    if (timings) row.push_back(r.timings ? detail::timing_text(*r.timings) : "-");
    lower_bound = lower_bound || r.dim_is_lower_bound();
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], detail::display_width(row[i]));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::string line;
    for (std::size_t i = 0; i < rows[k].size(); ++i) {
      if (i > 0) line += " | ";
      line += i + 1 == rows[k].size() ? rows[k][i] : detail::pad(rows[k][i], width[i]);
    }
    os << line << "\n";
    if (k == 0) {
      std::string rule;
      for (std::size_t i = 0; i < width.size(); ++i) rule += (i ? "-+-" : "") + std::string(width[i], '-');
      os << rule << "\n";
    }
  }
  if (lower_bound)
    os << "≥: L(1) has positive valuation for an index with p | BC_n; the exact dimension needs a direct "
          "cohomology computation that this tool does not perform.\n";
  if (!s.failures.empty()) {
    os << "consistency failures:\n";
    for (const auto& f : s.failures) os << "  " << f << "\n";
  }
}

/// Per-index listing for a single prime.
inline void emit_prime_detail(const PrimeReport& r, std::ostream& os) {
  os << "prime " << r.prime << " (q = " << r.q << ", degree " << r.degree << ")\n";
  os << "irregular indices " << index_set_text(r.irregular) << ", dim H^1 " << dim_text(r) << "\n";
  os << "witt precision " << r.witt_precision << "\n\n";
  os << "n | p divides BC_n | L-valuation | dim H^1(chi^(n-1))";
  if (r.local_checked) os << " | dlog lambda_n = 0";
  os << "\n";
  for (const auto& c : r.indices) {
    if (!c.divisible_by_q_minus_1) continue;
    os << c.n << " | " << (c.bc_divisible ? "yes" : "no") << " | " << c.pic_length.value_or(0) << " | ";
    switch (c.h1_dim) {
      case H1Dim::exact_zero: os << "0"; break;
      case H1Dim::exact_one: os << "1"; break;
      case H1Dim::at_least_one: os << "≥1"; break;
      case H1Dim::out_of_scope: os << "-"; break;
    }
    if (c.local_dlog_vanished) os << " | " << (*c.local_dlog_vanished ? "yes" : "no");
    os << "\n";
  }
  bool banner = false;
  for (const auto& c : r.indices) {
    if (c.divisible_by_q_minus_1) continue;
    if (!banner) {
      os << "\nq-1 does not divide n: raw data, no in-scope interpretation\n";
      os << "n | valuation of S_n(1)";
      if (r.local_checked) os << " | dlog lambda_n = 0";
      os << "\n";
      banner = true;
    }
    os << c.n << " | " << c.raw_numerator_valuation.value_or(0);
    if (c.local_dlog_vanished) os << " | " << (*c.local_dlog_vanished ? "yes" : "no");
    os << "\n";
  }
  if (!r.bridge_exceptions.empty())
    os << "\nnonzero dlog lambda_n with positive L-valuation at n in " << index_set_text(r.bridge_exceptions) << "\n";
  if (!r.failures.empty()) {
    os << "\nconsistency failures:\n";
    for (const auto& f : r.failures) os << "  " << f << "\n";
  }
}

// JSON

inline nlohmann::json to_json(const IndexClassification& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["divisible_by_q_minus_1"] = c.divisible_by_q_minus_1;
  j["bc_divisible"] = c.bc_divisible;
  j["pic_length"] = c.pic_length ? nlohmann::json(*c.pic_length) : nlohmann::json(nullptr);
  j["h1_dim"] = std::string(to_string(c.h1_dim));
  j["local_dlog_vanished"] = c.local_dlog_vanished ? nlohmann::json(*c.local_dlog_vanished) : nlohmann::json(nullptr);
  j["raw_numerator_valuation"] =
      c.raw_numerator_valuation ? nlohmann::json(*c.raw_numerator_valuation) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const PrimeReport& r) {
  nlohmann::json j;
  j["q"] = r.q;
  j["prime"] = r.prime;
  j["degree"] = r.degree;
  j["irregular"] = r.irregular;
  j["dim"] = dim_text(r);
  j["witt_precision"] = r.witt_precision;
  j["local_checked"] = r.local_checked;
  j["bridge_exceptions"] = r.bridge_exceptions;
  j["failures"] = r.failures;
  auto& idx = j["indices"] = nlohmann::json::array();
  for (const auto& c : r.indices) idx.push_back(to_json(c));
  if (r.timings)
    j["timings"] = {{"bernoulli_ms", r.timings->bernoulli_ms},
                    {"lseries_ms", r.timings->lseries_ms},
                    {"local_ms", r.timings->local_ms}};
  return j;
}

inline nlohmann::json to_json(const ScanResult& s) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["q"] = s.q;
  j["field_modulus"] = s.field_modulus;
  j["max_degree"] = s.max_degree;
  j["primes_per_degree"] = s.primes_per_degree;
  j["primes_examined"] = s.primes_examined();
  j["bridge_exceptions"] = s.bridge_exceptions;
  j["failures"] = s.failures;
  auto& reports = j["reports"] = nlohmann::json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return j;
}

namespace detail {

template <typename T>
std::optional<T> optional_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace detail

inline IndexClassification index_from_json(const nlohmann::json& j) {
  IndexClassification c;
  c.n = j.at("n").get<unsigned>();
  c.divisible_by_q_minus_1 = j.at("divisible_by_q_minus_1").get<bool>();
  c.bc_divisible = j.at("bc_divisible").get<bool>();
  c.pic_length = detail::optional_field<unsigned>(j, "pic_length");
  const auto dim = h1_dim_from_string(j.at("h1_dim").get<std::string>());
  if (!dim) throw std::invalid_argument("unknown h1_dim value");
  c.h1_dim = *dim;
  c.local_dlog_vanished = detail::optional_field<bool>(j, "local_dlog_vanished");
  c.raw_numerator_valuation = detail::optional_field<unsigned>(j, "raw_numerator_valuation");
  return c;
}

inline PrimeReport prime_report_from_json(const nlohmann::json& j) {
  PrimeReport r;
  r.q = j.at("q").get<unsigned>();
  r.prime = j.at("prime").get<std::string>();
  r.degree = j.at("degree").get<unsigned>();
  r.irregular = j.at("irregular").get<std::vector<unsigned>>();
  r.witt_precision = j.at("witt_precision").get<unsigned>();
  r.local_checked = j.at("local_checked").get<bool>();
  r.bridge_exceptions = j.at("bridge_exceptions").get<std::vector<unsigned>>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  for (const auto& c : j.at("indices")) r.indices.push_back(index_from_json(c));
  if (j.contains("timings")) {
    const auto& t = j.at("timings");
    r.timings = Timings{t.at("bernoulli_ms").get<double>(), t.at("lseries_ms").get<double>(), t.at("local_ms").get<double>()};
  }
  return r;
}

inline ScanResult scan_result_from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<std::string>() != kSchemaVersion) throw std::invalid_argument("unsupported schema_version");
  ScanResult s;
  s.q = j.at("q").get<unsigned>();
  s.field_modulus = j.at("field_modulus").get<std::string>();
  s.max_degree = j.at("max_degree").get<unsigned>();
  s.primes_per_degree = j.at("primes_per_degree").get<std::vector<std::uint64_t>>();
  s.bridge_exceptions = j.at("bridge_exceptions").get<std::uint64_t>();
  s.failures = j.at("failures").get<std::vector<std::string>>();
  for (const auto& r : j.at("reports")) s.reports.push_back(prime_report_from_json(r));
  return s;
}

inline void emit_json(const ScanResult& s, std::ostream& os) { os << to_json(s).dump(2) << "\n"; }

// CSV

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

template <typename T>
std::string csv_optional(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>)
    return *v ? "true" : "false";
  else
    return std::to_string(*v);
}

}  // namespace detail

inline constexpr const char* kCsvHeader =
    "q,prime,degree,n,divisible_by_q_minus_1,bc_divisible,pic_length,h1_dim,local_dlog_vanished,raw_numerator_valuation";

inline void emit_csv(const ScanResult& s, std::ostream& os) {
  os << kCsvHeader << "\n";
  for (const auto& r : s.reports) {
    for (const auto& c : r.indices) {
      os << r.q << ',' << detail::csv_field(r.prime) << ',' << r.degree << ',' << c.n << ','
         << (c.divisible_by_q_minus_1 ? "true" : "false") << ',' << (c.bc_divisible ? "true" : "false") << ','
         << detail::csv_optional(c.pic_length) << ',' << to_string(c.h1_dim) << ','
         << detail::csv_optional(c.local_dlog_vanished) << ',' << detail::csv_optional(c.raw_numerator_valuation)
         << "\n";
    }
  }
}

}  // namespace carlitz
