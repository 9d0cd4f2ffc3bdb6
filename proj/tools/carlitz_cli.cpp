// carlitz: batch scanner for irregular primes of F_q[t].
//
// Exit codes: 0 clean, 1 usage error, 2 consistency or precision failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "carlitz/carlitz.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

struct CommonFlags {
  unsigned q = 0;
  std::string fq_modulus;
  unsigned precision = carlitz::WittRing::kDefaultPrecision;
  bool check_local = false;
  bool timings = false;
  std::string format = "table";
  std::string out;
  std::string witt_lift = "naive";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--q", f.q, "Size of the constant field")->required();
  cmd->add_option("--fq-modulus", f.fq_modulus, "Modulus of F_q over F_p as a polynomial in x");
  cmd->add_option("--precision", f.precision, "Initial Witt precision k")->check(CLI::Range(1U, 96U));
  cmd->add_flag("--check-local", f.check_local, "Cross-check against the local expansion");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", f.out, "Write output to this path");
  cmd->add_flag("--timings", f.timings, "Record per-prime timings");
  cmd->add_option("--witt-lift", f.witt_lift, "Structural lift of the residue modulus")
      ->check(CLI::IsMember({"naive", "shifted"}))
      ->group("");
}

carlitz::FieldPtr make_field(const CommonFlags& f) {
  const auto [p, r] = carlitz::split_prime_power(f.q);
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!f.fq_modulus.empty()) modulus = carlitz::parse_prime_modulus(p, f.fq_modulus);
  return carlitz::fq_make(p, r, modulus);
}

carlitz::ClassifyOptions classify_options(const CommonFlags& f) {
  carlitz::ClassifyOptions o;
  o.precision = f.precision;
  o.lift = f.witt_lift == "shifted" ? carlitz::WittRing::Lift::shifted : carlitz::WittRing::Lift::naive;
  o.check_local = f.check_local;
  o.record_timings = f.timings;
  return o;
}

void emit(const carlitz::ScanResult& s, const CommonFlags& f, std::ostream& os) {
  if (f.format == "json")
    carlitz::emit_json(s, os);
  else if (f.format == "csv")
    carlitz::emit_csv(s, os);
  else
    carlitz::emit_table(s, os, f.timings);
}

int write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitUsage;
  }
  return 0;
}

int run_scan(const CommonFlags& f, unsigned max_degree) {
  carlitz::ScanOptions options;
  options.classify = classify_options(f);
  const auto result = carlitz::scan(make_field(f), max_degree, options);
  std::ostringstream os;
  emit(result, f, os);
  if (const int rc = write_out(os.str(), f.out)) return rc;
  for (const auto& problem : result.failures) std::cerr << "consistency failure: " << problem << "\n";
  return result.failures.empty() ? 0 : kExitInconsistent;
}

int run_classify(const CommonFlags& f, const std::string& prime_text) {
  const auto field = make_field(f);
  const auto prime = carlitz::parse_poly(field, prime_text);
  if (!prime.is_monic() || !carlitz::is_irreducible(prime)) {
    std::cerr << "error: " << prime_text << " is not a monic irreducible polynomial\n";
    return kExitUsage;
  }
  const auto report = carlitz::classify_prime(prime, classify_options(f));
  const auto problems = carlitz::validate_report(report);
  std::ostringstream os;
  if (f.format == "table") {
    carlitz::emit_prime_detail(report, os);
  } else {
    carlitz::ScanResult s;
    s.q = report.q;
    s.field_modulus = field->is_prime_field() ? "" : carlitz::render_modulus(*field);
    s.max_degree = report.degree;
    s.reports.push_back(report);
    s.failures = problems;
    s.bridge_exceptions = report.bridge_exceptions.size();
    emit(s, f, os);
  }
  if (const int rc = write_out(os.str(), f.out)) return rc;
  for (const auto& problem : problems) std::cerr << "consistency failure: " << problem << "\n";
  return problems.empty() ? 0 : kExitInconsistent;
}

int run_bc(const CommonFlags& f, const std::string& prime_text) {
  const auto field = make_field(f);
  const auto prime = carlitz::parse_poly(field, prime_text);
  if (!prime.is_monic() || !carlitz::is_irreducible(prime)) {
    std::cerr << "error: " << prime_text << " is not a monic irreducible polynomial\n";
    return kExitUsage;
  }
  const auto bc = carlitz::bc_numbers(prime);
  std::ostringstream os;
  os << "BC_n mod " << carlitz::render_poly(prime) << "\n";
  for (std::size_t n = 0; n < bc.size(); ++n)
    os << n << " | " << carlitz::render_poly(bc.field->to_poly(bc[n])) << "\n";
  return write_out(os.str(), f.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irregular primes of F_q[t] via Carlitz-Bernoulli numbers"};
  app.require_subcommand(1);

  CommonFlags scan_flags;
  unsigned max_degree = 0;
  auto* scan_cmd = app.add_subcommand("scan", "List irregular primes up to a degree bound");
  add_common(scan_cmd, scan_flags);
  scan_cmd->add_option("--max-degree", max_degree, "Largest prime degree")->required()->check(CLI::PositiveNumber);

  CommonFlags classify_flags;
  std::string classify_prime;
  auto* classify_cmd = app.add_subcommand("classify", "Per-index classification for one prime");
  add_common(classify_cmd, classify_flags);
  classify_cmd->add_option("--prime", classify_prime, "Monic irreducible polynomial in t")->required();

  CommonFlags bc_flags;
  std::string bc_prime;
  auto* bc_cmd = app.add_subcommand("bc", "Print BC_n mod p for every n");
  bc_cmd->add_option("--q", bc_flags.q, "Size of the constant field")->required();
  bc_cmd->add_option("--fq-modulus", bc_flags.fq_modulus, "Modulus of F_q over F_p as a polynomial in x");
  bc_cmd->add_option("--prime", bc_prime, "Monic irreducible polynomial in t")->required();
  bc_cmd->add_option("--out", bc_flags.out, "Write output to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*scan_cmd) return run_scan(scan_flags, max_degree);
    if (*classify_cmd) return run_classify(classify_flags, classify_prime);
    return run_bc(bc_flags, bc_prime);
  } catch (const carlitz::PrecisionError& e) {
    std::cerr << "precision failure: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
}
