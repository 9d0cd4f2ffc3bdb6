// Shows the local expansion at a prime: t as a series in the torsion
// generator lambda, the eigen-uniformizer pi, and the Carlitz-Bernoulli
// numbers read off from dlog lambda.
//
//   sample_local_expansion [q] [prime]

#include <cstdlib>
#include <iostream>
#include <string>

#include "carlitz/carlitz.hpp"

namespace {

void print_series(const char* name, const carlitz::LocalSeries& s, std::size_t terms) {
  const auto& f = s.ring();
  std::cout << name << " =";
  bool any = false;
  for (std::size_t i = 0; i < std::min(terms, s.order()); ++i) {
    if (f.is_zero(s.coeff(i))) continue;
    std::cout << (any ? " + " : " ") << '(' << carlitz::render_poly(f.to_poly(s.coeff(i))) << ")*L^" << i;
    any = true;
  }
  std::cout << (any ? "" : " 0") << " + O(L^" << std::min(terms, s.order()) << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  const unsigned q = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 2;
  const std::string text = argc > 2 ? argv[2] : "t^2 + t + 1";
  const auto [p, r] = carlitz::split_prime_power(q);
  const auto prime = carlitz::parse_poly(carlitz::fq_make(p, r), text);

  const carlitz::LocalModel model(prime);
  print_series("t", model.t_series(), 12);
  const auto pi = carlitz::eigen_uniformizer(model);
  print_series("pi", pi.pi, 12);

  const carlitz::LocalDlogTable table(model);
  const auto local = carlitz::LocalBernoulli(table, pi).all();
  const auto direct = carlitz::bc_numbers(prime);
  for (std::size_t n = 2; n < local.size(); ++n)
    std::cout << "BC_" << n << " = " << carlitz::render_poly(model.residue_field()->to_poly(local[n]))
              << (local[n] == direct[n] ? "" : "  (mismatch)") << '\n';
}
