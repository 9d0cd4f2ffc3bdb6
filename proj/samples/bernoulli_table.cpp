// Prints the irregular indices and L-value lengths of every prime of F_q[t]
// up to a degree bound.
//
//   sample_bernoulli_table [q] [max_degree]

#include <cstdlib>
#include <iostream>

#include "carlitz/carlitz.hpp"

int main(int argc, char** argv) {
  const unsigned q = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 2;
  const unsigned max_degree = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 4;
  const auto [p, r] = carlitz::split_prime_power(q);
  const auto field = carlitz::fq_make(p, r);

  for (unsigned d = 1; d <= max_degree; ++d) {
    for (const auto& prime : carlitz::monic_irreducibles(field, d)) {
      const auto bc = carlitz::bc_numbers(prime);
      const auto irregular = carlitz::irregular_indices(bc);
      std::cout << carlitz::render_poly(prime) << "  " << carlitz::index_set_text(irregular);
      if (!irregular.empty()) {
        const carlitz::CharacterContext ctx(bc.field);
        std::cout << "  lengths";
        for (auto n : irregular) std::cout << ' ' << carlitz::pic_eigenspace_length(ctx, n).length;
      }
      std::cout << '\n';
    }
  }
}
