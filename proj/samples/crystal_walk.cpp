// Walks the w = 5 recurrence orbit and shows how consecutive u-terms turn
// into crystal factorizations, then confirms each against the divisor-pair
// brute force.

#include <iostream>

#include "biharmonic/crystals.hpp"

int main() {
  using namespace biharmonic;

  const std::uint64_t w = 5;
  const auto u = u_sequence(w, 6);
  std::cout << "u(w=" << w << "): ";
  for (const auto& v : u) std::cout << v << " ";
  std::cout << "\n\n";

  for (const auto& rec : generate_crystals(w, 6)) {
    std::cout << "N = " << rec.n << " = " << rec.a << " * " << rec.b
              << "   (index " << *rec.index << ", B = "
              << pair_invariants(rec.a, rec.b).b << ")\n";
    const auto oracle = crystal_decompositions(rec.n);
    std::cout << "   brute force sees " << oracle.size()
              << " decomposition(s)\n";
  }
  return 0;
}
