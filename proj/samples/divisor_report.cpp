// Minimal library tour: exact divisor means for a few n, plus the
// enumeration of harmonic numbers below 1000.

#include <iostream>

#include "biharmonic/divisor_means.hpp"

int main() {
  using namespace biharmonic;

  for (int n : {6, 12, 35, 140, 496}) {
    const auto r = divisor_means(n);
    std::cout << "n = " << r.n << ":  A = " << r.arithmetic
              << "  H = " << r.harmonic << "  C = " << r.contraharmonic
              << "  B = " << r.biharmonic;
    if (r.is_harmonic) std::cout << "  (harmonic, H = " << *r.harmonic_value << ")";
    if (r.is_biharmonic) std::cout << "  (biharmonic)";
    std::cout << "\n";
  }

  const auto harmonic = enumerate_numbers(SequenceKind::harmonic, 1000);
  std::cout << "\nharmonic numbers <= 1000:";
  for (auto n : harmonic.terms) std::cout << " " << n;
  std::cout << "\n";
  return 0;
}
