// The classic non-unique factorization: 441 = 9 * 49 = 21 * 21 in the
// Hilbert monoid M_{1,4}, shown with its block-monoid image.

#include <iostream>

#include "acm/acm.hpp"
#include "acm/block_monoid.hpp"
#include "acm/factorizations.hpp"

int main() {
  acm::Acm hilbert = acm::Acm::create(1, 4);

  for (acm::u64 n : {9, 21, 49, 441})
    std::cout << n << " is " << acm::to_string(acm::classify(hilbert, n))
              << " in M_{1,4}\n";

  std::cout << "\nfactorizations of 441 into atoms:\n";
  for (const auto& f : acm::factorizations(hilbert, 441)) {
    std::cout << "  441 =";
    for (acm::u64 atom : f) std::cout << " " << atom;
    std::cout << "\n";
  }

  acm::Block image = acm::transfer(hilbert, 441);
  std::cout << "\nblock image of 441 mod 4: {";
  for (std::size_t i = 0; i < image.letters.size(); ++i)
    std::cout << (i ? "," : "") << image.letters[i];
  std::cout << "}  atom: " << std::boolalpha << acm::is_block_atom(image) << "\n";
  return 0;
}
