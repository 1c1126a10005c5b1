#ifndef HOLANT_SIGNATURE_HPP
#define HOLANT_SIGNATURE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "holant/complex.hpp"

namespace holant {

// Color multiplicities of a symmetric signature entry. Length is the domain
// size, entries are non-negative and sum to the arity.
using CountVector = std::vector<int>;

std::int64_t binomial(std::int64_t n, std::int64_t k);

// Number of entries of a symmetric signature: C(arity + d - 1, d - 1).
std::int64_t entry_count(int domain_size, int arity);

// Canonical entry order is lexicographically decreasing on the count vector,
// so for d = 3, n = 3 it reads (3,0,0), (2,1,0), (2,0,1), ..., (0,0,3).
std::int64_t rank_of_count(const CountVector &c);
CountVector count_of_rank(int domain_size, int arity, std::int64_t rank);

// All count vectors of (domain_size, arity) in canonical order.
std::vector<CountVector> all_counts(int domain_size, int arity);

// Dense symmetric signature over a finite domain. Values are stored in
// canonical order and are immutable once built.
struct SymmetricSignature {
  int domain_size = 0;
  int arity = 0;
  std::vector<Complex> values;

  static SymmetricSignature zeros(int domain_size, int arity);

  const Complex &at(const CountVector &c) const { return values[static_cast<std::size_t>(rank_of_count(c))]; }
  Complex &at(const CountVector &c) { return values[static_cast<std::size_t>(rank_of_count(c))]; }

  // Throws std::invalid_argument when the value table does not match
  // (domain_size, arity) or holds a non-finite entry.
  void check_invariants() const;
};

// Value on an explicit color assignment; order is irrelevant by symmetry.
// Throws on out-of-domain colors or a length mismatch.
Complex evaluate(const SymmetricSignature &g, std::span<const int> assignment);

}  // namespace holant

#endif
