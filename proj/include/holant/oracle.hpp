#ifndef HOLANT_ORACLE_HPP
#define HOLANT_ORACLE_HPP

#include <cstdint>
#include <stdexcept>

#include "holant/engine.hpp"

namespace holant {

class EnumerationCapError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BruteforceOptions {
  std::uint64_t term_cap = 10'000'000;  // maximum number of edge colorings
  int threads = 1;                      // chunked summation when > 1
};

// Ground truth: sum over all d^|E| edge colorings of the product of vertex
// signature values. No Fibonacci assumption; any domain size >= 2.
Complex holant_bruteforce(const SignatureGrid &grid, const BruteforceOptions &opts = {});

}  // namespace holant

#endif
