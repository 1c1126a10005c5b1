#ifndef HOLANT_GRID_IO_HPP
#define HOLANT_GRID_IO_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "holant/engine.hpp"

namespace holant {

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signature list without graph structure, as consumed by fit/verify.
struct SignatureSet {
  int domain_size = 0;
  std::vector<NamedSignature> entries;
};

using AnyBasis = std::variant<d3::Basis, d4::Basis>;

// Documents are JSON. Complex values are [re, im] arrays (a bare number is
// accepted on input as a real). Signature values are listed densely in
// canonical order; a signature may instead carry a "generator"
// {weights, vectors} which is expanded and orthogonality-checked at load.
SignatureSet parse_signatures(const std::string &text);
SignatureGrid parse_grid(const std::string &text);
FibParams parse_params(const std::string &text);
AnyBasis parse_basis(const std::string &text);

std::string emit_grid(const SignatureGrid &grid);
std::string emit_signatures(const SignatureSet &set);
std::string emit_params(const FibParams &params);
std::string emit_basis(const AnyBasis &basis);

// "[re, im]" with 17 significant digits.
std::string format_complex(const Complex &z);

}  // namespace holant

#endif
