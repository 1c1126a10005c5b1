#ifndef HOLANT_ENGINE_HPP
#define HOLANT_ENGINE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "holant/complex.hpp"
#include "holant/fibonacci_d3.hpp"
#include "holant/fibonacci_d4.hpp"
#include "holant/signature.hpp"

namespace holant {

struct NamedSignature {
  std::string name;
  SymmetricSignature signature;
};

// A multigraph (self-loops and parallel edges allowed) with a signature per
// vertex. Vertex degree must equal signature arity, self-loops counting twice.
struct SignatureGrid {
  int domain_size = 0;
  std::vector<NamedSignature> signatures;
  std::vector<int> vertex_signature;  // index into signatures, one per vertex
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return static_cast<int>(vertex_signature.size()); }
  std::vector<int> degrees() const;
};

using FibParams = std::variant<d3::Params, d4::Params>;

struct GridValidation {
  bool ok = true;
  std::vector<std::string> issues;
};

// Structural checks (degrees, domains, well-formed signatures) plus the
// Fibonacci verification of every attached signature against P.
GridValidation validate_grid(const SignatureGrid &grid, const FibParams &P, const Tolerance &tol = {});

// Fragment of the grid with dangling edges; the signature ranges over them.
struct Gate {
  SymmetricSignature signature;
  std::vector<int> member_vertices;

  int dangling_count() const { return signature.arity; }
};

// Contract one dangling edge of F with one of G (disjoint gates), summing
// over the shared color. Entries are computed through a canonical greedy
// split of the output count vector; any split agrees for Fibonacci inputs.
Gate merge_cross(const Gate &F, const Gate &G);

// Contract two dangling edges of the same gate: H_m = sum_c F_{m + 2 e_c}.
Gate merge_self(const Gate &F);

class GridValidationError : public std::runtime_error {
 public:
  GridValidationError(std::string message, GridValidation validation)
      : std::runtime_error(std::move(message)), validation_(std::move(validation)) {}
  const GridValidation &validation() const { return validation_; }

 private:
  GridValidation validation_;
};

class MergePreservationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalOptions {
  bool strict = false;          // verify every intermediate gate against P
  bool min_arity_order = false; // contract the cheapest edge first
  Tolerance tol{};
};

struct EvalStats {
  int merges = 0;
  int max_intermediate_arity = 0;
};

// Polynomial-time Holant value: cut all edges, then merge dangling-edge pairs
// back one at a time, multiplying per-component scalars at the end.
// Throws GridValidationError when validate_grid fails and, in strict mode,
// MergePreservationError when an intermediate gate stops verifying.
Complex holant_eval(const SignatureGrid &grid, const FibParams &P, const EvalOptions &opts = {},
                    EvalStats *stats = nullptr);

}  // namespace holant

#endif
