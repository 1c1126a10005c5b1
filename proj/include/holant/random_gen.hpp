#ifndef HOLANT_RANDOM_GEN_HPP
#define HOLANT_RANDOM_GEN_HPP

#include <random>

#include "holant/engine.hpp"
#include "holant/fibonacci_d3.hpp"
#include "holant/fibonacci_d4.hpp"

namespace holant {

// Rejection bounds for sampled bases; defaults keep generated signature
// values well inside double range even at high arity.
struct BasisSampleOptions {
  double max_component = 2.5;       // modulus bound after rescaling
  double min_leading = 0.25;        // first coordinate before rescaling
  double min_self_dot = 0.05;       // bilinear <v,v> (isotropic rejection)
  double min_root_gap = 0.0;        // pairwise gap of second components (d=3)
  bool real_valued = false;         // sample real vectors (still bilinear-orthogonal)
};

struct SampledBasisD3 {
  d3::Basis basis;
  d3::Params params;
};

struct SampledBasisD4 {
  d4::Basis basis;
  d4::Params params;
};

// Gram-Schmidt with the bilinear dot product, rescaled to unit first
// coordinate; retried until the bounds hold (and, for d4, the parameter fit
// succeeds). Deterministic given the generator state.
SampledBasisD3 sample_basis_d3(std::mt19937_64 &rng, const BasisSampleOptions &opts = {});
SampledBasisD4 sample_basis_d4(std::mt19937_64 &rng, const BasisSampleOptions &opts = {});

Complex random_weight(std::mt19937_64 &rng);  // modulus in [0.5, 1.5]

struct RandomGridSpec {
  int domain = 3;  // 3 or 4
  int min_vertices = 2;
  int max_vertices = 6;
  int min_degree = 1;
  int max_degree = 4;
  int max_edges = 8;
};

struct FibonacciGridSample {
  SignatureGrid grid;
  FibParams params;
};

// Random multigraph (configuration model, so self-loops and parallel edges
// occur) with every vertex signature generated from one shared basis.
FibonacciGridSample random_fibonacci_grid(std::mt19937_64 &rng, const RandomGridSpec &spec);

// Connected-ish regular multigraph of the given degree, same construction.
FibonacciGridSample random_regular_grid(std::mt19937_64 &rng, int domain, int vertices, int degree);

}  // namespace holant

#endif
