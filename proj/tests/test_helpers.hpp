#ifndef HOLANT_TEST_HELPERS_HPP
#define HOLANT_TEST_HELPERS_HPP

#include <vector>

#include "holant/engine.hpp"
#include "holant/fibonacci_d3.hpp"
#include "holant/fibonacci_d4.hpp"

namespace holant::testing {

inline Complex cr(double re) { return Complex{re, 0.0}; }

// Orthogonal triple {(1,1,-2), (1,-1,0), (1,1,1)} with unit weights;
// parameters (s,x,y,t) = (0,0,1,-1).
inline d3::Basis basis_b3() {
  d3::Basis b;
  b.weights = {cr(1), cr(1), cr(1)};
  b.vectors = {{{cr(1), cr(1), cr(-2)}, {cr(1), cr(-1), cr(0)}, {cr(1), cr(1), cr(1)}}};
  return b;
}

// Orthogonal triple {(1,-2,1), (1,0,-1), (1,1,1)}; parameters (-1,1,0,0).
inline d3::Basis basis_b3_prime() {
  d3::Basis b;
  b.weights = {cr(1), cr(1), cr(1)};
  b.vectors = {{{cr(1), cr(-2), cr(1)}, {cr(1), cr(0), cr(-1)}, {cr(1), cr(1), cr(1)}}};
  return b;
}

// Hadamard quadruple with unit weights; fitted parameters a..j = 0, p = 1.
inline d4::Basis basis_h4() {
  d4::Basis b;
  b.weights = {cr(1), cr(1), cr(1), cr(1)};
  b.vectors = {{{cr(1), cr(1), cr(1), cr(1)},
                {cr(1), cr(1), cr(-1), cr(-1)},
                {cr(1), cr(-1), cr(1), cr(-1)},
                {cr(1), cr(-1), cr(-1), cr(1)}}};
  return b;
}

inline d3::Params params_b3() { return d3::Params{cr(0), cr(0), cr(1), cr(-1)}; }
inline d3::Params params_b3_prime() { return d3::Params{cr(-1), cr(1), cr(0), cr(0)}; }
inline d4::Params params_h4() {
  return d4::Params{cr(0), cr(0), cr(0), cr(0), cr(0), cr(0), cr(0), cr(0), cr(0), cr(1)};
}

// Arity-3 values of the B3 gate in canonical order.
inline std::vector<Complex> b3_fixture_values() {
  return {cr(3), cr(1), cr(-1), cr(3), cr(-1), cr(5), cr(1), cr(-1), cr(5), cr(-7)};
}

// 1 iff all three inputs take distinct colors; not a Fibonacci gate.
inline SymmetricSignature all_distinct_d3() {
  SymmetricSignature g = SymmetricSignature::zeros(3, 3);
  g.at({1, 1, 1}) = cr(1);
  return g;
}

// Two vertices joined by `edges` parallel edges, both carrying `sig`.
inline SignatureGrid two_vertex_grid(const SymmetricSignature &sig, int edges) {
  SignatureGrid grid;
  grid.domain_size = sig.domain_size;
  grid.signatures = {{"g", sig}};
  grid.vertex_signature = {0, 0};
  for (int e = 0; e < edges; ++e) grid.edges.emplace_back(0, 1);
  return grid;
}

inline SignatureGrid disjoint_union(const SignatureGrid &a, const SignatureGrid &b) {
  SignatureGrid out = a;
  const int voff = a.vertex_count();
  const int soff = static_cast<int>(a.signatures.size());
  for (const auto &entry : b.signatures) out.signatures.push_back({entry.name + "'", entry.signature});
  for (int s : b.vertex_signature) out.vertex_signature.push_back(s + soff);
  for (const auto &[u, v] : b.edges) out.edges.emplace_back(u + voff, v + voff);
  return out;
}

}  // namespace holant::testing

#endif
