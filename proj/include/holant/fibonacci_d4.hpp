#ifndef HOLANT_FIBONACCI_D4_HPP
#define HOLANT_FIBONACCI_D4_HPP

#include <array>
#include <vector>

#include "holant/complex.hpp"
#include "holant/fit.hpp"
#include "holant/signature.hpp"

namespace holant::d4 {

// Recurrence coefficients of a domain-4 generalized Fibonacci gate: the
// coefficient tetrahedra a..j plus the shared center p.
struct Params {
  Complex a, b, c, d, e, f, h, i, j, p;
};

// Weighted quadruple of vectors (1, t1, t2, t3), ... with vanishing pairwise
// bilinear dot products and nonzero weights.
struct Basis {
  std::array<Complex, 4> weights;
  std::array<std::array<Complex, 4>, 4> vectors;
};

// The three dot-product relations plus the cubic in p.
bool check_params(const Params &P, const Tolerance &tol = {});

// The three quadratic side relations (consequences of the main constraints;
// checked separately, not folded into validity).
bool check_side_relations(const Params &P, const Tolerance &tol = {});

bool is_orthogonal(const Basis &B, const Tolerance &tol = {});
void require_orthogonal(const Basis &B, const Tolerance &tol = {});

// Arity-n signature with entries g_{w,x,y,z} = sum_v w_v t1_v^x t2_v^y t3_v^z.
SymmetricSignature generate(const Basis &B, int arity, const Tolerance &tol = {});

// True for arities <= 1; otherwise true iff P is valid and every depth-2
// tetrahedron satisfies all six recurrences.
bool verify_gate(const SymmetricSignature &g, const Params &P, const Tolerance &tol = {});

// Least-squares fit of the 10 parameters; underdetermined when rank < 10.
FitResult<Params> fit_params(const std::vector<SymmetricSignature> &gs, const Tolerance &tol = {});

// Unique arity-n signature with top entries g_{n,0,0,0}, g_{n-1,1,0,0},
// g_{n-1,0,1,0}, g_{n-1,0,0,1} satisfying all recurrences.
SymmetricSignature complete_from_top(const std::array<Complex, 4> &top, const Params &P, int arity,
                                     const Tolerance &tol = {});

}  // namespace holant::d4

#endif
