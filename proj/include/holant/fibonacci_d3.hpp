#ifndef HOLANT_FIBONACCI_D3_HPP
#define HOLANT_FIBONACCI_D3_HPP

#include <array>
#include <string>
#include <vector>

#include "holant/complex.hpp"
#include "holant/fit.hpp"
#include "holant/signature.hpp"

namespace holant::d3 {

// Recurrence coefficients of a domain-3 generalized Fibonacci gate. Valid
// parameters satisfy s*y + x*t + 1 = x^2 + y^2.
struct Params {
  Complex s, x, y, t;
};

// Weighted triple of vectors (1,a,b), (1,c,d), (1,e,f) whose pairwise
// bilinear dot products vanish. Weights must be nonzero.
struct Basis {
  std::array<Complex, 3> weights;
  std::array<std::array<Complex, 3>, 3> vectors;
};

bool check_params(const Params &P, const Tolerance &tol = {});

bool is_orthogonal(const Basis &B, const Tolerance &tol = {});
// Throws std::invalid_argument when orthogonality or a weight invariant fails.
void require_orthogonal(const Basis &B, const Tolerance &tol = {});

// Closed form x = -bdf, y = -ace, s = ace+a+c+e, t = bdf+b+d+f.
Params params_from_basis(const Basis &B, const Tolerance &tol = {});

// Arity-n signature with entries g_{i,j,k} = sum_v w_v a_v^j b_v^k.
SymmetricSignature generate(const Basis &B, int arity, const Tolerance &tol = {});

// True for arities <= 1; otherwise true iff P is valid and every depth-2
// triangle satisfies the three recurrences.
bool verify_gate(const SymmetricSignature &g, const Params &P, const Tolerance &tol = {});

// Least-squares fit of (s,x,y,t) over all recurrence instances of all
// signatures. Reports underdetermined when the system has rank < 4.
FitResult<Params> fit_params(const std::vector<SymmetricSignature> &gs, const Tolerance &tol = {});

// Unique arity-n signature with the given top entries g_{n,0,0}, g_{n-1,1,0},
// g_{n-1,0,1} whose layers all satisfy the recurrences.
SymmetricSignature complete_from_top(const std::array<Complex, 3> &top, const Params &P, int arity,
                                     const Tolerance &tol = {});

// {a,c,e} recovered as the roots of the cubic t^3 - Yt^2 + Zt - X; the third
// components b,d,f follow by division when no recovery product vanishes.
struct BasisRecovery {
  std::array<Complex, 3> roots;
  bool degenerate = false;
  std::string diagnostic;  // set when degenerate
  Basis basis{};           // unit weights; populated when !degenerate
};
BasisRecovery recover_basis(const Params &P, const Tolerance &tol = {});

}  // namespace holant::d3

#endif
