#ifndef HOLANT_LINALG_HPP
#define HOLANT_LINALG_HPP

#include <array>
#include <vector>

#include "holant/complex.hpp"

namespace holant {

// Minimum-norm residual solve of an overdetermined complex system by
// column-pivoted Householder QR. `rank` is the numerical rank; `solution`
// is empty when rank < columns.
struct LeastSquaresResult {
  std::vector<Complex> solution;
  int rank = 0;
  double residual = 0.0;  // ||A x - b||_2, valid when solution is present
  double rhs_norm = 0.0;  // ||b||_2
};

LeastSquaresResult least_squares(const std::vector<std::vector<Complex>> &rows, const std::vector<Complex> &rhs,
                                 double rank_rtol = 1e-10);

// Roots of z^3 + c2 z^2 + c1 z + c0. Cardano start, Newton polish.
std::array<Complex, 3> cubic_roots(const Complex &c2, const Complex &c1, const Complex &c0);

}  // namespace holant

#endif
