#include "holant/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace holant {

namespace {

double column_norm(const std::vector<std::vector<Complex>> &a, std::size_t col, std::size_t from) {
  double s = 0.0;
  for (std::size_t r = from; r < a.size(); ++r) s += std::norm(a[r][col]);
  return std::sqrt(s);
}

}  // namespace

LeastSquaresResult least_squares(const std::vector<std::vector<Complex>> &rows, const std::vector<Complex> &rhs,
                                 double rank_rtol) {
  const std::size_t m = rows.size();
  if (rhs.size() != m) throw std::invalid_argument("least_squares: rhs size mismatch");
  const std::size_t k = m == 0 ? 0 : rows.front().size();
  for (const auto &row : rows)
    if (row.size() != k) throw std::invalid_argument("least_squares: ragged matrix");

  LeastSquaresResult res;
  double b2 = 0.0;
  for (const Complex &v : rhs) b2 += std::norm(v);
  res.rhs_norm = std::sqrt(b2);
  if (k == 0) return res;

  std::vector<std::vector<Complex>> a = rows;
  std::vector<Complex> b = rhs;
  std::vector<std::size_t> perm(k);
  for (std::size_t j = 0; j < k; ++j) perm[j] = j;

  const std::size_t steps = std::min(m, k);
  std::vector<Complex> diag(steps, Complex{});
  double first_pivot = 0.0;
  std::size_t rank = 0;

  for (std::size_t j = 0; j < steps; ++j) {
    // Pivot the column with the largest remaining norm to the front.
    std::size_t best = j;
    double best_norm = column_norm(a, perm[j], j);
    for (std::size_t c = j + 1; c < k; ++c) {
      const double n = column_norm(a, perm[c], j);
      if (n > best_norm) {
        best_norm = n;
        best = c;
      }
    }
    std::swap(perm[j], perm[best]);
    if (j == 0) first_pivot = best_norm;
    if (best_norm <= rank_rtol * std::max(first_pivot, 1e-300)) break;
    ++rank;

    // Householder reflector for column perm[j], rows j..m-1.
    const std::size_t col = perm[j];
    std::vector<Complex> u(m - j);
    for (std::size_t r = j; r < m; ++r) u[r - j] = a[r][col];
    const Complex x0 = u[0];
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0, 0.0};
    const Complex beta = -phase * best_norm;
    u[0] -= beta;
    double u2 = 0.0;
    for (const Complex &v : u) u2 += std::norm(v);
    diag[j] = beta;
    if (u2 == 0.0) continue;

    auto reflect = [&](auto &&get, auto &&set) {
      Complex dot{};
      for (std::size_t r = j; r < m; ++r) dot += std::conj(u[r - j]) * get(r);
      const Complex f = 2.0 * dot / u2;
      for (std::size_t r = j; r < m; ++r) set(r, get(r) - f * u[r - j]);
    };
    for (std::size_t c = j + 1; c < k; ++c) {
      const std::size_t cc = perm[c];
      reflect([&](std::size_t r) { return a[r][cc]; }, [&](std::size_t r, Complex v) { a[r][cc] = v; });
    }
    reflect([&](std::size_t r) { return b[r]; }, [&](std::size_t r, Complex v) { b[r] = v; });
    for (std::size_t r = j; r < m; ++r) a[r][col] = r == j ? beta : Complex{};
  }

  res.rank = static_cast<int>(rank);
  if (rank < k) return res;

  // Back substitution on the triangular factor, then undo the pivoting.
  std::vector<Complex> y(k);
  for (std::size_t ji = k; ji-- > 0;) {
    Complex s = b[ji];
    for (std::size_t c = ji + 1; c < k; ++c) s -= a[ji][perm[c]] * y[c];
    y[ji] = s / diag[ji];
  }
  res.solution.assign(k, Complex{});
  for (std::size_t j = 0; j < k; ++j) res.solution[perm[j]] = y[j];

  double r2 = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    Complex s = -rhs[r];
    for (std::size_t c = 0; c < k; ++c) s += rows[r][c] * res.solution[c];
    r2 += std::norm(s);
  }
  res.residual = std::sqrt(r2);
  return res;
}

namespace {

Complex eval_cubic(const Complex &c2, const Complex &c1, const Complex &c0, const Complex &z) {
  return ((z + c2) * z + c1) * z + c0;
}

Complex polish_root(const Complex &c2, const Complex &c1, const Complex &c0, Complex z) {
  // Newton converges linearly even at a double root; a handful of steps from
  // the Cardano estimate is plenty for the tolerances used here.
  for (int it = 0; it < 24; ++it) {
    const Complex f = eval_cubic(c2, c1, c0, z);
    const Complex df = (3.0 * z + 2.0 * c2) * z + c1;
    if (std::abs(df) < 1e-300) break;
    const Complex step = f / df;
    z -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

}  // namespace

std::array<Complex, 3> cubic_roots(const Complex &c2, const Complex &c1, const Complex &c0) {
  // Depressed form: z = u - c2/3, u^3 + P u + Q = 0.
  const Complex shift = c2 / 3.0;
  const Complex P = c1 - c2 * c2 / 3.0;
  const Complex Q = c0 - c1 * c2 / 3.0 + 2.0 * c2 * c2 * c2 / 27.0;

  std::array<Complex, 3> roots;
  const Complex disc = std::sqrt(Q * Q / 4.0 + P * P * P / 27.0);
  Complex w3 = -Q / 2.0 + disc;
  const Complex w3_alt = -Q / 2.0 - disc;
  if (std::abs(w3_alt) > std::abs(w3)) w3 = w3_alt;

  if (std::abs(w3) == 0.0) {
    // P == Q == 0: triple root of the depressed cubic.
    roots = {Complex{}, Complex{}, Complex{}};
  } else {
    const Complex w = std::pow(w3, 1.0 / 3.0);
    const Complex omega{-0.5, std::numbers::sqrt3 / 2.0};
    Complex wk = w;
    for (int i = 0; i < 3; ++i) {
      roots[static_cast<std::size_t>(i)] = wk - P / (3.0 * wk);
      wk *= omega;
    }
  }
  for (Complex &r : roots) r = polish_root(c2, c1, c0, r - shift);
  return roots;
}

}  // namespace holant
