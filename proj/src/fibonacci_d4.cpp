#include "holant/fibonacci_d4.hpp"

#include <cmath>
#include <stdexcept>

#include "holant/linalg.hpp"

namespace holant::d4 {

namespace {

Complex bilinear_dot(const std::array<Complex, 4> &u, const std::array<Complex, 4> &v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

double magnitude(const std::array<Complex, 4> &v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) + std::norm(v[3]));
}

void require_domain(const SymmetricSignature &g) {
  if (g.domain_size != 4) throw std::invalid_argument("domain-4 gate operation on domain size != 4");
}

}  // namespace

bool check_params(const Params &P, const Tolerance &tol) {
  const Complex one{1.0, 0.0};
  if (!tol.close(P.a * P.d + P.b * P.e + P.c * P.f + one, P.b * P.b + P.d * P.d + P.p * P.p)) return false;
  if (!tol.close(P.d * P.h + P.e * P.i + P.f * P.j + one, P.f * P.f + P.i * P.i + P.p * P.p)) return false;
  if (!tol.close(P.h * P.a + P.i * P.b + P.j * P.c + one, P.h * P.h + P.c * P.c + P.p * P.p)) return false;
  const Complex cubic =
      P.p * P.p * P.p - (P.b * P.i + P.c * P.f + P.d * P.h + one) * P.p + P.b * P.f * P.h + P.c * P.d * P.i;
  const double scale = std::max(1.0, std::abs(P.p) * std::abs(P.p) * std::abs(P.p));
  return tol.negligible(cubic, scale);
}

bool check_side_relations(const Params &P, const Tolerance &tol) {
  if (!tol.close(P.a * P.p + P.b * P.f + P.c * P.i, P.b * P.c + P.d * P.p + P.p * P.h)) return false;
  if (!tol.close(P.b * P.h + P.d * P.i + P.p * P.j, P.c * P.p + P.p * P.f + P.h * P.i)) return false;
  return tol.close(P.c * P.d + P.p * P.e + P.h * P.f, P.b * P.p + P.d * P.f + P.p * P.i);
}

bool is_orthogonal(const Basis &B, const Tolerance &tol) {
  for (int i = 0; i < 4; ++i) {
    if (std::abs(B.weights[static_cast<std::size_t>(i)]) <= tol.absolute) return false;
    if (!tol.negligible(B.vectors[static_cast<std::size_t>(i)][0] - 1.0)) return false;
    for (int j = i + 1; j < 4; ++j) {
      const auto &u = B.vectors[static_cast<std::size_t>(i)];
      const auto &v = B.vectors[static_cast<std::size_t>(j)];
      if (!tol.negligible(bilinear_dot(u, v), magnitude(u) * magnitude(v))) return false;
    }
  }
  return true;
}

void require_orthogonal(const Basis &B, const Tolerance &tol) {
  if (!is_orthogonal(B, tol))
    throw std::invalid_argument(
        "basis is not an orthogonal quadruple with unit first coordinates and nonzero weights");
}

SymmetricSignature generate(const Basis &B, int arity, const Tolerance &tol) {
  if (arity < 1) throw std::invalid_argument("generate: arity must be >= 1");
  require_orthogonal(B, tol);
  SymmetricSignature g = SymmetricSignature::zeros(4, arity);
  const auto counts = all_counts(4, arity);
  for (std::size_t r = 0; r < counts.size(); ++r) {
    const int x = counts[r][1], y = counts[r][2], z = counts[r][3];
    Complex v{};
    for (std::size_t i = 0; i < 4; ++i)
      v += B.weights[i] * ipow(B.vectors[i][1], x) * ipow(B.vectors[i][2], y) * ipow(B.vectors[i][3], z);
    g.values[r] = v;
  }
  return g;
}

bool verify_gate(const SymmetricSignature &g, const Params &P, const Tolerance &tol) {
  require_domain(g);
  g.check_invariants();
  if (g.arity <= 1) return true;
  if (!check_params(P, tol)) return false;

  for (const CountVector &apex : all_counts(4, g.arity)) {
    const int w = apex[0], x = apex[1], y = apex[2], z = apex[3];
    if (w < 2) continue;
    const Complex g0 = g.at({w, x, y, z});
    const Complex gx = g.at({w - 1, x + 1, y, z});
    const Complex gy = g.at({w - 1, x, y + 1, z});
    const Complex gz = g.at({w - 1, x, y, z + 1});
    if (!tol.close(g.at({w - 2, x + 2, y, z}), g0 + P.a * gx + P.b * gy + P.c * gz)) return false;
    if (!tol.close(g.at({w - 2, x, y + 2, z}), g0 + P.d * gx + P.e * gy + P.f * gz)) return false;
    if (!tol.close(g.at({w - 2, x, y, z + 2}), g0 + P.h * gx + P.i * gy + P.j * gz)) return false;
    if (!tol.close(g.at({w - 2, x + 1, y + 1, z}), P.b * gx + P.d * gy + P.p * gz)) return false;
    if (!tol.close(g.at({w - 2, x + 1, y, z + 1}), P.c * gx + P.p * gy + P.h * gz)) return false;
    if (!tol.close(g.at({w - 2, x, y + 1, z + 1}), P.p * gx + P.f * gy + P.i * gz)) return false;
  }
  return true;
}

FitResult<Params> fit_params(const std::vector<SymmetricSignature> &gs, const Tolerance &tol) {
  // Unknown order (a,b,c,d,e,f,h,i,j,p); each depth-2 tetrahedron gives 6 rows.
  std::vector<std::vector<Complex>> rows;
  std::vector<Complex> rhs;
  const Complex z0{};
  for (const SymmetricSignature &g : gs) {
    require_domain(g);
    g.check_invariants();
    for (const CountVector &apex : all_counts(4, g.arity)) {
      const int w = apex[0], x = apex[1], y = apex[2], z = apex[3];
      if (w < 2) continue;
      const Complex g0 = g.at({w, x, y, z});
      const Complex gx = g.at({w - 1, x + 1, y, z});
      const Complex gy = g.at({w - 1, x, y + 1, z});
      const Complex gz = g.at({w - 1, x, y, z + 1});
      rows.push_back({gx, gy, gz, z0, z0, z0, z0, z0, z0, z0});
      rhs.push_back(g.at({w - 2, x + 2, y, z}) - g0);
      rows.push_back({z0, z0, z0, gx, gy, gz, z0, z0, z0, z0});
      rhs.push_back(g.at({w - 2, x, y + 2, z}) - g0);
      rows.push_back({z0, z0, z0, z0, z0, z0, gx, gy, gz, z0});
      rhs.push_back(g.at({w - 2, x, y, z + 2}) - g0);
      rows.push_back({z0, gx, z0, gy, z0, z0, z0, z0, z0, gz});
      rhs.push_back(g.at({w - 2, x + 1, y + 1, z}));
      rows.push_back({z0, z0, gx, z0, z0, z0, gz, z0, z0, gy});
      rhs.push_back(g.at({w - 2, x + 1, y, z + 1}));
      rows.push_back({z0, z0, z0, z0, z0, gy, z0, gz, z0, gx});
      rhs.push_back(g.at({w - 2, x, y + 1, z + 1}));
    }
  }

  FitResult<Params> out;
  if (rows.empty()) return out;

  const LeastSquaresResult ls = least_squares(rows, rhs);
  out.rank = ls.rank;
  if (ls.rank < 10) return out;

  out.residual = ls.residual;
  const auto &v = ls.solution;
  out.params = Params{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
  const bool small_residual = ls.residual <= std::max(tol.absolute, tol.relative * std::max(1.0, ls.rhs_norm));
  out.status = small_residual && check_params(out.params, tol) ? FitStatus::ok : FitStatus::not_fibonacci;
  return out;
}

SymmetricSignature complete_from_top(const std::array<Complex, 4> &top, const Params &P, int arity,
                                     const Tolerance &tol) {
  if (arity < 1) throw std::invalid_argument("complete_from_top: arity must be >= 1");
  if (!check_params(P, tol)) throw std::invalid_argument("complete_from_top: invalid parameters");

  SymmetricSignature g = SymmetricSignature::zeros(4, arity);
  const int n = arity;
  if (n == 1) {
    g.values = {top[0], top[1], top[2], top[3]};
    return g;
  }
  g.at({n, 0, 0, 0}) = top[0];
  g.at({n - 1, 1, 0, 0}) = top[1];
  g.at({n - 1, 0, 1, 0}) = top[2];
  g.at({n - 1, 0, 0, 1}) = top[3];
  for (int w = n; w >= 2; --w) {
    const int layer_sum = n - w + 2;
    for (int xp = layer_sum; xp >= 0; --xp) {
      for (int yp = layer_sum - xp; yp >= 0; --yp) {
        const int zp = layer_sum - xp - yp;
        // One recurrence per target, chosen so the apex stays valid.
        if (xp >= 2) {
          const int x = xp - 2, y = yp, z = zp;
          g.at({w - 2, xp, yp, zp}) = g.at({w, x, y, z}) + P.a * g.at({w - 1, x + 1, y, z}) +
                                      P.b * g.at({w - 1, x, y + 1, z}) + P.c * g.at({w - 1, x, y, z + 1});
        } else if (xp == 1 && yp >= 1) {
          const int x = 0, y = yp - 1, z = zp;
          g.at({w - 2, xp, yp, zp}) = P.b * g.at({w - 1, x + 1, y, z}) + P.d * g.at({w - 1, x, y + 1, z}) +
                                      P.p * g.at({w - 1, x, y, z + 1});
        } else if (xp == 1) {
          const int x = 0, y = 0, z = zp - 1;
          g.at({w - 2, xp, yp, zp}) = P.c * g.at({w - 1, x + 1, y, z}) + P.p * g.at({w - 1, x, y + 1, z}) +
                                      P.h * g.at({w - 1, x, y, z + 1});
        } else if (yp >= 2) {
          const int x = 0, y = yp - 2, z = zp;
          g.at({w - 2, xp, yp, zp}) = g.at({w, x, y, z}) + P.d * g.at({w - 1, x + 1, y, z}) +
                                      P.e * g.at({w - 1, x, y + 1, z}) + P.f * g.at({w - 1, x, y, z + 1});
        } else if (yp == 1) {
          const int x = 0, y = 0, z = zp - 1;
          g.at({w - 2, xp, yp, zp}) = P.p * g.at({w - 1, x + 1, y, z}) + P.f * g.at({w - 1, x, y + 1, z}) +
                                      P.i * g.at({w - 1, x, y, z + 1});
        } else {
          const int x = 0, y = 0, z = zp - 2;
          g.at({w - 2, xp, yp, zp}) = g.at({w, x, y, z}) + P.h * g.at({w - 1, x + 1, y, z}) +
                                      P.i * g.at({w - 1, x, y + 1, z}) + P.j * g.at({w - 1, x, y, z + 1});
        }
      }
    }
  }
  return g;
}

}  // namespace holant::d4
