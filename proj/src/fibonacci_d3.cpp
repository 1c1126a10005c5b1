#include "holant/fibonacci_d3.hpp"

#include <cmath>
#include <stdexcept>

#include "holant/linalg.hpp"

namespace holant::d3 {

namespace {

Complex bilinear_dot(const std::array<Complex, 3> &u, const std::array<Complex, 3> &v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

double magnitude(const std::array<Complex, 3> &v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

void require_domain(const SymmetricSignature &g) {
  if (g.domain_size != 3) throw std::invalid_argument("domain-3 gate operation on domain size != 3");
}

}  // namespace

bool check_params(const Params &P, const Tolerance &tol) {
  const Complex lhs = P.s * P.y + P.x * P.t + 1.0;
  const Complex rhs = P.x * P.x + P.y * P.y;
  return tol.close(lhs, rhs);
}

bool is_orthogonal(const Basis &B, const Tolerance &tol) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(B.weights[static_cast<std::size_t>(i)]) <= tol.absolute) return false;
    if (!tol.negligible(B.vectors[static_cast<std::size_t>(i)][0] - 1.0)) return false;
    for (int j = i + 1; j < 3; ++j) {
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
        "basis is not an orthogonal triple with unit first coordinates and nonzero weights");
}

Params params_from_basis(const Basis &B, const Tolerance &tol) {
  require_orthogonal(B, tol);
  const Complex a = B.vectors[0][1], b = B.vectors[0][2];
  const Complex c = B.vectors[1][1], d = B.vectors[1][2];
  const Complex e = B.vectors[2][1], f = B.vectors[2][2];
  Params P;
  P.x = -b * d * f;
  P.y = -a * c * e;
  P.s = a * c * e + a + c + e;
  P.t = b * d * f + b + d + f;
  return P;
}

SymmetricSignature generate(const Basis &B, int arity, const Tolerance &tol) {
  if (arity < 1) throw std::invalid_argument("generate: arity must be >= 1");
  require_orthogonal(B, tol);
  SymmetricSignature g = SymmetricSignature::zeros(3, arity);
  const auto counts = all_counts(3, arity);
  for (std::size_t r = 0; r < counts.size(); ++r) {
    const int j = counts[r][1], k = counts[r][2];
    Complex v{};
    for (std::size_t i = 0; i < 3; ++i)
      v += B.weights[i] * ipow(B.vectors[i][1], j) * ipow(B.vectors[i][2], k);
    g.values[r] = v;
  }
  return g;
}

bool verify_gate(const SymmetricSignature &g, const Params &P, const Tolerance &tol) {
  require_domain(g);
  g.check_invariants();
  if (g.arity <= 1) return true;  // any unary (or scalar) signature qualifies
  if (!check_params(P, tol)) return false;

  const int n = g.arity;
  for (const CountVector &apex : all_counts(3, n)) {
    const int i = apex[0], j = apex[1], k = apex[2];
    if (i < 2) continue;
    const Complex g0 = g.at({i, j, k});
    const Complex gl = g.at({i - 1, j + 1, k});
    const Complex gr = g.at({i - 1, j, k + 1});
    if (!tol.close(g.at({i - 2, j + 2, k}), g0 + P.s * gl + P.x * gr)) return false;
    if (!tol.close(g.at({i - 2, j + 1, k + 1}), P.x * gl + P.y * gr)) return false;
    if (!tol.close(g.at({i - 2, j, k + 2}), g0 + P.y * gl + P.t * gr)) return false;
  }
  return true;
}

FitResult<Params> fit_params(const std::vector<SymmetricSignature> &gs, const Tolerance &tol) {
  // Unknown order (s, x, y, t); each depth-2 triangle contributes 3 rows.
  std::vector<std::vector<Complex>> rows;
  std::vector<Complex> rhs;
  for (const SymmetricSignature &g : gs) {
    require_domain(g);
    g.check_invariants();
    for (const CountVector &apex : all_counts(3, g.arity)) {
      const int i = apex[0], j = apex[1], k = apex[2];
      if (i < 2) continue;
      const Complex g0 = g.at({i, j, k});
      const Complex gl = g.at({i - 1, j + 1, k});
      const Complex gr = g.at({i - 1, j, k + 1});
      rows.push_back({gl, gr, Complex{}, Complex{}});
      rhs.push_back(g.at({i - 2, j + 2, k}) - g0);
      rows.push_back({Complex{}, gl, gr, Complex{}});
      rhs.push_back(g.at({i - 2, j + 1, k + 1}));
      rows.push_back({Complex{}, Complex{}, gl, gr});
      rhs.push_back(g.at({i - 2, j, k + 2}) - g0);
    }
  }

  FitResult<Params> out;
  if (rows.empty()) return out;  // no arity >= 2 signature: underdetermined

  const LeastSquaresResult ls = least_squares(rows, rhs);
  out.rank = ls.rank;
  if (ls.rank < 4) return out;

  out.residual = ls.residual;
  out.params = Params{ls.solution[0], ls.solution[1], ls.solution[2], ls.solution[3]};
  const bool small_residual = ls.residual <= std::max(tol.absolute, tol.relative * std::max(1.0, ls.rhs_norm));
  out.status = small_residual && check_params(out.params, tol) ? FitStatus::ok : FitStatus::not_fibonacci;
  return out;
}

SymmetricSignature complete_from_top(const std::array<Complex, 3> &top, const Params &P, int arity,
                                     const Tolerance &tol) {
  if (arity < 1) throw std::invalid_argument("complete_from_top: arity must be >= 1");
  if (!check_params(P, tol)) throw std::invalid_argument("complete_from_top: invalid parameters");

  SymmetricSignature g = SymmetricSignature::zeros(3, arity);
  const int n = arity;
  if (n == 1) {
    g.values = {top[0], top[1], top[2]};
    return g;
  }
  g.at({n, 0, 0}) = top[0];
  g.at({n - 1, 1, 0}) = top[1];
  g.at({n - 1, 0, 1}) = top[2];
  for (int i = n; i >= 2; --i) {
    // Layers i and i-1 are filled; produce layer i-2. Each target picks the
    // one recurrence whose apex is valid for every k'.
    const int layer_sum = n - i + 2;
    for (int jp = layer_sum; jp >= 0; --jp) {
      const int kp = layer_sum - jp;
      if (kp == 0) {
        const int j = jp - 2, k = 0;
        g.at({i - 2, jp, 0}) = g.at({i, j, k}) + P.s * g.at({i - 1, j + 1, k}) + P.x * g.at({i - 1, j, k + 1});
      } else if (kp == 1) {
        const int j = jp - 1, k = 0;
        g.at({i - 2, jp, 1}) = P.x * g.at({i - 1, j + 1, k}) + P.y * g.at({i - 1, j, k + 1});
      } else {
        const int j = jp, k = kp - 2;
        g.at({i - 2, jp, kp}) = g.at({i, j, k}) + P.y * g.at({i - 1, j + 1, k}) + P.t * g.at({i - 1, j, k + 1});
      }
    }
  }
  return g;
}

BasisRecovery recover_basis(const Params &P, const Tolerance &tol) {
  if (!check_params(P, tol)) throw std::invalid_argument("recover_basis: invalid parameters");

  // a, c, e are the roots of t^3 - Y t^2 + Z t - X with
  // X = ace, Y = a+c+e, Z = ac+ae+ce expressed through the parameters.
  const Complex X = -P.y;
  const Complex Y = P.s + P.y;
  const Complex Z = -P.x * P.x - P.y * P.y + (P.s + P.y) * P.y - 1.0;
  BasisRecovery out;
  out.roots = cubic_roots(-Y, Z, -X);

  // Merge multiplicities: roots closer than the achievable accuracy of a
  // repeated root collapse to their mean.
  {
    const double merge_eps = std::sqrt(tol.relative);
    auto near = [&](const Complex &u, const Complex &v) {
      return std::abs(u - v) <= merge_eps * std::max({1.0, std::abs(u), std::abs(v)});
    };
    auto &r = out.roots;
    if (near(r[0], r[1]) && near(r[1], r[2]) && near(r[0], r[2])) {
      r[0] = r[1] = r[2] = (r[0] + r[1] + r[2]) / 3.0;
    } else {
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (near(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)]))
            r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(j)] =
                (r[static_cast<std::size_t>(i)] + r[static_cast<std::size_t>(j)]) / 2.0;
    }
  }

  const Complex a = out.roots[0], c = out.roots[1], e = out.roots[2];
  const Complex bd = -1.0 - a * c;
  const Complex bf = -1.0 - a * e;
  const Complex df = -1.0 - c * e;
  // Repeated roots are only accurate to about sqrt(eps), so the products
  // inherit that error; the zero test must be correspondingly coarser.
  const double eps = std::max(tol.absolute, std::sqrt(tol.relative) *
                                                std::max({1.0, std::abs(a * c), std::abs(a * e), std::abs(c * e)}));
  if (std::abs(bd) <= eps || std::abs(bf) <= eps || std::abs(df) <= eps) {
    out.degenerate = true;
    out.diagnostic = "a recovery product (bd, bf or df) vanishes; third components are not determined by division";
    return out;
  }

  Complex b = std::sqrt(bd * bf / df);
  Complex d = bd / b;
  Complex f = bf / b;
  // Both signs of b give an orthogonal triple; pick the one reproducing x.
  if (std::abs(-b * d * f - P.x) > std::abs(b * d * f - P.x)) {
    b = -b;
    d = -d;
    f = -f;
  }
  out.basis.weights = {Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{1.0, 0.0}};
  out.basis.vectors = {{{Complex{1.0, 0.0}, a, b}, {Complex{1.0, 0.0}, c, d}, {Complex{1.0, 0.0}, e, f}}};
  return out;
}

}  // namespace holant::d3
