#include "holant/random_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace holant {

namespace {

Complex random_unit_box(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  const double im = u(rng);
  return Complex{re, im};
}

template <std::size_t N>
Complex bilinear_dot(const std::array<Complex, N> &u, const std::array<Complex, N> &v) {
  Complex s{};
  for (std::size_t i = 0; i < N; ++i) s += u[i] * v[i];
  return s;
}

// One attempt at an orthogonal set with unit first coordinates; failure is
// signalled by returning false.
template <std::size_t N>
bool try_orthogonal_vectors(std::mt19937_64 &rng, const BasisSampleOptions &opts,
                            std::array<std::array<Complex, N>, N> &out) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t k = 0; k < N; ++k) {
    std::array<Complex, N> v;
    for (auto &c : v) c = opts.real_valued ? Complex{u(rng), 0.0} : random_unit_box(rng);
    for (std::size_t j = 0; j < k; ++j) {
      const Complex proj = bilinear_dot(v, out[j]) / bilinear_dot(out[j], out[j]);
      for (std::size_t i = 0; i < N; ++i) v[i] -= proj * out[j][i];
    }
    if (std::abs(bilinear_dot(v, v)) < opts.min_self_dot) return false;
    if (std::abs(v[0]) < opts.min_leading) return false;
    const Complex lead = v[0];
    for (auto &c : v) c /= lead;
    for (const auto &c : v)
      if (std::abs(c) > opts.max_component) return false;
    out[k] = v;
  }
  return true;
}

}  // namespace

Complex random_weight(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> mag(0.5, 1.5);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * 3.14159265358979323846);
  const double m = mag(rng);
  const double a = arg(rng);
  return Complex{m * std::cos(a), m * std::sin(a)};
}

SampledBasisD3 sample_basis_d3(std::mt19937_64 &rng, const BasisSampleOptions &opts) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::array<std::array<Complex, 3>, 3> vecs;
    if (!try_orthogonal_vectors<3>(rng, opts, vecs)) continue;
    if (opts.min_root_gap > 0.0) {
      const Complex a = vecs[0][1], c = vecs[1][1], e = vecs[2][1];
      if (std::abs(a - c) < opts.min_root_gap || std::abs(a - e) < opts.min_root_gap ||
          std::abs(c - e) < opts.min_root_gap)
        continue;
    }
    SampledBasisD3 out;
    out.basis.vectors = vecs;
    for (auto &w : out.basis.weights) w = random_weight(rng);
    if (!d3::is_orthogonal(out.basis)) continue;
    out.params = d3::params_from_basis(out.basis);
    return out;
  }
  throw std::runtime_error("sample_basis_d3: rejection sampling failed");
}

SampledBasisD4 sample_basis_d4(std::mt19937_64 &rng, const BasisSampleOptions &opts) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::array<std::array<Complex, 4>, 4> vecs;
    if (!try_orthogonal_vectors<4>(rng, opts, vecs)) continue;
    SampledBasisD4 out;
    out.basis.vectors = vecs;
    for (auto &w : out.basis.weights) w = random_weight(rng);
    if (!d4::is_orthogonal(out.basis)) continue;
    // No closed form on domain 4; parameters come from fitting generated
    // signatures (they are weight-independent).
    d4::Basis unit = out.basis;
    unit.weights = {Complex{1, 0}, Complex{1, 0}, Complex{1, 0}, Complex{1, 0}};
    const auto fit = d4::fit_params({d4::generate(unit, 3), d4::generate(unit, 4)});
    if (fit.status != FitStatus::ok) continue;
    out.params = fit.params;
    return out;
  }
  throw std::runtime_error("sample_basis_d4: rejection sampling failed");
}

namespace {

SignatureGrid grid_from_degrees(std::mt19937_64 &rng, int domain, const std::vector<int> &degree,
                                const d3::Basis *b3, const d4::Basis *b4, bool real_weights) {
  const int V = static_cast<int>(degree.size());
  SignatureGrid grid;
  grid.domain_size = domain;

  // Configuration model: pair up half-edge stubs uniformly at random.
  std::vector<int> stubs;
  for (int v = 0; v < V; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(degree[static_cast<std::size_t>(v)]), v);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) grid.edges.emplace_back(stubs[i], stubs[i + 1]);

  std::uniform_real_distribution<double> mag(0.5, 1.5);
  auto weight = [&] { return real_weights ? Complex{mag(rng), 0.0} : random_weight(rng); };
  for (int v = 0; v < V; ++v) {
    const int arity = degree[static_cast<std::size_t>(v)];
    SymmetricSignature sig;
    if (domain == 3) {
      d3::Basis b = *b3;
      for (auto &w : b.weights) w = weight();
      sig = d3::generate(b, arity);
    } else {
      d4::Basis b = *b4;
      for (auto &w : b.weights) w = weight();
      sig = d4::generate(b, arity);
    }
    grid.signatures.push_back({"v" + std::to_string(v), std::move(sig)});
    grid.vertex_signature.push_back(v);
  }
  return grid;
}

}  // namespace

FibonacciGridSample random_fibonacci_grid(std::mt19937_64 &rng, const RandomGridSpec &spec) {
  if (spec.domain != 3 && spec.domain != 4)
    throw std::invalid_argument("random_fibonacci_grid: domain must be 3 or 4");

  std::uniform_int_distribution<int> nv(spec.min_vertices, spec.max_vertices);
  const int V = nv(rng);
  std::uniform_int_distribution<int> dd(spec.min_degree, spec.max_degree);
  std::vector<int> degree(static_cast<std::size_t>(V));
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) throw std::runtime_error("random_fibonacci_grid: degree sampling failed");
    int total = 0;
    for (int &x : degree) total += (x = dd(rng));
    if (total % 2 == 0 && total / 2 <= spec.max_edges) break;
  }

  FibonacciGridSample out;
  if (spec.domain == 3) {
    const SampledBasisD3 sb = sample_basis_d3(rng);
    out.params = sb.params;
    out.grid = grid_from_degrees(rng, 3, degree, &sb.basis, nullptr, false);
  } else {
    const SampledBasisD4 sb = sample_basis_d4(rng);
    out.params = sb.params;
    out.grid = grid_from_degrees(rng, 4, degree, nullptr, &sb.basis, false);
  }
  return out;
}

FibonacciGridSample random_regular_grid(std::mt19937_64 &rng, int domain, int vertices, int degree) {
  if (domain != 3 && domain != 4) throw std::invalid_argument("random_regular_grid: domain must be 3 or 4");
  if (static_cast<long long>(vertices) * degree % 2 != 0)
    throw std::invalid_argument("random_regular_grid: vertices * degree must be even");

  // Real basis and real positive weights. With random complex phases the d
  // summands of every merge cancel partially, so pointwise rounding noise is
  // amplified by roughly sqrt(d) per merge and a 150-edge contraction drowns
  // in it. Real data keeps the color sums of the dominant cluster
  // single-signed (1 : a^2 : b^2), which is stable at any depth.
  BasisSampleOptions opts;
  opts.real_valued = true;

  std::vector<int> degs(static_cast<std::size_t>(vertices), degree);
  FibonacciGridSample out;
  if (domain == 3) {
    const SampledBasisD3 sb = sample_basis_d3(rng, opts);
    out.params = sb.params;
    out.grid = grid_from_degrees(rng, 3, degs, &sb.basis, nullptr, true);
  } else {
    const SampledBasisD4 sb = sample_basis_d4(rng, opts);
    out.params = sb.params;
    out.grid = grid_from_degrees(rng, 4, degs, nullptr, &sb.basis, true);
  }
  return out;
}

}  // namespace holant
