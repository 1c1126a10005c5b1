#include <doctest.h>

#include <algorithm>
#include <random>

#include "holant/fibonacci_d3.hpp"
#include "holant/random_gen.hpp"
#include "test_helpers.hpp"

using namespace holant;
using namespace holant::testing;

namespace {

bool close_all(const std::vector<Complex> &got, const std::vector<Complex> &want, double tol = 1e-12) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (std::abs(got[i] - want[i]) > tol * std::max(1.0, std::abs(want[i]))) return false;
  return true;
}

double multiset_error(std::array<Complex, 3> got, std::array<Complex, 3> want) {
  std::array<int, 3> idx{0, 1, 2};
  double best = 1e300;
  do {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::abs(got[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] -
                                       want[static_cast<std::size_t>(i)]));
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

}  // namespace

TEST_CASE("check_params examples") {
  CHECK(d3::check_params(params_b3()));
  CHECK(d3::check_params(params_b3_prime()));
  CHECK_FALSE(d3::check_params(d3::Params{cr(0), cr(1), cr(1), cr(0)}));
}

TEST_CASE("params_from_basis closed form") {
  const d3::Params p = d3::params_from_basis(basis_b3());
  CHECK(std::abs(p.s - cr(0)) < 1e-14);
  CHECK(std::abs(p.x - cr(0)) < 1e-14);
  CHECK(std::abs(p.y - cr(1)) < 1e-14);
  CHECK(std::abs(p.t - cr(-1)) < 1e-14);

  const d3::Params q = d3::params_from_basis(basis_b3_prime());
  CHECK(std::abs(q.s - cr(-1)) < 1e-14);
  CHECK(std::abs(q.x - cr(1)) < 1e-14);
  CHECK(std::abs(q.y - cr(0)) < 1e-14);
  CHECK(std::abs(q.t - cr(0)) < 1e-14);

  d3::Basis bad;
  bad.weights = {cr(1), cr(1), cr(1)};
  bad.vectors = {{{cr(1), cr(1), cr(0)}, {cr(1), cr(1), cr(1)}, {cr(1), cr(0), cr(1)}}};
  CHECK_THROWS_AS(d3::params_from_basis(bad), std::invalid_argument);
}

TEST_CASE("generate produces the worked fixture") {
  CHECK(close_all(d3::generate(basis_b3(), 3).values, b3_fixture_values()));
  CHECK(close_all(d3::generate(basis_b3(), 1).values, {cr(3), cr(1), cr(-1)}));
  CHECK(close_all(d3::generate(basis_b3(), 2).values, {cr(3), cr(1), cr(-1), cr(3), cr(-1), cr(5)}));
  CHECK_THROWS_AS(d3::generate(basis_b3(), 0), std::invalid_argument);
}

TEST_CASE("verify_gate on fixtures") {
  CHECK(d3::verify_gate(d3::generate(basis_b3(), 3), params_b3()));

  SymmetricSignature unary;
  unary.domain_size = 3;
  unary.arity = 1;
  unary.values = {cr(2), cr(-5), cr(0.5)};
  CHECK(d3::verify_gate(unary, params_b3()));
  CHECK(d3::verify_gate(unary, params_b3_prime()));

  CHECK_FALSE(d3::verify_gate(all_distinct_d3(), params_b3()));

  SymmetricSignature wrong_domain = SymmetricSignature::zeros(4, 2);
  CHECK_THROWS_AS(d3::verify_gate(wrong_domain, params_b3()), std::invalid_argument);
}

TEST_CASE("fit_params on fixtures") {
  const auto fit = d3::fit_params({d3::generate(basis_b3(), 3)});
  REQUIRE(fit.status == FitStatus::ok);
  CHECK(std::abs(fit.params.s - cr(0)) < 1e-10);
  CHECK(std::abs(fit.params.x - cr(0)) < 1e-10);
  CHECK(std::abs(fit.params.y - cr(1)) < 1e-10);
  CHECK(std::abs(fit.params.t - cr(-1)) < 1e-10);

  const auto fit2 = d3::fit_params({d3::generate(basis_b3_prime(), 3)});
  REQUIRE(fit2.status == FitStatus::ok);
  CHECK(std::abs(fit2.params.s - cr(-1)) < 1e-10);
  CHECK(std::abs(fit2.params.t - cr(0)) < 1e-10);

  CHECK(d3::fit_params({all_distinct_d3()}).status == FitStatus::not_fibonacci);

  // One arity-2 signature: 3 equations for 4 unknowns.
  CHECK(d3::fit_params({d3::generate(basis_b3(), 2)}).status == FitStatus::underdetermined);
  CHECK(d3::fit_params({}).status == FitStatus::underdetermined);
}

TEST_CASE("complete_from_top fixtures") {
  const auto full = d3::complete_from_top({cr(3), cr(1), cr(-1)}, params_b3(), 3);
  CHECK(close_all(full.values, b3_fixture_values()));

  const auto two = d3::complete_from_top({cr(1), cr(0), cr(0)}, params_b3(), 2);
  CHECK(close_all(two.values, {cr(1), cr(0), cr(0), cr(1), cr(0), cr(1)}));

  const auto one = d3::complete_from_top({cr(4), cr(5), cr(6)}, params_b3(), 1);
  CHECK(close_all(one.values, {cr(4), cr(5), cr(6)}));

  CHECK_THROWS_AS(d3::complete_from_top({cr(1), cr(0), cr(0)}, params_b3(), 0), std::invalid_argument);
  CHECK_THROWS_AS(d3::complete_from_top({cr(1), cr(0), cr(0)}, d3::Params{cr(0), cr(1), cr(1), cr(0)}, 2),
                  std::invalid_argument);
}

TEST_CASE("recover_basis on the repeated-root fixture") {
  const auto rec = d3::recover_basis(params_b3());
  CHECK(multiset_error(rec.roots, {cr(1), cr(1), cr(-1)}) < 1e-6);
  CHECK(rec.degenerate);
  CHECK_FALSE(rec.diagnostic.empty());
}

TEST_CASE("recover_basis on the distinct-root fixture") {
  const auto rec = d3::recover_basis(params_b3_prime());
  CHECK(multiset_error(rec.roots, {cr(0), cr(-2), cr(1)}) < 1e-9);
  CHECK_THROWS_AS(d3::recover_basis(d3::Params{cr(0), cr(1), cr(1), cr(0)}), std::invalid_argument);
}

TEST_CASE("property: random bases satisfy the parameter constraint") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 100; ++rep) {
    const auto sb = sample_basis_d3(rng);
    CHECK(d3::check_params(sb.params));
  }
}

TEST_CASE("property: generated gates verify for all arities <= 8") {
  std::mt19937_64 rng(102);
  for (int rep = 0; rep < 8; ++rep) {
    const auto sb = sample_basis_d3(rng);
    for (int n = 1; n <= 8; ++n) CHECK(d3::verify_gate(d3::generate(sb.basis, n), sb.params));
  }
}

TEST_CASE("property: fit reproduces params_from_basis") {
  std::mt19937_64 rng(103);
  for (int rep = 0; rep < 25; ++rep) {
    const auto sb = sample_basis_d3(rng);
    const auto fit = d3::fit_params({d3::generate(sb.basis, 3)});
    REQUIRE(fit.status == FitStatus::ok);
    CHECK(std::abs(fit.params.s - sb.params.s) < 1e-7);
    CHECK(std::abs(fit.params.x - sb.params.x) < 1e-7);
    CHECK(std::abs(fit.params.y - sb.params.y) < 1e-7);
    CHECK(std::abs(fit.params.t - sb.params.t) < 1e-7);
  }
}

TEST_CASE("property: complete_from_top round-trips generated gates") {
  std::mt19937_64 rng(104);
  for (int rep = 0; rep < 10; ++rep) {
    const auto sb = sample_basis_d3(rng);
    for (int n = 1; n <= 8; ++n) {
      const auto g = d3::generate(sb.basis, n);
      const std::array<Complex, 3> top{g.at({n, 0, 0}), g.at({n - 1, 1, 0}), g.at({n - 1, 0, 1})};
      const auto rebuilt = d3::complete_from_top(top, sb.params, n);
      REQUIRE(rebuilt.values.size() == g.values.size());
      for (std::size_t i = 0; i < g.values.size(); ++i)
        CHECK(std::abs(rebuilt.values[i] - g.values[i]) <= 1e-9 * std::max(1.0, std::abs(g.values[i])));
    }
  }
}

TEST_CASE("property: recover_basis returns {a,c,e} as a multiset") {
  std::mt19937_64 rng(105);
  BasisSampleOptions opts;
  opts.min_root_gap = 0.05;
  for (int rep = 0; rep < 50; ++rep) {
    const auto sb = sample_basis_d3(rng, opts);
    const auto rec = d3::recover_basis(sb.params);
    const std::array<Complex, 3> want{sb.basis.vectors[0][1], sb.basis.vectors[1][1], sb.basis.vectors[2][1]};
    CHECK(multiset_error(rec.roots, want) < 1e-6);
    if (!rec.degenerate) {
      // The recovered triple regenerates the same parameters.
      const auto p = d3::params_from_basis(rec.basis);
      CHECK(std::abs(p.s - sb.params.s) < 1e-6);
      CHECK(std::abs(p.x - sb.params.x) < 1e-6);
      CHECK(std::abs(p.y - sb.params.y) < 1e-6);
      CHECK(std::abs(p.t - sb.params.t) < 1e-6);
    }
  }
}
