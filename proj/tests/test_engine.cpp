#include <doctest.h>

#include <algorithm>
#include <random>

#include "holant/engine.hpp"
#include "holant/oracle.hpp"
#include "holant/random_gen.hpp"
#include "test_helpers.hpp"

using namespace holant;
using namespace holant::testing;

namespace {

Gate gate_of(const SymmetricSignature &sig, int vertex) {
  Gate g;
  g.signature = sig;
  g.member_vertices = {vertex};
  return g;
}

}  // namespace

TEST_CASE("merge_cross on the B3 fixture") {
  const auto b3 = d3::generate(basis_b3(), 3);
  const Gate h = merge_cross(gate_of(b3, 0), gate_of(b3, 1));
  CHECK(h.dangling_count() == 4);
  CHECK(std::abs(h.signature.at({4, 0, 0}) - cr(11)) < 1e-12);
  CHECK(h.member_vertices.size() == 2);
}

TEST_CASE("merge_cross of two unary gates is the inner product") {
  SymmetricSignature u, v;
  u.domain_size = v.domain_size = 3;
  u.arity = v.arity = 1;
  u.values = {cr(1), cr(2), cr(3)};
  v.values = {cr(1), cr(1), cr(1)};
  const Gate h = merge_cross(gate_of(u, 0), gate_of(v, 1));
  CHECK(h.dangling_count() == 0);
  CHECK(std::abs(h.signature.values[0] - cr(6)) < 1e-12);

  SymmetricSignature scalar = SymmetricSignature::zeros(3, 0);
  CHECK_THROWS_AS(merge_cross(gate_of(scalar, 0), gate_of(scalar, 1)), std::invalid_argument);
}

TEST_CASE("merge_cross split invariance on the B3 fixture") {
  const auto b3 = d3::generate(basis_b3(), 3);
  const Gate h = merge_cross(gate_of(b3, 0), gate_of(b3, 1));
  // Reference value computed with the alternative split ((1,1,0),(1,0,1)).
  Complex alt{};
  CountVector mf{1, 1, 0}, mg{1, 0, 1};
  for (int c = 0; c < 3; ++c) {
    ++mf[static_cast<std::size_t>(c)];
    ++mg[static_cast<std::size_t>(c)];
    alt += b3.at(mf) * b3.at(mg);
    --mf[static_cast<std::size_t>(c)];
    --mg[static_cast<std::size_t>(c)];
  }
  CHECK(std::abs(h.signature.at({2, 1, 1}) - alt) < 1e-12);
  CHECK(std::abs(alt - cr(-9)) < 1e-12);
}

TEST_CASE("merge_self on the fixtures") {
  const auto b3 = d3::generate(basis_b3(), 3);
  const Gate h = merge_self(gate_of(b3, 0));
  REQUIRE(h.dangling_count() == 1);
  CHECK(std::abs(h.signature.values[0] - cr(11)) < 1e-12);
  CHECK(std::abs(h.signature.values[1] - cr(7)) < 1e-12);
  CHECK(std::abs(h.signature.values[2] - cr(-9)) < 1e-12);

  const auto h4 = d4::generate(basis_h4(), 3);
  const Gate k = merge_self(gate_of(h4, 0));
  REQUIRE(k.dangling_count() == 1);
  CHECK(std::abs(k.signature.values[0] - cr(16)) < 1e-12);
  CHECK(std::abs(k.signature.values[1]) < 1e-12);
  CHECK(std::abs(k.signature.values[2]) < 1e-12);
  CHECK(std::abs(k.signature.values[3]) < 1e-12);

  SymmetricSignature unary;
  unary.domain_size = 3;
  unary.arity = 1;
  unary.values = {cr(1), cr(2), cr(3)};
  CHECK_THROWS_AS(merge_self(gate_of(unary, 0)), std::invalid_argument);
}

TEST_CASE("validate_grid reports failures") {
  const auto b3 = d3::generate(basis_b3(), 3);
  SignatureGrid grid = two_vertex_grid(b3, 3);

  CHECK(validate_grid(grid, params_b3()).ok);

  SUBCASE("degree mismatch") {
    grid.edges.pop_back();
    const auto report = validate_grid(grid, params_b3());
    CHECK_FALSE(report.ok);
    REQUIRE_FALSE(report.issues.empty());
    CHECK(report.issues.front().find("degree") != std::string::npos);
  }
  SUBCASE("non-fibonacci signature") {
    grid.signatures[0].signature = all_distinct_d3();
    const auto report = validate_grid(grid, params_b3());
    CHECK_FALSE(report.ok);
    CHECK(report.issues.front().find("Fibonacci") != std::string::npos);
  }
  SUBCASE("domain mismatch between grid and params") {
    const auto report = validate_grid(grid, FibParams{params_h4()});
    CHECK_FALSE(report.ok);
  }
}

TEST_CASE("holant_eval matches the fixtures") {
  const auto b3 = d3::generate(basis_b3(), 3);
  const SignatureGrid g3 = two_vertex_grid(b3, 3);
  CHECK(std::abs(holant_eval(g3, params_b3()) - cr(251)) < 1e-10 * 251);

  const auto h4 = d4::generate(basis_h4(), 3);
  const SignatureGrid g4 = two_vertex_grid(h4, 3);
  CHECK(std::abs(holant_eval(g4, params_h4()) - cr(256)) < 1e-10 * 256);

  const SignatureGrid two = disjoint_union(g3, g3);
  CHECK(std::abs(holant_eval(two, params_b3()) - cr(63001)) < 1e-10 * 63001);

  EvalOptions strict;
  strict.strict = true;
  CHECK(std::abs(holant_eval(g3, params_b3(), strict) - cr(251)) < 1e-10 * 251);
}

TEST_CASE("holant_eval refuses invalid grids") {
  SignatureGrid grid = two_vertex_grid(all_distinct_d3(), 3);
  CHECK_THROWS_AS(holant_eval(grid, params_b3()), GridValidationError);
}

TEST_CASE("holant_eval of the empty grid is 1") {
  SignatureGrid grid;
  grid.domain_size = 3;
  CHECK(holant_eval(grid, params_b3()) == cr(1));
}

TEST_CASE("holant_eval handles self-loops") {
  // Single vertex of arity 2 with a self-loop: value = sum_c g_{2 e_c}.
  const auto b2 = d3::generate(basis_b3(), 2);
  SignatureGrid grid;
  grid.domain_size = 3;
  grid.signatures = {{"g", b2}};
  grid.vertex_signature = {0};
  grid.edges = {{0, 0}};
  const Complex expected = b2.at({2, 0, 0}) + b2.at({0, 2, 0}) + b2.at({0, 0, 2});
  CHECK(std::abs(holant_eval(grid, params_b3()) - expected) < 1e-12);
  CHECK(std::abs(holant_bruteforce(grid) - expected) < 1e-12);
}

TEST_CASE("property: engine equals oracle on random Fibonacci grids") {
  std::mt19937_64 rng(301);
  for (int domain : {3, 4}) {
    RandomGridSpec spec;
    spec.domain = domain;
    for (int rep = 0; rep < 20; ++rep) {
      const auto sample = random_fibonacci_grid(rng, spec);
      const Complex engine = holant_eval(sample.grid, sample.params);
      const Complex oracle = holant_bruteforce(sample.grid);
      CHECK(std::abs(engine - oracle) <= 1e-8 * std::max(1.0, std::abs(oracle)));
    }
  }
}

TEST_CASE("property: result is invariant under edge order and the arity heuristic") {
  std::mt19937_64 rng(302);
  RandomGridSpec spec;
  for (int rep = 0; rep < 10; ++rep) {
    const auto sample = random_fibonacci_grid(rng, spec);
    const Complex base = holant_eval(sample.grid, sample.params);

    SignatureGrid shuffled = sample.grid;
    std::shuffle(shuffled.edges.begin(), shuffled.edges.end(), rng);
    const Complex permuted = holant_eval(shuffled, sample.params);
    CHECK(std::abs(permuted - base) <= 1e-9 * std::max(1.0, std::abs(base)));

    EvalOptions heuristic;
    heuristic.min_arity_order = true;
    const Complex reordered = holant_eval(sample.grid, sample.params, heuristic);
    CHECK(std::abs(reordered - base) <= 1e-9 * std::max(1.0, std::abs(base)));
  }
}

TEST_CASE("property: holant is multiplicative over disjoint unions") {
  std::mt19937_64 rng(303);
  RandomGridSpec spec;
  spec.max_vertices = 3;
  spec.max_edges = 4;
  for (int rep = 0; rep < 8; ++rep) {
    const auto a = random_fibonacci_grid(rng, spec);
    // Same params on both parts: reuse the first sample's signatures.
    const SignatureGrid both = disjoint_union(a.grid, a.grid);
    const Complex va = holant_eval(a.grid, a.params);
    const Complex vb = holant_eval(both, a.params);
    CHECK(std::abs(vb - va * va) <= 1e-8 * std::max(1.0, std::abs(va * va)));
  }
}

TEST_CASE("property: strict mode accepts every intermediate gate") {
  std::mt19937_64 rng(304);
  for (int domain : {3, 4}) {
    RandomGridSpec spec;
    spec.domain = domain;
    for (int rep = 0; rep < 10; ++rep) {
      const auto sample = random_fibonacci_grid(rng, spec);
      EvalOptions opts;
      opts.strict = true;
      CHECK_NOTHROW(holant_eval(sample.grid, sample.params, opts));
    }
  }
}
