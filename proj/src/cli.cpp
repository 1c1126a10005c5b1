#include "holant/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "holant/grid_io.hpp"
#include "holant/oracle.hpp"
#include "holant/random_gen.hpp"

namespace holant {

namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool verify_set(const SignatureSet &set, const FibParams &params, const Tolerance &tol, std::ostream &out) {
  bool all = true;
  for (const auto &[name, sig] : set.entries) {
    bool ok = false;
    if (const auto *p3 = std::get_if<d3::Params>(&params))
      ok = d3::verify_gate(sig, *p3, tol);
    else
      ok = d4::verify_gate(sig, std::get<d4::Params>(params), tol);
    out << name << ": " << (ok ? "fibonacci" : "NOT fibonacci") << "\n";
    all = all && ok;
  }
  return all;
}

FibParams fit_set(const SignatureSet &set, const Tolerance &tol) {
  std::vector<SymmetricSignature> sigs;
  for (const auto &entry : set.entries) sigs.push_back(entry.signature);
  auto report = [](FitStatus status) -> const char * {
    return status == FitStatus::underdetermined ? "underdetermined: recurrence system does not pin down parameters"
                                                : "not fibonacci: recurrence residual or constraint fails";
  };
  if (set.domain_size == 3) {
    const auto fit = d3::fit_params(sigs, tol);
    if (fit.status != FitStatus::ok) throw std::runtime_error(report(fit.status));
    return fit.params;
  }
  if (set.domain_size == 4) {
    const auto fit = d4::fit_params(sigs, tol);
    if (fit.status != FitStatus::ok) throw std::runtime_error(report(fit.status));
    return fit.params;
  }
  throw std::runtime_error("fit: domain must be 3 or 4");
}

int selfcheck(std::uint64_t seed, const Tolerance &tol, std::ostream &out) {
  std::mt19937_64 rng(seed);
  int failures = 0;

  // Split invariance: every feasible split of a merged entry agrees.
  double max_spread = 0.0;
  int split_instances = 0;
  for (int domain : {3, 4}) {
    for (int rep = 0; rep < 12; ++rep) {
      Gate F, G;
      if (domain == 3) {
        const auto sb = sample_basis_d3(rng);
        F.signature = d3::generate(sb.basis, 2 + rep % 2);
        G.signature = d3::generate(sb.basis, 3 - rep % 2);
      } else {
        const auto sb = sample_basis_d4(rng);
        F.signature = d4::generate(sb.basis, 2 + rep % 2);
        G.signature = d4::generate(sb.basis, 3 - rep % 2);
      }
      F.member_vertices = {0};
      G.member_vertices = {1};
      const Gate H = merge_cross(F, G);
      const int r = F.signature.arity - 1, w = G.signature.arity - 1;
      for (const CountVector &m : all_counts(domain, r + w)) {
        // All splits m = mf + mg with |mf| = r.
        for (const CountVector &mf : all_counts(domain, r)) {
          CountVector mg(m.size());
          bool feasible = true;
          for (std::size_t c = 0; c < m.size(); ++c) {
            mg[c] = m[c] - mf[c];
            feasible = feasible && mg[c] >= 0;
          }
          if (!feasible) continue;
          Complex val{};
          CountVector a = mf, b = mg;
          for (std::size_t c = 0; c < m.size(); ++c) {
            ++a[c];
            ++b[c];
            val += F.signature.at(a) * G.signature.at(b);
            --a[c];
            --b[c];
          }
          const Complex ref = H.signature.at(m);
          max_spread = std::max(max_spread, std::abs(val - ref) / std::max(1.0, std::abs(ref)));
          ++split_instances;
        }
      }
    }
  }
  const bool split_ok = max_spread <= tol.relative * 100;
  out << "split-invariance: " << (split_ok ? "ok" : "FAIL") << " (" << split_instances
      << " splits, max relative spread " << max_spread << ")\n";
  failures += split_ok ? 0 : 1;

  // Merge preservation: strict-mode evaluation must not trip.
  int grids = 0, violations = 0;
  for (int domain : {3, 4}) {
    RandomGridSpec spec;
    spec.domain = domain;
    for (int rep = 0; rep < 25; ++rep) {
      const auto sample = random_fibonacci_grid(rng, spec);
      ++grids;
      try {
        EvalOptions opts;
        opts.strict = true;
        opts.tol = tol;
        holant_eval(sample.grid, sample.params, opts);
      } catch (const MergePreservationError &) {
        ++violations;
      }
    }
  }
  out << "merge-preservation: " << (violations == 0 ? "ok" : "FAIL") << " (" << grids << " grids, " << violations
      << " violations)\n";
  failures += violations == 0 ? 0 : 1;
  return failures == 0 ? 0 : 1;
}

int bench(std::uint64_t seed, std::ostream &out) {
  using clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed);
  auto ms = [](clock::duration d) {
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(d).count();
  };

  out << "domain  edges  engine_ms  oracle_ms\n";
  for (int domain : {3, 4}) {
    for (int edges : {4, 6, 8}) {
      RandomGridSpec spec;
      spec.domain = domain;
      spec.max_edges = edges;
      spec.min_vertices = 3;
      spec.max_vertices = 5;
      const auto sample = random_fibonacci_grid(rng, spec);
      const auto t0 = clock::now();
      const Complex engine = holant_eval(sample.grid, sample.params);
      const auto t1 = clock::now();
      const Complex oracle = holant_bruteforce(sample.grid);
      const auto t2 = clock::now();
      out << domain << "       " << sample.grid.edges.size() << "      " << ms(t1 - t0) << "  " << ms(t2 - t1)
          << "   (engine " << format_complex(engine) << ", oracle " << format_complex(oracle) << ")\n";
    }
  }

  // Far beyond the oracle: 3-regular on 100 vertices, engine only.
  const auto big = random_regular_grid(rng, 3, 100, 3);
  const auto t0 = clock::now();
  EvalStats stats;
  const Complex value = holant_eval(big.grid, big.params, {}, &stats);
  const auto t1 = clock::now();
  out << "3-regular 100 vertices / 150 edges (d=3): " << ms(t1 - t0) << " ms, max intermediate arity "
      << stats.max_intermediate_arity << ", value " << format_complex(value) << "\n";
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Holant evaluator for generalized Fibonacci gates on domains 3 and 4"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  app.add_option("--tolerance", tolerance, "relative comparison tolerance")->capture_default_str();
  app.add_option("--seed", seed, "seed for all randomized commands")->capture_default_str();

  std::string grid_path, params_path, sigs_path, basis_path;
  bool use_oracle = false, strict = false;
  int gen_domain = 3, gen_arity = 3;
  std::string gen_name = "g";

  CLI::App *eval_cmd = app.add_subcommand("eval", "evaluate the Holant value of a grid document");
  eval_cmd->add_option("grid", grid_path, "grid JSON document")->required();
  eval_cmd->add_option("--params", params_path, "parameter JSON document (engine mode)");
  eval_cmd->add_flag("--oracle", use_oracle, "brute-force enumeration instead of the engine");
  eval_cmd->add_flag("--strict", strict, "verify every intermediate gate");

  CLI::App *verify_cmd = app.add_subcommand("verify", "check signatures against Fibonacci parameters");
  verify_cmd->add_option("signatures", sigs_path, "signature JSON document")->required();
  verify_cmd->add_option("--params", params_path, "parameter JSON document")->required();

  CLI::App *fit_cmd = app.add_subcommand("fit", "fit Fibonacci parameters from signatures");
  fit_cmd->add_option("signatures", sigs_path, "signature JSON document")->required();

  CLI::App *gen_cmd = app.add_subcommand("gen", "generate a signature from an orthogonal basis");
  gen_cmd->add_option("--basis", basis_path, "basis JSON document (default: random from --seed)");
  gen_cmd->add_option("--domain", gen_domain, "domain size for random bases")->check(CLI::IsMember({3, 4}));
  gen_cmd->add_option("--arity", gen_arity, "arity of the generated signature")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--name", gen_name, "signature name in the output document");

  CLI::App *recover_cmd = app.add_subcommand("recover-basis", "recover {a,c,e} (and b,d,f) from domain-3 parameters");
  recover_cmd->add_option("params", params_path, "parameter JSON document")->required();

  CLI::App *selfcheck_cmd = app.add_subcommand("selfcheck", "split-invariance and merge-preservation suite");
  CLI::App *bench_cmd = app.add_subcommand("bench", "engine vs oracle timings on generated grids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &ex) {
    if (ex.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << ex.what() << "\n";
    return 2;
  }

  const Tolerance tol{tolerance, 1e-12};
  try {
    if (eval_cmd->parsed()) {
      const SignatureGrid grid = parse_grid(slurp(grid_path));
      if (use_oracle) {
        out << format_complex(holant_bruteforce(grid)) << "\n";
        return 0;
      }
      if (params_path.empty()) {
        err << "error: eval needs --params (or --oracle)\n";
        return 2;
      }
      const FibParams params = parse_params(slurp(params_path));
      EvalOptions opts;
      opts.strict = strict;
      opts.tol = tol;
      out << format_complex(holant_eval(grid, params, opts)) << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      const SignatureSet set = parse_signatures(slurp(sigs_path));
      const FibParams params = parse_params(slurp(params_path));
      return verify_set(set, params, tol, out) ? 0 : 1;
    }
    if (fit_cmd->parsed()) {
      const SignatureSet set = parse_signatures(slurp(sigs_path));
      out << emit_params(fit_set(set, tol));
      return 0;
    }
    if (gen_cmd->parsed()) {
      AnyBasis basis;
      if (!basis_path.empty()) {
        basis = parse_basis(slurp(basis_path));
      } else {
        std::mt19937_64 rng(seed);
        if (gen_domain == 3)
          basis = sample_basis_d3(rng).basis;
        else
          basis = sample_basis_d4(rng).basis;
      }
      SignatureSet set;
      FibParams params;
      if (const auto *b3 = std::get_if<d3::Basis>(&basis)) {
        set.domain_size = 3;
        set.entries.push_back({gen_name, d3::generate(*b3, gen_arity, tol)});
        params = d3::params_from_basis(*b3, tol);
      } else {
        const auto &b4 = std::get<d4::Basis>(basis);
        set.domain_size = 4;
        set.entries.push_back({gen_name, d4::generate(b4, gen_arity, tol)});
        params = fit_set(set, tol);
      }
      out << emit_signatures(set);
      out << emit_params(params);
      out << emit_basis(basis);
      return 0;
    }
    if (recover_cmd->parsed()) {
      const FibParams params = parse_params(slurp(params_path));
      const auto *p3 = std::get_if<d3::Params>(&params);
      if (!p3) {
        err << "error: recover-basis is defined for domain 3 only\n";
        return 1;
      }
      const d3::BasisRecovery rec = d3::recover_basis(*p3, tol);
      out << "roots: " << format_complex(rec.roots[0]) << " " << format_complex(rec.roots[1]) << " "
          << format_complex(rec.roots[2]) << "\n";
      if (rec.degenerate) {
        out << "degenerate: " << rec.diagnostic << "\n";
      } else {
        out << emit_basis(rec.basis);
      }
      return 0;
    }
    if (selfcheck_cmd->parsed()) return selfcheck(seed, tol, out);
    if (bench_cmd->parsed()) return bench(seed, out);
  } catch (const std::exception &ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace holant
