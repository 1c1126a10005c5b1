#include "holant/engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace holant {

std::vector<int> SignatureGrid::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count()), 0);
  for (const auto &[u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

namespace {

int params_domain(const FibParams &P) { return std::holds_alternative<d3::Params>(P) ? 3 : 4; }

bool verify_with(const SymmetricSignature &g, const FibParams &P, const Tolerance &tol) {
  if (const auto *p3 = std::get_if<d3::Params>(&P)) return d3::verify_gate(g, *p3, tol);
  return d4::verify_gate(g, std::get<d4::Params>(P), tol);
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int p) {
    while (p != parent_[static_cast<std::size_t>(p)]) {
      parent_[static_cast<std::size_t>(p)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(p)])];
      p = parent_[static_cast<std::size_t>(p)];
    }
    return p;
  }

  int unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return ra;
    if (size_[static_cast<std::size_t>(ra)] < size_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
    parent_[static_cast<std::size_t>(rb)] = ra;
    size_[static_cast<std::size_t>(ra)] += size_[static_cast<std::size_t>(rb)];
    return ra;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

GridValidation validate_grid(const SignatureGrid &grid, const FibParams &P, const Tolerance &tol) {
  GridValidation report;
  auto issue = [&](const std::string &msg) {
    report.ok = false;
    report.issues.push_back(msg);
  };

  if (grid.domain_size < 2) issue("grid: domain size must be >= 2");
  if (params_domain(P) != grid.domain_size)
    issue("grid: parameter set is for domain " + std::to_string(params_domain(P)) + ", grid has domain " +
          std::to_string(grid.domain_size));

  for (std::size_t s = 0; s < grid.signatures.size(); ++s) {
    const auto &[name, sig] = grid.signatures[s];
    try {
      sig.check_invariants();
    } catch (const std::exception &ex) {
      issue("signature '" + name + "': " + ex.what());
      continue;
    }
    if (sig.domain_size != grid.domain_size)
      issue("signature '" + name + "': domain size " + std::to_string(sig.domain_size) + " != grid domain " +
            std::to_string(grid.domain_size));
  }
  if (!report.ok) return report;

  const int V = grid.vertex_count();
  for (const auto &[u, v] : grid.edges)
    if (u < 0 || u >= V || v < 0 || v >= V) {
      issue("edge (" + std::to_string(u) + "," + std::to_string(v) + "): endpoint out of range");
      return report;
    }

  const std::vector<int> deg = grid.degrees();
  std::unordered_set<int> attached;
  for (int v = 0; v < V; ++v) {
    const int s = grid.vertex_signature[static_cast<std::size_t>(v)];
    if (s < 0 || s >= static_cast<int>(grid.signatures.size())) {
      issue("vertex " + std::to_string(v) + ": signature index out of range");
      continue;
    }
    const auto &[name, sig] = grid.signatures[static_cast<std::size_t>(s)];
    if (deg[static_cast<std::size_t>(v)] != sig.arity)
      issue("vertex " + std::to_string(v) + " ('" + name + "'): degree " +
            std::to_string(deg[static_cast<std::size_t>(v)]) + " != arity " + std::to_string(sig.arity));
    attached.insert(s);
  }
  for (int s : attached) {
    const auto &[name, sig] = grid.signatures[static_cast<std::size_t>(s)];
    if (!verify_with(sig, P, tol))
      issue("signature '" + name + "': not a generalized Fibonacci gate for the given parameters");
  }
  return report;
}

Gate merge_cross(const Gate &F, const Gate &G) {
  const SymmetricSignature &f = F.signature;
  const SymmetricSignature &g = G.signature;
  if (f.domain_size != g.domain_size) throw std::invalid_argument("merge_cross: domain size mismatch");
  if (f.arity < 1 || g.arity < 1) throw std::invalid_argument("merge_cross: both gates need a dangling edge");

  const int d = f.domain_size;
  const int r = f.arity - 1;
  const int w = g.arity - 1;

  Gate out;
  out.signature = SymmetricSignature::zeros(d, r + w);
  out.member_vertices = F.member_vertices;
  out.member_vertices.insert(out.member_vertices.end(), G.member_vertices.begin(), G.member_vertices.end());

  const auto counts = all_counts(d, r + w);
  CountVector mf(static_cast<std::size_t>(d)), mg(static_cast<std::size_t>(d));
  for (std::size_t idx = 0; idx < counts.size(); ++idx) {
    const CountVector &m = counts[idx];
    // Canonical split: fill F's share greedily from the first color on.
    int left = r;
    for (int c = 0; c < d; ++c) {
      const int take = std::min(left, m[static_cast<std::size_t>(c)]);
      mf[static_cast<std::size_t>(c)] = take;
      mg[static_cast<std::size_t>(c)] = m[static_cast<std::size_t>(c)] - take;
      left -= take;
    }
    Complex sum{};
    for (int c = 0; c < d; ++c) {
      ++mf[static_cast<std::size_t>(c)];
      ++mg[static_cast<std::size_t>(c)];
      sum += f.at(mf) * g.at(mg);
      --mf[static_cast<std::size_t>(c)];
      --mg[static_cast<std::size_t>(c)];
    }
    out.signature.values[idx] = sum;
  }
  return out;
}

Gate merge_self(const Gate &F) {
  const SymmetricSignature &f = F.signature;
  if (f.arity < 2) throw std::invalid_argument("merge_self: gate needs two dangling edges");

  const int d = f.domain_size;
  Gate out;
  out.signature = SymmetricSignature::zeros(d, f.arity - 2);
  out.member_vertices = F.member_vertices;

  const auto counts = all_counts(d, f.arity - 2);
  CountVector m(static_cast<std::size_t>(d));
  for (std::size_t idx = 0; idx < counts.size(); ++idx) {
    Complex sum{};
    for (int c = 0; c < d; ++c) {
      m = counts[idx];
      m[static_cast<std::size_t>(c)] += 2;
      sum += f.at(m);
    }
    out.signature.values[idx] = sum;
  }
  return out;
}

Complex holant_eval(const SignatureGrid &grid, const FibParams &P, const EvalOptions &opts, EvalStats *stats) {
  GridValidation validation = validate_grid(grid, P, opts.tol);
  if (!validation.ok) {
    std::ostringstream msg;
    msg << "grid validation failed:";
    for (const std::string &s : validation.issues) msg << "\n  " << s;
    throw GridValidationError(msg.str(), std::move(validation));
  }

  const int V = grid.vertex_count();
  const int E = static_cast<int>(grid.edges.size());
  std::vector<Gate> gates(static_cast<std::size_t>(V));
  for (int v = 0; v < V; ++v) {
    gates[static_cast<std::size_t>(v)].signature =
        grid.signatures[static_cast<std::size_t>(grid.vertex_signature[static_cast<std::size_t>(v)])].signature;
    gates[static_cast<std::size_t>(v)].member_vertices = {v};
  }

  UnionFind uf(V);
  std::vector<bool> done(static_cast<std::size_t>(E), false);

  auto pick_edge = [&](int step) -> int {
    if (!opts.min_arity_order) return step;
    int best = -1;
    int best_cost = 0;
    for (int e = 0; e < E; ++e) {
      if (done[static_cast<std::size_t>(e)]) continue;
      const auto &[u, v] = grid.edges[static_cast<std::size_t>(e)];
      const int ru = uf.find(u), rv = uf.find(v);
      const int cost = ru == rv ? gates[static_cast<std::size_t>(ru)].dangling_count() - 2
                                : gates[static_cast<std::size_t>(ru)].dangling_count() +
                                      gates[static_cast<std::size_t>(rv)].dangling_count() - 2;
      if (best < 0 || cost < best_cost) {
        best = e;
        best_cost = cost;
      }
    }
    return best;
  };

  for (int step = 0; step < E; ++step) {
    const int e = pick_edge(step);
    done[static_cast<std::size_t>(e)] = true;
    const auto &[u, v] = grid.edges[static_cast<std::size_t>(e)];
    const int ru = uf.find(u), rv = uf.find(v);

    Gate merged = ru == rv ? merge_self(gates[static_cast<std::size_t>(ru)])
                           : merge_cross(gates[static_cast<std::size_t>(ru)], gates[static_cast<std::size_t>(rv)]);
    const int root = ru == rv ? ru : uf.unite(ru, rv);
    if (ru != rv) {
      gates[static_cast<std::size_t>(ru)] = Gate{};
      gates[static_cast<std::size_t>(rv)] = Gate{};
    }

    if (stats) {
      ++stats->merges;
      stats->max_intermediate_arity = std::max(stats->max_intermediate_arity, merged.dangling_count());
    }
    if (opts.strict && !verify_with(merged.signature, P, opts.tol))
      throw MergePreservationError("intermediate gate after merge step " + std::to_string(step) +
                                   " is not Fibonacci with the shared parameters");
    gates[static_cast<std::size_t>(root)] = std::move(merged);
  }

  // Every component is fully contracted; multiply the scalars.
  Complex result{1.0, 0.0};
  std::vector<bool> seen(static_cast<std::size_t>(V), false);
  for (int v = 0; v < V; ++v) {
    const int root = uf.find(v);
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = true;
    const Gate &gate = gates[static_cast<std::size_t>(root)];
    if (gate.dangling_count() != 0)
      throw std::logic_error("holant_eval: component still has dangling edges after all merges");
    result *= gate.signature.values[0];
  }
  return result;
}

}  // namespace holant
