#include "holant/oracle.hpp"

#include <cmath>
#include <future>
#include <string>
#include <vector>

namespace holant {

namespace {

struct VertexTable {
  std::vector<int> slots;       // edge index per incident half-edge
  std::vector<Complex> lookup;  // tuple index (base-d over slots) -> value
};

// Dense tuple-index tables: the inner loop is a few multiply-adds per vertex.
std::vector<VertexTable> build_tables(const SignatureGrid &grid) {
  const int d = grid.domain_size;
  const int V = grid.vertex_count();
  std::vector<VertexTable> tables(static_cast<std::size_t>(V));
  for (int e = 0; e < static_cast<int>(grid.edges.size()); ++e) {
    const auto &[u, v] = grid.edges[static_cast<std::size_t>(e)];
    tables[static_cast<std::size_t>(u)].slots.push_back(e);
    tables[static_cast<std::size_t>(v)].slots.push_back(e);
  }
  std::vector<int> colors;
  for (int v = 0; v < V; ++v) {
    VertexTable &t = tables[static_cast<std::size_t>(v)];
    const SymmetricSignature &sig =
        grid.signatures[static_cast<std::size_t>(grid.vertex_signature[static_cast<std::size_t>(v)])].signature;
    const int k = static_cast<int>(t.slots.size());
    std::uint64_t tuples = 1;
    for (int i = 0; i < k; ++i) tuples *= static_cast<std::uint64_t>(d);
    t.lookup.resize(tuples);
    colors.assign(static_cast<std::size_t>(k), 0);
    for (std::uint64_t idx = 0; idx < tuples; ++idx) {
      std::uint64_t rest = idx;
      for (int i = 0; i < k; ++i) {
        colors[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(d));
        rest /= static_cast<std::uint64_t>(d);
      }
      t.lookup[idx] = evaluate(sig, colors);
    }
  }
  return tables;
}

Complex sum_range(const SignatureGrid &grid, const std::vector<VertexTable> &tables, std::uint64_t begin,
                  std::uint64_t end) {
  const int d = grid.domain_size;
  const int E = static_cast<int>(grid.edges.size());
  std::vector<int> coloring(static_cast<std::size_t>(E), 0);
  Complex total{};
  for (std::uint64_t a = begin; a < end; ++a) {
    std::uint64_t rest = a;
    for (int e = 0; e < E; ++e) {
      coloring[static_cast<std::size_t>(e)] = static_cast<int>(rest % static_cast<std::uint64_t>(d));
      rest /= static_cast<std::uint64_t>(d);
    }
    Complex prod{1.0, 0.0};
    for (const VertexTable &t : tables) {
      std::uint64_t idx = 0;
      for (std::size_t i = t.slots.size(); i-- > 0;)
        idx = idx * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(coloring[static_cast<std::size_t>(t.slots[i])]);
      prod *= t.lookup[idx];
    }
    total += prod;
  }
  return total;
}

}  // namespace

Complex holant_bruteforce(const SignatureGrid &grid, const BruteforceOptions &opts) {
  if (grid.domain_size < 2) throw std::invalid_argument("holant_bruteforce: domain size must be >= 2");
  for (const auto &[name, sig] : grid.signatures) sig.check_invariants();
  const std::vector<int> deg = grid.degrees();
  for (int v = 0; v < grid.vertex_count(); ++v) {
    const SymmetricSignature &sig =
        grid.signatures[static_cast<std::size_t>(grid.vertex_signature[static_cast<std::size_t>(v)])].signature;
    if (deg[static_cast<std::size_t>(v)] != sig.arity)
      throw std::invalid_argument("holant_bruteforce: vertex " + std::to_string(v) + " degree != arity");
  }

  const int E = static_cast<int>(grid.edges.size());
  const double log_terms = static_cast<double>(E) * std::log2(static_cast<double>(grid.domain_size));
  if (log_terms > 62 || std::pow(static_cast<double>(grid.domain_size), static_cast<double>(E)) >
                            static_cast<double>(opts.term_cap))
    throw EnumerationCapError("holant_bruteforce: " + std::to_string(grid.domain_size) + "^" + std::to_string(E) +
                              " assignments exceed the enumeration cap");

  std::uint64_t terms = 1;
  for (int e = 0; e < E; ++e) terms *= static_cast<std::uint64_t>(grid.domain_size);

  const std::vector<VertexTable> tables = build_tables(grid);
  if (opts.threads <= 1 || terms < 1024) return sum_range(grid, tables, 0, terms);

  // Fixed chunking; partial sums are combined in range order so the result
  // does not depend on scheduling.
  const int workers = opts.threads;
  const std::uint64_t chunk = (terms + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
  std::vector<std::future<Complex>> parts;
  for (int t = 0; t < workers; ++t) {
    const std::uint64_t begin = static_cast<std::uint64_t>(t) * chunk;
    const std::uint64_t end = std::min(terms, begin + chunk);
    if (begin >= end) break;
    parts.push_back(std::async(std::launch::async, [&, begin, end] { return sum_range(grid, tables, begin, end); }));
  }
  Complex total{};
  for (auto &p : parts) total += p.get();
  return total;
}

}  // namespace holant
