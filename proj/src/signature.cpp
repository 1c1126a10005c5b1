#include "holant/signature.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace holant {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);  // exact: r*(n-i) is divisible by (i+1) here
  }
  return r;
}

std::int64_t entry_count(int domain_size, int arity) {
  if (domain_size < 1) throw std::invalid_argument("entry_count: domain size must be >= 1");
  if (arity < 0) throw std::invalid_argument("entry_count: arity must be >= 0");
  return binomial(arity + domain_size - 1, domain_size - 1);
}

std::int64_t rank_of_count(const CountVector &c) {
  const int d = static_cast<int>(c.size());
  if (d < 1) throw std::invalid_argument("rank_of_count: empty count vector");
  std::int64_t rem = 0;
  for (int v : c) {
    if (v < 0) throw std::invalid_argument("rank_of_count: negative entry");
    rem += v;
  }
  std::int64_t rank = 0;
  for (int pos = 0; pos + 1 < d; ++pos) {
    // Entries before c share the prefix and have a larger coordinate here;
    // their tail count telescopes to a single binomial.
    const std::int64_t len = d - pos;
    rank += binomial(rem - c[pos] + len - 2, len - 1);
    rem -= c[pos];
  }
  return rank;
}

CountVector count_of_rank(int domain_size, int arity, std::int64_t rank) {
  if (rank < 0 || rank >= entry_count(domain_size, arity))
    throw std::out_of_range("count_of_rank: rank out of range");
  CountVector c(static_cast<std::size_t>(domain_size), 0);
  std::int64_t rem = arity;
  for (int pos = 0; pos + 1 < domain_size; ++pos) {
    const std::int64_t len = domain_size - pos;
    for (std::int64_t v = rem; v >= 0; --v) {
      const std::int64_t block = binomial(rem - v + len - 2, len - 2);
      if (rank < block) {
        c[pos] = static_cast<int>(v);
        rem -= v;
        break;
      }
      rank -= block;
    }
  }
  c[static_cast<std::size_t>(domain_size - 1)] = static_cast<int>(rem);
  return c;
}

std::vector<CountVector> all_counts(int domain_size, int arity) {
  std::vector<CountVector> out;
  out.reserve(static_cast<std::size_t>(entry_count(domain_size, arity)));
  CountVector cur(static_cast<std::size_t>(domain_size), 0);
  // Descend on the leading coordinate first; this is exactly the canonical
  // lexicographically decreasing order.
  auto rec = [&](auto &&self, int pos, int rem) -> void {
    if (pos == domain_size - 1) {
      cur[static_cast<std::size_t>(pos)] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, arity);
  return out;
}

SymmetricSignature SymmetricSignature::zeros(int domain_size, int arity) {
  SymmetricSignature g;
  g.domain_size = domain_size;
  g.arity = arity;
  g.values.assign(static_cast<std::size_t>(entry_count(domain_size, arity)), Complex{0.0, 0.0});
  return g;
}

void SymmetricSignature::check_invariants() const {
  if (domain_size < 1) throw std::invalid_argument("signature: domain size must be >= 1");
  if (arity < 0) throw std::invalid_argument("signature: arity must be >= 0");
  const auto expected = static_cast<std::size_t>(entry_count(domain_size, arity));
  if (values.size() != expected)
    throw std::invalid_argument("signature: expected " + std::to_string(expected) + " values, got " +
                                std::to_string(values.size()));
  for (const Complex &v : values)
    if (!is_finite(v)) throw std::invalid_argument("signature: non-finite value");
}

Complex evaluate(const SymmetricSignature &g, std::span<const int> assignment) {
  if (static_cast<int>(assignment.size()) != g.arity)
    throw std::invalid_argument("evaluate: assignment length != arity");
  CountVector hist(static_cast<std::size_t>(g.domain_size), 0);
  for (int color : assignment) {
    if (color < 0 || color >= g.domain_size) throw std::invalid_argument("evaluate: color out of domain");
    ++hist[static_cast<std::size_t>(color)];
  }
  return g.values[static_cast<std::size_t>(rank_of_count(hist))];
}

}  // namespace holant
