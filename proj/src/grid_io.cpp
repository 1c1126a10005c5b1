#include "holant/grid_io.hpp"

#include <cstdio>
#include <unordered_map>

#include <json.hpp>

namespace holant {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string &context, const std::string &what) {
  throw ParseError(context + ": " + what);
}

Complex read_complex(const json &j, const std::string &context) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(context, "expected [re, im] or a bare number");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

json write_complex(const Complex &z) { return json::array({z.real(), z.imag()}); }

json parse_document(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
}

int read_domain(const json &doc) {
  if (!doc.contains("domain") || !doc["domain"].is_number_integer()) fail("document", "missing integer 'domain'");
  return doc["domain"].get<int>();
}

template <std::size_t N>
void read_basis_fields(const json &j, const std::string &context, std::array<Complex, N> &weights,
                       std::array<std::array<Complex, N>, N> &vectors) {
  if (!j.contains("weights") || !j["weights"].is_array() || j["weights"].size() != N)
    fail(context, "expected " + std::to_string(N) + " weights");
  if (!j.contains("vectors") || !j["vectors"].is_array() || j["vectors"].size() != N)
    fail(context, "expected " + std::to_string(N) + " vectors");
  for (std::size_t i = 0; i < N; ++i) {
    weights[i] = read_complex(j["weights"][i], context + ".weights[" + std::to_string(i) + "]");
    const json &vec = j["vectors"][i];
    if (!vec.is_array() || vec.size() != N)
      fail(context + ".vectors[" + std::to_string(i) + "]", "expected " + std::to_string(N) + " components");
    for (std::size_t c = 0; c < N; ++c)
      vectors[i][c] = read_complex(vec[c], context + ".vectors[" + std::to_string(i) + "]");
  }
}

SymmetricSignature read_signature(const json &j, int domain, const std::string &context) {
  if (!j.contains("arity") || !j["arity"].is_number_integer()) fail(context, "missing integer 'arity'");
  const int arity = j["arity"].get<int>();
  if (arity < 0) fail(context, "negative arity");

  if (j.contains("generator")) {
    const json &gen = j["generator"];
    SymmetricSignature sig;
    try {
      if (domain == 3) {
        d3::Basis b;
        read_basis_fields<3>(gen, context + ".generator", b.weights, b.vectors);
        sig = d3::generate(b, arity);
      } else if (domain == 4) {
        d4::Basis b;
        read_basis_fields<4>(gen, context + ".generator", b.weights, b.vectors);
        sig = d4::generate(b, arity);
      } else {
        fail(context, "generator specs need domain 3 or 4");
      }
    } catch (const std::invalid_argument &ex) {
      fail(context + ".generator", ex.what());
    }
    return sig;
  }

  if (!j.contains("values") || !j["values"].is_array()) fail(context, "missing 'values' array (or 'generator')");
  const auto expected = static_cast<std::size_t>(entry_count(domain, arity));
  if (j["values"].size() != expected)
    fail(context, "expected " + std::to_string(expected) + " values, got " + std::to_string(j["values"].size()));
  SymmetricSignature sig;
  sig.domain_size = domain;
  sig.arity = arity;
  sig.values.reserve(expected);
  for (std::size_t i = 0; i < expected; ++i)
    sig.values.push_back(read_complex(j["values"][i], context + ".values[" + std::to_string(i) + "]"));
  try {
    sig.check_invariants();
  } catch (const std::invalid_argument &ex) {
    fail(context, ex.what());
  }
  return sig;
}

std::vector<NamedSignature> read_signature_list(const json &doc, int domain) {
  if (!doc.contains("signatures") || !doc["signatures"].is_array()) fail("document", "missing 'signatures' array");
  std::vector<NamedSignature> out;
  for (std::size_t i = 0; i < doc["signatures"].size(); ++i) {
    const json &j = doc["signatures"][i];
    const std::string context = "signatures[" + std::to_string(i) + "]";
    if (!j.contains("name") || !j["name"].is_string()) fail(context, "missing string 'name'");
    const std::string name = j["name"].get<std::string>();
    out.push_back({name, read_signature(j, domain, context + " ('" + name + "')")});
  }
  return out;
}

json write_signature(const NamedSignature &entry) {
  json j;
  j["name"] = entry.name;
  j["arity"] = entry.signature.arity;
  json vals = json::array();
  for (const Complex &v : entry.signature.values) vals.push_back(write_complex(v));
  j["values"] = std::move(vals);
  return j;
}

}  // namespace

SignatureSet parse_signatures(const std::string &text) {
  const json doc = parse_document(text);
  SignatureSet set;
  set.domain_size = read_domain(doc);
  set.entries = read_signature_list(doc, set.domain_size);
  return set;
}

SignatureGrid parse_grid(const std::string &text) {
  const json doc = parse_document(text);
  SignatureGrid grid;
  grid.domain_size = read_domain(doc);
  grid.signatures = read_signature_list(doc, grid.domain_size);

  std::unordered_map<std::string, int> by_name;
  for (std::size_t i = 0; i < grid.signatures.size(); ++i) {
    if (!by_name.emplace(grid.signatures[i].name, static_cast<int>(i)).second)
      fail("signatures", "duplicate name '" + grid.signatures[i].name + "'");
  }

  if (!doc.contains("vertices") || !doc["vertices"].is_array()) fail("document", "missing 'vertices' array");
  for (std::size_t v = 0; v < doc["vertices"].size(); ++v) {
    const json &j = doc["vertices"][v];
    if (!j.is_string()) fail("vertices[" + std::to_string(v) + "]", "expected a signature name");
    const auto it = by_name.find(j.get<std::string>());
    if (it == by_name.end())
      fail("vertices[" + std::to_string(v) + "]", "unknown signature '" + j.get<std::string>() + "'");
    grid.vertex_signature.push_back(it->second);
  }

  if (!doc.contains("edges") || !doc["edges"].is_array()) fail("document", "missing 'edges' array");
  for (std::size_t e = 0; e < doc["edges"].size(); ++e) {
    const json &j = doc["edges"][e];
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
      fail("edges[" + std::to_string(e) + "]", "expected [u, v]");
    const int u = j[0].get<int>(), v = j[1].get<int>();
    if (u < 0 || u >= grid.vertex_count() || v < 0 || v >= grid.vertex_count())
      fail("edges[" + std::to_string(e) + "]", "endpoint out of range");
    grid.edges.emplace_back(u, v);
  }

  // Degree/arity consistency, reported against the offending vertex.
  const std::vector<int> deg = grid.degrees();
  for (int v = 0; v < grid.vertex_count(); ++v) {
    const auto &[name, sig] = grid.signatures[static_cast<std::size_t>(grid.vertex_signature[static_cast<std::size_t>(v)])];
    if (deg[static_cast<std::size_t>(v)] != sig.arity)
      fail("vertices[" + std::to_string(v) + "] ('" + name + "')",
           "degree " + std::to_string(deg[static_cast<std::size_t>(v)]) + " != arity " + std::to_string(sig.arity));
  }
  return grid;
}

FibParams parse_params(const std::string &text) {
  const json doc = parse_document(text);
  const int domain = read_domain(doc);
  auto field = [&](const char *key) -> Complex {
    if (!doc.contains(key)) fail("params", std::string("missing field '") + key + "'");
    return read_complex(doc[key], std::string("params.") + key);
  };
  if (domain == 3) return d3::Params{field("s"), field("x"), field("y"), field("t")};
  if (domain == 4)
    return d4::Params{field("a"), field("b"), field("c"), field("d"), field("e"),
                      field("f"), field("h"), field("i"), field("j"), field("p")};
  fail("params", "domain must be 3 or 4");
}

AnyBasis parse_basis(const std::string &text) {
  const json doc = parse_document(text);
  const int domain = read_domain(doc);
  if (domain == 3) {
    d3::Basis b;
    read_basis_fields<3>(doc, "basis", b.weights, b.vectors);
    return b;
  }
  if (domain == 4) {
    d4::Basis b;
    read_basis_fields<4>(doc, "basis", b.weights, b.vectors);
    return b;
  }
  fail("basis", "domain must be 3 or 4");
}

std::string emit_grid(const SignatureGrid &grid) {
  json doc;
  doc["domain"] = grid.domain_size;
  json sigs = json::array();
  for (const auto &entry : grid.signatures) sigs.push_back(write_signature(entry));
  doc["signatures"] = std::move(sigs);
  json verts = json::array();
  for (int s : grid.vertex_signature) verts.push_back(grid.signatures[static_cast<std::size_t>(s)].name);
  doc["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto &[u, v] : grid.edges) edges.push_back(json::array({u, v}));
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string emit_signatures(const SignatureSet &set) {
  json doc;
  doc["domain"] = set.domain_size;
  json sigs = json::array();
  for (const auto &entry : set.entries) sigs.push_back(write_signature(entry));
  doc["signatures"] = std::move(sigs);
  return doc.dump(2) + "\n";
}

std::string emit_params(const FibParams &params) {
  json doc;
  if (const auto *p3 = std::get_if<d3::Params>(&params)) {
    doc["domain"] = 3;
    doc["s"] = write_complex(p3->s);
    doc["x"] = write_complex(p3->x);
    doc["y"] = write_complex(p3->y);
    doc["t"] = write_complex(p3->t);
  } else {
    const auto &p4 = std::get<d4::Params>(params);
    doc["domain"] = 4;
    doc["a"] = write_complex(p4.a);
    doc["b"] = write_complex(p4.b);
    doc["c"] = write_complex(p4.c);
    doc["d"] = write_complex(p4.d);
    doc["e"] = write_complex(p4.e);
    doc["f"] = write_complex(p4.f);
    doc["h"] = write_complex(p4.h);
    doc["i"] = write_complex(p4.i);
    doc["j"] = write_complex(p4.j);
    doc["p"] = write_complex(p4.p);
  }
  return doc.dump(2) + "\n";
}

std::string emit_basis(const AnyBasis &basis) {
  json doc;
  json weights = json::array();
  json vectors = json::array();
  if (const auto *b3 = std::get_if<d3::Basis>(&basis)) {
    doc["domain"] = 3;
    for (const auto &w : b3->weights) weights.push_back(write_complex(w));
    for (const auto &vec : b3->vectors) {
      json v = json::array();
      for (const auto &c : vec) v.push_back(write_complex(c));
      vectors.push_back(std::move(v));
    }
  } else {
    const auto &b4 = std::get<d4::Basis>(basis);
    doc["domain"] = 4;
    for (const auto &w : b4.weights) weights.push_back(write_complex(w));
    for (const auto &vec : b4.vectors) {
      json v = json::array();
      for (const auto &c : vec) v.push_back(write_complex(c));
      vectors.push_back(std::move(v));
    }
  }
  doc["weights"] = std::move(weights);
  doc["vectors"] = std::move(vectors);
  return doc.dump(2) + "\n";
}

std::string format_complex(const Complex &z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", z.real(), z.imag());
  return buf;
}

}  // namespace holant
