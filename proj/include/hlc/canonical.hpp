#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlc/hypergraph.hpp"

namespace hlc {

// Label-free view of a hypergraph: every edge carries an integer key that stands
// in for its label.
struct Shape {
  std::size_t nodes = 0;
  std::vector<std::vector<NodeId>> att;
  std::vector<std::uint64_t> key;
  std::vector<NodeId> ext;
};

struct Canonical {
  std::string code;
  std::vector<NodeId> node_order;  // position -> node
  std::vector<EdgeId> edge_order;  // position -> edge
};

Canonical canonicalize(const Shape& s);

std::uint64_t label_key(const Label& l);       // process-local interned id
const std::string& label_text(const Label& l);  // stable textual key

template <class L, class KeyFn>
Shape shape_of(const Hypergraph<L>& g, KeyFn key) {
  Shape s;
  s.nodes = g.node_count();
  s.att.reserve(g.edge_count());
  s.key.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    s.att.push_back(e.att);
    s.key.push_back(key(e.label));
  }
  s.ext = g.ext();
  return s;
}

template <class L>
Canonical canonical(const Hypergraph<L>& g) {
  return canonicalize(shape_of(g, [](const L& l) { return label_key(l); }));
}

// Byte string that is equal for two graphs iff they are isomorphic. Labels enter
// through their stable textual keys, so the result does not depend on the order in
// which labels were first seen by the process.
template <class L>
std::string canonical_form(const Hypergraph<L>& g) {
  std::vector<std::string> texts;
  for (const auto& e : g.edges()) texts.push_back(label_text(e.label));
  std::sort(texts.begin(), texts.end());
  texts.erase(std::unique(texts.begin(), texts.end()), texts.end());
  auto rank = [&](const L& l) {
    const auto& t = label_text(l);
    return static_cast<std::uint64_t>(std::lower_bound(texts.begin(), texts.end(), t) - texts.begin());
  };
  std::string out;
  for (const auto& t : texts) {
    out += std::to_string(t.size());
    out += ':';
    out += t;
  }
  out += '|';
  out += canonicalize(shape_of(g, rank)).code;
  return out;
}

struct Isomorphism {
  std::vector<NodeId> nodes;  // g1 node -> g2 node
  std::vector<EdgeId> edges;  // g1 edge -> g2 edge
};

Isomorphism isomorphism_from(const Canonical& c1, const Canonical& c2);

template <class L>
std::optional<Isomorphism> isomorphism(const Hypergraph<L>& g1, const Hypergraph<L>& g2) {
  if (g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count() ||
      g1.type() != g2.type())
    return std::nullopt;
  auto c1 = canonical(g1);
  auto c2 = canonical(g2);
  if (c1.code != c2.code) return std::nullopt;
  return isomorphism_from(c1, c2);
}

template <class L>
bool isomorphic(const Hypergraph<L>& g1, const Hypergraph<L>& g2) {
  return isomorphism(g1, g2).has_value();
}

// Checks that the maps form an isomorphism g1 -> g2 (labels compared with ==).
template <class L>
bool is_isomorphism(const Hypergraph<L>& g1, const Hypergraph<L>& g2, const Isomorphism& iso) {
  if (g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count()) return false;
  if (iso.nodes.size() != g1.node_count() || iso.edges.size() != g1.edge_count()) return false;
  std::vector<char> hit(g2.node_count(), 0), ehit(g2.edge_count(), 0);
  for (NodeId v : iso.nodes) {
    if (v >= g2.node_count() || hit[v]) return false;
    hit[v] = 1;
  }
  for (EdgeId e = 0; e < g1.edge_count(); ++e) {
    EdgeId f = iso.edges[e];
    if (f >= g2.edge_count() || ehit[f]) return false;
    ehit[f] = 1;
    if (!(g1.edge(e).label == g2.edge(f).label)) return false;
    const auto& a1 = g1.edge(e).att;
    const auto& a2 = g2.edge(f).att;
    if (a1.size() != a2.size()) return false;
    for (std::size_t i = 0; i < a1.size(); ++i)
      if (iso.nodes[a1[i]] != a2[i]) return false;
  }
  if (g1.type() != g2.type()) return false;
  for (std::size_t i = 0; i < g1.type(); ++i)
    if (iso.nodes[g1.ext()[i]] != g2.ext()[i]) return false;
  return true;
}

}  // namespace hlc
