#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hlc/canonical.hpp"

namespace hlc {

// Describes how a pattern (frame) is laid over a host graph.
//  - slot edges absorb a whole host subgraph whose external nodes are the images of
//    the slot's attachments (the premises of (→×)/(÷→));
//  - fixed edges coincide with a given host edge;
//  - every other frame edge must coincide with a host edge carrying the same key.
// Without `remainder` all host material must be used; with it, leftover material
// forms the context, which may not touch images of internal frame nodes.
struct FrameSpec {
  std::vector<char> slot;     // per frame edge
  std::vector<EdgeId> fixed;  // per frame edge, kNone if not fixed
  std::vector<NodeId> anchor; // per frame node, kNone if free
  bool remainder = false;
  // Collapse interchangeable choices (isolated host nodes); yields one
  // representative per symmetry class instead of every concrete assignment.
  bool symmetry_reduction = true;

  // Optional node balance: slot contents (and the remainder) must reach the given
  // value of (#non-external nodes + sum of edge weights); isolated host nodes are
  // then distributed deterministically instead of enumerated.
  bool balance = false;
  std::vector<long> edge_weight;  // per host edge
  std::vector<long> slot_target;  // per frame edge
  long rest_target = 0;
};

struct Decomposition {
  std::vector<NodeId> node_map;                 // frame node -> host node
  std::vector<EdgeId> edge_map;                 // frame edge -> host edge (kNone for slots)
  std::vector<std::vector<EdgeId>> slot_edges;  // per frame edge
  std::vector<std::vector<NodeId>> slot_nodes;  // per frame edge: internal host nodes
  std::vector<EdgeId> rest_edges;
  std::vector<NodeId> rest_nodes;               // host nodes kept by the context
};

// Calls `visit` for each decomposition until it returns true; returns whether
// some call returned true.
bool enumerate_decompositions(const Shape& host, const Shape& frame, const FrameSpec& spec,
                              const std::function<bool(const Decomposition&)>& visit);

// Pattern-onto-host matching in the sense of the public embedding API: edges of the
// pattern whose key equals `slot_key` are slots, all other pattern edges must match
// host edges exactly; all host material must be covered.
template <class L>
std::vector<Decomposition> enumerate_embeddings(const Hypergraph<L>& pattern, const Hypergraph<L>& host,
                                                const std::vector<NodeId>& anchor,
                                                const std::function<bool(const L&)>& is_slot) {
  Shape ps = shape_of(pattern, [](const L& l) { return label_key(l); });
  Shape hs = shape_of(host, [](const L& l) { return label_key(l); });
  FrameSpec spec;
  spec.slot.resize(pattern.edge_count());
  for (EdgeId e = 0; e < pattern.edge_count(); ++e) spec.slot[e] = is_slot(pattern.edge(e).label) ? 1 : 0;
  spec.fixed.assign(pattern.edge_count(), kNone);
  spec.anchor = anchor;
  spec.anchor.resize(pattern.node_count(), kNone);
  spec.symmetry_reduction = false;
  std::vector<Decomposition> out;
  enumerate_decompositions(hs, ps, spec, [&](const Decomposition& d) {
    out.push_back(d);
    return false;
  });
  return out;
}

}  // namespace hlc
