#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hlc/error.hpp"

namespace hlc {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Label {
  std::string sym;
  std::size_t arity = 0;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

inline std::size_t arity_of(const Label& l) { return l.arity; }

template <class L>
struct Edge {
  L label;
  std::vector<NodeId> att;
};

// Nodes are the dense range [0, node_count()). Edge and node ids are positions,
// so every operation that removes material renumbers and reports the mapping.
template <class L>
class Hypergraph {
 public:
  using label_type = L;

  Hypergraph() = default;
  explicit Hypergraph(std::size_t nodes) : nodes_(nodes) {}

  NodeId add_node() { return static_cast<NodeId>(nodes_++); }

  NodeId add_nodes(std::size_t k) {
    auto first = static_cast<NodeId>(nodes_);
    nodes_ += k;
    return first;
  }

  EdgeId add_edge(L label, std::vector<NodeId> att) {
    if (arity_of(label) != att.size())
      throw Error(ErrorCode::ArityMismatch, "edge with " + std::to_string(att.size()) +
                                                " attachments carries a label of arity " +
                                                std::to_string(arity_of(label)));
    check_sequence(att, "att");
    edges_.push_back(Edge<L>{std::move(label), std::move(att)});
    return static_cast<EdgeId>(edges_.size() - 1);
  }

  void set_ext(std::vector<NodeId> ext) {
    check_sequence(ext, "ext");
    ext_ = std::move(ext);
  }

  void set_label(EdgeId e, L label) {
    if (arity_of(label) != edges_.at(e).att.size())
      throw Error(ErrorCode::ArityMismatch, "relabeling changes arity");
    edges_[e].label = std::move(label);
  }

  std::size_t node_count() const { return nodes_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t type() const { return ext_.size(); }

  const Edge<L>& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge<L>>& edges() const { return edges_; }
  const std::vector<NodeId>& ext() const { return ext_; }

  bool is_external(NodeId v) const { return std::find(ext_.begin(), ext_.end(), v) != ext_.end(); }

  // degree[v] = number of edge tentacles attached to v
  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(nodes_, 0);
    for (const auto& e : edges_)
      for (NodeId v : e.att) ++d[v];
    return d;
  }

 private:
  void check_sequence(const std::vector<NodeId>& seq, const char* what) const {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] >= nodes_)
        throw Error(ErrorCode::MalformedGraph, std::string(what) + " refers to missing node " +
                                                   std::to_string(seq[i]));
      for (std::size_t j = 0; j < i; ++j)
        if (seq[j] == seq[i])
          throw Error(ErrorCode::MalformedGraph,
                      std::string(what) + " repeats node " + std::to_string(seq[i]));
    }
  }

  std::size_t nodes_ = 0;
  std::vector<Edge<L>> edges_;
  std::vector<NodeId> ext_;
};

template <class L>
Hypergraph<L> make_graph(std::size_t nodes, std::vector<std::pair<L, std::vector<NodeId>>> edges,
                         std::vector<NodeId> ext) {
  Hypergraph<L> g(nodes);
  for (auto& [l, att] : edges) g.add_edge(std::move(l), std::move(att));
  g.set_ext(std::move(ext));
  return g;
}

template <class L>
Hypergraph<L> handle(const L& label) {
  Hypergraph<L> g(arity_of(label));
  std::vector<NodeId> nodes(arity_of(label));
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = static_cast<NodeId>(i);
  g.add_edge(label, nodes);
  g.set_ext(nodes);
  return g;
}

template <class L>
bool is_handle(const Hypergraph<L>& g) {
  if (g.edge_count() != 1) return false;
  const auto& e = g.edge(0);
  return g.node_count() == e.att.size() && e.att == g.ext();
}

Hypergraph<Label> string_graph(const std::vector<Label>& word);
Hypergraph<Label> string_graph(const std::string& word);  // one binary label per character

template <class L>
struct ReplaceResult {
  Hypergraph<L> graph;
  std::vector<NodeId> host_nodes;    // host node -> result node
  std::vector<EdgeId> host_edges;    // host edge -> result edge (kNone for the replaced edge)
  std::vector<NodeId> filler_nodes;  // filler node -> result node
  std::vector<EdgeId> filler_edges;  // filler edge -> result edge
};

// G[H/e]: host nodes keep their ids, the filler's internal nodes are appended.
template <class L>
ReplaceResult<L> replace_edge(const Hypergraph<L>& host, EdgeId e, const Hypergraph<L>& filler) {
  const auto& target = host.edge(e);
  if (target.att.size() != filler.type())
    throw Error(ErrorCode::ArityMismatch, "replacement of an edge of arity " +
                                              std::to_string(target.att.size()) +
                                              " by a graph of type " + std::to_string(filler.type()));
  ReplaceResult<L> r;
  r.graph = Hypergraph<L>(host.node_count());
  r.host_nodes.resize(host.node_count());
  for (NodeId v = 0; v < host.node_count(); ++v) r.host_nodes[v] = v;
  r.filler_nodes.assign(filler.node_count(), kNone);
  for (std::size_t i = 0; i < filler.type(); ++i) r.filler_nodes[filler.ext()[i]] = target.att[i];
  for (NodeId v = 0; v < filler.node_count(); ++v)
    if (r.filler_nodes[v] == kNone) r.filler_nodes[v] = r.graph.add_node();
  r.host_edges.assign(host.edge_count(), kNone);
  for (EdgeId i = 0; i < host.edge_count(); ++i) {
    if (i == e) continue;
    r.host_edges[i] = r.graph.add_edge(host.edge(i).label, host.edge(i).att);
  }
  r.filler_edges.resize(filler.edge_count());
  for (EdgeId i = 0; i < filler.edge_count(); ++i) {
    std::vector<NodeId> att;
    for (NodeId v : filler.edge(i).att) att.push_back(r.filler_nodes[v]);
    r.filler_edges[i] = r.graph.add_edge(filler.edge(i).label, std::move(att));
  }
  r.graph.set_ext(host.ext());
  return r;
}

template <class L>
Hypergraph<L> replace(const Hypergraph<L>& host, EdgeId e, const Hypergraph<L>& filler) {
  return replace_edge(host, e, filler).graph;
}

struct Subgraph {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  std::vector<NodeId> ext;
};

template <class L>
Hypergraph<L> subgraph_as_graph(const Hypergraph<L>& host, const Subgraph& sub,
                                std::vector<NodeId>* host_to_sub = nullptr) {
  std::vector<NodeId> map(host.node_count(), kNone);
  Hypergraph<L> g;
  for (NodeId v : sub.nodes)
    if (map.at(v) == kNone) map[v] = g.add_node();
  for (EdgeId e : sub.edges) {
    std::vector<NodeId> att;
    for (NodeId v : host.edge(e).att) {
      if (map[v] == kNone)
        throw Error(ErrorCode::MalformedGraph, "subgraph edge leaves the node subset");
      att.push_back(map[v]);
    }
    g.add_edge(host.edge(e).label, std::move(att));
  }
  std::vector<NodeId> ext;
  for (NodeId v : sub.ext) {
    if (map.at(v) == kNone) throw Error(ErrorCode::MalformedGraph, "subgraph ext outside node subset");
    ext.push_back(map[v]);
  }
  g.set_ext(std::move(ext));
  if (host_to_sub) *host_to_sub = std::move(map);
  return g;
}

template <class L>
struct CompressResult {
  Hypergraph<L> graph;
  std::vector<NodeId> host_nodes;  // host node -> result node (kNone if removed)
  std::vector<EdgeId> host_edges;  // host edge -> result edge (kNone if compressed)
  EdgeId new_edge = kNone;
};

// G⟦a/H⟧ for the subgraph H = sub.
template <class L>
CompressResult<L> compress_subgraph(const Hypergraph<L>& host, const Subgraph& sub, const L& label) {
  if (sub.ext.size() != arity_of(label))
    throw Error(ErrorCode::ArityMismatch, "compression target arity differs from |subExt|");
  std::vector<char> in_nodes(host.node_count(), 0), in_edges(host.edge_count(), 0),
      in_ext(host.node_count(), 0);
  for (NodeId v : sub.nodes) in_nodes.at(v) = 1;
  for (EdgeId e : sub.edges) in_edges.at(e) = 1;
  for (NodeId v : sub.ext) {
    if (!in_nodes.at(v)) throw Error(ErrorCode::MalformedGraph, "subExt outside the node subset");
    in_ext[v] = 1;
  }
  for (EdgeId e = 0; e < host.edge_count(); ++e) {
    for (NodeId v : host.edge(e).att) {
      if (in_edges[e] && !in_nodes[v])
        throw Error(ErrorCode::MalformedGraph, "subgraph edge leaves the node subset");
      if (!in_edges[e] && in_nodes[v] && !in_ext[v])
        throw Error(ErrorCode::BoundaryViolation,
                    "internal node " + std::to_string(v) + " touches an outside edge");
    }
  }
  for (NodeId v : host.ext())
    if (in_nodes[v] && !in_ext[v])
      throw Error(ErrorCode::BoundaryViolation,
                  "host-external node " + std::to_string(v) + " is internal to the subgraph");

  CompressResult<L> r;
  r.host_nodes.assign(host.node_count(), kNone);
  for (NodeId v = 0; v < host.node_count(); ++v)
    if (!in_nodes[v] || in_ext[v]) r.host_nodes[v] = r.graph.add_node();
  r.host_edges.assign(host.edge_count(), kNone);
  for (EdgeId e = 0; e < host.edge_count(); ++e) {
    if (in_edges[e]) continue;
    std::vector<NodeId> att;
    for (NodeId v : host.edge(e).att) att.push_back(r.host_nodes[v]);
    r.host_edges[e] = r.graph.add_edge(host.edge(e).label, std::move(att));
  }
  std::vector<NodeId> att;
  for (NodeId v : sub.ext) att.push_back(r.host_nodes[v]);
  r.new_edge = r.graph.add_edge(label, std::move(att));
  std::vector<NodeId> ext;
  for (NodeId v : host.ext()) ext.push_back(r.host_nodes[v]);
  r.graph.set_ext(std::move(ext));
  return r;
}

template <class L>
Hypergraph<L> compress(const Hypergraph<L>& host, const Subgraph& sub, const L& label) {
  return compress_subgraph(host, sub, label).graph;
}

// Nodes and edges not listed in `keep_edges` are dropped, as are nodes for which
// keep_node is false; ext is preserved (every ext node must be kept).
template <class L>
Hypergraph<L> induced(const Hypergraph<L>& g, const std::vector<char>& keep_node,
                      const std::vector<char>& keep_edge, std::vector<NodeId>* node_map = nullptr,
                      std::vector<EdgeId>* edge_map = nullptr) {
  std::vector<NodeId> nm(g.node_count(), kNone);
  Hypergraph<L> r;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (keep_node[v]) nm[v] = r.add_node();
  std::vector<EdgeId> em(g.edge_count(), kNone);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!keep_edge[e]) continue;
    std::vector<NodeId> att;
    for (NodeId v : g.edge(e).att) att.push_back(nm[v]);
    em[e] = r.add_edge(g.edge(e).label, std::move(att));
  }
  std::vector<NodeId> ext;
  for (NodeId v : g.ext()) ext.push_back(nm[v]);
  r.set_ext(std::move(ext));
  if (node_map) *node_map = std::move(nm);
  if (edge_map) *edge_map = std::move(em);
  return r;
}

template <class L, class F>
auto map_labels(const Hypergraph<L>& g, F f) {
  using M = decltype(f(g.edge(0).label));
  Hypergraph<M> r(g.node_count());
  for (const auto& e : g.edges()) r.add_edge(f(e.label), e.att);
  r.set_ext(g.ext());
  return r;
}

}  // namespace hlc
