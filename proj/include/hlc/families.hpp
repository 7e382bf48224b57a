#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hlc/canonical.hpp"
#include "hlc/types.hpp"

// Exhaustive generators for small graphs and types, deduplicated up to isomorphism.
namespace hlc {

namespace detail {

template <class L>
void assign_edges(const std::vector<L>& labels, std::size_t i, Hypergraph<L>& g,
                  const std::function<void(const Hypergraph<L>&)>& out) {
  if (i == labels.size()) {
    out(g);
    return;
  }
  std::size_t k = arity_of(labels[i]);
  std::vector<NodeId> att(k);
  std::vector<char> used(g.node_count(), 0);
  std::function<void(std::size_t)> pick = [&](std::size_t j) {
    if (j == k) {
      Hypergraph<L> h = g;
      h.add_edge(labels[i], att);
      assign_edges(labels, i + 1, h, out);
      return;
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (used[v]) continue;
      used[v] = 1;
      att[j] = v;
      pick(j + 1);
      used[v] = 0;
    }
  };
  pick(0);
}

template <class L>
void assign_ext(Hypergraph<L>& g, std::size_t len, std::vector<NodeId>& ext, std::vector<char>& used,
                const std::function<void(const Hypergraph<L>&)>& out) {
  if (ext.size() == len) {
    g.set_ext(ext);
    out(g);
    return;
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (used[v]) continue;
    used[v] = 1;
    ext.push_back(v);
    assign_ext(g, len, ext, used, out);
    ext.pop_back();
    used[v] = 0;
  }
}

}  // namespace detail

// Every graph with exactly the given edge labels, `nodes` nodes and an ext sequence of
// length `ext_len`, with at most `max_isolated` non-external isolated nodes. Each
// isomorphism class is reported once.
template <class L>
void enumerate_graphs(const std::vector<L>& labels, std::size_t nodes, std::size_t ext_len, std::size_t max_isolated,
                      const std::function<void(const Hypergraph<L>&)>& out) {
  if (ext_len > nodes) return;
  std::set<std::string> seen;
  Hypergraph<L> g(nodes);
  detail::assign_edges<L>(labels, 0, g, [&](const Hypergraph<L>& h) {
    Hypergraph<L> x = h;
    std::vector<NodeId> ext;
    std::vector<char> used(nodes, 0);
    detail::assign_ext<L>(x, ext_len, ext, used, [&](const Hypergraph<L>& y) {
      auto deg = y.degrees();
      std::size_t iso = 0;
      for (NodeId v = 0; v < y.node_count(); ++v)
        if (deg[v] == 0 && !y.is_external(v)) ++iso;
      if (iso > max_isolated) return;
      if (seen.insert(canonical_form(y)).second) out(y);
    });
  });
}

struct TypeBounds {
  std::vector<Type> primitives;
  std::size_t max_size = 4;
  std::size_t max_arity = 2;     // arity of generated compound types
  std::size_t max_nodes = 3;     // per denominator or body
  std::size_t max_isolated = 0;  // non-external isolated nodes per denominator or body
  std::size_t max_edges = 3;     // type-labeled edges per denominator or body
  bool division = true;
  bool product = true;
};

// All types within the bounds, grouped by size (index = size), each listed once.
std::vector<std::vector<Type>> enumerate_types(const TypeBounds& b);

// Sequents H -> A with A from `succedents`, H built from `labels` (at most max_edges
// edges) over at most max_nodes nodes.
struct SequentBounds {
  std::vector<Type> labels;
  std::vector<Type> succedents;
  std::size_t max_size = 5;
  std::size_t max_edges = 2;
  std::size_t max_nodes = 3;
  std::size_t max_isolated = 0;
};

void enumerate_sequents(const SequentBounds& b, const std::function<void(const Sequent&)>& out);

}  // namespace hlc
