#pragma once

// Direct predicates for the fixture languages and small graph families. They read
// the graphs structurally and never consult a grammar.

#include <optional>
#include <string>
#include <vector>

#include "hlc/families.hpp"
#include "hlc/grammars.hpp"

namespace oracle {

inline bool no_isolated(const hlc::Graph& h) {
  std::vector<char> touched(h.node_count(), 0);
  for (const auto& e : h.edges())
    for (auto v : e.att) touched[v] = 1;
  for (auto t : touched)
    if (!t) return false;
  return true;
}

// Some split V1 ∪ V2 with every edge going from V1 to V2; tries all 2^n splits.
inline bool directed_bipartite(const hlc::Graph& h) {
  std::size_t n = h.node_count();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool ok = true;
    for (const auto& e : h.edges())
      if (!((mask >> e.att[0]) & 1) || ((mask >> e.att[1]) & 1)) ok = false;
    if (ok) return true;
  }
  return false;
}

// Rooted trees of the branching fixture: edges point away from the single external
// root, the root has one child, an a-edge ends in a node with 0 or 2 children and a
// c-edge in a node with exactly one.
inline bool branching_tree(const hlc::Graph& h) {
  if (h.type() != 1 || h.edge_count() == 0) return false;
  std::size_t n = h.node_count();
  std::vector<int> in(n, 0), out(n, 0);
  for (const auto& e : h.edges()) {
    if (e.label.arity != 2 || (e.label.sym != "a" && e.label.sym != "c")) return false;
    ++out[e.att[0]];
    ++in[e.att[1]];
  }
  auto root = h.ext()[0];
  if (in[root] != 0 || out[root] != 1) return false;
  for (std::size_t v = 0; v < n; ++v)
    if (v != root && in[v] != 1) return false;
  if (h.edge_count() != n - 1) return false;
  // n - 1 edges, in-degree one everywhere but the root: a tree iff all reachable
  std::vector<char> seen(n, 0);
  std::vector<hlc::NodeId> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& e : h.edges())
      if (e.att[0] == v && !seen[e.att[1]]) {
        seen[e.att[1]] = 1;
        stack.push_back(e.att[1]);
      }
  }
  for (auto s : seen)
    if (!s) return false;
  for (const auto& e : h.edges()) {
    int k = out[e.att[1]];
    if (e.label.sym == "a" ? (k != 0 && k != 2) : k != 1) return false;
  }
  return true;
}

// The word spelled by a string graph, if it is one.
inline std::optional<std::string> word_of(const hlc::Graph& h) {
  if (h.type() != 2 || h.node_count() != h.edge_count() + 1) return std::nullopt;
  std::string w;
  hlc::NodeId v = h.ext()[0];
  std::vector<char> used(h.edge_count(), 0);
  while (w.size() < h.edge_count()) {
    int next = -1;
    for (std::size_t e = 0; e < h.edge_count(); ++e)
      if (!used[e] && h.edge(e).att.size() == 2 && h.edge(e).att[0] == v && h.edge(e).label.sym.size() == 1) {
        if (next != -1) return std::nullopt;
        next = static_cast<int>(e);
      }
    if (next == -1) return std::nullopt;
    used[next] = 1;
    w += h.edge(next).label.sym;
    v = h.edge(next).att[1];
  }
  if (v != h.ext()[1]) return std::nullopt;
  return w;
}

inline std::vector<std::pair<char, std::size_t>> runs(const std::string& w) {
  std::vector<std::pair<char, std::size_t>> r;
  for (char c : w) {
    if (!r.empty() && r.back().first == c)
      ++r.back().second;
    else
      r.push_back({c, 1});
  }
  return r;
}

inline bool in_anbn(const std::string& w) {
  auto r = runs(w);
  return r.size() == 2 && r[0].first == 'a' && r[1].first == 'b' && r[0].second == r[1].second;
}

// a^{n1} b^{n1} ... a^{nk} b^{nk}, k >= 1
inline bool in_blocks(const std::string& w) {
  auto r = runs(w);
  if (r.empty() || r.size() % 2 || r[0].first != 'a') return false;
  for (std::size_t i = 0; i < r.size(); i += 2)
    if (r[i].second != r[i + 1].second) return false;
  return true;
}

// a^k b^{n1} a^{n1} ... b^{nl} a^{nl} b^k, k >= 0, l >= 1
inline bool in_nested(const std::string& w) {
  auto r = runs(w);
  if (r.empty()) return false;
  std::size_t lo = 0, hi = r.size();
  if (r[0].first == 'a') {
    if (r.back().first != 'b' || r.front().second != r.back().second) return false;
    lo = 1;
    --hi;
  }
  if (hi <= lo || (hi - lo) % 2 || r[lo].first != 'b') return false;
  for (std::size_t i = lo; i < hi; i += 2)
    if (r[i].second != r[i + 1].second) return false;
  return true;
}

inline std::vector<std::string> words(const std::string& alphabet, std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].size() < max_len)
      for (char c : alphabet) out.push_back(out[i] + c);
  out.erase(out.begin());
  return out;
}

// Every graph over the binary labels `syms` with 1..max_edges edges, ext length
// `ext_len`, at most one non-external isolated node, up to isomorphism.
inline std::vector<hlc::Graph> binary_graphs(const std::vector<std::string>& syms, std::size_t max_edges,
                                             std::size_t ext_len) {
  std::vector<hlc::Graph> out;
  for (std::size_t e = 1; e <= max_edges; ++e) {
    // label multisets as nondecreasing index sequences
    std::vector<std::size_t> pick(e, 0);
    while (true) {
      std::vector<hlc::Label> labels;
      for (auto i : pick) labels.push_back({syms[i], 2});
      for (std::size_t n = 1; n <= 2 * e + 1; ++n)
        hlc::enumerate_graphs<hlc::Label>(labels, n, ext_len, 1, [&](const hlc::Graph& g) { out.push_back(g); });
      std::size_t k = e;
      while (k > 0 && pick[k - 1] + 1 == syms.size()) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < e; ++j) pick[j] = pick[k - 1];
    }
  }
  return out;
}

}  // namespace oracle
