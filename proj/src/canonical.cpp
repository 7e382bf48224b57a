#include "hlc/canonical.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace hlc {

namespace {

using Code = std::vector<std::uint64_t>;

void put_varint(std::string& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<char>((x & 0x7f) | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<char>(x));
}

// Canonical labeling of one connected piece by colour refinement plus
// individualisation. The best leaf is the lexicographically smallest encoding.
class UnitCanon {
 public:
  UnitCanon(const Shape& s, const std::vector<NodeId>& nodes, const std::vector<EdgeId>& edges,
            bool anchored)
      : s_(s), nodes_(nodes), edges_(edges) {
    std::vector<NodeId> local(s.nodes, kNone);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);
    inc_.resize(nodes.size());
    att_.resize(edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const auto& a = s.att[edges[j]];
      for (std::size_t p = 0; p < a.size(); ++p) {
        att_[j].push_back(local[a[p]]);
        inc_[local[a[p]]].push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(p)});
      }
    }
    std::vector<std::uint64_t> col(nodes.size(), 0);
    if (anchored) {
      for (NodeId v : s.ext) ext_.push_back(local[v]);
      for (auto& c : col) c = ext_.size();
      for (std::size_t i = 0; i < ext_.size(); ++i) col[ext_[i]] = i;
    }
    refine(col);
    search(col);
  }

  const Code& code() const { return best_; }

  std::vector<NodeId> node_order() const {
    std::vector<NodeId> order(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) order[best_col_[i]] = nodes_[i];
    return order;
  }

  std::vector<EdgeId> edge_order() const {
    std::vector<std::size_t> idx(edges_.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto tuple = [&](std::size_t j) {
      Code t{s_.key[edges_[j]]};
      for (NodeId v : att_[j]) t.push_back(best_col_[v]);
      return t;
    };
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return tuple(a) < tuple(b); });
    std::vector<EdgeId> out;
    for (auto j : idx) out.push_back(edges_[j]);
    return out;
  }

 private:
  static std::size_t distinct(const std::vector<std::uint64_t>& col) {
    std::vector<std::uint64_t> c = col;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void refine(std::vector<std::uint64_t>& col) const {
    const std::size_t n = col.size();
    std::size_t cells = distinct(col);
    std::vector<Code> sig(n);
    std::vector<Code> tuples;
    while (cells < n) {
      for (std::size_t v = 0; v < n; ++v) {
        tuples.clear();
        for (auto [j, p] : inc_[v]) {
          Code t{s_.key[edges_[j]], p};
          for (NodeId u : att_[j]) t.push_back(col[u]);
          tuples.push_back(std::move(t));
        }
        std::sort(tuples.begin(), tuples.end());
        Code& sv = sig[v];
        sv.clear();
        sv.push_back(col[v]);
        for (const auto& t : tuples) {
          sv.push_back(t.size());
          sv.insert(sv.end(), t.begin(), t.end());
        }
      }
      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++c;
        col[idx[i]] = c;
      }
      std::size_t now = static_cast<std::size_t>(c) + (n ? 1 : 0);
      if (now == cells) break;
      cells = now;
    }
  }

  Code leaf_code(const std::vector<std::uint64_t>& col) const {
    std::vector<Code> tuples;
    for (std::size_t j = 0; j < att_.size(); ++j) {
      Code t{s_.key[edges_[j]], att_[j].size()};
      for (NodeId v : att_[j]) t.push_back(col[v]);
      tuples.push_back(std::move(t));
    }
    std::sort(tuples.begin(), tuples.end());
    Code out{col.size(), tuples.size()};
    for (const auto& t : tuples) out.insert(out.end(), t.begin(), t.end());
    for (NodeId v : ext_) out.push_back(col[v]);
    return out;
  }

  void search(const std::vector<std::uint64_t>& col) {
    const std::size_t n = col.size();
    std::vector<std::size_t> count(n + 1, 0);
    for (auto c : col) ++count[c];
    std::uint64_t target = kNone;
    for (std::size_t c = 0; c < n; ++c)
      if (count[c] >= 2) {
        target = c;
        break;
      }
    if (target == kNone) {
      Code code = leaf_code(col);
      if (!have_ || code < best_) {
        best_ = std::move(code);
        best_col_ = col;
        have_ = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      std::vector<std::uint64_t> next(col);
      for (std::size_t u = 0; u < n; ++u)
        if (col[u] > target || (col[u] == target && u != v)) ++next[u];
      refine(next);
      search(next);
    }
  }

  const Shape& s_;
  std::vector<NodeId> nodes_;
  std::vector<EdgeId> edges_;
  std::vector<std::vector<NodeId>> att_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> inc_;
  std::vector<NodeId> ext_;
  Code best_;
  std::vector<std::uint64_t> best_col_;
  bool have_ = false;
};

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Canonical canonicalize(const Shape& s) {
  const std::size_t n = s.nodes;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> touched(n, 0);
  for (const auto& a : s.att) {
    for (NodeId v : a) touched[v] = 1;
    for (std::size_t i = 1; i < a.size(); ++i) {
      auto x = find(parent, a[0]), y = find(parent, a[i]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<char> anchored_root(n, 0);
  for (NodeId v : s.ext) anchored_root[find(parent, v)] = 1;

  std::vector<NodeId> anchor_nodes;
  std::vector<EdgeId> anchor_edges, nullary;
  std::vector<std::vector<NodeId>> comp_nodes(n);
  std::vector<std::vector<EdgeId>> comp_edges(n);
  std::vector<NodeId> isolated;
  for (NodeId v = 0; v < n; ++v) {
    auto r = find(parent, v);
    if (anchored_root[r])
      anchor_nodes.push_back(v);
    else if (!touched[v])
      isolated.push_back(v);
    else
      comp_nodes[r].push_back(v);
  }
  for (EdgeId e = 0; e < s.att.size(); ++e) {
    if (s.att[e].empty()) {
      nullary.push_back(e);
      continue;
    }
    auto r = find(parent, s.att[e][0]);
    if (anchored_root[r])
      anchor_edges.push_back(e);
    else
      comp_edges[r].push_back(e);
  }

  Canonical out;
  Code code{n, s.att.size(), s.ext.size()};

  UnitCanon anchor(s, anchor_nodes, anchor_edges, true);
  code.push_back(anchor.code().size());
  code.insert(code.end(), anchor.code().begin(), anchor.code().end());
  out.node_order = anchor.node_order();
  out.edge_order = anchor.edge_order();

  struct Piece {
    Code code;
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
  };
  std::vector<Piece> pieces;
  for (std::size_t r = 0; r < n; ++r) {
    if (comp_nodes[r].empty()) continue;
    UnitCanon u(s, comp_nodes[r], comp_edges[r], false);
    pieces.push_back({u.code(), u.node_order(), u.edge_order()});
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.code < b.code; });
  code.push_back(pieces.size());
  for (const auto& p : pieces) {
    code.push_back(p.code.size());
    code.insert(code.end(), p.code.begin(), p.code.end());
    out.node_order.insert(out.node_order.end(), p.nodes.begin(), p.nodes.end());
    out.edge_order.insert(out.edge_order.end(), p.edges.begin(), p.edges.end());
  }
  code.push_back(isolated.size());
  out.node_order.insert(out.node_order.end(), isolated.begin(), isolated.end());
  std::stable_sort(nullary.begin(), nullary.end(), [&](EdgeId a, EdgeId b) { return s.key[a] < s.key[b]; });
  code.push_back(nullary.size());
  for (EdgeId e : nullary) code.push_back(s.key[e]);
  out.edge_order.insert(out.edge_order.end(), nullary.begin(), nullary.end());

  out.code.reserve(code.size() * 2);
  for (auto x : code) put_varint(out.code, x);
  return out;
}

Isomorphism isomorphism_from(const Canonical& c1, const Canonical& c2) {
  Isomorphism iso;
  iso.nodes.assign(c1.node_order.size(), kNone);
  iso.edges.assign(c1.edge_order.size(), kNone);
  for (std::size_t i = 0; i < c1.node_order.size(); ++i) iso.nodes[c1.node_order[i]] = c2.node_order[i];
  for (std::size_t i = 0; i < c1.edge_order.size(); ++i) iso.edges[c1.edge_order[i]] = c2.edge_order[i];
  return iso;
}

namespace {

struct LabelTable {
  std::mutex mu;
  std::unordered_map<std::string, std::uint64_t> ids;
};

LabelTable& label_table() {
  static LabelTable t;
  return t;
}

}  // namespace

std::uint64_t label_key(const Label& l) {
  const std::string& text = label_text(l);
  auto& t = label_table();
  std::lock_guard lock(t.mu);
  return t.ids.find(text)->second;
}

const std::string& label_text(const Label& l) {
  std::string text = l.sym + "#" + std::to_string(l.arity);
  auto& t = label_table();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(text);
  if (it == t.ids.end()) it = t.ids.emplace(text, t.ids.size()).first;
  return it->first;
}

}  // namespace hlc
