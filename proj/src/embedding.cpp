#include "hlc/embedding.hpp"

#include <algorithm>
#include <numeric>

namespace hlc {

namespace {

constexpr std::size_t kRest = static_cast<std::size_t>(-1);

class Engine {
 public:
  Engine(const Shape& host, const Shape& frame, const FrameSpec& spec,
         const std::function<bool(const Decomposition&)>& visit)
      : host_(host), frame_(frame), spec_(spec), visit_(visit) {
    host_inc_.resize(host.nodes);
    for (EdgeId e = 0; e < host.att.size(); ++e)
      for (NodeId v : host.att[e]) host_inc_[v].push_back(e);
    host_ext_.assign(host.nodes, 0);
    for (NodeId v : host.ext) host_ext_[v] = 1;
    frame_ext_.assign(frame.nodes, 0);
    for (NodeId x : frame.ext) frame_ext_[x] = 1;
    frame_deg_.assign(frame.nodes, 0);
    for (const auto& a : frame.att)
      for (NodeId x : a) ++frame_deg_[x];
    mu_.assign(frame.nodes, kNone);
    used_.assign(host.nodes, kNone);
    edge_used_.assign(host.att.size(), 0);
    edge_map_.assign(frame.att.size(), kNone);
    for (EdgeId f = 0; f < frame.att.size(); ++f) {
      if (spec.slot[f]) {
        slots_.push_back(f);
        for (NodeId x : frame.att[f]) in_slot_[x] = true;
      } else if (spec.fixed[f] == kNone) {
        matched_.push_back(f);
      }
    }
  }

  bool run() {
    for (NodeId x = 0; x < frame_.nodes; ++x)
      if (spec_.anchor[x] != kNone && !bind(x, spec_.anchor[x])) return false;
    for (EdgeId f = 0; f < frame_.att.size(); ++f) {
      EdgeId h = spec_.fixed[f];
      if (h == kNone) continue;
      if (edge_used_[h] || host_.att[h].size() != frame_.att[f].size()) return false;
      for (std::size_t i = 0; i < frame_.att[f].size(); ++i) {
        NodeId x = frame_.att[f][i], v = host_.att[h][i];
        if (mu_[x] == v) continue;
        if (mu_[x] != kNone || !bind(x, v)) return false;
      }
      edge_used_[h] = 1;
      edge_map_[f] = h;
    }
    for (NodeId x = 0; x < frame_.nodes; ++x)
      if (mu_[x] == kNone) free_.push_back(x);
    // nodes touching slots first, isolated frame nodes last
    std::stable_sort(free_.begin(), free_.end(), [&](NodeId a, NodeId b) {
      return (frame_deg_[a] == 0) < (frame_deg_[b] == 0);
    });
    match_edge(0);
    return stop_;
  }

 private:
  bool admissible(NodeId x, NodeId v) const {
    if (used_[v] != kNone) return false;
    bool internal = !frame_ext_[x];
    if (spec_.remainder && internal && host_ext_[v]) return false;
    if (frame_deg_[x] == 0 && internal && !host_inc_[v].empty()) return false;
    return true;
  }

  bool bind(NodeId x, NodeId v) {
    if (v >= host_.nodes || !admissible(x, v)) return false;
    mu_[x] = v;
    used_[v] = x;
    return true;
  }

  void unbind(NodeId x) {
    used_[mu_[x]] = kNone;
    mu_[x] = kNone;
  }

  void match_edge(std::size_t i) {
    if (stop_) return;
    if (i == matched_.size()) {
      free_node(0);
      return;
    }
    EdgeId f = matched_[i];
    const auto& fa = frame_.att[f];
    for (EdgeId h = 0; h < host_.att.size() && !stop_; ++h) {
      if (edge_used_[h] || host_.key[h] != frame_.key[f] || host_.att[h].size() != fa.size()) continue;
      std::vector<NodeId> bound;
      bool ok = true;
      for (std::size_t p = 0; p < fa.size() && ok; ++p) {
        NodeId x = fa[p], v = host_.att[h][p];
        if (mu_[x] == v) continue;
        if (mu_[x] != kNone || !bind(x, v)) {
          ok = false;
        } else {
          bound.push_back(x);
        }
      }
      if (ok) {
        edge_used_[h] = 1;
        edge_map_[f] = h;
        match_edge(i + 1);
        edge_used_[h] = 0;
        edge_map_[f] = kNone;
      }
      for (NodeId x : bound) unbind(x);
    }
  }

  void free_node(std::size_t i) {
    if (stop_) return;
    if (i == free_.size()) {
      components();
      return;
    }
    NodeId x = free_[i];
    if (mu_[x] != kNone) {
      free_node(i + 1);
      return;
    }
    bool tried_isolated = false;
    for (NodeId v = 0; v < host_.nodes && !stop_; ++v) {
      if (!admissible(x, v)) continue;
      bool interchangeable = spec_.symmetry_reduction && host_inc_[v].empty() && !host_ext_[v];
      if (interchangeable) {
        if (tried_isolated) continue;
        tried_isolated = true;
      }
      bind(x, v);
      free_node(i + 1);
      unbind(x);
    }
  }

  struct Component {
    std::vector<EdgeId> edges;
    std::vector<NodeId> interior;
    std::vector<NodeId> touched;
    std::vector<std::size_t> dests;
  };

  void components() {
    const std::size_t n = host_.nodes;
    std::vector<char> boundary(n, 0);
    for (NodeId v = 0; v < n; ++v)
      if (used_[v] != kNone || (spec_.remainder && host_ext_[v])) boundary[v] = 1;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<char> touched(n, 0);
    for (EdgeId e = 0; e < host_.att.size(); ++e) {
      if (edge_used_[e]) continue;
      NodeId first = kNone;
      for (NodeId v : host_.att[e]) {
        if (boundary[v]) continue;
        touched[v] = 1;
        if (first == kNone) {
          first = v;
        } else {
          auto a = find(first), b = find(v);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::vector<std::size_t> comp_of(n, kRest);
    comps_.clear();
    for (EdgeId e = 0; e < host_.att.size(); ++e) {
      if (edge_used_[e]) continue;
      std::size_t c = kRest;
      for (NodeId v : host_.att[e])
        if (!boundary[v]) {
          auto r = find(v);
          if (comp_of[r] == kRest) {
            comp_of[r] = comps_.size();
            comps_.emplace_back();
          }
          c = comp_of[r];
          break;
        }
      if (c == kRest) {
        c = comps_.size();
        comps_.emplace_back();
      }
      comps_[c].edges.push_back(e);
      for (NodeId v : host_.att[e])
        if (boundary[v]) comps_[c].touched.push_back(v);
    }
    isolated_.clear();
    for (NodeId v = 0; v < n; ++v) {
      if (boundary[v]) continue;
      if (!touched[v]) {
        isolated_.push_back(v);
        continue;
      }
      comps_[comp_of[find(v)]].interior.push_back(v);
    }
    for (auto& c : comps_) {
      std::sort(c.touched.begin(), c.touched.end());
      c.touched.erase(std::unique(c.touched.begin(), c.touched.end()), c.touched.end());
      for (EdgeId s : slots_) {
        bool ok = true;
        for (NodeId v : c.touched) {
          bool found = false;
          for (NodeId x : frame_.att[s])
            if (mu_[x] == v) found = true;
          if (!found) {
            ok = false;
            break;
          }
        }
        if (ok) c.dests.push_back(s);
      }
      if (spec_.remainder) {
        bool ok = true;
        for (NodeId v : c.touched)
          if (used_[v] != kNone && !frame_ext_[used_[v]]) ok = false;
        if (ok) c.dests.push_back(kRest);
      }
      if (c.dests.empty()) return;
    }
    assignment_.assign(comps_.size(), kRest);
    assign(0);
  }

  void assign(std::size_t i) {
    if (stop_) return;
    if (i == comps_.size()) {
      distribute();
      return;
    }
    for (std::size_t d : comps_[i].dests) {
      assignment_[i] = d;
      assign(i + 1);
      if (stop_) return;
    }
  }

  // destination index: position in slots_, or slots_.size() for the remainder
  std::size_t dest_index(std::size_t d) const {
    if (d == kRest) return slots_.size();
    return static_cast<std::size_t>(std::find(slots_.begin(), slots_.end(), d) - slots_.begin());
  }

  void distribute() {
    const std::size_t ndest = slots_.size() + (spec_.remainder ? 1 : 0);
    const std::size_t f = isolated_.size();
    if (ndest == 0) {
      if (f == 0) emit(std::vector<std::size_t>());
      return;
    }
    if (spec_.balance) {
      std::vector<long> cur(slots_.size() + 1, 0);
      for (std::size_t c = 0; c < comps_.size(); ++c) {
        auto k = dest_index(assignment_[c]);
        cur[k] += static_cast<long>(comps_[c].interior.size());
        for (EdgeId e : comps_[c].edges) cur[k] += spec_.edge_weight[e];
      }
      if (spec_.remainder) {
        for (NodeId v = 0; v < host_.nodes; ++v)
          if (used_[v] != kNone && frame_ext_[used_[v]] && !host_ext_[v]) ++cur[slots_.size()];
      }
      std::vector<std::size_t> per(ndest, 0);
      long total = 0;
      for (std::size_t k = 0; k < ndest; ++k) {
        long target = k < slots_.size() ? spec_.slot_target[slots_[k]] : spec_.rest_target;
        long need = target - cur[k];
        if (need < 0) return;
        per[k] = static_cast<std::size_t>(need);
        total += need;
      }
      if (static_cast<std::size_t>(total) != f) return;
      std::vector<std::size_t> where;
      for (std::size_t k = 0; k < ndest; ++k)
        for (std::size_t j = 0; j < per[k]; ++j) where.push_back(k);
      emit(where);
      return;
    }
    if (spec_.symmetry_reduction) {
      // compositions of f into ndest parts, as non-decreasing destination sequences
      std::vector<std::size_t> where(f, 0);
      compose(where, 0, 0, ndest);
    } else {
      std::vector<std::size_t> where(f, 0);
      product(where, 0, ndest);
    }
  }

  void compose(std::vector<std::size_t>& where, std::size_t i, std::size_t lo, std::size_t ndest) {
    if (stop_) return;
    if (i == where.size()) {
      emit(where);
      return;
    }
    for (std::size_t k = lo; k < ndest && !stop_; ++k) {
      where[i] = k;
      compose(where, i + 1, k, ndest);
    }
  }

  void product(std::vector<std::size_t>& where, std::size_t i, std::size_t ndest) {
    if (stop_) return;
    if (i == where.size()) {
      emit(where);
      return;
    }
    for (std::size_t k = 0; k < ndest && !stop_; ++k) {
      where[i] = k;
      product(where, i + 1, ndest);
    }
  }

  void emit(const std::vector<std::size_t>& where) {
    Decomposition d;
    d.node_map = mu_;
    d.edge_map = edge_map_;
    d.slot_edges.assign(frame_.att.size(), {});
    d.slot_nodes.assign(frame_.att.size(), {});
    std::vector<char> gone(host_.nodes, 0);
    for (NodeId v = 0; v < host_.nodes; ++v)
      if (used_[v] != kNone && !frame_ext_[used_[v]]) gone[v] = 1;
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      std::size_t dst = assignment_[c];
      if (dst == kRest) {
        d.rest_edges.insert(d.rest_edges.end(), comps_[c].edges.begin(), comps_[c].edges.end());
      } else {
        d.slot_edges[dst].insert(d.slot_edges[dst].end(), comps_[c].edges.begin(), comps_[c].edges.end());
        d.slot_nodes[dst].insert(d.slot_nodes[dst].end(), comps_[c].interior.begin(), comps_[c].interior.end());
        for (NodeId v : comps_[c].interior) gone[v] = 1;
      }
    }
    for (std::size_t i = 0; i < isolated_.size(); ++i) {
      std::size_t k = where[i];
      if (k < slots_.size()) {
        d.slot_nodes[slots_[k]].push_back(isolated_[i]);
        gone[isolated_[i]] = 1;
      }
    }
    if (spec_.remainder)
      for (NodeId v = 0; v < host_.nodes; ++v)
        if (!gone[v]) d.rest_nodes.push_back(v);
    for (auto& e : d.slot_edges) std::sort(e.begin(), e.end());
    for (auto& v : d.slot_nodes) std::sort(v.begin(), v.end());
    std::sort(d.rest_edges.begin(), d.rest_edges.end());
    if (visit_(d)) stop_ = true;
  }

  const Shape& host_;
  const Shape& frame_;
  const FrameSpec& spec_;
  const std::function<bool(const Decomposition&)>& visit_;

  std::vector<std::vector<EdgeId>> host_inc_;
  std::vector<char> host_ext_, frame_ext_;
  std::vector<std::size_t> frame_deg_;
  std::vector<EdgeId> slots_, matched_;
  std::vector<NodeId> free_;
  std::vector<bool> in_slot_ = std::vector<bool>(frame_.nodes, false);

  std::vector<NodeId> mu_, used_;
  std::vector<char> edge_used_;
  std::vector<EdgeId> edge_map_;
  std::vector<Component> comps_;
  std::vector<NodeId> isolated_;
  std::vector<std::size_t> assignment_;
  bool stop_ = false;
};

}  // namespace

bool enumerate_decompositions(const Shape& host, const Shape& frame, const FrameSpec& spec,
                              const std::function<bool(const Decomposition&)>& visit) {
  if (spec.slot.size() != frame.att.size() || spec.fixed.size() != frame.att.size() ||
      spec.anchor.size() != frame.nodes)
    throw Error(ErrorCode::MalformedGraph, "frame specification does not fit the frame");
  Engine engine(host, frame, spec, visit);
  return engine.run();
}

}  // namespace hlc
