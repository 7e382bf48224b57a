#include "hlc/prover.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "hlc/canonical.hpp"
#include "hlc/embedding.hpp"

namespace hlc {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Derivable: return "Derivable";
    case Verdict::NotDerivable: return "NotDerivable";
    case Verdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

namespace {

struct BudgetHit {};

using Clock = std::chrono::steady_clock;

class Ticker {
 public:
  Ticker(const Budget& b, SearchStats& stats) : budget_(b), stats_(stats), start_(stats.nodes) {
    deadline_ = Clock::now() + b.time;
  }

  void tick() {
    ++stats_.nodes;
    if (stats_.nodes - start_ > budget_.nodes) throw BudgetHit{};
    if ((stats_.nodes & 63) == 0 && Clock::now() > deadline_) throw BudgetHit{};
  }

 private:
  Budget budget_;
  SearchStats& stats_;
  std::size_t start_;
  Clock::time_point deadline_;
};

Embedding identity(const TypedGraph& g) {
  Embedding m;
  m.nodes.resize(g.node_count());
  std::iota(m.nodes.begin(), m.nodes.end(), 0);
  m.edges.resize(g.edge_count());
  std::iota(m.edges.begin(), m.edges.end(), 0);
  return m;
}

struct Extracted {
  TypedGraph graph;
  Embedding into_host;
};

// The subgraph of `host` on ext + inner nodes and the given edges, with `ext` as its
// external sequence; also returns its placement in the host.
Extracted extract(const TypedGraph& host, const std::vector<NodeId>& ext, const std::vector<NodeId>& inner,
                  const std::vector<EdgeId>& edges) {
  Subgraph sub;
  sub.nodes = ext;
  sub.nodes.insert(sub.nodes.end(), inner.begin(), inner.end());
  sub.edges = edges;
  sub.ext = ext;
  std::vector<NodeId> to_sub;
  Extracted x;
  x.graph = subgraph_as_graph(host, sub, &to_sub);
  x.into_host.nodes.assign(x.graph.node_count(), kNone);
  for (NodeId v = 0; v < host.node_count(); ++v)
    if (to_sub[v] != kNone) x.into_host.nodes[to_sub[v]] = v;
  x.into_host.edges = edges;
  return x;
}

std::vector<NodeId> image(const std::vector<NodeId>& map, const std::vector<NodeId>& nodes) {
  std::vector<NodeId> out;
  out.reserve(nodes.size());
  for (NodeId v : nodes) out.push_back(map[v]);
  return out;
}

bool has_additive(const Sequent& s) {
  if (s.succedent.contains_additive()) return true;
  for (const auto& e : s.antecedent.edges())
    if (e.label.contains_additive()) return true;
  return false;
}

bool is_axiom(const Sequent& s) {
  return s.succedent.is_prim() && is_handle(s.antecedent) && s.antecedent.edge(0).label == s.succedent;
}

Shape shape(const TypedGraph& g) {
  return shape_of(g, [](const Type& t) { return label_key(t); });
}

struct Outcome {
  DerivationPtr tree;
  bool bounded = false;
};

// (÷→) remainder: the context graph K with its fresh N-edge placed last.
struct Context {
  TypedGraph graph;
  Embedding into_host;
  EdgeId n_edge = kNone;
};

Context build_context(const TypedGraph& host, const Decomposition& d, const TypedGraph& den, const Type& num) {
  Context k;
  std::vector<NodeId> to_k(host.node_count(), kNone);
  for (NodeId v : d.rest_nodes) {
    to_k[v] = k.graph.add_node();
    k.into_host.nodes.push_back(v);
  }
  for (EdgeId e : d.rest_edges) {
    k.graph.add_edge(host.edge(e).label, image(to_k, host.edge(e).att));
    k.into_host.edges.push_back(e);
  }
  std::vector<NodeId> att;
  for (NodeId x : den.ext()) att.push_back(to_k[d.node_map[x]]);
  k.n_edge = k.graph.add_edge(num, att);
  k.into_host.edges.push_back(kNone);
  k.graph.set_ext(image(to_k, host.ext()));
  return k;
}

}  // namespace

struct Prover::Impl {
  struct MemoEntry {
    DerivationPtr tree;
    Canonical canon;
    bool bounded = false;
  };

  SearchOptions opt;
  SearchStats stats;
  std::unordered_map<std::string, MemoEntry> memo;
  Ticker* ticker = nullptr;

  bool prune_ok(const Sequent& s) const { return opt.prune && !opt.mode.structural() && !has_additive(s); }
  bool eager_ok() const { return opt.eager && !opt.mode.structural(); }

  Outcome search(const Sequent& s, std::size_t allowance) {
    ticker->tick();
    Canonical canon;
    std::string key;
    if (opt.memo) {
      canon = canonical(s.antecedent);
      key = canon.code;
      key += '#';
      key += std::to_string(s.succedent.id());
      if (opt.mode.contraction) {
        key += '#';
        key += std::to_string(allowance);
      }
      auto it = memo.find(key);
      if (it != memo.end()) {
        ++stats.memo_hits;
        if (!it->second.tree) return Outcome{nullptr, it->second.bounded};
        return Outcome{transport(it->second.tree, s.antecedent, isomorphism_from(it->second.canon, canon)), false};
      }
    }
    Outcome r = expand(s, allowance);
    if (opt.memo) memo.emplace(std::move(key), MemoEntry{r.tree, std::move(canon), r.bounded});
    return r;
  }

  Outcome expand(const Sequent& s, std::size_t allowance) {
    const TypedGraph& h = s.antecedent;
    const Type& a = s.succedent;
    if (prune_ok(s)) {
      if (!counter_feasible(s) || !node_balance_feasible(s)) {
        ++stats.pruned;
        return {};
      }
      if (wolf_applies(s) && !is_axiom(s)) {
        ++stats.pruned;
        return {};
      }
    }
    if (is_axiom(s)) return Outcome{make_node(s, Rule::Axiom, {}, {}), false};

    if (eager_ok()) {
      for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (h.edge(e).label.is_times()) return times_left(s, e, allowance);
      if (a.is_div()) return div_right(s, allowance);
    }

    bool bounded = false;
    auto attempt = [&](Outcome o) {
      bounded = bounded || o.bounded;
      return o.tree;
    };

    if (a.is_times())
      if (auto t = attempt(times_right(s, allowance))) return {t, false};

    std::vector<EdgeId> divs;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      if (h.edge(e).label.is_div()) divs.push_back(e);
    std::stable_sort(divs.begin(), divs.end(), [&](EdgeId x, EdgeId y) {
      return h.edge(x).label.graph().edge_count() > h.edge(y).label.graph().edge_count();
    });
    for (EdgeId e : divs)
      if (auto t = attempt(div_left(s, e, allowance))) return {t, false};

    if (!eager_ok()) {
      for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (h.edge(e).label.is_times())
          if (auto t = attempt(times_left(s, e, allowance))) return {t, false};
      if (a.is_div())
        if (auto t = attempt(div_right(s, allowance))) return {t, false};
    }

    if (opt.mode.hmalc) {
      for (EdgeId e = 0; e < h.edge_count(); ++e) {
        TypeKind k = h.edge(e).label.kind();
        if (k == TypeKind::And) {
          for (std::size_t i = 1; i <= 2; ++i)
            if (auto t = attempt(and_left(s, e, i, allowance))) return {t, false};
        } else if (k == TypeKind::Or) {
          if (auto t = attempt(or_left(s, e, allowance))) return {t, false};
        }
      }
      if (a.kind() == TypeKind::And)
        if (auto t = attempt(and_right(s, allowance))) return {t, false};
      if (a.kind() == TypeKind::Or)
        for (std::size_t i = 1; i <= 2; ++i)
          if (auto t = attempt(or_right(s, i, allowance))) return {t, false};
    }

    if (opt.mode.weakening) {
      for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (auto t = attempt(weaken(s, e, kNone, allowance))) return {t, false};
      auto deg = h.degrees();
      for (NodeId v = 0; v < h.node_count(); ++v)
        if (deg[v] == 0 && !h.is_external(v))
          if (auto t = attempt(weaken(s, kNone, v, allowance))) return {t, false};
    }

    if (opt.mode.contraction && h.edge_count() > 0) {
      if (allowance == 0) {
        bounded = true;
      } else {
        for (EdgeId e = 0; e < h.edge_count(); ++e)
          if (auto t = attempt(contract(s, e, allowance - 1))) return {t, false};
      }
    }
    return Outcome{nullptr, bounded};
  }

  Outcome times_left(const Sequent& s, EdgeId e, std::size_t allowance) {
    const TypedGraph& body = s.antecedent.edge(e).label.graph();
    auto rr = replace_edge(s.antecedent, e, body);
    Sequent prem{rr.graph, s.succedent};
    Outcome o = search(prem, allowance);
    if (!o.tree) return o;
    Witness w;
    w.edge = e;
    w.maps = {Embedding{rr.host_nodes, rr.host_edges}, Embedding{rr.filler_nodes, rr.filler_edges}};
    return {make_node(s, Rule::TimesLeft, std::move(w), {o.tree}), false};
  }

  Outcome div_right(const Sequent& s, std::size_t allowance) {
    const Type& a = s.succedent;
    auto rr = replace_edge(a.graph(), a.dollar_edge(), s.antecedent);
    Sequent prem{rr.graph, a.num()};
    Outcome o = search(prem, allowance);
    if (!o.tree) return o;
    Witness w;
    w.maps = {Embedding{rr.host_nodes, rr.host_edges}, Embedding{rr.filler_nodes, rr.filler_edges}};
    return {make_node(s, Rule::DivRight, std::move(w), {o.tree}), false};
  }

  std::vector<long> edge_weights(const TypedGraph& h) const {
    std::vector<long> w;
    for (const auto& e : h.edges()) w.push_back(e.label.contains_additive() ? 0 : e.label.node_balance());
    return w;
  }

  Outcome times_right(const Sequent& s, std::size_t allowance) {
    const TypedGraph& h = s.antecedent;
    const TypedGraph& m = s.succedent.graph();
    Shape hs = shape(h), ms = shape(m);
    FrameSpec spec;
    spec.slot.assign(m.edge_count(), 1);
    spec.fixed.assign(m.edge_count(), kNone);
    spec.anchor.assign(m.node_count(), kNone);
    for (std::size_t i = 0; i < m.type(); ++i) {
      NodeId x = m.ext()[i];
      spec.anchor[x] = h.ext()[i];
    }
    if (prune_ok(s)) {
      spec.balance = true;
      spec.edge_weight = edge_weights(h);
      for (const auto& e : m.edges()) spec.slot_target.push_back(e.label.node_balance());
    }
    Outcome result;
    bool bounded = false;
    enumerate_decompositions(hs, ms, spec, [&](const Decomposition& d) {
      std::vector<DerivationPtr> prems;
      Witness w;
      w.maps.push_back(Embedding{d.node_map, std::vector<EdgeId>(m.edge_count(), kNone)});
      for (EdgeId i = 0; i < m.edge_count(); ++i) {
        auto x = extract(h, image(d.node_map, m.edge(i).att), d.slot_nodes[i], d.slot_edges[i]);
        Outcome o = search(Sequent{x.graph, m.edge(i).label}, allowance);
        bounded = bounded || o.bounded;
        if (!o.tree) return false;
        prems.push_back(o.tree);
        w.maps.push_back(std::move(x.into_host));
      }
      result.tree = make_node(s, Rule::TimesRight, std::move(w), std::move(prems));
      return true;
    });
    result.bounded = !result.tree && bounded;
    return result;
  }

  Outcome div_left(const Sequent& s, EdgeId e0, std::size_t allowance) {
    const TypedGraph& h = s.antecedent;
    const Type& t = h.edge(e0).label;
    const TypedGraph& den = t.graph();
    Shape hs = shape(h), ds = shape(den);
    FrameSpec spec;
    spec.slot.assign(den.edge_count(), 1);
    spec.slot[t.dollar_edge()] = 0;
    spec.fixed.assign(den.edge_count(), kNone);
    spec.fixed[t.dollar_edge()] = e0;
    spec.anchor.assign(den.node_count(), kNone);
    spec.remainder = true;
    if (prune_ok(s)) {
      spec.balance = true;
      spec.edge_weight = edge_weights(h);
      spec.slot_target.assign(den.edge_count(), 0);
      for (EdgeId d = 0; d < den.edge_count(); ++d)
        if (d != t.dollar_edge()) spec.slot_target[d] = den.edge(d).label.node_balance();
      spec.rest_target = s.succedent.node_balance() - t.num().node_balance();
    }
    Outcome result;
    bool bounded = false;
    enumerate_decompositions(hs, ds, spec, [&](const Decomposition& d) {
      std::vector<DerivationPtr> side;
      Witness w;
      std::vector<EdgeId> dmap(den.edge_count(), kNone);
      dmap[t.dollar_edge()] = e0;
      w.maps.push_back(Embedding{d.node_map, dmap});
      std::vector<Embedding> side_maps;
      for (EdgeId i = 0; i < den.edge_count(); ++i) {
        if (i == t.dollar_edge()) continue;
        auto x = extract(h, image(d.node_map, den.edge(i).att), d.slot_nodes[i], d.slot_edges[i]);
        Outcome o = search(Sequent{x.graph, den.edge(i).label}, allowance);
        bounded = bounded || o.bounded;
        if (!o.tree) return false;
        side.push_back(o.tree);
        side_maps.push_back(std::move(x.into_host));
      }
      Context k = build_context(h, d, den, t.num());
      Outcome o = search(Sequent{k.graph, s.succedent}, allowance);
      bounded = bounded || o.bounded;
      if (!o.tree) return false;
      w.edge = e0;
      w.aux = k.n_edge;
      w.maps.push_back(std::move(k.into_host));
      for (auto& m : side_maps) w.maps.push_back(std::move(m));
      std::vector<DerivationPtr> prems{o.tree};
      prems.insert(prems.end(), side.begin(), side.end());
      result.tree = make_node(s, Rule::DivLeft, std::move(w), std::move(prems));
      return true;
    });
    result.bounded = !result.tree && bounded;
    return result;
  }

  Outcome and_left(const Sequent& s, EdgeId e, std::size_t i, std::size_t allowance) {
    const Type& t = s.antecedent.edge(e).label;
    TypedGraph g = s.antecedent;
    g.set_label(e, i == 1 ? t.left() : t.right());
    Outcome o = search(Sequent{g, s.succedent}, allowance);
    if (!o.tree) return o;
    Witness w;
    w.edge = e;
    w.aux = i;
    w.maps = {identity(g)};
    return {make_node(s, Rule::AndLeft, std::move(w), {o.tree}), false};
  }

  Outcome or_left(const Sequent& s, EdgeId e, std::size_t allowance) {
    const Type& t = s.antecedent.edge(e).label;
    Witness w;
    w.edge = e;
    std::vector<DerivationPtr> prems;
    for (const Type& part : {t.left(), t.right()}) {
      TypedGraph g = s.antecedent;
      g.set_label(e, part);
      Outcome o = search(Sequent{g, s.succedent}, allowance);
      if (!o.tree) return o;
      prems.push_back(o.tree);
      w.maps.push_back(identity(g));
    }
    return {make_node(s, Rule::OrLeft, std::move(w), std::move(prems)), false};
  }

  Outcome and_right(const Sequent& s, std::size_t allowance) {
    Witness w;
    std::vector<DerivationPtr> prems;
    for (const Type& part : {s.succedent.left(), s.succedent.right()}) {
      Outcome o = search(Sequent{s.antecedent, part}, allowance);
      if (!o.tree) return o;
      prems.push_back(o.tree);
      w.maps.push_back(identity(s.antecedent));
    }
    return {make_node(s, Rule::AndRight, std::move(w), std::move(prems)), false};
  }

  Outcome or_right(const Sequent& s, std::size_t i, std::size_t allowance) {
    Outcome o = search(Sequent{s.antecedent, i == 1 ? s.succedent.left() : s.succedent.right()}, allowance);
    if (!o.tree) return o;
    Witness w;
    w.aux = i;
    w.maps = {identity(s.antecedent)};
    return {make_node(s, Rule::OrRight, std::move(w), {o.tree}), false};
  }

  // Drops edge `e` or isolated node `v` (exactly one of them is given).
  Outcome weaken(const Sequent& s, EdgeId e, NodeId v, std::size_t allowance) {
    const TypedGraph& h = s.antecedent;
    std::vector<char> keep_node(h.node_count(), 1), keep_edge(h.edge_count(), 1);
    if (e != kNone) keep_edge[e] = 0;
    if (v != kNone) keep_node[v] = 0;
    std::vector<NodeId> nm;
    std::vector<EdgeId> em;
    TypedGraph g = induced(h, keep_node, keep_edge, &nm, &em);
    Outcome o = search(Sequent{g, s.succedent}, allowance);
    if (!o.tree) return o;
    Embedding back;
    back.nodes.assign(g.node_count(), kNone);
    back.edges.assign(g.edge_count(), kNone);
    for (NodeId x = 0; x < h.node_count(); ++x)
      if (nm[x] != kNone) back.nodes[nm[x]] = x;
    for (EdgeId f = 0; f < h.edge_count(); ++f)
      if (em[f] != kNone) back.edges[em[f]] = f;
    Witness w;
    w.maps = {back};
    return {make_node(s, Rule::Weakening, std::move(w), {o.tree}), false};
  }

  Outcome contract(const Sequent& s, EdgeId e, std::size_t allowance) {
    TypedGraph g = s.antecedent;
    EdgeId copy = g.add_edge(g.edge(e).label, g.edge(e).att);
    Outcome o = search(Sequent{g, s.succedent}, allowance);
    if (!o.tree) return o;
    Witness w;
    w.edge = copy;
    w.aux = e;
    Embedding m = identity(g);
    m.edges[copy] = kNone;
    w.maps = {m};
    return {make_node(s, Rule::Contraction, std::move(w), {o.tree}), false};
  }
};

Prover::Prover(SearchOptions opt) : impl_(std::make_unique<Impl>()) { impl_->opt = opt; }
Prover::~Prover() = default;
Prover::Prover(Prover&&) noexcept = default;
Prover& Prover::operator=(Prover&&) noexcept = default;

const SearchOptions& Prover::options() const { return impl_->opt; }

void Prover::clear() {
  impl_->memo.clear();
  impl_->stats = {};
}

ProofResult Prover::prove(const Sequent& s) {
  validate(s);
  ProofResult r;
  std::size_t before_nodes = impl_->stats.nodes, before_hits = impl_->stats.memo_hits,
              before_pruned = impl_->stats.pruned;
  Ticker ticker(impl_->opt.budget, impl_->stats);
  impl_->ticker = &ticker;
  try {
    Outcome o = impl_->search(s, impl_->opt.mode.contraction ? impl_->opt.contraction_bound : 0);
    if (o.tree) {
      r.verdict = Verdict::Derivable;
      r.tree = o.tree;
    } else {
      r.verdict = o.bounded ? Verdict::BudgetExceeded : Verdict::NotDerivable;
    }
  } catch (const BudgetHit&) {
    r.verdict = Verdict::BudgetExceeded;
  }
  impl_->ticker = nullptr;
  r.stats.nodes = impl_->stats.nodes - before_nodes;
  r.stats.memo_hits = impl_->stats.memo_hits - before_hits;
  r.stats.pruned = impl_->stats.pruned - before_pruned;
  return r;
}

ProofResult prove(const Sequent& s, const SearchOptions& opt) {
  Prover p(opt);
  return p.prove(s);
}

// ---------------------------------------------------------------------------
// simple derivations

bool is_simple_sequent(const Sequent& s) {
  for (const auto& e : s.antecedent.edges())
    if (!is_simple(e.label)) return false;
  const Type& p = s.succedent;
  if (p.is_prim()) return true;
  if (!p.is_times()) return false;
  for (const auto& e : p.graph().edges())
    if (!e.label.is_prim()) return false;
  return true;
}

namespace {

class SimpleSearch {
 public:
  SimpleSearch(const Budget& b, SearchStats& stats) : ticker_(b, stats) {}

  DerivationPtr run(const Sequent& s) {
    ticker_.tick();
    const TypedGraph& h = s.antecedent;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (!h.edge(e).label.is_times()) continue;
      auto rr = replace_edge(h, e, h.edge(e).label.graph());
      auto sub = run(Sequent{rr.graph, s.succedent});
      if (!sub) return nullptr;
      Witness w;
      w.edge = e;
      w.maps = {Embedding{rr.host_nodes, rr.host_edges}, Embedding{rr.filler_nodes, rr.filler_edges}};
      return make_node(s, Rule::TimesLeft, std::move(w), {sub});
    }
    if (is_axiom(s)) return make_node(s, Rule::Axiom, {}, {});
    if (!counter_feasible(s) || !node_balance_feasible(s)) return nullptr;
    std::string key = canonical(h).code + "#" + std::to_string(s.succedent.id());
    if (refuted_.count(key)) return nullptr;
    if (s.succedent.is_times())
      if (auto t = finish_product(s)) return t;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (!h.edge(e).label.is_div()) continue;
      if (auto t = reduce(s, e)) return t;
    }
    refuted_.insert(std::move(key));
    return nullptr;
  }

 private:
  // K -> ×(K) by (→×) over axioms.
  DerivationPtr finish_product(const Sequent& s) {
    const TypedGraph& k = s.succedent.graph();
    auto iso = isomorphism(k, s.antecedent);
    if (!iso) return nullptr;
    Witness w;
    w.maps.push_back(Embedding{iso->nodes, std::vector<EdgeId>(k.edge_count(), kNone)});
    std::vector<DerivationPtr> prems;
    for (EdgeId i = 0; i < k.edge_count(); ++i) {
      const Type& q = k.edge(i).label;
      prems.push_back(make_node(Sequent{handle(q), q}, Rule::Axiom, {}, {}));
      w.maps.push_back(Embedding{image(iso->nodes, k.edge(i).att), {iso->edges[i]}});
    }
    return make_node(s, Rule::TimesRight, std::move(w), std::move(prems));
  }

  // (÷→) on e0 with every denominator edge matched to one host edge.
  DerivationPtr reduce(const Sequent& s, EdgeId e0) {
    const TypedGraph& h = s.antecedent;
    const Type& t = h.edge(e0).label;
    const TypedGraph& den = t.graph();
    FrameSpec spec;
    spec.slot.assign(den.edge_count(), 0);
    spec.fixed.assign(den.edge_count(), kNone);
    spec.fixed[t.dollar_edge()] = e0;
    spec.anchor.assign(den.node_count(), kNone);
    spec.remainder = true;
    spec.balance = true;
    for (const auto& e : h.edges()) spec.edge_weight.push_back(e.label.node_balance());
    spec.slot_target.assign(den.edge_count(), 0);
    spec.rest_target = s.succedent.node_balance() - t.num().node_balance();
    DerivationPtr result;
    enumerate_decompositions(shape(h), shape(den), spec, [&](const Decomposition& d) {
      Context k = build_context(h, d, den, t.num());
      auto sub = run(Sequent{k.graph, s.succedent});
      if (!sub) return false;
      Witness w;
      w.edge = e0;
      w.aux = k.n_edge;
      std::vector<EdgeId> dmap(den.edge_count(), kNone);
      dmap[t.dollar_edge()] = e0;
      w.maps.push_back(Embedding{d.node_map, dmap});
      w.maps.push_back(std::move(k.into_host));
      std::vector<DerivationPtr> prems{sub};
      for (EdgeId i = 0; i < den.edge_count(); ++i) {
        if (i == t.dollar_edge()) continue;
        const Type& q = den.edge(i).label;
        EdgeId host_edge = d.edge_map[i];
        prems.push_back(make_node(Sequent{handle(q), q}, Rule::Axiom, {}, {}));
        w.maps.push_back(Embedding{h.edge(host_edge).att, {host_edge}});
      }
      result = make_node(s, Rule::DivLeft, std::move(w), std::move(prems));
      return true;
    });
    return result;
  }

  Ticker ticker_;
  std::unordered_set<std::string> refuted_;
};

}  // namespace

ProofResult prove_simple(const Sequent& s, const Budget& budget) {
  validate(s);
  if (!is_simple_sequent(s)) throw Error(ErrorCode::NotSimpleInput, "sequent is not over simple types");
  ProofResult r;
  SimpleSearch search(budget, r.stats);
  try {
    r.tree = search.run(s);
    r.verdict = r.tree ? Verdict::Derivable : Verdict::NotDerivable;
  } catch (const BudgetHit&) {
    r.verdict = Verdict::BudgetExceeded;
  }
  return r;
}

DerivationPtr cut(const DerivationPtr& left, const DerivationPtr& right, EdgeId e0) {
  const auto& h = left->conclusion.antecedent;
  const auto& g = right->conclusion.antecedent;
  if (e0 >= g.edge_count()) throw Error(ErrorCode::LabelMismatch, "cut edge does not exist");
  if (g.edge(e0).label != left->conclusion.succedent)
    throw Error(ErrorCode::LabelMismatch, "cut edge is not labeled by the left succedent");
  auto rr = replace_edge(g, e0, h);
  Witness w;
  w.edge = e0;
  w.maps = {Embedding{rr.host_nodes, rr.host_edges}, Embedding{rr.filler_nodes, rr.filler_edges}};
  return make_node(Sequent{rr.graph, right->conclusion.succedent}, Rule::Cut, std::move(w), {left, right});
}

bool equivalent(const Type& a, const Type& b, const SearchOptions& opt) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::ArityMismatch, "equivalence of types of different arity");
  Prover p(opt);
  return p.prove(Sequent{handle(a), b}).verdict == Verdict::Derivable &&
         p.prove(Sequent{handle(b), a}).verdict == Verdict::Derivable;
}

std::vector<ProofResult> prove_all(const std::vector<Sequent>& seqs, const SearchOptions& opt, unsigned jobs) {
  std::vector<ProofResult> out(seqs.size());
  if (jobs <= 1 || seqs.size() < 2) {
    Prover p(opt);
    for (std::size_t i = 0; i < seqs.size(); ++i) out[i] = p.prove(seqs[i]);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      Prover p(opt);
      for (std::size_t i = j; i < seqs.size(); i += jobs) out[i] = p.prove(seqs[i]);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace hlc
