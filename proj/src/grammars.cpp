#include "hlc/grammars.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hlc/canonical.hpp"
#include "hlc/embedding.hpp"
#include "hlc/prover.hpp"

namespace hlc {

namespace {

Type prim_of(const Label& l) { return Type::prim(l.sym, l.arity); }

const Label* find_label(const std::vector<Label>& ls, const std::string& sym) {
  for (const auto& l : ls)
    if (l.sym == sym) return &l;
  return nullptr;
}

void add_label(std::vector<Label>& ls, const Label& l) {
  if (const Label* old = find_label(ls, l.sym)) {
    if (old->arity != l.arity)
      throw Error(ErrorCode::ArityMismatch, "symbol " + l.sym + " used with arities " + std::to_string(old->arity) +
                                                " and " + std::to_string(l.arity));
    return;
  }
  ls.push_back(l);
}

}  // namespace

const Label* Hlg::find(const std::string& sym) const { return find_label(alphabet, sym); }

std::vector<Type> Hlg::types_of(const std::string& sym) const {
  std::vector<Type> out;
  for (const auto& e : lexicon)
    if (e.sym == sym && std::find(out.begin(), out.end(), e.type) == out.end()) out.push_back(e.type);
  return out;
}

const Label* Hrg::nonterminal(const std::string& sym) const { return find_label(nonterminals, sym); }
const Label* Hrg::terminal(const std::string& sym) const { return find_label(terminals, sym); }

void validate(const Hlg& g) {
  if (!g.start) throw Error(ErrorCode::MalformedType, "grammar without start type");
  for (const auto& e : g.lexicon) {
    const Label* l = g.find(e.sym);
    if (!l) throw Error(ErrorCode::AlphabetMismatch, "lexicon symbol " + e.sym + " outside the alphabet");
    if (l->arity != e.type.arity())
      throw Error(ErrorCode::ArityMismatch, "symbol " + e.sym + " of arity " + std::to_string(l->arity) +
                                                " assigned a type of arity " + std::to_string(e.type.arity()));
  }
}

void validate(const Hrg& g) {
  for (const auto& t : g.terminals)
    if (g.nonterminal(t.sym)) throw Error(ErrorCode::MalformedGraph, "symbol " + t.sym + " is both terminal and not");
  if (!g.nonterminal(g.start)) throw Error(ErrorCode::MalformedGraph, "start " + g.start + " is not a nonterminal");
  for (const auto& p : g.productions) {
    const Label* x = g.nonterminal(p.lhs);
    if (!x) throw Error(ErrorCode::MalformedGraph, "production for unknown nonterminal " + p.lhs);
    if (x->arity != p.rhs.type())
      throw Error(ErrorCode::ArityMismatch, "production for " + p.lhs + " has a right-hand side of type " +
                                                std::to_string(p.rhs.type()));
    for (const auto& e : p.rhs.edges()) {
      const Label* l = g.nonterminal(e.label.sym);
      if (!l) l = g.terminal(e.label.sym);
      if (!l || l->arity != e.label.arity)
        throw Error(ErrorCode::AlphabetMismatch, "right-hand side label " + e.label.sym + " is not declared");
    }
  }
}

namespace {

std::size_t terminal_count(const Hrg& g, const Graph& h) {
  std::size_t n = 0;
  for (const auto& e : h.edges())
    if (g.terminal(e.label.sym)) ++n;
  return n;
}

EdgeId terminal_edge(const Hrg& g, const Production& p) {
  EdgeId found = kNone;
  for (EdgeId e = 0; e < p.rhs.edge_count(); ++e) {
    if (!g.terminal(p.rhs.edge(e).label.sym)) continue;
    if (found != kNone) return kNone;
    found = e;
  }
  return found;
}

void require_wgnf(const Hrg& g) {
  validate(g);
  for (const auto& p : g.productions)
    if (terminal_edge(g, p) == kNone)
      throw Error(ErrorCode::NotWGNF, "a production for " + p.lhs + " does not have exactly one terminal edge");
}

}  // namespace

bool is_wgnf(const Hrg& g) {
  for (const auto& p : g.productions)
    if (terminal_edge(g, p) == kNone) return false;
  return true;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "Member";
    case Membership::NotMember: return "NotMember";
    case Membership::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

TypedGraph relabel_graph(const Graph& h, const std::vector<Type>& f) {
  TypedGraph g(h.node_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) g.add_edge(f.at(e), h.edge(e).att);
  g.set_ext(h.ext());
  return g;
}

std::size_t isize(const Graph& h) {
  std::size_t n = 0;
  for (auto d : h.degrees())
    if (d == 0) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// HLG membership

namespace {

// Linear invariants of f(h) -> S: every primitive counter and the node balance.
// The last coordinate holds the balance.
class Pruner {
 public:
  Pruner(const std::vector<std::vector<Type>>& options, const Type& start, std::size_t nonexternal) {
    active_ = !start.contains_additive();
    for (const auto& opts : options)
      for (const auto& t : opts)
        if (t.contains_additive()) active_ = false;
    if (!active_) return;
    auto index = [&](std::uint32_t id) {
      auto [it, fresh] = dim_.emplace(id, dim_.size());
      return it->second;
    };
    for (const auto& [id, v] : start.counters()) index(id);
    for (const auto& opts : options)
      for (const auto& t : opts)
        for (const auto& [id, v] : t.counters()) index(id);
    std::size_t d = dim_.size() + 1;
    target_.assign(d, 0);
    for (const auto& [id, v] : start.counters()) target_[dim_[id]] = v;
    target_[d - 1] = start.node_balance() - static_cast<long>(nonexternal);
  }

  bool active() const { return active_; }

  std::vector<long> vec(const Type& t) const {
    std::vector<long> v(target_.size(), 0);
    for (const auto& [id, c] : t.counters()) v[dim_.at(id)] = c;
    v.back() = t.node_balance();
    return v;
  }

  // Suffix bounds for the edges in `order` from position i on.
  void prepare(const std::vector<std::vector<Type>>& options, const std::vector<EdgeId>& order) {
    std::size_t n = order.size(), d = target_.size();
    lo_.assign(n + 1, std::vector<long>(d, 0));
    hi_.assign(n + 1, std::vector<long>(d, 0));
    for (std::size_t i = n; i-- > 0;) {
      std::vector<long> mn(d, std::numeric_limits<long>::max()), mx(d, std::numeric_limits<long>::min());
      for (const auto& t : options[order[i]]) {
        auto v = vec(t);
        for (std::size_t k = 0; k < d; ++k) {
          mn[k] = std::min(mn[k], v[k]);
          mx[k] = std::max(mx[k], v[k]);
        }
      }
      for (std::size_t k = 0; k < d; ++k) {
        lo_[i][k] = lo_[i + 1][k] + mn[k];
        hi_[i][k] = hi_[i + 1][k] + mx[k];
      }
    }
  }

  bool feasible(const std::vector<long>& cur, std::size_t i) const {
    for (std::size_t k = 0; k < target_.size(); ++k)
      if (cur[k] + lo_[i][k] > target_[k] || cur[k] + hi_[i][k] < target_[k]) return false;
    return true;
  }

  std::size_t dims() const { return target_.size(); }

 private:
  bool active_ = true;
  std::unordered_map<std::uint32_t, std::size_t> dim_;
  std::vector<long> target_;
  std::vector<std::vector<long>> lo_, hi_;
};

}  // namespace

MemberResult hlg_member(const Hlg& g, const Graph& h, const MemberOptions& opt) {
  using Clock = std::chrono::steady_clock;
  auto deadline = Clock::now() + opt.budget;
  MemberResult res;
  for (const auto& e : h.edges()) {
    const Label* l = g.find(e.label.sym);
    if (!l || l->arity != e.label.arity)
      throw Error(ErrorCode::AlphabetMismatch, "label " + e.label.sym + " is not in the grammar's alphabet");
  }
  if (h.type() != g.start.arity()) return res;

  std::vector<std::vector<Type>> options(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    options[e] = g.types_of(h.edge(e).label.sym);
    if (options[e].empty()) return res;
  }
  std::vector<EdgeId> order(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return options[a].size() < options[b].size(); });

  Pruner pruner(options, g.start, h.node_count() - h.type());
  if (pruner.active()) pruner.prepare(options, order);

  SearchOptions so;
  so.budget.time = opt.budget;
  Prover prover(so);
  std::unordered_set<std::string> tried;
  std::vector<Type> f(h.edge_count());
  bool out_of_time = false;

  struct Pending {
    Sequent seq;
    std::vector<Type> f;
  };
  std::vector<Pending> batch;
  std::size_t chunk = opt.jobs > 1 ? 8 * opt.jobs : 1;

  auto accept = [&](const Pending& p, ProofResult& r) {
    if (r.verdict == Verdict::BudgetExceeded) out_of_time = true;
    if (r.verdict != Verdict::Derivable) return false;
    auto check = verify_tree(*r.tree);
    if (!check.ok) throw std::logic_error("membership witness fails verification at " + check.path + ": " + check.message);
    res.verdict = Membership::Member;
    res.relabeling = p.f;
    res.tree = r.tree;
    return true;
  };

  auto flush = [&]() {
    if (batch.empty()) return false;
    bool found = false;
    if (batch.size() == 1) {
      auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
      ProofResult r;
      if (remaining.count() <= 0) {
        r.verdict = Verdict::BudgetExceeded;
      } else if (is_simple_sequent(batch[0].seq)) {
        Budget b;
        b.time = remaining;
        r = prove_simple(batch[0].seq, b);
      } else {
        r = prover.prove(batch[0].seq);
      }
      found = accept(batch[0], r);
    } else {
      std::vector<Sequent> seqs;
      for (const auto& p : batch) seqs.push_back(p.seq);
      auto rs = prove_all(seqs, so, opt.jobs);
      for (std::size_t i = 0; i < rs.size() && !found; ++i) found = accept(batch[i], rs[i]);
    }
    batch.clear();
    return found;
  };

  std::vector<long> cur(pruner.dims(), 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (out_of_time || Clock::now() > deadline) {
      out_of_time = true;
      return false;
    }
    if (pruner.active() && !pruner.feasible(cur, i)) return false;
    if (i == order.size()) {
      Sequent s{relabel_graph(h, f), g.start};
      if (!tried.insert(canonical_form(s.antecedent)).second) return false;
      ++res.assignments;
      batch.push_back({std::move(s), f});
      return batch.size() >= chunk && flush();
    }
    EdgeId e = order[i];
    for (const auto& t : options[e]) {
      f[e] = t;
      std::vector<long> v;
      if (pruner.active()) {
        v = pruner.vec(t);
        for (std::size_t k = 0; k < v.size(); ++k) cur[k] += v[k];
      }
      bool done = assign(i + 1);
      if (pruner.active())
        for (std::size_t k = 0; k < v.size(); ++k) cur[k] -= v[k];
      if (done) return true;
    }
    return false;
  };
  if (assign(0) || flush()) return res;
  if (out_of_time) res.verdict = Membership::BudgetExceeded;
  return res;
}

// ---------------------------------------------------------------------------
// HRG derivation and membership

namespace {

constexpr std::size_t kUnproductive = std::numeric_limits<std::size_t>::max();

// Fewest terminal edges any terminal graph derived from each nonterminal has.
std::map<std::string, std::size_t> min_yield(const Hrg& g) {
  std::map<std::string, std::size_t> m;
  for (const auto& n : g.nonterminals) m[n.sym] = kUnproductive;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions) {
      std::size_t total = 0;
      for (const auto& e : p.rhs.edges()) {
        if (g.terminal(e.label.sym)) {
          ++total;
          continue;
        }
        std::size_t y = m[e.label.sym];
        if (y == kUnproductive) {
          total = kUnproductive;
          break;
        }
        total += y;
      }
      if (total < m[p.lhs]) {
        m[p.lhs] = total;
        changed = true;
      }
    }
  }
  return m;
}

}  // namespace

void hrg_derive(const Hrg& g, std::size_t max_edges, const std::function<void(const Graph&)>& out) {
  validate(g);
  auto yield = min_yield(g);
  // A nonterminal that can vanish leaves no bound on sentential forms; cap them.
  bool erasing = false;
  for (const auto& [sym, y] : yield)
    if (y == 0) erasing = true;
  std::size_t cap = 2 * max_edges + 2;

  auto lower_bound = [&](const Graph& h) {
    std::size_t n = 0;
    for (const auto& e : h.edges()) {
      if (g.terminal(e.label.sym)) {
        ++n;
        continue;
      }
      std::size_t y = yield[e.label.sym];
      if (y == kUnproductive) return kUnproductive;
      n += y;
    }
    return n;
  };

  std::unordered_set<std::string> seen, emitted;
  std::deque<Graph> queue;
  Graph s = handle(*g.nonterminal(g.start));
  seen.insert(canonical_form(s));
  queue.push_back(std::move(s));
  while (!queue.empty()) {
    Graph cur = std::move(queue.front());
    queue.pop_front();
    EdgeId nt = kNone;
    for (EdgeId e = 0; e < cur.edge_count() && nt == kNone; ++e)
      if (g.nonterminal(cur.edge(e).label.sym)) nt = e;
    if (nt == kNone) {
      if (emitted.insert(canonical_form(cur)).second) out(cur);
      continue;
    }
    for (const auto& p : g.productions) {
      if (p.lhs != cur.edge(nt).label.sym) continue;
      Graph next = replace(cur, nt, p.rhs);
      if (lower_bound(next) > max_edges) continue;
      if (erasing && next.edge_count() > cap) continue;
      if (seen.insert(canonical_form(next)).second) queue.push_back(std::move(next));
    }
  }
}

std::vector<Graph> hrg_language(const Hrg& g, std::size_t max_edges) {
  std::vector<Graph> out;
  hrg_derive(g, max_edges, [&](const Graph& h) { out.push_back(h); });
  return out;
}

bool hrg_member(const Hrg& g, const Graph& h) {
  require_wgnf(g);
  for (const auto& e : h.edges()) {
    const Label* l = g.terminal(e.label.sym);
    if (!l || l->arity != e.label.arity) return false;
  }
  const Label& start = *g.nonterminal(g.start);
  if (h.type() != start.arity) return false;
  std::string goal = canonical_form(handle(start));

  auto keyed = [](const Graph& x) { return shape_of(x, [](const Label& l) { return label_key(l); }); };
  std::vector<Shape> frames;
  for (const auto& p : g.productions) frames.push_back(keyed(p.rhs));

  std::unordered_set<std::string> failed;
  std::function<bool(const Graph&)> reduce = [&](const Graph& cur) -> bool {
    if (terminal_count(g, cur) == 0) return canonical_form(cur) == goal;
    std::string key = canonical_form(cur);
    if (failed.count(key)) return false;
    Shape host = keyed(cur);
    for (std::size_t i = 0; i < g.productions.size(); ++i) {
      const auto& p = g.productions[i];
      FrameSpec spec;
      spec.slot.assign(p.rhs.edge_count(), 0);
      spec.fixed.assign(p.rhs.edge_count(), kNone);
      spec.anchor.assign(p.rhs.node_count(), kNone);
      spec.remainder = true;
      bool ok = enumerate_decompositions(host, frames[i], spec, [&](const Decomposition& d) {
        std::vector<NodeId> nm(cur.node_count(), kNone);
        Graph next;
        for (NodeId v : d.rest_nodes) nm[v] = next.add_node();
        for (EdgeId e : d.rest_edges) {
          std::vector<NodeId> att;
          for (NodeId v : cur.edge(e).att) att.push_back(nm[v]);
          next.add_edge(cur.edge(e).label, std::move(att));
        }
        std::vector<NodeId> att;
        for (NodeId x : p.rhs.ext()) att.push_back(nm[d.node_map[x]]);
        next.add_edge(*g.nonterminal(p.lhs), std::move(att));
        std::vector<NodeId> ext;
        for (NodeId v : cur.ext()) ext.push_back(nm[v]);
        next.set_ext(std::move(ext));
        return reduce(next);
      });
      if (ok) return true;
    }
    failed.insert(key);
    return false;
  };
  return reduce(h);
}

// ---------------------------------------------------------------------------
// conversions and closure constructions

Hlg hrg_to_hlg(const Hrg& g) {
  require_wgnf(g);
  Hlg out;
  out.alphabet = g.terminals;
  out.start = prim_of(*g.nonterminal(g.start));
  for (const auto& p : g.productions) {
    EdgeId e0 = terminal_edge(g, p);
    const auto& a = p.rhs.edge(e0).label;
    Type x = prim_of(*g.nonterminal(p.lhs));
    if (is_handle(p.rhs)) {
      out.lexicon.push_back({a.sym, x});
      continue;
    }
    TypedGraph d(p.rhs.node_count());
    for (EdgeId e = 0; e < p.rhs.edge_count(); ++e) {
      const auto& l = p.rhs.edge(e).label;
      d.add_edge(e == e0 ? Type::dollar(l.arity) : prim_of(l), p.rhs.edge(e).att);
    }
    d.set_ext(p.rhs.ext());
    out.lexicon.push_back({a.sym, Type::div(x, std::move(d))});
  }
  return out;
}

Hlg relabel_grammar(const Hlg& g, const std::map<std::string, Label>& f) {
  Hlg out;
  out.start = g.start;
  auto image = [&](const Label& l) {
    auto it = f.find(l.sym);
    if (it == f.end()) return l;
    if (it->second.arity != l.arity)
      throw Error(ErrorCode::ArityMismatch, "relabeling " + l.sym + " changes its arity");
    return it->second;
  };
  for (const auto& l : g.alphabet) add_label(out.alphabet, image(l));
  for (const auto& e : g.lexicon) {
    LexEntry n{image(*g.find(e.sym)).sym, e.type};
    bool dup = false;
    for (const auto& o : out.lexicon) dup = dup || (o.sym == n.sym && o.type == n.type);
    if (!dup) out.lexicon.push_back(std::move(n));
  }
  return out;
}

Hlg substitute_grammar(const Hlg& g, const std::map<std::string, Graph>& f) {
  for (const auto& e : g.lexicon)
    if (has_skeleton_subtype(e.type))
      throw Error(ErrorCode::SkeletonTypePresent, "lexicon type " + to_string(e.type) + " has a skeleton subtype");
  Hlg out;
  out.start = g.start;
  for (const auto& b : g.alphabet) {
    auto it = f.find(b.sym);
    if (it == f.end()) throw Error(ErrorCode::AlphabetMismatch, "no image graph for " + b.sym);
    const Graph& h = it->second;
    if (h.edge_count() == 0) throw Error(ErrorCode::NotEdgeful, "image of " + b.sym + " has no edges");
    if (h.type() != b.arity)
      throw Error(ErrorCode::ArityMismatch, "image of " + b.sym + " has type " + std::to_string(h.type()));
    for (const auto& e : h.edges()) add_label(out.alphabet, e.label);

    std::vector<Type> wrapped;
    if (is_handle(h)) {
      wrapped = g.types_of(b.sym);
      for (const auto& t : wrapped) out.lexicon.push_back({h.edge(0).label.sym, t});
      continue;
    }
    auto c = canonical(h);
    EdgeId chosen = c.edge_order.front();
    TypedGraph r(h.node_count());
    for (std::size_t pos = 0; pos < c.edge_order.size(); ++pos) {
      EdgeId e = c.edge_order[pos];
      const auto& l = h.edge(e).label;
      if (e == chosen) {
        r.add_edge(Type::dollar(l.arity), h.edge(e).att);
        continue;
      }
      Type fresh = Type::prim("__" + b.sym + "_" + std::to_string(pos), l.arity);
      r.add_edge(fresh, h.edge(e).att);
      out.lexicon.push_back({l.sym, fresh});
    }
    r.set_ext(h.ext());
    for (const auto& t : g.types_of(b.sym)) out.lexicon.push_back({h.edge(chosen).label.sym, Type::div(t, r)});
  }
  return out;
}

std::string balloon_sym(std::size_t j) { return "__b" + std::to_string(j); }

namespace {

Hrg rename_apart(const Hrg& g, std::size_t i) {
  std::string pre = "g" + std::to_string(i) + ".";
  auto rn = [&](const Label& l) { return g.nonterminal(l.sym) ? Label{pre + l.sym, l.arity} : l; };
  Hrg out;
  for (const auto& n : g.nonterminals) out.nonterminals.push_back(rn(n));
  out.terminals = g.terminals;
  out.start = pre + g.start;
  for (const auto& p : g.productions) out.productions.push_back({pre + p.lhs, map_labels(p.rhs, rn)});
  return out;
}

std::vector<NodeId> internal_nodes(const TypedGraph& d) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < d.node_count(); ++v)
    if (!d.is_external(v)) out.push_back(v);
  return out;
}

// Grammar j < k: the denominator's internal nodes become external and the numerator
// carries one balloon per such node.
Type phi_outer(const Type& t, std::size_t j) {
  if (!t.is_div()) return t;
  const TypedGraph& d = t.graph();
  auto inner = internal_nodes(d);
  TypedGraph dd = d;
  std::vector<NodeId> ext = d.ext();
  ext.insert(ext.end(), inner.begin(), inner.end());
  dd.set_ext(ext);
  std::size_t n = d.type();
  TypedGraph m(n + inner.size());
  std::vector<NodeId> all(n + inner.size()), head(n);
  for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
  for (NodeId v = 0; v < n; ++v) head[v] = v;
  m.add_edge(t.num(), head);
  Type b = Type::prim(balloon_sym(j), 1);
  for (std::size_t i = 0; i < inner.size(); ++i) m.add_edge(b, {static_cast<NodeId>(n + i)});
  m.set_ext(all);
  return Type::div(Type::times(std::move(m)), std::move(dd));
}

// The last grammar: every internal denominator node holds balloons b_1..b_{k-1}.
Type phi_last(const Type& t, std::size_t k) {
  if (!t.is_div()) return t;
  TypedGraph d = t.graph();
  for (NodeId v : internal_nodes(t.graph()))
    for (std::size_t j = 1; j < k; ++j) d.add_edge(Type::prim(balloon_sym(j), 1), {v});
  return Type::div(t.num(), std::move(d));
}

}  // namespace

Hlg intersect_hrgs(const std::vector<Hrg>& gs) {
  if (gs.size() < 2) throw std::invalid_argument("intersection needs at least two grammars");
  std::size_t k = gs.size();
  std::vector<Hlg> parts;
  for (std::size_t i = 0; i < k; ++i) parts.push_back(hrg_to_hlg(rename_apart(gs[i], i + 1)));
  for (const auto& p : parts)
    if (p.start.arity() != parts[0].start.arity())
      throw Error(ErrorCode::ArityMismatch, "start nonterminals differ in arity");

  Hlg out;
  for (const auto& a : parts[0].alphabet) {
    bool everywhere = true;
    for (const auto& p : parts) {
      const Label* l = p.find(a.sym);
      if (l && l->arity != a.arity) throw Error(ErrorCode::ArityMismatch, "terminal " + a.sym + " differs in arity");
      everywhere = everywhere && l;
    }
    if (everywhere) out.alphabet.push_back(a);
  }
  std::vector<Type> starts;
  for (const auto& p : parts) starts.push_back(p.start);
  out.start = ersatz_conjunction(starts);

  for (const auto& a : out.alphabet) {
    std::vector<std::vector<Type>> per(k);
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& t : parts[i].types_of(a.sym))
        per[i].push_back(i + 1 < k ? phi_outer(t, i + 1) : phi_last(t, k));
    std::vector<Type> pick(k);
    std::function<void(std::size_t)> product = [&](std::size_t i) {
      if (i == k) {
        out.lexicon.push_back({a.sym, ersatz_conjunction(pick)});
        return;
      }
      for (const auto& t : per[i]) {
        pick[i] = t;
        product(i + 1);
      }
    };
    product(0);
  }
  return out;
}

IsolatedBound isolated_bound_report(const Hlg& g) {
  std::size_t worst = isolated_node_measure(g.start);
  for (const auto& e : g.lexicon) worst = std::max(worst, isolated_node_measure(e.type));
  IsolatedBound b;
  b.C = worst + g.start.arity() + 1;
  b.M = 3 * b.C + 1;
  return b;
}

}  // namespace hlc
