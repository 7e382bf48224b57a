#include "hlc/types.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace hlc {

struct TypeNode {
  TypeKind kind = TypeKind::Prim;
  std::string sym;
  std::size_t arity = 0;
  Type num, left, right;
  TypedGraph graph;
  EdgeId dollar = kNone;

  std::uint32_t id = 0;
  std::string key;
  std::size_t size = 0;
  std::vector<std::pair<std::uint32_t, long>> counters;
  long balance = 0;
  bool additive = false;
};

namespace {

struct TypeTable {
  std::mutex mu;
  std::unordered_map<std::string, std::shared_ptr<const TypeNode>> by_key;
};

TypeTable& table() {
  static TypeTable t;
  return t;
}

const TypeNode& deref(const std::shared_ptr<const TypeNode>& n) {
  if (!n) throw Error(ErrorCode::MalformedType, "use of an empty type");
  return *n;
}

using CounterMap = std::map<std::uint32_t, long>;

void add_counters(CounterMap& into, const Type& t, long sign) {
  for (auto [id, c] : t.counters()) into[id] += sign * c;
}

std::vector<std::pair<std::uint32_t, long>> flatten(const CounterMap& m) {
  std::vector<std::pair<std::uint32_t, long>> out;
  for (auto [id, c] : m)
    if (c != 0) out.push_back({id, c});
  return out;
}

long nonexternal(const TypedGraph& g) { return static_cast<long>(g.node_count() - g.type()); }

}  // namespace

Type Type::intern(std::shared_ptr<TypeNode> n) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  auto it = t.by_key.find(n->key);
  if (it != t.by_key.end()) return Type(it->second);
  n->id = static_cast<std::uint32_t>(t.by_key.size());
  if (n->kind == TypeKind::Prim) n->counters = {{n->id, 1}};
  std::shared_ptr<const TypeNode> c = std::move(n);
  t.by_key.emplace(c->key, c);
  return Type(c);
}

Type Type::prim(const std::string& sym, std::size_t arity) {
  if (sym.empty() || sym == "$") throw Error(ErrorCode::MalformedType, "invalid primitive symbol '" + sym + "'");
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Prim;
  n->sym = sym;
  n->arity = arity;
  n->key = "p" + std::to_string(arity) + ":" + sym;
  n->size = 1;
  return intern(std::move(n));
}

Type Type::dollar(std::size_t arity) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Dollar;
  n->sym = "$";
  n->arity = arity;
  n->key = "$" + std::to_string(arity);
  return intern(std::move(n));
}

Type Type::div(const Type& num, TypedGraph den) {
  if (!num || num.is_dollar()) throw Error(ErrorCode::MalformedType, "numerator must be a type");
  if (den.type() != num.arity())
    throw Error(ErrorCode::ArityMismatch, "denominator type " + std::to_string(den.type()) +
                                              " differs from numerator arity " + std::to_string(num.arity()));
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Div;
  CounterMap cm;
  add_counters(cm, num, 1);
  n->size = num.size() + 1;
  n->balance = num.node_balance() - nonexternal(den);
  n->additive = num.contains_additive();
  for (EdgeId e = 0; e < den.edge_count(); ++e) {
    const Type& l = den.edge(e).label;
    if (!l) throw Error(ErrorCode::MalformedType, "denominator edge without label");
    if (l.is_dollar()) {
      if (n->dollar != kNone) throw Error(ErrorCode::MalformedType, "denominator has two $-edges");
      n->dollar = e;
      continue;
    }
    add_counters(cm, l, -1);
    n->size += l.size();
    n->balance -= l.node_balance();
    n->additive = n->additive || l.contains_additive();
  }
  if (n->dollar == kNone) throw Error(ErrorCode::MalformedType, "denominator has no $-edge");
  n->arity = den.edge(n->dollar).att.size();
  n->counters = flatten(cm);
  n->num = num;
  n->key = "d(" + num.key() + ")" + canonical_form(den);
  n->graph = std::move(den);
  return intern(std::move(n));
}

Type Type::times(TypedGraph body) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Times;
  CounterMap cm;
  n->size = 1;
  n->balance = nonexternal(body);
  for (const auto& e : body.edges()) {
    if (!e.label || e.label.is_dollar()) throw Error(ErrorCode::MalformedType, "$ outside a denominator");
    add_counters(cm, e.label, 1);
    n->size += e.label.size();
    n->balance += e.label.node_balance();
    n->additive = n->additive || e.label.contains_additive();
  }
  n->arity = body.type();
  n->counters = flatten(cm);
  n->key = "t" + canonical_form(body);
  n->graph = std::move(body);
  return intern(std::move(n));
}

namespace {

void check_additive(const Type& a, const Type& b) {
  if (!a || !b || a.is_dollar() || b.is_dollar()) throw Error(ErrorCode::MalformedType, "bad additive operand");
  if (a.arity() != b.arity()) throw Error(ErrorCode::ArityMismatch, "additive operands differ in arity");
}

}  // namespace

Type Type::conj(const Type& a, const Type& b) {
  check_additive(a, b);
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::And;
  n->arity = a.arity();
  n->left = a;
  n->right = b;
  n->size = a.size() + b.size() + 1;
  n->additive = true;
  n->key = "&(" + a.key() + "," + b.key() + ")";
  return intern(std::move(n));
}

Type Type::disj(const Type& a, const Type& b) {
  check_additive(a, b);
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Or;
  n->arity = a.arity();
  n->left = a;
  n->right = b;
  n->size = a.size() + b.size() + 1;
  n->additive = true;
  n->key = "|(" + a.key() + "," + b.key() + ")";
  return intern(std::move(n));
}

TypeKind Type::kind() const { return deref(node_).kind; }
std::size_t Type::arity() const { return deref(node_).arity; }
const std::string& Type::sym() const { return deref(node_).sym; }
const Type& Type::num() const { return deref(node_).num; }
const TypedGraph& Type::graph() const { return deref(node_).graph; }
EdgeId Type::dollar_edge() const { return deref(node_).dollar; }
const Type& Type::left() const { return deref(node_).left; }
const Type& Type::right() const { return deref(node_).right; }
std::uint32_t Type::id() const { return deref(node_).id; }
const std::string& Type::key() const { return deref(node_).key; }
std::size_t Type::size() const { return deref(node_).size; }
const std::vector<std::pair<std::uint32_t, long>>& Type::counters() const { return deref(node_).counters; }
long Type::node_balance() const { return deref(node_).balance; }
bool Type::contains_additive() const { return deref(node_).additive; }

std::uint64_t label_key(const Type& t) { return t.id(); }
const std::string& label_text(const Type& t) { return t.key(); }

void validate(const Sequent& s) {
  if (!s.succedent) throw Error(ErrorCode::MalformedSequent, "missing succedent");
  if (s.succedent.is_dollar()) throw Error(ErrorCode::MalformedSequent, "$ as succedent");
  for (const auto& e : s.antecedent.edges()) {
    if (!e.label) throw Error(ErrorCode::MalformedSequent, "antecedent edge without type");
    if (e.label.is_dollar()) throw Error(ErrorCode::MalformedSequent, "$ in antecedent");
  }
  if (s.antecedent.type() != s.succedent.arity())
    throw Error(ErrorCode::MalformedSequent, "antecedent type " + std::to_string(s.antecedent.type()) +
                                                 " differs from succedent arity " +
                                                 std::to_string(s.succedent.arity()));
}

std::size_t arity(const Type& t) { return t.arity(); }
std::size_t size(const Type& t) { return t.size(); }

std::size_t size(const TypedGraph& g) {
  std::size_t n = 0;
  for (const auto& e : g.edges()) n += e.label.size();
  return n;
}

std::size_t size(const Sequent& s) { return size(s.antecedent) + s.succedent.size(); }

namespace {

void collect(const Type& t, std::set<Type, TypeIdLess>& out) {
  if (!out.insert(t).second) return;
  switch (t.kind()) {
    case TypeKind::Prim:
    case TypeKind::Dollar: break;
    case TypeKind::Div:
      collect(t.num(), out);
      [[fallthrough]];
    case TypeKind::Times:
      for (const auto& e : t.graph().edges())
        if (!e.label.is_dollar()) collect(e.label, out);
      break;
    case TypeKind::And:
    case TypeKind::Or:
      collect(t.left(), out);
      collect(t.right(), out);
      break;
  }
}

}  // namespace

std::vector<Type> subtypes(const Type& t) {
  std::set<Type, TypeIdLess> s;
  collect(t, s);
  return {s.begin(), s.end()};
}

std::vector<Type> subtypes(const Sequent& seq) {
  std::set<Type, TypeIdLess> s;
  collect(seq.succedent, s);
  for (const auto& e : seq.antecedent.edges()) collect(e.label, s);
  return {s.begin(), s.end()};
}

std::vector<Type> primitives(const Sequent& s) {
  std::vector<Type> out;
  for (const auto& t : subtypes(s))
    if (t.is_prim()) out.push_back(t);
  return out;
}

Counter Counter::unit(const Type& q) {
  return Counter{[q](const Type& p) { return p == q ? 1L : 0L; }};
}

Counter Counter::of_arity(std::size_t m) {
  return Counter{[m](const Type& p) { return p.arity() == m ? 1L : 0L; }};
}

Counter Counter::weights(std::map<std::string, long> w) {
  return Counter{[w = std::move(w)](const Type& p) {
    auto it = w.find(p.sym());
    return it == w.end() ? 0L : it->second;
  }};
}

long counter_value(const Counter& c, const Type& t) {
  switch (t.kind()) {
    case TypeKind::Prim: return c.weight(t);
    case TypeKind::Dollar: return 0;
    case TypeKind::Div: {
      long v = counter_value(c, t.num());
      for (const auto& e : t.graph().edges())
        if (!e.label.is_dollar()) v -= counter_value(c, e.label);
      return v;
    }
    case TypeKind::Times: return counter_value(c, t.graph());
    case TypeKind::And:
    case TypeKind::Or:
      throw Error(ErrorCode::MalformedType, "counters are undefined on additive types");
  }
  return 0;
}

long counter_value(const Counter& c, const TypedGraph& g) {
  long v = 0;
  for (const auto& e : g.edges()) v += counter_value(c, e.label);
  return v;
}

bool counter_feasible(const Sequent& s) {
  if (s.succedent.contains_additive()) return true;
  CounterMap m;
  for (const auto& e : s.antecedent.edges()) {
    if (e.label.contains_additive()) return true;
    add_counters(m, e.label, 1);
  }
  add_counters(m, s.succedent, -1);
  for (auto [id, c] : m)
    if (c != 0) return false;
  return true;
}

long node_balance(const TypedGraph& g) {
  long v = nonexternal(g);
  for (const auto& e : g.edges()) v += e.label.node_balance();
  return v;
}

bool node_balance_feasible(const Sequent& s) {
  if (s.succedent.contains_additive()) return true;
  for (const auto& e : s.antecedent.edges())
    if (e.label.contains_additive()) return true;
  return node_balance(s.antecedent) == s.succedent.node_balance();
}

bool is_skeleton(const Type& t) {
  return t.is_times() && t.graph().edge_count() == 0 && t.graph().type() == t.graph().node_count();
}

bool has_skeleton_subtype(const Type& t) {
  for (const auto& s : subtypes(t))
    if (is_skeleton(s)) return true;
  return false;
}

namespace {

// Every top occurrence of p inside t is directly the label of an edge of a
// ×-body with at least two edges (`enclosed` says whether t itself is such a label).
bool lonely_at(const Type& p, const Type& t, bool enclosed) {
  switch (t.kind()) {
    case TypeKind::Prim: return t != p || enclosed;
    case TypeKind::Dollar: return true;
    case TypeKind::Div: return lonely_at(p, t.num(), false);
    case TypeKind::Times: {
      bool many = t.graph().edge_count() >= 2;
      for (const auto& e : t.graph().edges())
        if (!lonely_at(p, e.label, many)) return false;
      return true;
    }
    case TypeKind::And:
    case TypeKind::Or: return lonely_at(p, t.left(), false) && lonely_at(p, t.right(), false);
  }
  return true;
}

}  // namespace

bool is_lonely(const Type& p, const Type& t) { return lonely_at(p, t, false); }

bool wolf_applies(const Sequent& s) {
  const Type& p = s.succedent;
  if (!p.is_prim()) return false;
  for (const auto& e : s.antecedent.edges()) {
    if (e.label.contains_additive()) return false;
    if (!is_lonely(p, e.label) || has_skeleton_subtype(e.label)) return false;
  }
  return true;
}

bool is_simple(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Prim: return true;
    case TypeKind::Times:
      for (const auto& e : t.graph().edges())
        if (!is_simple(e.label)) return false;
      return true;
    case TypeKind::Div:
      if (!is_simple(t.num())) return false;
      for (const auto& e : t.graph().edges())
        if (!e.label.is_dollar() && !e.label.is_prim()) return false;
      return true;
    default: return false;
  }
}

std::size_t isolated_node_measure(const Type& t) {
  auto isolated = [](const TypedGraph& g) {
    std::size_t n = 0;
    for (auto d : g.degrees())
      if (d == 0) ++n;
    return n;
  };
  switch (t.kind()) {
    case TypeKind::Prim:
    case TypeKind::Dollar: return 0;
    case TypeKind::Div: {
      std::size_t m = isolated_node_measure(t.num()) + isolated(t.graph());
      for (const auto& e : t.graph().edges()) m += isolated_node_measure(e.label);
      return m;
    }
    case TypeKind::Times: {
      std::size_t m = isolated(t.graph());
      for (const auto& e : t.graph().edges()) m += isolated_node_measure(e.label);
      return m;
    }
    case TypeKind::And:
    case TypeKind::Or: return isolated_node_measure(t.left()) + isolated_node_measure(t.right());
  }
  return 0;
}

namespace {

// Inlines every ×-labeled edge (skipping $) into the surrounding graph.
TypedGraph inline_times(TypedGraph g) {
  for (;;) {
    EdgeId hit = kNone;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (g.edge(e).label.is_times()) {
        hit = e;
        break;
      }
    if (hit == kNone) return g;
    TypedGraph body = g.edge(hit).label.graph();
    g = replace(g, hit, body);
  }
}

}  // namespace

Type simplify(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Prim:
    case TypeKind::Dollar: return t;
    case TypeKind::And: return Type::conj(simplify(t.left()), simplify(t.right()));
    case TypeKind::Or: return Type::disj(simplify(t.left()), simplify(t.right()));
    case TypeKind::Times:
      return Type::times(inline_times(map_labels(t.graph(), [](const Type& l) { return simplify(l); })));
    case TypeKind::Div: {
      Type num = simplify(t.num());
      TypedGraph den =
          inline_times(map_labels(t.graph(), [](const Type& l) { return l.is_dollar() ? l : simplify(l); }));
      // ÷(÷(N/D1)/D2) -> ÷(N / D1[D2/$1])
      while (num.is_div()) {
        den = replace(num.graph(), num.dollar_edge(), den);
        num = num.num();
      }
      return Type::div(num, std::move(den));
    }
  }
  return t;
}

Type ersatz_conjunction(const std::vector<Type>& ts) {
  if (ts.empty()) throw Error(ErrorCode::MalformedType, "ersatz conjunction of nothing");
  std::size_t m = ts[0].arity();
  TypedGraph body(m);
  std::vector<NodeId> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<NodeId>(i);
  for (const auto& t : ts) {
    if (t.arity() != m) throw Error(ErrorCode::ArityMismatch, "ersatz conjunction of differing arities");
    body.add_edge(t, all);
  }
  body.set_ext(all);
  return Type::times(std::move(body));
}

std::string to_string(const TypedGraph& g) {
  std::string s = "[" + std::to_string(g.node_count()) + ":";
  for (const auto& e : g.edges()) {
    s += " " + to_string(e.label) + "(";
    for (std::size_t i = 0; i < e.att.size(); ++i) s += (i ? "," : "") + std::to_string(e.att[i]);
    s += ")";
  }
  s += " ;";
  for (NodeId v : g.ext()) s += " " + std::to_string(v);
  return s + "]";
}

std::string to_string(const Type& t) {
  if (!t) return "<null>";
  switch (t.kind()) {
    case TypeKind::Prim: return t.sym();
    case TypeKind::Dollar: return "$";
    case TypeKind::Div: return "/(" + to_string(t.num()) + " " + to_string(t.graph()) + ")";
    case TypeKind::Times: return "*(" + to_string(t.graph()) + ")";
    case TypeKind::And: return "(" + to_string(t.left()) + " & " + to_string(t.right()) + ")";
    case TypeKind::Or: return "(" + to_string(t.left()) + " | " + to_string(t.right()) + ")";
  }
  return "?";
}

std::string to_string(const Sequent& s) { return to_string(s.antecedent) + " -> " + to_string(s.succedent); }

}  // namespace hlc
