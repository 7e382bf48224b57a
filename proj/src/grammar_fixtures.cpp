#include "hlc/grammars.hpp"
#include "hlc/string_calculi.hpp"

namespace hlc::grammars {

namespace {

Label lab(const std::string& sym, std::size_t arity) { return Label{sym, arity}; }

Type q_type(int i) {
  Type p = Type::prim("p", 1);
  switch (i) {
    case 1: return p;
    case 2: return Type::div(p, make_graph<Type>(2, {{Type::dollar(1), {0}}, {p, {1}}}, {0}));
    default: return Type::div(Type::prim("s", 0), make_graph<Type>(2, {{Type::dollar(1), {0}}, {p, {1}}}, {}));
  }
}

std::vector<Type> hgr1_types() {
  std::vector<Type> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      out.push_back(Type::times(make_graph<Type>(2, {{q_type(i), {0}}, {q_type(j), {1}}}, {0, 1})));
  for (int i = 1; i <= 3; ++i) out.push_back(Type::times(make_graph<Type>(2, {{q_type(i), {0}}}, {0, 1})));
  for (int j = 1; j <= 3; ++j) out.push_back(Type::times(make_graph<Type>(2, {{q_type(j), {1}}}, {0, 1})));
  out.push_back(Type::times(make_graph<Type>(2, {}, {0, 1})));
  return out;
}

Type u_wrap(const Type& t) {
  return Type::div(Type::prim("s", 0), make_graph<Type>(2, {{Type::dollar(2), {0, 1}}, {t, {0, 1}}}, {}));
}

Type r_type(int i, const Type& r) {
  switch (i) {
    case 1: return r;
    case 2: return Type::div(r, make_graph<Type>(1, {{Type::dollar(1), {0}}, {r, {0}}}, {0}));
    default: return Type::div(r, make_graph<Type>(2, {{Type::dollar(1), {0}}, {r, {1}}}, {0}));
  }
}

Graph chain(std::vector<Label> labels) {
  Graph g(labels.size() + 1);
  for (std::size_t i = 0; i < labels.size(); ++i)
    g.add_edge(labels[i], {static_cast<NodeId>(i), static_cast<NodeId>(i + 1)});
  g.set_ext({0, static_cast<NodeId>(labels.size())});
  return g;
}

}  // namespace

Hlg hgr1() {
  Hlg g;
  g.alphabet = {lab("a", 2)};
  g.start = Type::prim("s", 0);
  for (const auto& t : hgr1_types()) g.lexicon.push_back({"a", t});
  return g;
}

Hlg hgr1_prime() {
  Hlg g;
  g.alphabet = {lab("a", 2)};
  g.start = Type::prim("s", 0);
  for (const auto& t : hgr1_types()) g.lexicon.push_back({"a", u_wrap(u_wrap(t))});
  return g;
}

Hlg hgr2() {
  Hlg g;
  g.alphabet = {lab("a", 2)};
  Type p = Type::prim("p", 1), q = Type::prim("q", 1);
  g.start = Type::times(make_graph<Type>(2, {{p, {0}}, {q, {1}}}, {}));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      g.lexicon.push_back(
          {"a", Type::times(make_graph<Type>(2, {{r_type(i, p), {0}}, {r_type(j, q), {1}}}, {0, 1}))});
  return g;
}

Hlg anbn_lambek() {
  Hlg g;
  g.alphabet = {lab("a", 2), lab("b", 2)};
  g.start = Type::prim("s", 2);
  auto tr = [](const std::string& t) { return str::translate(str::parse_type(t), str::Calc::L); };
  g.lexicon = {{"a", tr("s/p")}, {"b", tr("p")}, {"b", tr("s\\p")}};
  return g;
}

// S -> a S B | a B,  B -> b
Hrg anbn_hrg() {
  Label a = lab("a", 2), b = lab("b", 2), S = lab("S", 2), B = lab("B", 2);
  Hrg g;
  g.nonterminals = {S, B};
  g.terminals = {a, b};
  g.start = "S";
  g.productions = {{"S", chain({a, S, B})}, {"S", chain({a, B})}, {"B", chain({b})}};
  return g;
}

// Rooted trees: T -> a-edge to a leaf | a-edge to a node with two subtrees | c-edge
// to a node with one subtree.
Hrg branching_hrg() {
  Label a = lab("a", 2), c = lab("c", 2), T = lab("T", 1);
  Hrg g;
  g.nonterminals = {T};
  g.terminals = {a, c};
  g.start = "T";
  g.productions = {
      {"T", make_graph<Label>(2, {{a, {0, 1}}}, {0})},
      {"T", make_graph<Label>(2, {{a, {0, 1}}, {T, {1}}, {T, {1}}}, {0})},
      {"T", make_graph<Label>(2, {{c, {0, 1}}, {T, {1}}}, {0})},
  };
  return g;
}

// S -> a T B S | a B S | a T B | a B,  T -> a T B | a B,  B -> b
Hrg blocks_hrg() {
  Label a = lab("a", 2), b = lab("b", 2), S = lab("S", 2), T = lab("T", 2), B = lab("B", 2);
  Hrg g;
  g.nonterminals = {S, T, B};
  g.terminals = {a, b};
  g.start = "S";
  g.productions = {{"S", chain({a, T, B, S})}, {"S", chain({a, B, S})}, {"S", chain({a, T, B})},
                   {"S", chain({a, B})},       {"T", chain({a, T, B})}, {"T", chain({a, B})},
                   {"B", chain({b})}};
  return g;
}

// S -> a S B | W-productions,  W -> b U A W | b A W | b U A | b A,
// U -> b U A | b A,  A -> a,  B -> b
Hrg nested_hrg() {
  Label a = lab("a", 2), b = lab("b", 2), S = lab("S", 2), W = lab("W", 2), U = lab("U", 2), A = lab("A", 2),
        B = lab("B", 2);
  Hrg g;
  g.nonterminals = {S, W, U, A, B};
  g.terminals = {a, b};
  g.start = "S";
  g.productions.push_back({"S", chain({a, S, B})});
  for (const std::string x : {"S", "W"}) {
    g.productions.push_back({x, chain({b, U, A, W})});
    g.productions.push_back({x, chain({b, A, W})});
    g.productions.push_back({x, chain({b, U, A})});
    g.productions.push_back({x, chain({b, A})});
  }
  g.productions.push_back({"U", chain({b, U, A})});
  g.productions.push_back({"U", chain({b, A})});
  g.productions.push_back({"A", chain({a})});
  g.productions.push_back({"B", chain({b})});
  return g;
}

Hlg e0_grammar() {
  Type s = Type::prim("s", 3), p = Type::prim("p", 2);
  TypedGraph d = make_graph<Type>(5, {{Type::dollar(2), {0, 1}}, {p, {1, 2}}, {s, {2, 0, 3}}}, {0, 4, 3});
  Hlg g;
  g.alphabet = {lab("a", 2), lab("b", 3), lab("c", 2)};
  g.start = s;
  g.lexicon = {{"a", Type::div(s, d)}, {"b", s}, {"c", p}};
  return g;
}

Graph e0_member() {
  Label a = lab("a", 2), b = lab("b", 3), c = lab("c", 2);
  // nodes 0..6 stand for N1..N7
  return make_graph<Label>(7, {{a, {0, 1}}, {c, {1, 2}}, {a, {2, 4}}, {c, {4, 3}}, {b, {3, 2, 5}}}, {0, 6, 5});
}

Graph triangle_tail() {
  Label a = lab("a", 2);
  return make_graph<Label>(4, {{a, {0, 1}}, {a, {0, 2}}, {a, {1, 2}}, {a, {3, 2}}}, {});
}

std::map<std::string, Hlg> builtin_hlgs() {
  return {{"hgr1", hgr1()}, {"hgr1-prime", hgr1_prime()}, {"hgr2", hgr2()},
          {"anbn-lambek", anbn_lambek()}, {"e0", e0_grammar()}};
}

std::map<std::string, Hrg> builtin_hrgs() {
  return {{"anbn", anbn_hrg()}, {"branching", branching_hrg()}, {"blocks", blocks_hrg()}, {"nested", nested_hrg()}};
}

}  // namespace hlc::grammars
