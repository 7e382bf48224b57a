#include "hlc/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "hlc/canonical.hpp"

namespace hlc::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& j, const std::string& path, const char* name) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(path, std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t uint_of(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string str_of(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& array_of(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string key_of(const json& id) { return id.dump(); }

json graph_shell(std::size_t nodes, const std::vector<NodeId>& ext) {
  json j;
  j["nodes"] = json::array();
  for (std::size_t v = 0; v < nodes; ++v) j["nodes"].push_back(v);
  j["edges"] = json::array();
  j["ext"] = ext;
  return j;
}

// Reads nodes, edge attachments and ext; `label` turns each edge's label field
// into a label given the attachment count.
template <class L, class F>
Hypergraph<L> read_graph(const json& j, const std::string& path, F label) {
  const json& nodes = array_of(field(j, path, "nodes"), path + "/nodes");
  std::unordered_map<std::string, NodeId> ids;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!ids.emplace(key_of(nodes[i]), static_cast<NodeId>(i)).second)
      fail(path + "/nodes/" + std::to_string(i), "duplicate node id");
  auto node = [&](const json& id, const std::string& p) {
    auto it = ids.find(key_of(id));
    if (it == ids.end()) fail(p, "unknown node " + id.dump());
    return it->second;
  };
  Hypergraph<L> g(nodes.size());
  const json& edges = array_of(field(j, path, "edges"), path + "/edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string ep = path + "/edges/" + std::to_string(i);
    const json& att = array_of(field(edges[i], ep, "att"), ep + "/att");
    std::vector<NodeId> a;
    for (std::size_t k = 0; k < att.size(); ++k) a.push_back(node(att[k], ep + "/att/" + std::to_string(k)));
    L l = label(field(edges[i], ep, "label"), ep + "/label", a.size());
    try {
      g.add_edge(std::move(l), std::move(a));
    } catch (const Error& e) {
      fail(ep, e.what());
    }
  }
  const json& ext = array_of(field(j, path, "ext"), path + "/ext");
  std::vector<NodeId> x;
  for (std::size_t k = 0; k < ext.size(); ++k) x.push_back(node(ext[k], path + "/ext/" + std::to_string(k)));
  try {
    g.set_ext(std::move(x));
  } catch (const Error& e) {
    fail(path + "/ext", e.what());
  }
  return g;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <class L, class F>
std::string graph_dot(const Hypergraph<L>& g, F text) {
  std::ostringstream o;
  o << "graph G {\n  node [shape=point];\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    o << "  n" << v;
    for (std::size_t i = 0; i < g.type(); ++i)
      if (g.ext()[i] == v) o << " [xlabel=\"(" << i + 1 << ")\"]";
    o << ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    o << "  e" << e << " [shape=box, label=\"" << escape(text(g.edge(e).label)) << "\"];\n";
    const auto& att = g.edge(e).att;
    for (std::size_t i = 0; i < att.size(); ++i)
      o << "  e" << e << " -- n" << att[i] << " [label=\"" << i + 1 << "\"];\n";
  }
  o << "}\n";
  return o.str();
}

json embedding_json(const Embedding& m) {
  json j;
  j["nodes"] = json::array();
  for (NodeId v : m.nodes) j["nodes"].push_back(v == kNone ? json(nullptr) : json(v));
  j["edges"] = json::array();
  for (EdgeId e : m.edges) j["edges"].push_back(e == kNone ? json(nullptr) : json(e));
  return j;
}

std::vector<std::uint32_t> ids_or_none(const json& j, const std::string& path) {
  std::vector<std::uint32_t> out;
  array_of(j, path);
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(j[i].is_null() ? kNone : static_cast<std::uint32_t>(uint_of(j[i], path + "/" + std::to_string(i))));
  return out;
}

}  // namespace

json to_json(const Label& l) { return {{"sym", l.sym}, {"arity", l.arity}}; }

json to_json(const Graph& g) {
  json j = graph_shell(g.node_count(), g.ext());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    j["edges"].push_back({{"id", e}, {"label", to_json(g.edge(e).label)}, {"att", g.edge(e).att}});
  return j;
}

json to_json(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Prim: return {{"prim", {{"sym", t.sym()}, {"arity", t.arity()}}}};
    case TypeKind::Dollar: return "$";
    case TypeKind::Div: return {{"div", {{"num", to_json(t.num())}, {"den", to_json(t.graph())}}}};
    case TypeKind::Times: return {{"times", to_json(t.graph())}};
    case TypeKind::And: return {{"and", {to_json(t.left()), to_json(t.right())}}};
    case TypeKind::Or: return {{"or", {to_json(t.left()), to_json(t.right())}}};
  }
  return nullptr;
}

json to_json(const TypedGraph& g) {
  json j = graph_shell(g.node_count(), g.ext());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    j["edges"].push_back({{"id", e}, {"label", to_json(g.edge(e).label)}, {"att", g.edge(e).att}});
  return j;
}

json to_json(const Sequent& s) { return {{"antecedent", to_json(s.antecedent)}, {"succedent", to_json(s.succedent)}}; }

json to_json(const Derivation& d) {
  json w;
  w["edge"] = d.witness.edge == kNone ? json(nullptr) : json(d.witness.edge);
  w["aux"] = d.witness.aux;
  w["maps"] = json::array();
  for (const auto& m : d.witness.maps) w["maps"].push_back(embedding_json(m));
  json j;
  j["conclusion"] = to_json(d.conclusion);
  j["rule"] = to_string(d.rule);
  j["witness"] = std::move(w);
  j["premises"] = json::array();
  for (const auto& p : d.premises) j["premises"].push_back(to_json(*p));
  return j;
}

json to_json(const Hlg& g) {
  json j;
  j["alphabet"] = json::array();
  for (const auto& l : g.alphabet) j["alphabet"].push_back(to_json(l));
  j["start"] = to_json(g.start);
  j["lexicon"] = json::array();
  for (const auto& e : g.lexicon) j["lexicon"].push_back({{"sym", e.sym}, {"type", to_json(e.type)}});
  return j;
}

json to_json(const Hrg& g) {
  json j;
  j["nonterminals"] = json::array();
  for (const auto& l : g.nonterminals) j["nonterminals"].push_back(to_json(l));
  j["terminals"] = json::array();
  for (const auto& l : g.terminals) j["terminals"].push_back(to_json(l));
  j["start"] = g.start;
  j["productions"] = json::array();
  for (const auto& p : g.productions) j["productions"].push_back({{"lhs", p.lhs}, {"rhs", to_json(p.rhs)}});
  return j;
}

Label label_from_json(const json& j, const std::string& path) {
  return Label{str_of(field(j, path, "sym"), path + "/sym"), uint_of(field(j, path, "arity"), path + "/arity")};
}

Graph graph_from_json(const json& j, const std::string& path) {
  return read_graph<Label>(j, path, [](const json& l, const std::string& p, std::size_t n) {
    Label x = label_from_json(l, p);
    if (x.arity != n) fail(p, "label arity " + std::to_string(x.arity) + " but " + std::to_string(n) + " attachments");
    return x;
  });
}

TypedGraph typed_graph_from_json(const json& j, const std::string& path) {
  return read_graph<Type>(j, path, [](const json& l, const std::string& p, std::size_t n) {
    if (l.is_string() && l.get<std::string>() == "$") return Type::dollar(n);
    Type t = type_from_json(l, p);
    if (t.arity() != n) fail(p, "type arity " + std::to_string(t.arity()) + " but " + std::to_string(n) + " attachments");
    return t;
  });
}

Type type_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1) fail(path, "expected a type object with exactly one of prim, div, times, and, or");
  auto it = j.begin();
  const std::string& kind = it.key();
  std::string p = path + "/" + kind;
  try {
    if (kind == "prim") {
      Label l = label_from_json(*it, p);
      return Type::prim(l.sym, l.arity);
    }
    if (kind == "div")
      return Type::div(type_from_json(field(*it, p, "num"), p + "/num"),
                       typed_graph_from_json(field(*it, p, "den"), p + "/den"));
    if (kind == "times") return Type::times(typed_graph_from_json(*it, p));
    if (kind == "and" || kind == "or") {
      if (!it->is_array() || it->size() != 2) fail(p, "expected two components");
      Type a = type_from_json((*it)[0], p + "/0"), b = type_from_json((*it)[1], p + "/1");
      return kind == "and" ? Type::conj(a, b) : Type::disj(a, b);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(p, e.what());
  }
  fail(path, "unknown type constructor \"" + kind + "\"");
}

Sequent sequent_from_json(const json& j, const std::string& path) {
  Sequent s{typed_graph_from_json(field(j, path, "antecedent"), path + "/antecedent"),
            type_from_json(field(j, path, "succedent"), path + "/succedent")};
  return s;
}

DerivationPtr tree_from_json(const json& j, const std::string& path) {
  Sequent c = sequent_from_json(field(j, path, "conclusion"), path + "/conclusion");
  std::string rp = path + "/rule";
  auto rule = rule_from_string(str_of(field(j, path, "rule"), rp));
  if (!rule) fail(rp, "unknown rule");
  Witness w;
  std::string wp = path + "/witness";
  const json& wj = field(j, path, "witness");
  const json& edge = field(wj, wp, "edge");
  w.edge = edge.is_null() ? kNone : static_cast<EdgeId>(uint_of(edge, wp + "/edge"));
  w.aux = uint_of(field(wj, wp, "aux"), wp + "/aux");
  const json& maps = array_of(field(wj, wp, "maps"), wp + "/maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::string mp = wp + "/maps/" + std::to_string(i);
    Embedding m;
    m.nodes = ids_or_none(field(maps[i], mp, "nodes"), mp + "/nodes");
    m.edges = ids_or_none(field(maps[i], mp, "edges"), mp + "/edges");
    w.maps.push_back(std::move(m));
  }
  std::vector<DerivationPtr> premises;
  const json& ps = array_of(field(j, path, "premises"), path + "/premises");
  for (std::size_t i = 0; i < ps.size(); ++i)
    premises.push_back(tree_from_json(ps[i], path + "/premises/" + std::to_string(i)));
  return make_node(std::move(c), *rule, std::move(w), std::move(premises));
}

Hlg hlg_from_json(const json& j, const std::string& path) {
  Hlg g;
  const json& a = array_of(field(j, path, "alphabet"), path + "/alphabet");
  for (std::size_t i = 0; i < a.size(); ++i) g.alphabet.push_back(label_from_json(a[i], path + "/alphabet/" + std::to_string(i)));
  g.start = type_from_json(field(j, path, "start"), path + "/start");
  const json& lex = array_of(field(j, path, "lexicon"), path + "/lexicon");
  for (std::size_t i = 0; i < lex.size(); ++i) {
    std::string p = path + "/lexicon/" + std::to_string(i);
    g.lexicon.push_back({str_of(field(lex[i], p, "sym"), p + "/sym"), type_from_json(field(lex[i], p, "type"), p + "/type")});
  }
  try {
    validate(g);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return g;
}

Hrg hrg_from_json(const json& j, const std::string& path) {
  Hrg g;
  const json& n = array_of(field(j, path, "nonterminals"), path + "/nonterminals");
  for (std::size_t i = 0; i < n.size(); ++i)
    g.nonterminals.push_back(label_from_json(n[i], path + "/nonterminals/" + std::to_string(i)));
  const json& t = array_of(field(j, path, "terminals"), path + "/terminals");
  for (std::size_t i = 0; i < t.size(); ++i)
    g.terminals.push_back(label_from_json(t[i], path + "/terminals/" + std::to_string(i)));
  g.start = str_of(field(j, path, "start"), path + "/start");
  const json& ps = array_of(field(j, path, "productions"), path + "/productions");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::string p = path + "/productions/" + std::to_string(i);
    g.productions.push_back({str_of(field(ps[i], p, "lhs"), p + "/lhs"), graph_from_json(field(ps[i], p, "rhs"), p + "/rhs")});
  }
  try {
    validate(g);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return g;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json read_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& file, const std::string& text) {
  std::ofstream out(file);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + file);
  out << text;
}

Graph canonical_graph(const Graph& g) {
  auto c = canonical(g);
  std::vector<NodeId> pos(g.node_count());
  for (std::size_t i = 0; i < c.node_order.size(); ++i) pos[c.node_order[i]] = static_cast<NodeId>(i);
  Graph out(g.node_count());
  for (EdgeId e : c.edge_order) {
    std::vector<NodeId> att;
    for (NodeId v : g.edge(e).att) att.push_back(pos[v]);
    out.add_edge(g.edge(e).label, std::move(att));
  }
  std::vector<NodeId> ext;
  for (NodeId v : g.ext()) ext.push_back(pos[v]);
  out.set_ext(std::move(ext));
  return out;
}

std::string to_dot(const Graph& g) {
  return graph_dot(g, [](const Label& l) { return l.sym; });
}

std::string to_dot(const TypedGraph& g) {
  return graph_dot(g, [](const Type& t) { return to_string(t); });
}

std::string to_dot(const Derivation& d) {
  std::ostringstream o;
  o << "digraph D {\n  rankdir=BT;\n  node [shape=box, fontname=monospace];\n";
  std::size_t next = 0;
  std::function<std::size_t(const Derivation&)> walk = [&](const Derivation& n) {
    std::size_t id = next++;
    o << "  d" << id << " [label=\"" << escape(to_string(n.conclusion)) << "\\n(" << to_string(n.rule) << ")\"];\n";
    for (const auto& p : n.premises) {
      std::size_t c = walk(*p);
      o << "  d" << c << " -> d" << id << ";\n";
    }
    return id;
  };
  walk(d);
  o << "}\n";
  return o.str();
}

}  // namespace hlc::io
