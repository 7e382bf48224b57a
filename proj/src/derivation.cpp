#include "hlc/derivation.hpp"

#include <algorithm>

#include "hlc/canonical.hpp"

namespace hlc {

const char* to_string(Rule r) {
  switch (r) {
    case Rule::Axiom: return "Axiom";
    case Rule::DivLeft: return "DivLeft";
    case Rule::DivRight: return "DivRight";
    case Rule::TimesLeft: return "TimesLeft";
    case Rule::TimesRight: return "TimesRight";
    case Rule::Cut: return "Cut";
    case Rule::Weakening: return "Weakening";
    case Rule::Contraction: return "Contraction";
    case Rule::AndLeft: return "AndLeft";
    case Rule::AndRight: return "AndRight";
    case Rule::OrLeft: return "OrLeft";
    case Rule::OrRight: return "OrRight";
  }
  return "?";
}

std::optional<Rule> rule_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(Rule::OrRight); ++i)
    if (s == to_string(static_cast<Rule>(i))) return static_cast<Rule>(i);
  return std::nullopt;
}

std::optional<Mode> Mode::parse(const std::string& s) {
  Mode m;
  std::string rest;
  if (s.rfind("hmalc", 0) == 0) {
    m.hmalc = true;
    rest = s.substr(5);
  } else if (s.rfind("hl", 0) == 0) {
    rest = s.substr(2);
  } else {
    return std::nullopt;
  }
  if (rest.empty()) return m;
  if (rest == "+w") {
    m.weakening = true;
  } else if (rest == "+c") {
    m.contraction = true;
  } else if (rest == "+wc") {
    m.weakening = m.contraction = true;
  } else {
    return std::nullopt;
  }
  return m;
}

std::string Mode::name() const {
  std::string s = hmalc ? "hmalc" : "hl";
  if (weakening || contraction) s += "+";
  if (weakening) s += "w";
  if (contraction) s += "c";
  return s;
}

DerivationPtr make_node(Sequent conclusion, Rule rule, Witness w, std::vector<DerivationPtr> premises) {
  auto d = std::make_shared<Derivation>();
  d->conclusion = std::move(conclusion);
  d->rule = rule;
  d->witness = std::move(w);
  d->premises = std::move(premises);
  return d;
}

std::size_t rule_count(const Derivation& d) {
  std::size_t n = d.rule == Rule::Axiom ? 0 : 1;
  for (const auto& p : d.premises) n += rule_count(*p);
  return n;
}

std::size_t node_count(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& p : d.premises) n += node_count(*p);
  return n;
}

namespace {

struct Piece {
  std::string name;
  const TypedGraph* graph = nullptr;
  const Embedding* map = nullptr;
  bool root = false;
  std::vector<NodeId> expected_ext;
  std::vector<EdgeId> replaced;
  std::vector<std::pair<EdgeId, Type>> relabel;
};

std::optional<std::string> shape_error(const std::string& name, const TypedGraph& g, const Embedding& m,
                                       const TypedGraph& target) {
  if (m.nodes.size() != g.node_count())
    return name + ": node map has " + std::to_string(m.nodes.size()) + " entries for " +
           std::to_string(g.node_count()) + " nodes";
  if (m.edges.size() != g.edge_count())
    return name + ": edge map has " + std::to_string(m.edges.size()) + " entries for " +
           std::to_string(g.edge_count()) + " edges";
  for (NodeId v = 0; v < m.nodes.size(); ++v)
    if (m.nodes[v] >= target.node_count())
      return name + ": node " + std::to_string(v) + " maps outside the target";
  return std::nullopt;
}

// The target must be exactly the disjoint union of the pieces glued along their
// external nodes: each target edge is the image of exactly one non-replaced piece
// edge, and each target node is owned by exactly one piece (the root piece owns all
// its nodes, other pieces only their internal ones).
std::optional<std::string> check_assembly(const TypedGraph& target, const std::vector<Piece>& pieces) {
  std::vector<int> owner(target.node_count(), -1);
  std::vector<int> hit(target.edge_count(), -1);
  const Piece* root = nullptr;
  for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
    const Piece& p = pieces[pi];
    const TypedGraph& g = *p.graph;
    const Embedding& m = *p.map;
    if (auto err = shape_error(p.name, g, m, target)) return err;
    std::vector<char> seen(target.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (seen[m.nodes[v]]) return p.name + ": node map is not injective at node " + std::to_string(v);
      seen[m.nodes[v]] = 1;
    }
    if (p.root) {
      if (root) return std::string("two root pieces");
      root = &p;
    } else {
      if (p.expected_ext.size() != g.type())
        return p.name + ": has " + std::to_string(g.type()) + " external nodes, expected " +
               std::to_string(p.expected_ext.size());
      for (std::size_t i = 0; i < g.type(); ++i)
        if (m.nodes[g.ext()[i]] != p.expected_ext[i])
          return p.name + ": external node " + std::to_string(i) + " is placed at " +
                 std::to_string(m.nodes[g.ext()[i]]) + " instead of " + std::to_string(p.expected_ext[i]);
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (!p.root && g.is_external(v)) continue;
      NodeId t = m.nodes[v];
      if (owner[t] != -1)
        return p.name + ": node " + std::to_string(v) + " lands on target node " + std::to_string(t) +
               " already provided by " + pieces[static_cast<std::size_t>(owner[t])].name;
      owner[t] = static_cast<int>(pi);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      bool replaced = std::find(p.replaced.begin(), p.replaced.end(), e) != p.replaced.end();
      EdgeId t = m.edges[e];
      if (replaced) {
        if (t != kNone) return p.name + ": edge " + std::to_string(e) + " must not be copied";
        continue;
      }
      if (t == kNone || t >= target.edge_count())
        return p.name + ": edge " + std::to_string(e) + " has no valid image";
      if (hit[t] != -1)
        return p.name + ": edge " + std::to_string(e) + " lands on target edge " + std::to_string(t) +
               " already provided by " + pieces[static_cast<std::size_t>(hit[t])].name;
      hit[t] = static_cast<int>(pi);
      Type expected = g.edge(e).label;
      for (const auto& [re, lab] : p.relabel)
        if (re == e) expected = lab;
      if (target.edge(t).label != expected)
        return p.name + ": edge " + std::to_string(e) + " label differs from target edge " + std::to_string(t);
      const auto& a = g.edge(e).att;
      const auto& b = target.edge(t).att;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (m.nodes[a[i]] != b[i])
          return p.name + ": edge " + std::to_string(e) + " attachment " + std::to_string(i) +
                 " disagrees with target edge " + std::to_string(t);
    }
  }
  if (!root) return std::string("no root piece");
  for (NodeId v = 0; v < target.node_count(); ++v)
    if (owner[v] == -1) return "target node " + std::to_string(v) + " is not accounted for";
  for (EdgeId e = 0; e < target.edge_count(); ++e)
    if (hit[e] == -1) return "target edge " + std::to_string(e) + " is not accounted for";
  const auto& rg = *root->graph;
  if (rg.type() != target.type()) return root->name + ": external node count differs from target";
  for (std::size_t i = 0; i < rg.type(); ++i)
    if (root->map->nodes[rg.ext()[i]] != target.ext()[i])
      return root->name + ": external node " + std::to_string(i) + " does not map to the target's";
  return std::nullopt;
}

std::vector<NodeId> image(const Embedding& m, const std::vector<NodeId>& nodes) {
  std::vector<NodeId> out;
  for (NodeId v : nodes) out.push_back(v < m.nodes.size() ? m.nodes[v] : kNone);
  return out;
}

std::string premise_name(std::size_t i) { return "premise " + std::to_string(i); }

class Verifier {
 public:
  explicit Verifier(const VerifyOptions& opt) : opt_(opt) {}

  VerifyResult run(const Derivation& d, const std::string& path) {
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      if (!d.premises[i]) return VerifyResult{false, path, "missing premise " + std::to_string(i)};
      auto r = run(*d.premises[i], path + ".premises[" + std::to_string(i) + "]");
      if (!r) return r;
    }
    if (auto err = node(d)) return VerifyResult{false, path, std::string(to_string(d.rule)) + ": " + *err};
    return {};
  }

 private:
  std::optional<std::string> node(const Derivation& d) {
    const Sequent& s = d.conclusion;
    try {
      validate(s);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    for (const auto& p : d.premises)
      if (!p) return std::string("missing premise");
    const auto& w = d.witness;
    auto need_premises = [&](std::size_t n) -> std::optional<std::string> {
      if (d.premises.size() != n)
        return "expected " + std::to_string(n) + " premises, found " + std::to_string(d.premises.size());
      return std::nullopt;
    };
    auto need_maps = [&](std::size_t n) -> std::optional<std::string> {
      if (w.maps.size() != n)
        return "expected " + std::to_string(n) + " maps, found " + std::to_string(w.maps.size());
      return std::nullopt;
    };
    auto same_succedent = [&](std::size_t i) -> std::optional<std::string> {
      if (d.premises[i]->conclusion.succedent != s.succedent) return premise_name(i) + " changes the succedent";
      return std::nullopt;
    };
    std::optional<std::string> err;
    switch (d.rule) {
      case Rule::Axiom: {
        if ((err = need_premises(0))) return err;
        if (!s.succedent.is_prim()) return std::string("succedent is not primitive");
        if (!is_handle(s.antecedent) || s.antecedent.edge(0).label != s.succedent)
          return std::string("antecedent is not the handle of the succedent");
        return std::nullopt;
      }
      case Rule::TimesRight: {
        if (!s.succedent.is_times()) return std::string("succedent is not a product");
        const TypedGraph& m = s.succedent.graph();
        if ((err = need_premises(m.edge_count())) || (err = need_maps(m.edge_count() + 1))) return err;
        if ((err = shape_error("body", m, w.maps[0], s.antecedent))) return err;
        std::vector<Piece> pieces;
        Piece body{"body", &m, &w.maps[0], true, {}, {}, {}};
        for (EdgeId e = 0; e < m.edge_count(); ++e) body.replaced.push_back(e);
        pieces.push_back(body);
        for (EdgeId i = 0; i < m.edge_count(); ++i) {
          const auto& ps = d.premises[i]->conclusion;
          if (ps.succedent != m.edge(i).label) return premise_name(i) + " does not derive the label of body edge " + std::to_string(i);
          pieces.push_back(Piece{premise_name(i), &ps.antecedent, &w.maps[i + 1], false, image(w.maps[0], m.edge(i).att), {}, {}});
        }
        if ((err = check_assembly(s.antecedent, pieces))) return err;
        return size_law(d);
      }
      case Rule::DivLeft: {
        if (w.edge >= s.antecedent.edge_count()) return std::string("witness edge out of range");
        const Type& t = s.antecedent.edge(w.edge).label;
        if (!t.is_div()) return std::string("witness edge is not labeled by a division");
        const TypedGraph& den = t.graph();
        std::size_t k = den.edge_count() - 1;
        if ((err = need_premises(k + 1)) || (err = need_maps(k + 2))) return err;
        if ((err = same_succedent(0))) return err;
        const auto& kseq = d.premises[0]->conclusion;
        if (w.aux >= kseq.antecedent.edge_count()) return std::string("numerator edge out of range");
        if (kseq.antecedent.edge(w.aux).label != t.num())
          return std::string("numerator edge of premise 0 is not labeled by the numerator");
        if ((err = shape_error("denominator", den, w.maps[0], s.antecedent)) ||
            (err = shape_error(premise_name(0), kseq.antecedent, w.maps[1], s.antecedent)))
          return err;
        if (w.maps[0].edges[t.dollar_edge()] != w.edge) return std::string("$-edge is not placed on the witness edge");
        Piece dp{"denominator", &den, &w.maps[0], false, image(w.maps[1], kseq.antecedent.edge(w.aux).att), {}, {{t.dollar_edge(), t}}};
        std::vector<Piece> pieces;
        pieces.push_back(Piece{premise_name(0), &kseq.antecedent, &w.maps[1], true, {}, {static_cast<EdgeId>(w.aux)}, {}});
        std::size_t i = 0;
        for (EdgeId e = 0; e < den.edge_count(); ++e) {
          if (e == t.dollar_edge()) continue;
          dp.replaced.push_back(e);
          ++i;
          const auto& ps = d.premises[i]->conclusion;
          if (ps.succedent != den.edge(e).label) return premise_name(i) + " does not derive the label of denominator edge " + std::to_string(e);
          pieces.push_back(Piece{premise_name(i), &ps.antecedent, &w.maps[i + 1], false, image(w.maps[0], den.edge(e).att), {}, {}});
        }
        pieces.push_back(dp);
        if ((err = check_assembly(s.antecedent, pieces))) return err;
        return size_law(d);
      }
      case Rule::TimesLeft: {
        if ((err = need_premises(1)) || (err = need_maps(2))) return err;
        if (w.edge >= s.antecedent.edge_count()) return std::string("witness edge out of range");
        const Type& t = s.antecedent.edge(w.edge).label;
        if (!t.is_times()) return std::string("witness edge is not labeled by a product");
        if ((err = same_succedent(0))) return err;
        const auto& ps = d.premises[0]->conclusion;
        if ((err = shape_error("conclusion", s.antecedent, w.maps[0], ps.antecedent))) return err;
        std::vector<Piece> pieces;
        pieces.push_back(Piece{"conclusion", &s.antecedent, &w.maps[0], true, {}, {w.edge}, {}});
        pieces.push_back(Piece{"body", &t.graph(), &w.maps[1], false, image(w.maps[0], s.antecedent.edge(w.edge).att), {}, {}});
        if ((err = check_assembly(ps.antecedent, pieces))) return err;
        return size_law(d);
      }
      case Rule::DivRight: {
        if ((err = need_premises(1)) || (err = need_maps(2))) return err;
        const Type& t = s.succedent;
        if (!t.is_div()) return std::string("succedent is not a division");
        const auto& ps = d.premises[0]->conclusion;
        if (ps.succedent != t.num()) return std::string("premise does not derive the numerator");
        const TypedGraph& den = t.graph();
        if ((err = shape_error("denominator", den, w.maps[0], ps.antecedent))) return err;
        std::vector<Piece> pieces;
        pieces.push_back(Piece{"denominator", &den, &w.maps[0], true, {}, {t.dollar_edge()}, {}});
        pieces.push_back(Piece{"conclusion", &s.antecedent, &w.maps[1], false, image(w.maps[0], den.edge(t.dollar_edge()).att), {}, {}});
        if ((err = check_assembly(ps.antecedent, pieces))) return err;
        return size_law(d);
      }
      case Rule::Cut: {
        if (!opt_.allow_cut) return std::string("cut is not allowed here");
        if ((err = need_premises(2)) || (err = need_maps(2))) return err;
        const auto& left = d.premises[0]->conclusion;
        const auto& right = d.premises[1]->conclusion;
        if (right.succedent != s.succedent) return std::string("premise 1 changes the succedent");
        if (w.edge >= right.antecedent.edge_count()) return std::string("cut edge out of range");
        if (right.antecedent.edge(w.edge).label != left.succedent)
          return std::string("cut edge is not labeled by the succedent of premise 0");
        if ((err = shape_error(premise_name(1), right.antecedent, w.maps[0], s.antecedent))) return err;
        std::vector<Piece> pieces;
        pieces.push_back(Piece{premise_name(1), &right.antecedent, &w.maps[0], true, {}, {w.edge}, {}});
        pieces.push_back(Piece{premise_name(0), &left.antecedent, &w.maps[1], false, image(w.maps[0], right.antecedent.edge(w.edge).att), {}, {}});
        return check_assembly(s.antecedent, pieces);
      }
      case Rule::Weakening: {
        if (!opt_.mode.weakening) return std::string("weakening is not enabled");
        if ((err = need_premises(1)) || (err = need_maps(1))) return err;
        if ((err = same_succedent(0))) return err;
        return check_subgraph(d.premises[0]->conclusion.antecedent, s.antecedent, w.maps[0]);
      }
      case Rule::Contraction: {
        if (!opt_.mode.contraction) return std::string("contraction is not enabled");
        if ((err = need_premises(1)) || (err = need_maps(1))) return err;
        if ((err = same_succedent(0))) return err;
        const auto& pa = d.premises[0]->conclusion.antecedent;
        if (w.edge >= pa.edge_count() || w.aux >= pa.edge_count() || w.edge == w.aux)
          return std::string("contracted edges out of range");
        if (pa.edge(w.edge).label != pa.edge(w.aux).label || pa.edge(w.edge).att != pa.edge(w.aux).att)
          return std::string("contracted edges are not parallel copies");
        return check_assembly(s.antecedent, {Piece{premise_name(0), &pa, &w.maps[0], true, {}, {w.edge}, {}}});
      }
      case Rule::AndLeft:
      case Rule::OrLeft: {
        if (!opt_.mode.hmalc) return std::string("additive rules need hmalc mode");
        bool is_and = d.rule == Rule::AndLeft;
        if (w.edge >= s.antecedent.edge_count()) return std::string("witness edge out of range");
        const Type& t = s.antecedent.edge(w.edge).label;
        if (t.kind() != (is_and ? TypeKind::And : TypeKind::Or)) return std::string("witness edge has the wrong connective");
        std::vector<Type> parts;
        if (is_and) {
          if (w.aux != 1 && w.aux != 2) return std::string("component index must be 1 or 2");
          parts.push_back(w.aux == 1 ? t.left() : t.right());
        } else {
          parts = {t.left(), t.right()};
        }
        if ((err = need_premises(parts.size())) || (err = need_maps(parts.size()))) return err;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if ((err = same_succedent(i))) return err;
          const auto& pa = d.premises[i]->conclusion.antecedent;
          if ((err = shape_error(premise_name(i), pa, w.maps[i], s.antecedent))) return err;
          EdgeId pre = kNone;
          for (EdgeId e = 0; e < pa.edge_count(); ++e)
            if (w.maps[i].edges[e] == w.edge) pre = e;
          if (pre == kNone) return premise_name(i) + " has no edge placed on the witness edge";
          if (pa.edge(pre).label != parts[i]) return premise_name(i) + " does not carry the selected component";
          if ((err = check_assembly(s.antecedent, {Piece{premise_name(i), &pa, &w.maps[i], true, {}, {}, {{pre, t}}}})))
            return err;
        }
        return std::nullopt;
      }
      case Rule::AndRight:
      case Rule::OrRight: {
        if (!opt_.mode.hmalc) return std::string("additive rules need hmalc mode");
        bool is_and = d.rule == Rule::AndRight;
        const Type& t = s.succedent;
        if (t.kind() != (is_and ? TypeKind::And : TypeKind::Or)) return std::string("succedent has the wrong connective");
        std::vector<Type> parts;
        if (is_and) {
          parts = {t.left(), t.right()};
        } else {
          if (w.aux != 1 && w.aux != 2) return std::string("component index must be 1 or 2");
          parts.push_back(w.aux == 1 ? t.left() : t.right());
        }
        if ((err = need_premises(parts.size())) || (err = need_maps(parts.size()))) return err;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          const auto& ps = d.premises[i]->conclusion;
          if (ps.succedent != parts[i]) return premise_name(i) + " does not derive the selected component";
          if ((err = check_assembly(s.antecedent, {Piece{premise_name(i), &ps.antecedent, &w.maps[i], true, {}, {}, {}}})))
            return err;
        }
        return std::nullopt;
      }
    }
    return std::string("unknown rule");
  }

  std::optional<std::string> size_law(const Derivation& d) {
    std::size_t sum = 0;
    for (const auto& p : d.premises) sum += size(p->conclusion);
    if (size(d.conclusion) != sum + 1)
      return "size law violated: conclusion " + std::to_string(size(d.conclusion)) + ", premises " +
             std::to_string(sum);
    return std::nullopt;
  }

  std::optional<std::string> check_subgraph(const TypedGraph& small, const TypedGraph& big, const Embedding& m) {
    if (auto err = shape_error("premise 0", small, m, big)) return err;
    std::vector<char> seen(big.node_count(), 0), eseen(big.edge_count(), 0);
    for (NodeId v : m.nodes) {
      if (seen[v]) return std::string("premise 0: node map is not injective");
      seen[v] = 1;
    }
    for (EdgeId e = 0; e < small.edge_count(); ++e) {
      EdgeId t = m.edges[e];
      if (t == kNone || t >= big.edge_count() || eseen[t]) return "premise 0: edge " + std::to_string(e) + " has no valid image";
      eseen[t] = 1;
      if (big.edge(t).label != small.edge(e).label) return "premise 0: edge " + std::to_string(e) + " changes label";
      for (std::size_t i = 0; i < small.edge(e).att.size(); ++i)
        if (m.nodes[small.edge(e).att[i]] != big.edge(t).att[i])
          return "premise 0: edge " + std::to_string(e) + " attachment differs";
    }
    if (small.type() != big.type()) return std::string("premise 0: external nodes differ");
    for (std::size_t i = 0; i < small.type(); ++i)
      if (m.nodes[small.ext()[i]] != big.ext()[i]) return std::string("premise 0: external nodes differ");
    return std::nullopt;
  }

  VerifyOptions opt_;
};

Embedding compose_after(const Isomorphism& sigma, const Embedding& m) {
  Embedding r;
  for (NodeId v : m.nodes) r.nodes.push_back(v == kNone ? kNone : sigma.nodes[v]);
  for (EdgeId e : m.edges) r.edges.push_back(e == kNone ? kNone : sigma.edges[e]);
  return r;
}

Embedding compose_before_inverse(const Embedding& m, const Isomorphism& sigma) {
  Embedding r;
  r.nodes.assign(m.nodes.size(), kNone);
  r.edges.assign(m.edges.size(), kNone);
  for (NodeId v = 0; v < m.nodes.size(); ++v) r.nodes[sigma.nodes[v]] = m.nodes[v];
  for (EdgeId e = 0; e < m.edges.size(); ++e) r.edges[sigma.edges[e]] = m.edges[e];
  return r;
}

}  // namespace

VerifyResult verify_tree(const Derivation& d, const VerifyOptions& opt) {
  Verifier v(opt);
  return v.run(d, "root");
}

DerivationPtr transport(const DerivationPtr& d, const TypedGraph& new_antecedent, const Isomorphism& sigma) {
  auto r = std::make_shared<Derivation>(*d);
  r->conclusion.antecedent = new_antecedent;
  auto& w = r->witness;
  switch (d->rule) {
    case Rule::Axiom: break;
    case Rule::TimesLeft:
      w.edge = sigma.edges[w.edge];
      w.maps[0] = compose_before_inverse(w.maps[0], sigma);
      break;
    case Rule::DivRight: w.maps[1] = compose_before_inverse(w.maps[1], sigma); break;
    case Rule::Contraction:
      w.maps[0] = compose_after(sigma, w.maps[0]);
      break;
    case Rule::Cut:
    case Rule::Weakening:
    case Rule::TimesRight:
    case Rule::AndRight:
    case Rule::OrRight:
      for (auto& m : w.maps) m = compose_after(sigma, m);
      break;
    case Rule::DivLeft:
    case Rule::AndLeft:
    case Rule::OrLeft:
      w.edge = sigma.edges[w.edge];
      for (auto& m : w.maps) m = compose_after(sigma, m);
      break;
  }
  return r;
}

std::string to_string(const Derivation& d, int indent) {
  std::string s(static_cast<std::size_t>(indent) * 2, ' ');
  s += to_string(d.rule);
  s += ": ";
  s += to_string(d.conclusion);
  s += "\n";
  for (const auto& p : d.premises) s += to_string(*p, indent + 1);
  return s;
}

}  // namespace hlc
