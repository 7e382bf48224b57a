#include <map>

#include "hlc/prover.hpp"
#include "hlc/string_calculi.hpp"

namespace hlc::str {

namespace {

Type dollar2() { return Type::dollar(2); }

Type br_label() { return Type::prim(kBracketSym, 2); }
Type dia_label() { return Type::prim(kDiamondSym, 2); }

// Br(X, Y): X(0,1) Y(1,2) p_br(0,2), ext (0,2)
TypedGraph br(const Type& x, const Type& y) {
  return make_graph<Type>(3, {{x, {0, 1}}, {y, {1, 2}}, {br_label(), {0, 2}}}, {0, 2});
}

// Diam(X): X(0,1) p_dia(0,1), ext (0,1)
TypedGraph diam(const Type& x) { return make_graph<Type>(2, {{x, {0, 1}}, {dia_label(), {0, 1}}}, {0, 1}); }

TypedGraph chain(const Type& x, const Type& y, std::size_t isolated) {
  return make_graph<Type>(3 + isolated, {{x, {0, 1}}, {y, {1, 2}}}, {0, 2});
}

Type tr_string(const StrType& t, bool weighted) {
  std::size_t w = weighted ? t.weight : 0;
  switch (t.op) {
    case Op::Prim:
      if (w == 0) return Type::prim(t.sym, 2);
      return Type::times(make_graph<Type>(2 + w, {{Type::prim(t.sym, 2), {0, 1}}}, {0, 1}));
    case Op::Over: return Type::div(tr_string(*t.l, weighted), chain(dollar2(), tr_string(*t.r, weighted), w));
    case Op::Under: return Type::div(tr_string(*t.r, weighted), chain(tr_string(*t.l, weighted), dollar2(), w));
    case Op::Prod: return Type::times(chain(tr_string(*t.l, weighted), tr_string(*t.r, weighted), w));
    default: break;
  }
  throw Error(ErrorCode::MalformedType, "modality outside NLd");
}

Type tr_dia(const StrType& t) {
  switch (t.op) {
    case Op::Prim: return Type::prim(t.sym, 2);
    case Op::Over: return Type::div(tr_dia(*t.l), br(dollar2(), tr_dia(*t.r)));
    case Op::Under: return Type::div(tr_dia(*t.r), br(tr_dia(*t.l), dollar2()));
    case Op::Prod: return Type::times(br(tr_dia(*t.l), tr_dia(*t.r)));
    case Op::Dia: return Type::times(diam(tr_dia(*t.l)));
    case Op::Box: return Type::div(tr_dia(*t.l), diam(dollar2()));
  }
  return {};
}

TypedGraph star(const Type& x, const Type& y) { return make_graph<Type>(1, {{x, {0}}, {y, {0}}}, {0}); }

Type tr_perm(const StrType& t) {
  switch (t.op) {
    case Op::Prim: return Type::prim(t.sym, 1);
    case Op::Over: return Type::div(tr_perm(*t.l), star(Type::dollar(1), tr_perm(*t.r)));
    case Op::Under: return Type::div(tr_perm(*t.r), star(Type::dollar(1), tr_perm(*t.l)));
    case Op::Prod: return Type::times(star(tr_perm(*t.l), tr_perm(*t.r)));
    default: break;
  }
  throw Error(ErrorCode::MalformedType, "modality outside NLd");
}

void add_term(const Term& t, TypedGraph& g, NodeId from, NodeId to) {
  switch (t.kind) {
    case Term::Leaf: g.add_edge(tr_dia(*t.type), {from, to}); return;
    case Term::Pair: {
      NodeId mid = g.add_node();
      add_term(*t.a, g, from, mid);
      add_term(*t.b, g, mid, to);
      g.add_edge(br_label(), {from, to});
      return;
    }
    case Term::Diam:
      add_term(*t.a, g, from, to);
      g.add_edge(dia_label(), {from, to});
      return;
  }
}

}  // namespace

Type translate(const StrTypePtr& t, Calc c) {
  switch (c) {
    case Calc::L: return tr_string(*t, false);
    case Calc::LW: return tr_string(*t, true);
    case Calc::NLd: return tr_dia(*t);
    case Calc::LP: return tr_perm(*t);
  }
  return {};
}

Sequent translate(const StrSequent& s, Calc c) {
  validate(s, c);
  Sequent out;
  out.succedent = translate(s.succedent, c);
  TypedGraph& g = out.antecedent;
  switch (c) {
    case Calc::L:
    case Calc::LW: {
      std::size_t k = s.antecedent.size();
      g = TypedGraph(k + 1);
      for (std::size_t i = 0; i < k; ++i)
        g.add_edge(translate(s.antecedent[i], c), {static_cast<NodeId>(i), static_cast<NodeId>(i + 1)});
      g.set_ext({0, static_cast<NodeId>(k)});
      if (c == Calc::LW) g.add_nodes(s.weight);
      break;
    }
    case Calc::LP:
      g = TypedGraph(1);
      for (const auto& t : s.antecedent) g.add_edge(translate(t, c), {0});
      g.set_ext({0});
      break;
    case Calc::NLd:
      g = TypedGraph(2);
      add_term(*s.term, g, 0, 1);
      g.set_ext({0, 1});
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// families

namespace {

struct Entry {
  StrTypePtr type;
  std::size_t connectives;
  unsigned weight;  // total over the type
};

unsigned total_weight(const StrType& t) {
  return t.weight + (t.l ? total_weight(*t.l) : 0) + (t.r ? total_weight(*t.r) : 0);
}

// Every type with exactly `c` connectives and total weight exactly `w`.
class Catalog {
 public:
  Catalog(Calc calc, const FamilyBounds& b) : calc_(calc), b_(b) {}

  const std::vector<StrTypePtr>& get(std::size_t c, unsigned w) {
    auto key = std::make_pair(c, w);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<StrTypePtr> out;
    std::vector<unsigned> own{0};
    if (calc_ == Calc::LW)
      for (unsigned k = 1; k <= w; ++k) own.push_back(k);
    if (c == 0) {
      for (const auto& s : b_.syms)
        for (unsigned k : own)
          if (k == w) out.push_back(prim(s, k));
    } else {
      for (unsigned k : own)
        for (std::size_t cl = 0; cl < c; ++cl)
          for (unsigned wl = 0; wl + k <= w; ++wl) {
            const auto left = get(cl, wl);
            const auto right = get(c - 1 - cl, w - k - wl);
            for (const auto& x : left)
              for (const auto& y : right) {
                out.push_back(over(x, y, k));
                out.push_back(under(x, y, k));
                out.push_back(prod(x, y, k));
              }
          }
      if (calc_ == Calc::NLd)
        for (const auto& x : get(c - 1, w)) {
          out.push_back(dia(x));
          out.push_back(box(x));
        }
    }
    return cache_[key] = std::move(out);
  }

  // All types within the bounds, ordered by connectives then weight.
  std::vector<Entry> all(std::size_t max_c, unsigned max_w) {
    std::vector<Entry> out;
    for (std::size_t c = 0; c <= max_c; ++c)
      for (unsigned w = 0; w <= max_w; ++w)
        for (const auto& t : get(c, w)) out.push_back({t, c, w});
    return out;
  }

 private:
  Calc calc_;
  FamilyBounds b_;
  std::map<std::pair<std::size_t, unsigned>, std::vector<StrTypePtr>> cache_;
};

// Structures over leaves[lo, hi) using exactly `wraps` ◇-wrappings.
std::vector<TermPtr> structures(const std::vector<TermPtr>& leaves, std::size_t lo, std::size_t hi, std::size_t wraps) {
  std::vector<TermPtr> out;
  if (hi - lo == 1 && wraps == 0) out.push_back(leaves[lo]);
  for (std::size_t mid = lo + 1; mid < hi; ++mid)
    for (std::size_t w1 = 0; w1 <= wraps; ++w1)
      for (const auto& a : structures(leaves, lo, mid, w1))
        for (const auto& b : structures(leaves, mid, hi, wraps - w1)) out.push_back(pair(a, b));
  if (wraps > 0)
    for (const auto& a : structures(leaves, lo, hi, wraps - 1)) out.push_back(wrap(a));
  return out;
}

}  // namespace

void enumerate_string_sequents(Calc c, const FamilyBounds& b, const std::function<void(const StrSequent&)>& out) {
  unsigned max_w = c == Calc::LW ? b.max_weight : 0;
  Catalog cat(c, b);
  std::vector<Entry> all = cat.all(b.max_connectives, max_w);

  std::vector<std::size_t> picked;
  std::function<void(std::size_t, std::size_t, unsigned)> grow = [&](std::size_t first, std::size_t cl, unsigned wl) {
    if (!picked.empty()) {
      for (const auto& succ : all) {
        if (succ.connectives > cl || succ.weight > wl) continue;
        StrSequent s;
        s.succedent = succ.type;
        for (std::size_t i : picked) s.antecedent.push_back(all[i].type);
        if (c == Calc::NLd) {
          std::vector<TermPtr> leaves;
          for (const auto& t : s.antecedent) leaves.push_back(leaf(t));
          for (std::size_t w = 0; w <= b.max_wraps; ++w)
            for (const auto& term : structures(leaves, 0, leaves.size(), w)) {
              StrSequent n{{}, term, 0, s.succedent};
              out(n);
            }
        } else if (c == Calc::LW) {
          for (unsigned n = 0; n + succ.weight <= wl; ++n) {
            s.weight = n;
            out(s);
          }
        } else {
          out(s);
        }
      }
    }
    if (picked.size() == b.max_length) return;
    // LP antecedents are multisets: list members in catalog order only
    for (std::size_t i = c == Calc::LP ? first : 0; i < all.size(); ++i) {
      if (all[i].connectives > cl || all[i].weight > wl) continue;
      picked.push_back(i);
      grow(i, cl - all[i].connectives, wl - all[i].weight);
      picked.pop_back();
    }
  };
  grow(0, b.max_connectives, max_w);
}

AgreementReport embedding_agrees(Calc c, const FamilyBounds& b, const AgreementOptions& opt) {
  AgreementReport rep;
  SearchOptions so;
  so.budget.time = opt.budget;
  std::vector<StrSequent> batch;
  std::vector<bool> verdicts;

  auto flush = [&] {
    std::vector<Sequent> graphs;
    graphs.reserve(batch.size());
    for (const auto& s : batch) graphs.push_back(translate(s, c));
    auto results = prove_all(graphs, so, opt.jobs);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++rep.checked;
      if (verdicts[i]) ++rep.derivable;
      Verdict v = results[i].verdict;
      bool hl = v == Verdict::Derivable;
      if (v == Verdict::BudgetExceeded || hl != verdicts[i])
        rep.disagreements.push_back(to_string(batch[i], c) + ": " + (verdicts[i] ? "derivable" : "not derivable") +
                                    ", graph prover says " + hlc::to_string(v));
    }
    batch.clear();
    verdicts.clear();
  };

  enumerate_string_sequents(c, b, [&](const StrSequent& s) {
    bool d = prove_string(s, c, opt.allow_empty).derivable;
    if (c == Calc::LW && s.weight == 0) {
      unsigned total = total_weight(*s.succedent);
      for (const auto& t : s.antecedent) total += total_weight(*t);
      std::vector<unsigned> hits;
      for (unsigned n = 0; n <= total; ++n) {
        StrSequent m = s;
        m.weight = n;
        if (prove_string(m, c).derivable) hits.push_back(n);
      }
      if (hits.size() > 1) rep.double_weights.push_back(to_string(s, c));
    }
    batch.push_back(s);
    verdicts.push_back(d);
    if (batch.size() == 4096) flush();
  });
  flush();
  return rep;
}

}  // namespace hlc::str
