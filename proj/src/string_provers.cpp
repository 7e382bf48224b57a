#include <algorithm>
#include <map>

#include "hlc/string_calculi.hpp"

// Exhaustive backward search for the string calculi. Each search memoizes on the
// printed sequent; every rule strictly lowers the number of connectives (or, for the
// weight rules, the total weight carried by types), so the search terminates.
namespace hlc::str {

namespace {

using Seq = std::vector<StrTypePtr>;

StrDerivationPtr node(std::string rule, std::string conclusion, std::vector<StrDerivationPtr> premises = {}) {
  auto d = std::make_shared<StrDerivation>();
  d->rule = std::move(rule);
  d->conclusion = std::move(conclusion);
  d->premises = std::move(premises);
  return d;
}

bool same(const StrTypePtr& a, const StrTypePtr& b) { return *a == *b; }

std::string show(const Seq& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ", ";
    s += to_string(*g[i]);
  }
  return s;
}

Seq slice(const Seq& g, std::size_t from, std::size_t to) { return Seq(g.begin() + from, g.begin() + to); }

Seq concat(std::initializer_list<Seq> parts) {
  Seq out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// ---------------------------------------------------------------------------
// L

class LSearch {
 public:
  StrDerivationPtr prove(const Seq& g, const StrTypePtr& c) {
    std::string key = show(g) + " -> " + to_string(*c);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto r = search(g, c, key);
    memo_[key] = r;
    return r;
  }

 private:
  StrDerivationPtr search(const Seq& g, const StrTypePtr& c, const std::string& key) {
    if (g.size() == 1 && g[0]->op == Op::Prim && same(g[0], c)) return node("ax", key);
    if (c->op == Op::Over)
      if (auto d = prove(concat({g, {c->r}}), c->l)) return node("->/", key, {d});
    if (c->op == Op::Under)
      if (auto d = prove(concat({{c->l}, g}), c->r)) return node("->\\", key, {d});
    if (c->op == Op::Prod)
      for (std::size_t k = 1; k < g.size(); ++k)
        if (auto a = prove(slice(g, 0, k), c->l))
          if (auto b = prove(slice(g, k, g.size()), c->r)) return node("->*", key, {a, b});
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto& t = g[j];
      if (t->op == Op::Prod) {
        if (auto d = prove(concat({slice(g, 0, j), {t->l, t->r}, slice(g, j + 1, g.size())}), c))
          return node("*->", key, {d});
      } else if (t->op == Op::Under) {
        for (std::size_t i = 0; i < j; ++i)
          if (auto a = prove(slice(g, i, j), t->l))
            if (auto b = prove(concat({slice(g, 0, i), {t->r}, slice(g, j + 1, g.size())}), c))
              return node("\\->", key, {a, b});
      } else if (t->op == Op::Over) {
        for (std::size_t l = j + 2; l <= g.size(); ++l)
          if (auto a = prove(slice(g, j + 1, l), t->r))
            if (auto b = prove(concat({slice(g, 0, j), {t->l}, slice(g, l, g.size())}), c))
              return node("/->", key, {a, b});
      }
    }
    return nullptr;
  }

  std::map<std::string, StrDerivationPtr> memo_;
};

// ---------------------------------------------------------------------------
// LP: antecedents are multisets, kept sorted by printed form

class LPSearch {
 public:
  explicit LPSearch(bool allow_empty) : empty_(allow_empty) {}

  StrDerivationPtr prove(Seq g, const StrTypePtr& c) {
    std::sort(g.begin(), g.end(), [](const StrTypePtr& a, const StrTypePtr& b) { return to_string(*a) < to_string(*b); });
    std::string key = show(g) + " -> " + to_string(*c);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto r = search(g, c, key);
    memo_[key] = r;
    return r;
  }

 private:
  // Calls f(chosen, rest) once per distinct sub-multiset of g; both parts nonempty
  // unless empty antecedents are admitted.
  template <class F>
  StrDerivationPtr split(const Seq& g, F&& f) {
    std::size_t n = g.size();
    std::size_t full = (std::size_t{1} << n) - 1;
    std::map<std::string, bool> seen;
    for (std::size_t mask = empty_ ? 0 : 1; mask <= (empty_ ? full : full - 1); ++mask) {
      Seq in, out;
      for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? in : out).push_back(g[i]);
      if (!seen.emplace(show(in), true).second) continue;
      if (auto d = f(in, out)) return d;
    }
    return nullptr;
  }

  StrDerivationPtr search(const Seq& g, const StrTypePtr& c, const std::string& key) {
    if (g.size() == 1 && g[0]->op == Op::Prim && same(g[0], c)) return node("ax", key);
    if (c->op == Op::Over)
      if (auto d = prove(concat({g, {c->r}}), c->l)) return node("->/", key, {d});
    if (c->op == Op::Under)
      if (auto d = prove(concat({g, {c->l}}), c->r)) return node("->\\", key, {d});
    if (c->op == Op::Prod)
      if (auto d = split(g, [&](const Seq& in, const Seq& out) -> StrDerivationPtr {
            if (auto a = prove(in, c->l))
              if (auto b = prove(out, c->r)) return node("->*", key, {a, b});
            return nullptr;
          }))
        return d;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j > 0 && same(g[j], g[j - 1])) continue;
      const auto& t = g[j];
      Seq rest = concat({slice(g, 0, j), slice(g, j + 1, g.size())});
      if (t->op == Op::Prod) {
        if (auto d = prove(concat({rest, {t->l, t->r}}), c)) return node("*->", key, {d});
        continue;
      }
      if (t->op != Op::Over && t->op != Op::Under) continue;
      const StrTypePtr& arg = t->op == Op::Over ? t->r : t->l;
      const StrTypePtr& res = t->op == Op::Over ? t->l : t->r;
      // Π ranges over sub-multisets of rest (possibly all of it)
      std::size_t n = rest.size();
      std::map<std::string, bool> seen;
      for (std::size_t mask = empty_ ? 0 : 1; mask < (std::size_t{1} << n); ++mask) {
        Seq pi, others;
        for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? pi : others).push_back(rest[i]);
        if (!seen.emplace(show(pi), true).second) continue;
        if (auto a = prove(pi, arg))
          if (auto b = prove(concat({others, {res}}), c)) return node(t->op == Op::Over ? "/->" : "\\->", key, {a, b});
      }
    }
    return nullptr;
  }

  bool empty_;
  std::map<std::string, StrDerivationPtr> memo_;
};

// ---------------------------------------------------------------------------
// NL◇: positions in a structure are paths of child indices

using Path = std::vector<int>;

TermPtr at(const TermPtr& t, const Path& p, std::size_t i = 0) {
  if (i == p.size()) return t;
  return at(p[i] == 0 ? t->a : t->b, p, i + 1);
}

TermPtr replace_at(const TermPtr& t, const Path& p, const TermPtr& by, std::size_t i = 0) {
  if (i == p.size()) return by;
  if (t->kind == Term::Diam) return wrap(replace_at(t->a, p, by, i + 1));
  if (p[i] == 0) return pair(replace_at(t->a, p, by, i + 1), t->b);
  return pair(t->a, replace_at(t->b, p, by, i + 1));
}

void positions(const TermPtr& t, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  if (t->kind == Term::Leaf) return;
  cur.push_back(0);
  positions(t->a, cur, out);
  cur.pop_back();
  if (t->kind == Term::Pair) {
    cur.push_back(1);
    positions(t->b, cur, out);
    cur.pop_back();
  }
}

class NLdSearch {
 public:
  StrDerivationPtr prove(const TermPtr& g, const StrTypePtr& c) {
    std::string key = to_string(*g) + " -> " + to_string(*c);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto r = search(g, c, key);
    memo_[key] = r;
    return r;
  }

 private:
  StrDerivationPtr search(const TermPtr& g, const StrTypePtr& c, const std::string& key) {
    if (g->kind == Term::Leaf && g->type->op == Op::Prim && same(g->type, c)) return node("ax", key);
    switch (c->op) {
      case Op::Over:
        if (auto d = prove(pair(g, leaf(c->r)), c->l)) return node("->/", key, {d});
        break;
      case Op::Under:
        if (auto d = prove(pair(leaf(c->l), g), c->r)) return node("->\\", key, {d});
        break;
      case Op::Prod:
        if (g->kind == Term::Pair)
          if (auto a = prove(g->a, c->l))
            if (auto b = prove(g->b, c->r)) return node("->*", key, {a, b});
        break;
      case Op::Dia:
        if (g->kind == Term::Diam)
          if (auto a = prove(g->a, c->l)) return node("->dia", key, {a});
        break;
      case Op::Box:
        if (auto a = prove(wrap(g), c->l)) return node("->box", key, {a});
        break;
      case Op::Prim: break;
    }
    std::vector<Path> ps;
    Path cur;
    positions(g, cur, ps);
    for (const auto& p : ps) {
      TermPtr s = at(g, p);
      if (s->kind == Term::Leaf) {
        const auto& t = s->type;
        if (t->op == Op::Prod) {
          if (auto d = prove(replace_at(g, p, pair(leaf(t->l), leaf(t->r))), c)) return node("*->", key, {d});
        } else if (t->op == Op::Dia) {
          if (auto d = prove(replace_at(g, p, wrap(leaf(t->l))), c)) return node("dia->", key, {d});
        }
      } else if (s->kind == Term::Diam) {
        if (s->a->kind == Term::Leaf && s->a->type->op == Op::Box)
          if (auto d = prove(replace_at(g, p, leaf(s->a->type->l)), c)) return node("box->", key, {d});
      } else {
        if (s->b->kind == Term::Leaf && s->b->type->op == Op::Under) {
          const auto& t = s->b->type;
          if (auto a = prove(s->a, t->l))
            if (auto b = prove(replace_at(g, p, leaf(t->r)), c)) return node("\\->", key, {a, b});
        }
        if (s->a->kind == Term::Leaf && s->a->type->op == Op::Over) {
          const auto& t = s->a->type;
          if (auto a = prove(s->b, t->r))
            if (auto b = prove(replace_at(g, p, leaf(t->l)), c)) return node("/->", key, {a, b});
        }
      }
    }
    return nullptr;
  }

  std::map<std::string, StrDerivationPtr> memo_;
};

// ---------------------------------------------------------------------------
// LW: weights are threaded through every rule exactly

class LWSearch {
 public:
  StrDerivationPtr prove(long n, const Seq& g, const StrTypePtr& c) {
    if (n < 0) return nullptr;
    std::string key = "<" + std::to_string(n) + "> " + show(g) + " -> " + to_string(*c);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto r = search(n, g, c, key);
    memo_[key] = r;
    return r;
  }

 private:
  StrDerivationPtr search(long n, const Seq& g, const StrTypePtr& c, const std::string& key) {
    if (n == 0 && g.size() == 1 && g[0]->op == Op::Prim && c->op == Op::Prim && g[0]->weight == 0 &&
        c->weight == 0 && g[0]->sym == c->sym)
      return node("ax", key);
    long k = c->weight;
    switch (c->op) {
      case Op::Prim:
        if (k > 0)
          if (auto d = prove(n - k, g, with_weight(c, 0))) return node("->w", key, {d});
        break;
      case Op::Over:
        if (auto d = prove(n + k, concat({g, {c->r}}), c->l)) return node("->/", key, {d});
        break;
      case Op::Under:
        if (auto d = prove(n + k, concat({{c->l}, g}), c->r)) return node("->\\", key, {d});
        break;
      case Op::Prod:
        for (std::size_t s = 1; s < g.size(); ++s)
          for (long n1 = 0; n1 <= n - k; ++n1)
            if (auto a = prove(n1, slice(g, 0, s), c->l))
              if (auto b = prove(n - k - n1, slice(g, s, g.size()), c->r)) return node("->*", key, {a, b});
        break;
      default: break;
    }
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto& t = g[j];
      long m = t->weight;
      if (t->op == Op::Prim) {
        if (m > 0)
          if (auto d = prove(n + m, concat({slice(g, 0, j), {with_weight(t, 0)}, slice(g, j + 1, g.size())}), c))
            return node("w->", key, {d});
      } else if (t->op == Op::Prod) {
        if (auto d = prove(n + m, concat({slice(g, 0, j), {t->l, t->r}, slice(g, j + 1, g.size())}), c))
          return node("*->", key, {d});
      } else if (t->op == Op::Under) {
        for (std::size_t i = 0; i < j; ++i)
          for (long n1 = 0; n1 <= n - m; ++n1)
            if (auto a = prove(n1, slice(g, i, j), t->l))
              if (auto b = prove(n - m - n1, concat({slice(g, 0, i), {t->r}, slice(g, j + 1, g.size())}), c))
                return node("\\->", key, {a, b});
      } else if (t->op == Op::Over) {
        for (std::size_t l = j + 2; l <= g.size(); ++l)
          for (long n1 = 0; n1 <= n - m; ++n1)
            if (auto a = prove(n1, slice(g, j + 1, l), t->r))
              if (auto b = prove(n - m - n1, concat({slice(g, 0, j), {t->l}, slice(g, l, g.size())}), c))
                return node("/->", key, {a, b});
      }
    }
    return nullptr;
  }

  std::map<std::string, StrDerivationPtr> memo_;
};

}  // namespace

StrResult prove_string(const StrSequent& s, Calc c, bool allow_empty) {
  validate(s, c);
  StrResult r;
  switch (c) {
    case Calc::L: r.tree = LSearch().prove(s.antecedent, s.succedent); break;
    case Calc::LP: r.tree = LPSearch(allow_empty).prove(s.antecedent, s.succedent); break;
    case Calc::NLd: r.tree = NLdSearch().prove(s.term, s.succedent); break;
    case Calc::LW: r.tree = LWSearch().prove(static_cast<long>(s.weight), s.antecedent, s.succedent); break;
  }
  r.derivable = r.tree != nullptr;
  return r;
}

}  // namespace hlc::str
