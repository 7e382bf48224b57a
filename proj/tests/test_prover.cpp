#include <functional>
#include <map>
#include <random>

#include "doctest.h"
#include "hlc/families.hpp"
#include "hlc/prover.hpp"
#include "hlc/samples.hpp"
#include "oracle_types.hpp"

using namespace hlc;
using namespace hlc::samples;

namespace {

SearchOptions in_mode(const char* m) {
  SearchOptions o;
  o.mode = *Mode::parse(m);
  return o;
}

// All sequents of the standard small family: labels and succedents are the types of
// size <= 2 over a#1, b#2; antecedents have up to two edges on up to three nodes.
const std::vector<Sequent>& small_family() {
  static const std::vector<Sequent> family = [] {
    TypeBounds tb;
    tb.primitives = {Type::prim("a", 1), Type::prim("b", 2)};
    tb.max_size = 2;
    tb.max_nodes = 2;
    tb.max_edges = 2;
    std::vector<Type> all;
    for (const auto& layer : enumerate_types(tb))
      for (const auto& t : layer) all.push_back(t);
    SequentBounds sb;
    sb.labels = all;
    sb.succedents = all;
    sb.max_size = 5;
    sb.max_edges = 2;
    sb.max_nodes = 3;
    std::vector<Sequent> out;
    enumerate_sequents(sb, [&](const Sequent& s) { out.push_back(s); });
    return out;
  }();
  return family;
}

// Same family but with size-3 labels and succedents over one node more per type.
const std::vector<Sequent>& wider_family() {
  static const std::vector<Sequent> family = [] {
    TypeBounds tb;
    tb.primitives = {Type::prim("a", 1), Type::prim("b", 2)};
    tb.max_size = 3;
    tb.max_nodes = 2;
    tb.max_edges = 2;
    std::vector<Type> all;
    for (const auto& layer : enumerate_types(tb))
      for (const auto& t : layer) all.push_back(t);
    SequentBounds sb;
    sb.labels = all;
    sb.succedents = all;
    sb.max_size = 5;
    sb.max_edges = 2;
    sb.max_nodes = 3;
    std::vector<Sequent> out;
    enumerate_sequents(sb, [&](const Sequent& s) { out.push_back(s); });
    return out;
  }();
  return family;
}

std::shared_ptr<Derivation> clone(const Derivation& d) { return std::make_shared<Derivation>(d); }

}  // namespace

TEST_CASE("mode names round-trip") {
  for (const char* m : {"hl", "hl+w", "hl+c", "hl+wc", "hmalc", "hmalc+w", "hmalc+c", "hmalc+wc"}) {
    auto mode = Mode::parse(m);
    REQUIRE(mode);
    CHECK(mode->name() == m);
  }
  CHECK_FALSE(Mode::parse("hl+x"));
  for (int r = 0; r <= static_cast<int>(Rule::OrRight); ++r)
    CHECK(rule_from_string(to_string(static_cast<Rule>(r))) == static_cast<Rule>(r));
}

TEST_CASE("the worked derivation is found with four rules") {
  auto r = prove(derivation_example());
  REQUIRE(r.verdict == Verdict::Derivable);
  CHECK(verify_tree(*r.tree));
  CHECK(rule_count(*r.tree) == 4);
  CHECK(r.tree->rule == Rule::TimesRight);
  REQUIRE(r.tree->premises.size() == 2);
  const auto& div = *r.tree->premises[0];
  CHECK(div.rule == Rule::DivRight);
  CHECK(div.conclusion.succedent == A1());
  CHECK(div.premises[0]->rule == Rule::DivLeft);
  CHECK(div.premises[0]->premises[0]->rule == Rule::DivLeft);
  CHECK(r.tree->premises[1]->rule == Rule::Axiom);
}

TEST_CASE("axioms and the edgeless product") {
  auto r = prove(Sequent{handle(p()), p()});
  REQUIRE(r.verdict == Verdict::Derivable);
  CHECK(r.tree->rule == Rule::Axiom);

  TypedGraph m(2);
  m.set_ext({0});
  Type skeleton = Type::times(m);
  auto e = prove(Sequent{m, skeleton});
  REQUIRE(e.verdict == Verdict::Derivable);
  CHECK(e.tree->rule == Rule::TimesRight);
  CHECK(e.tree->premises.empty());
  CHECK(verify_tree(*e.tree));

  TypedGraph fewer(1);
  fewer.set_ext({0});
  CHECK(prove(Sequent{fewer, skeleton}).verdict == Verdict::NotDerivable);
}

TEST_CASE("the Y-graph needs weakening") {
  CHECK(prove(y_graph()).verdict == Verdict::NotDerivable);
  auto w = prove(y_graph(), in_mode("hl+w"));
  REQUIRE(w.verdict == Verdict::Derivable);
  CHECK(verify_tree(*w.tree, {*Mode::parse("hl+w")}));
  auto plain = verify_tree(*w.tree, {*Mode::parse("hl")});
  CHECK_FALSE(plain);
  CHECK(plain.message.rfind("Weakening", 0) == 0);
}

TEST_CASE("contraction duplicates edges up to the bound") {
  TypedGraph h = handle(p());
  Type twice = Type::times(make_graph<Type>(2, {{p(), {0, 1}}, {p(), {0, 1}}}, {0, 1}));
  CHECK(prove(Sequent{h, twice}).verdict == Verdict::NotDerivable);
  auto c = prove(Sequent{h, twice}, in_mode("hl+c"));
  REQUIRE(c.verdict == Verdict::Derivable);
  CHECK(verify_tree(*c.tree, {*Mode::parse("hl+c")}));
  // no finite refutation is claimed once the bound was reached
  CHECK(prove(y_graph(), in_mode("hl+c")).verdict == Verdict::BudgetExceeded);
}

TEST_CASE("budgets") {
  SearchOptions o;
  o.budget.nodes = 2;
  CHECK(prove(derivation_example(), o).verdict == Verdict::BudgetExceeded);
  o.budget.nodes = 1000;
  o.budget.time = std::chrono::milliseconds(0);
  auto r = prove(derivation_example(), o);
  CHECK(r.verdict != Verdict::NotDerivable);
}

TEST_CASE("malformed sequents are rejected") {
  TypedGraph g = handle(p());
  CHECK_THROWS_AS(prove(Sequent{g, r()}), Error);
}

TEST_CASE("handle(T) -> T for every small type") {
  TypeBounds b;
  b.primitives = {p(), q(), r(), s()};
  b.max_size = 4;
  b.max_nodes = 2;
  Prover prover;
  std::size_t n = 0;
  for (const auto& layer : enumerate_types(b))
    for (const auto& t : layer) {
      auto res = prover.prove(Sequent{handle(t), t});
      REQUIRE_MESSAGE(res.verdict == Verdict::Derivable, to_string(t));
      REQUIRE(verify_tree(*res.tree));
      ++n;
    }
  CHECK(n > 5000);

  std::mt19937 rng(7);
  oracle::RandomTypeBounds rb{{p(), q(), r(), s()}, 6, 2, 3};
  for (int i = 0; i < 300; ++i) {
    Type t = oracle::random_type(rng, rb);
    auto res = prover.prove(Sequent{handle(t), t});
    REQUIRE_MESSAGE(res.verdict == Verdict::Derivable, to_string(t));
    REQUIRE(verify_tree(*res.tree));
  }
}

TEST_CASE("search options never change verdicts on the small family") {
  SearchOptions plain;
  plain.prune = false;
  plain.eager = false;
  plain.memo = false;
  SearchOptions unpruned;
  unpruned.prune = false;
  SearchOptions lazy;
  lazy.eager = false;
  Prover p0, p1(unpruned), p2(lazy), p3(plain);
  std::size_t derivable = 0;
  for (const auto& s : small_family()) {
    auto r0 = p0.prove(s);
    REQUIRE(r0.verdict != Verdict::BudgetExceeded);
    CHECK(p1.prove(s).verdict == r0.verdict);
    CHECK(p2.prove(s).verdict == r0.verdict);
    CHECK(p3.prove(s).verdict == r0.verdict);
    if (r0.verdict == Verdict::Derivable) {
      ++derivable;
      REQUIRE(verify_tree(*r0.tree));
      CHECK(rule_count(*r0.tree) <= size(s));
    }
  }
  CHECK(derivable > 50);
}

TEST_CASE("counters and the wolf test are necessary conditions") {
  SearchOptions unpruned;
  unpruned.prune = false;
  Prover prover(unpruned);
  std::size_t wolves = 0;
  for (const auto& s : wider_family()) {
    auto r = prover.prove(s);
    if (r.verdict == Verdict::Derivable) {
      CHECK(counter_feasible(s));
      CHECK(node_balance_feasible(s));
    }
    if (wolf_applies(s) && !(is_handle(s.antecedent) && s.antecedent.edge(0).label == s.succedent)) {
      ++wolves;
      CHECK(r.verdict == Verdict::NotDerivable);
    }
  }
  CHECK(wolves > 100);
}

TEST_CASE("memo hits are transported to the current antecedent") {
  Prover prover;
  auto a = derivation_example();
  auto first = prover.prove(a);
  // same sequent with nodes listed in another order
  TypedGraph h(4);
  h.add_edge(A3(), {2, 1, 0});
  h.add_edge(p(), {3, 1});
  h.add_edge(A2(), {3, 2});
  h.set_ext({3, 1});
  auto second = prover.prove(Sequent{h, A4()});
  REQUIRE(second.verdict == Verdict::Derivable);
  CHECK(second.stats.memo_hits >= 1);
  CHECK(verify_tree(*second.tree));
  CHECK(second.tree->conclusion.antecedent.edge(0).label == A3());
}

TEST_CASE("verification localizes corrupted witnesses") {
  auto r = prove(derivation_example());
  REQUIRE(r.tree);
  auto root = clone(*r.tree);
  auto div_right = clone(*root->premises[0]);
  auto div_left = clone(*div_right->premises[0]);
  div_left->witness.maps[0].nodes[0] = div_left->witness.maps[0].nodes[1];
  div_right->premises[0] = div_left;
  root->premises[0] = div_right;
  auto v = verify_tree(*root);
  CHECK_FALSE(v);
  CHECK(v.path == "root.premises[0].premises[0]");

  auto bad_axiom = clone(*r.tree);
  auto ax = clone(*bad_axiom->premises[1]);
  ax->conclusion.succedent = t();
  bad_axiom->premises[1] = ax;
  CHECK(verify_tree(*bad_axiom).path == "root.premises[1]");
}

TEST_CASE("cut") {
  auto tree = prove(derivation_example()).tree;
  REQUIRE(tree);
  // identity on the left: the replacement changes nothing
  const auto& g = tree->conclusion.antecedent;
  auto id = prove(Sequent{handle(p()), p()}).tree;
  auto c1 = cut(id, tree, 1);
  CHECK(c1->rule == Rule::Cut);
  CHECK(verify_tree(*c1));
  CHECK_FALSE(verify_tree(*c1, {{}, false}));
  CHECK(isomorphic(c1->conclusion.antecedent, g));
  // identity on the right: the conclusion is the left premise's
  auto ta = prove(Sequent{handle(A4()), A4()}).tree;
  auto c2 = cut(tree, ta, 0);
  CHECK(isomorphic(c2->conclusion.antecedent, g));
  CHECK(c2->conclusion.succedent == A4());
  CHECK(verify_tree(*c2));
  CHECK_THROWS_AS(cut(tree, ta, 1), Error);
  CHECK_THROWS_AS(cut(id, tree, 0), Error);
}

TEST_CASE("cut is admissible on random derivable pairs") {
  Prover prover;
  std::vector<DerivationPtr> trees;
  for (const auto& s : wider_family()) {
    auto r = prover.prove(s);
    if (r.verdict == Verdict::Derivable) trees.push_back(r.tree);
  }
  std::map<std::uint32_t, std::vector<DerivationPtr>> by_succedent;
  for (const auto& t : trees)
    if (t->rule != Rule::Axiom) by_succedent[t->conclusion.succedent.id()].push_back(t);
  std::vector<std::pair<DerivationPtr, std::pair<DerivationPtr, EdgeId>>> pairs;
  for (const auto& right : trees) {
    const auto& g = right->conclusion.antecedent;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto it = by_succedent.find(g.edge(e).label.id());
      if (it == by_succedent.end()) continue;
      for (const auto& left : it->second) pairs.push_back({left, {right, e}});
    }
  }
  REQUIRE(pairs.size() >= 100);
  std::mt19937 rng(11);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (std::size_t i = 0; i < 100; ++i) {
    auto c = cut(pairs[i].first, pairs[i].second.first, pairs[i].second.second);
    REQUIRE(verify_tree(*c));
    auto r = prover.prove(c->conclusion);
    CHECK_MESSAGE(r.verdict == Verdict::Derivable, to_string(c->conclusion));
  }
}

TEST_CASE("simple derivations agree with the general search") {
  auto ax = prove_simple(Sequent{handle(p()), p()});
  REQUIRE(ax.verdict == Verdict::Derivable);
  CHECK_THROWS_AS(prove_simple(derivation_example()), Error);

  Prover prover;
  std::size_t simple = 0, derivable = 0;
  for (const auto& s : wider_family()) {
    if (!is_simple_sequent(s)) continue;
    ++simple;
    auto r = prove_simple(s);
    CHECK(r.verdict == prover.prove(s).verdict);
    if (r.tree) {
      ++derivable;
      REQUIRE(verify_tree(*r.tree));
      // the simple shape: (→×) at most once, directly over axioms
      std::size_t products = 0;
      std::function<void(const Derivation&)> shape = [&](const Derivation& d) {
        if (d.rule == Rule::TimesRight) {
          ++products;
          for (const auto& pr : d.premises) CHECK(pr->rule == Rule::Axiom);
        }
        if (d.rule == Rule::DivLeft)
          for (std::size_t i = 1; i < d.premises.size(); ++i) CHECK(d.premises[i]->rule == Rule::Axiom);
        for (const auto& pr : d.premises) shape(*pr);
      };
      shape(*r.tree);
      CHECK(products <= 1);
    }
  }
  CHECK(simple > 1000);
  CHECK(derivable > 20);
}

TEST_CASE("equivalence") {
  CHECK(equivalent(A1(), A1()));
  CHECK(equivalent(A4(), A4()));
  CHECK_FALSE(equivalent(p(), t()));
  CHECK_THROWS_AS(equivalent(p(), r()), Error);

  std::mt19937 rng(3);
  oracle::RandomTypeBounds rb{{p(), q(), r(), s()}, 7, 2, 3};
  std::size_t changed = 0;
  for (int i = 0; i < 50; ++i) {
    Type t = oracle::random_type(rng, rb);
    Type u = simplify(t);
    if (u != t) ++changed;
    CHECK_MESSAGE(equivalent(t, u), to_string(t));
  }
  CHECK(changed > 5);
}

TEST_CASE("additive rules") {
  auto r = prove(hmalc_example(), in_mode("hmalc"));
  REQUIRE(r.verdict == Verdict::Derivable);
  CHECK(r.tree->rule == Rule::OrLeft);
  CHECK(verify_tree(*r.tree, {*Mode::parse("hmalc")}));
  CHECK_FALSE(verify_tree(*r.tree, {*Mode::parse("hl")}));
  CHECK(prove(hmalc_example()).verdict == Verdict::NotDerivable);

  Type a = Type::prim("a", 2), b = Type::prim("b", 2);
  CHECK(prove(Sequent{handle(Type::conj(a, b)), b}, in_mode("hmalc")).verdict == Verdict::Derivable);
  CHECK(prove(Sequent{handle(a), Type::disj(b, a)}, in_mode("hmalc")).verdict == Verdict::Derivable);
  CHECK(prove(Sequent{handle(Type::disj(a, b)), a}, in_mode("hmalc")).verdict == Verdict::NotDerivable);
}

TEST_CASE("ersatz and nested conjunction are equivalent with weakening and contraction") {
  std::vector<Type> parts{Type::prim("a", 2), A2(), t()};
  auto opt = in_mode("hmalc+wc");
  for (std::size_t k = 2; k <= 3; ++k) {
    std::vector<Type> ts(parts.begin(), parts.begin() + k);
    Type nested = ts[0];
    for (std::size_t i = 1; i < k; ++i) nested = Type::conj(nested, ts[i]);
    Type ersatz = ersatz_conjunction(ts);
    CHECK(equivalent(ersatz, nested, opt));
    auto r = prove(Sequent{handle(nested), ersatz}, opt);
    REQUIRE(r.tree);
    CHECK(verify_tree(*r.tree, {opt.mode}));
  }
  CHECK_FALSE(equivalent(ersatz_conjunction({parts[0], parts[2]}), Type::conj(parts[0], parts[2]), in_mode("hmalc")));
}

TEST_CASE("parallel proving matches sequential proving") {
  std::vector<Sequent> seqs(small_family().begin(), small_family().begin() + 2000);
  auto one = prove_all(seqs, {}, 1);
  auto two = prove_all(seqs, {}, 3);
  for (std::size_t i = 0; i < seqs.size(); ++i) CHECK(one[i].verdict == two[i].verdict);
}
