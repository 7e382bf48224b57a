#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlc/derivation.hpp"
#include "hlc/types.hpp"

namespace hlc {

using Graph = Hypergraph<Label>;

struct LexEntry {
  std::string sym;
  Type type;
};

struct Hlg {
  std::vector<Label> alphabet;
  Type start;
  std::vector<LexEntry> lexicon;

  const Label* find(const std::string& sym) const;
  std::vector<Type> types_of(const std::string& sym) const;
};

struct Production {
  std::string lhs;
  Graph rhs;
};

struct Hrg {
  std::vector<Label> nonterminals;
  std::vector<Label> terminals;
  std::string start;
  std::vector<Production> productions;

  const Label* nonterminal(const std::string& sym) const;
  const Label* terminal(const std::string& sym) const;
};

// Throw ArityMismatch / MalformedGraph on violated grammar invariants.
void validate(const Hlg& g);
void validate(const Hrg& g);

bool is_wgnf(const Hrg& g);

enum class Membership { Member, NotMember, BudgetExceeded };
const char* to_string(Membership m);

struct MemberOptions {
  std::chrono::milliseconds budget{60000};  // whole call
  unsigned jobs = 1;
};

struct MemberResult {
  Membership verdict = Membership::NotMember;
  std::vector<Type> relabeling;  // per edge of the input graph
  DerivationPtr tree;            // of f(h) -> start
  std::size_t assignments = 0;   // lexicon assignments that reached the prover
};

MemberResult hlg_member(const Hlg& g, const Graph& h, const MemberOptions& opt = {});

// f(h): every edge relabeled by its type.
TypedGraph relabel_graph(const Graph& h, const std::vector<Type>& f);

// Terminal graphs derivable with at most `max_edges` edges, each isomorphism class
// reported once.
void hrg_derive(const Hrg& g, std::size_t max_edges, const std::function<void(const Graph&)>& out);
std::vector<Graph> hrg_language(const Hrg& g, std::size_t max_edges);

// Exact membership by reducing h back to the start handle. Throws NotWGNF.
bool hrg_member(const Hrg& g, const Graph& h);

// Throws NotWGNF.
Hlg hrg_to_hlg(const Hrg& g);

Hlg relabel_grammar(const Hlg& g, const std::map<std::string, Label>& f);
// Every symbol of the alphabet must be mapped. Throws NotEdgeful, SkeletonTypePresent.
Hlg substitute_grammar(const Hlg& g, const std::map<std::string, Graph>& f);

// Needs at least two grammars in WGNF whose start nonterminals share an arity.
Hlg intersect_hrgs(const std::vector<Hrg>& gs);
std::string balloon_sym(std::size_t j);  // "__b1", "__b2", ...

struct IsolatedBound {
  std::size_t C = 0;
  std::size_t M = 0;
};
IsolatedBound isolated_bound_report(const Hlg& g);

// Number of isolated nodes of a graph.
std::size_t isize(const Graph& h);

namespace grammars {

Hlg hgr1();         // all nonempty 2-graphs without isolated nodes, type 0
Hlg hgr1_prime();   // the same language through U(U(T)) wrappers
Hlg hgr2();         // directed bipartite 2-graphs without isolated nodes
Hlg anbn_lambek();  // string graphs (a^n b^n)•, types translated from L
Hrg anbn_hrg();     // the same language, chain productions in WGNF
Hrg branching_hrg();
Hrg blocks_hrg();   // (a^n b^n)^k, k >= 1
Hrg nested_hrg();   // a^k (b^n a^n)^l b^k, k, l >= 1
Hlg e0_grammar();
Graph e0_member();
Graph triangle_tail();  // member of hgr1 with a worked relabeling

std::map<std::string, Hlg> builtin_hlgs();
std::map<std::string, Hrg> builtin_hrgs();

}  // namespace grammars

}  // namespace hlc
