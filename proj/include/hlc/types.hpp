#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hlc/canonical.hpp"
#include "hlc/hypergraph.hpp"

namespace hlc {

enum class TypeKind : std::uint8_t { Prim, Div, Times, And, Or, Dollar };

struct TypeNode;

// Interned HL type. Structurally equal types (bodies and denominators compared up
// to isomorphism) share one node, so == is pointer equality.
class Type {
 public:
  Type() = default;

  static Type prim(const std::string& sym, std::size_t arity);
  static Type dollar(std::size_t arity);
  static Type div(const Type& num, Hypergraph<Type> den);
  static Type times(Hypergraph<Type> body);
  static Type conj(const Type& a, const Type& b);
  static Type disj(const Type& a, const Type& b);

  TypeKind kind() const;
  bool is_prim() const { return kind() == TypeKind::Prim; }
  bool is_div() const { return kind() == TypeKind::Div; }
  bool is_times() const { return kind() == TypeKind::Times; }
  bool is_dollar() const { return kind() == TypeKind::Dollar; }
  bool is_additive() const { return kind() == TypeKind::And || kind() == TypeKind::Or; }

  std::size_t arity() const;
  const std::string& sym() const;         // Prim
  const Type& num() const;                // Div
  const Hypergraph<Type>& graph() const;  // Div denominator or Times body
  EdgeId dollar_edge() const;             // Div
  const Type& left() const;               // And/Or
  const Type& right() const;              // And/Or

  std::uint32_t id() const;
  const std::string& key() const;  // structural, process independent
  std::size_t size() const;
  // unit-counter values #_{g_q}, keyed by the primitive's id; zero entries omitted
  const std::vector<std::pair<std::uint32_t, long>>& counters() const;
  // number of non-external nodes a derivable antecedent must carry beyond its labels
  long node_balance() const;
  bool contains_additive() const;

  explicit operator bool() const { return node_ != nullptr; }
  friend bool operator==(const Type& a, const Type& b) { return a.node_ == b.node_; }
  friend bool operator!=(const Type& a, const Type& b) { return a.node_ != b.node_; }

 private:
  explicit Type(std::shared_ptr<const TypeNode> n) : node_(std::move(n)) {}
  static Type intern(std::shared_ptr<TypeNode> n);
  std::shared_ptr<const TypeNode> node_;
};

inline std::size_t arity_of(const Type& t) { return t.arity(); }
std::uint64_t label_key(const Type& t);
const std::string& label_text(const Type& t);

struct TypeIdLess {
  bool operator()(const Type& a, const Type& b) const { return a.id() < b.id(); }
};

using TypedGraph = Hypergraph<Type>;

struct Sequent {
  TypedGraph antecedent;
  Type succedent;
};

// Throws MalformedSequent unless the arities match and no $ label occurs.
void validate(const Sequent& s);

std::size_t arity(const Type& t);
std::size_t size(const Type& t);
std::size_t size(const Sequent& s);
std::size_t size(const TypedGraph& g);  // sum of label sizes

// Reflexive-transitive closure over numerators, denominator labels, body labels
// and additive components; ordered by id.
std::vector<Type> subtypes(const Type& t);
std::vector<Type> subtypes(const Sequent& s);
std::vector<Type> primitives(const Sequent& s);

struct Counter {
  std::function<long(const Type& prim)> weight;

  static Counter unit(const Type& q);
  static Counter of_arity(std::size_t m);
  static Counter weights(std::map<std::string, long> w);
};

long counter_value(const Counter& c, const Type& t);
long counter_value(const Counter& c, const TypedGraph& g);

bool counter_feasible(const Sequent& s);
// Non-external node count balance; a second linear invariant of derivable sequents.
bool node_balance_feasible(const Sequent& s);
long node_balance(const TypedGraph& g);

bool is_skeleton(const Type& t);
bool has_skeleton_subtype(const Type& t);
bool is_lonely(const Type& p, const Type& t);
// Hypotheses of the wolf corollary for the succedent primitive p.
bool wolf_applies(const Sequent& s);

bool is_simple(const Type& t);
std::size_t isolated_node_measure(const Type& t);

Type simplify(const Type& t);
Type ersatz_conjunction(const std::vector<Type>& ts);

// Compact human-readable rendering.
std::string to_string(const Type& t);
std::string to_string(const TypedGraph& g);
std::string to_string(const Sequent& s);

}  // namespace hlc
