#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hlc/types.hpp"

namespace hlc {

enum class Rule {
  Axiom,
  DivLeft,
  DivRight,
  TimesLeft,
  TimesRight,
  Cut,
  Weakening,
  Contraction,
  AndLeft,
  AndRight,
  OrLeft,
  OrRight,
};

const char* to_string(Rule r);
std::optional<Rule> rule_from_string(const std::string& s);

struct Mode {
  bool hmalc = false;
  bool weakening = false;
  bool contraction = false;

  bool pure() const { return !hmalc && !weakening && !contraction; }
  bool structural() const { return weakening || contraction; }

  // hl | hl+w | hl+c | hl+wc | hmalc | hmalc+w | hmalc+c | hmalc+wc
  static std::optional<Mode> parse(const std::string& s);
  std::string name() const;
};

struct Embedding {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;  // kNone marks an edge that is replaced rather than copied
};

// Rule-specific placement data. Meaning of the fields per rule:
//   DivLeft     edge = conclusion edge e0 carrying ÷(N/D); aux = index of the N-edge in
//               premise 0; maps[0] = D -> conclusion ($-edge -> e0, other edges kNone);
//               maps[1] = premise 0 -> conclusion (N-edge kNone); maps[1+i] = premise i.
//   TimesRight  maps[0] = M -> conclusion (all edges kNone); maps[1+i] = premise i.
//   TimesLeft   edge = conclusion edge carrying ×(F); maps[0] = conclusion -> premise
//               (edge kNone); maps[1] = F -> premise.
//   DivRight    maps[0] = D -> premise ($-edge kNone); maps[1] = conclusion -> premise.
//   Cut         edge = replaced edge of premise 1; maps[0] = premise 1 -> conclusion;
//               maps[1] = premise 0 -> conclusion.
//   Weakening   maps[0] = premise -> conclusion (injective).
//   Contraction edge = removed copy in the premise; aux = its twin;
//               maps[0] = premise -> conclusion (copy kNone).
//   And/Or      edge = conclusion edge (left rules); aux = component index 1 or 2
//               (AndLeft, OrRight); maps[i] = premise i -> conclusion.
struct Witness {
  EdgeId edge = kNone;
  std::size_t aux = 0;
  std::vector<Embedding> maps;
};

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  Sequent conclusion;
  Rule rule = Rule::Axiom;
  Witness witness;
  std::vector<DerivationPtr> premises;
};

DerivationPtr make_node(Sequent conclusion, Rule rule, Witness w, std::vector<DerivationPtr> premises);

std::size_t rule_count(const Derivation& d);  // non-axiom nodes
std::size_t node_count(const Derivation& d);

struct VerifyResult {
  bool ok = true;
  std::string path;     // e.g. "root.premises[1]"
  std::string message;
  explicit operator bool() const { return ok; }
};

struct VerifyOptions {
  Mode mode;
  bool allow_cut = true;
};

VerifyResult verify_tree(const Derivation& d, const VerifyOptions& opt = {});

// The same derivation re-rooted at an isomorphic conclusion: `sigma` maps the old
// conclusion antecedent onto the new one.
DerivationPtr transport(const DerivationPtr& d, const TypedGraph& new_antecedent, const Isomorphism& sigma);

// Text dump for diagnostics.
std::string to_string(const Derivation& d, int indent = 0);

}  // namespace hlc
