#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hlc/types.hpp"

// String Lambek calculi L, LP, NL◇ and LW, their provers and their translations
// into graph sequents.
namespace hlc::str {

enum class Calc { L, LP, NLd, LW };

const char* to_string(Calc c);
std::optional<Calc> calc_from_string(const std::string& s);

enum class Op { Prim, Over, Under, Prod, Dia, Box };

struct StrType;
using StrTypePtr = std::shared_ptr<const StrType>;

// Over:  l / r   (result l, argument r on the right)
// Under: l \ r   (argument l on the left, result r)
// Prod:  l * r
// Dia, Box: unary, operand in l
struct StrType {
  Op op = Op::Prim;
  std::string sym;
  StrTypePtr l, r;
  unsigned weight = 0;  // LW only
};

StrTypePtr prim(const std::string& sym, unsigned weight = 0);
StrTypePtr over(StrTypePtr a, StrTypePtr b, unsigned weight = 0);   // a/b
StrTypePtr under(StrTypePtr b, StrTypePtr a, unsigned weight = 0);  // b\a
StrTypePtr prod(StrTypePtr a, StrTypePtr b, unsigned weight = 0);
StrTypePtr dia(StrTypePtr a);
StrTypePtr box(StrTypePtr a);
StrTypePtr with_weight(const StrTypePtr& t, unsigned weight);

bool operator==(const StrType& a, const StrType& b);
std::size_t connectives(const StrType& t);
bool has_weights(const StrType& t);
bool has_modalities(const StrType& t);
StrTypePtr unweighted(const StrTypePtr& t);
std::string to_string(const StrType& t);

// NL◇ antecedent structure.
struct Term;
using TermPtr = std::shared_ptr<const Term>;
struct Term {
  enum Kind { Leaf, Pair, Diam } kind = Leaf;
  StrTypePtr type;  // Leaf
  TermPtr a, b;     // Pair: a, b; Diam: a
};

TermPtr leaf(StrTypePtr t);
TermPtr pair(TermPtr a, TermPtr b);
TermPtr wrap(TermPtr a);
std::string to_string(const Term& t);

struct StrSequent {
  std::vector<StrTypePtr> antecedent;  // L, LP, LW
  TermPtr term;                        // NL◇
  unsigned weight = 0;                 // LW
  StrTypePtr succedent;
};

std::string to_string(const StrSequent& s, Calc c);

// Text syntax: atoms [a-z][a-z0-9]*, binary \ / * (mixing different operators needs
// parentheses; / and * group to the left, \ to the right), `dia`/`box` prefixes,
// weights `(T;n)`, NL◇ structures `(X,Y)` and `<X>`, LW prefix `<n>`.
StrTypePtr parse_type(const std::string& text);
StrSequent parse_sequent(const std::string& text, Calc c);

// Throws MalformedSequent if the sequent uses connectives or weights foreign to c.
void validate(const StrSequent& s, Calc c);

struct StrDerivation;
using StrDerivationPtr = std::shared_ptr<const StrDerivation>;
struct StrDerivation {
  std::string rule;
  std::string conclusion;
  std::vector<StrDerivationPtr> premises;
};

struct StrResult {
  bool derivable = false;
  StrDerivationPtr tree;
};

// allow_empty admits empty antecedents in premises (LP only). HL over tr_P types
// matches this variant, since a one-node edgeless graph is a valid sub-antecedent.
StrResult prove_string(const StrSequent& s, Calc c, bool allow_empty = false);

// Translations into HL.
inline constexpr const char* kBracketSym = "p_br";
inline constexpr const char* kDiamondSym = "p_dia";
Type translate(const StrTypePtr& t, Calc c);
Sequent translate(const StrSequent& s, Calc c);

// Exhaustive families over the primitives `syms`: every sequent whose types carry at
// most `max_connectives` connectives in total and whose antecedent has at most
// `max_length` members (for NL◇: leaves; every bracketing and ◇-wrapping up to
// `max_wraps` is listed). For LW the weights of all types plus the sequent weight sum
// to at most `max_weight`.
struct FamilyBounds {
  std::vector<std::string> syms{"p", "q"};
  std::size_t max_connectives = 3;
  std::size_t max_length = 3;
  std::size_t max_wraps = 1;
  unsigned max_weight = 1;
};

void enumerate_string_sequents(Calc c, const FamilyBounds& b, const std::function<void(const StrSequent&)>& out);

struct AgreementReport {
  std::size_t checked = 0;
  std::size_t derivable = 0;
  std::vector<std::string> disagreements;
  std::vector<std::string> double_weights;  // LW: Γ -> C derivable at two weights
};

struct AgreementOptions {
  std::chrono::milliseconds budget{10000};  // per HL proof
  unsigned jobs = 1;
  bool allow_empty = false;  // LP oracle variant, see prove_string
};

AgreementReport embedding_agrees(Calc c, const FamilyBounds& b, const AgreementOptions& opt = {});

}  // namespace hlc::str
