#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <vector>

#include "hlc/derivation.hpp"

namespace hlc {

enum class Verdict { Derivable, NotDerivable, BudgetExceeded };

const char* to_string(Verdict v);

struct Budget {
  std::chrono::milliseconds time{10000};
  std::size_t nodes = 1000000;
};

struct SearchOptions {
  Mode mode;
  Budget budget;
  bool eager = true;    // apply (×→) and (→÷) without branching
  bool prune = true;    // counters, node balance and the wolf test (pure HL only)
  bool memo = true;
  std::size_t contraction_bound = 2;  // edge duplications per branch in +c modes
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t memo_hits = 0;
  std::size_t pruned = 0;
};

struct ProofResult {
  Verdict verdict = Verdict::NotDerivable;
  DerivationPtr tree;
  SearchStats stats;
};

// Keeps its memo table across calls, so families of related sequents share work.
// Not thread-safe; use one Prover per thread.
class Prover {
 public:
  explicit Prover(SearchOptions opt = {});
  ~Prover();
  Prover(Prover&&) noexcept;
  Prover& operator=(Prover&&) noexcept;

  ProofResult prove(const Sequent& s);
  const SearchOptions& options() const;
  void clear();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

ProofResult prove(const Sequent& s, const SearchOptions& opt = {});

// Decides derivability for antecedents of simple types and a primitive succedent
// or a product of primitives, emitting a simple derivation.
ProofResult prove_simple(const Sequent& s, const Budget& budget = {});
bool is_simple_sequent(const Sequent& s);

// left derives H -> A, right derives G -> B and edge e0 of G carries A.
// Returns a Cut node concluding G[H/e0] -> B.
DerivationPtr cut(const DerivationPtr& left, const DerivationPtr& right, EdgeId e0);

bool equivalent(const Type& a, const Type& b, const SearchOptions& opt = {});

// Proves H -> A for many sequents; with jobs > 1 the list is split across threads,
// each with its own memo table. Results come back in input order.
std::vector<ProofResult> prove_all(const std::vector<Sequent>& seqs, const SearchOptions& opt, unsigned jobs = 1);

}  // namespace hlc
