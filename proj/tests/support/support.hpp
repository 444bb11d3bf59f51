#pragma once

// Shared fixtures for the unit and acceptance suites: the pattern corpus,
// an untyped candidate-term generator, and small reference helpers.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strictpat/algebra.hpp"
#include "strictpat/syntax.hpp"

namespace strictpat::testing {

/// Patterns sharing signature, context and type.
struct Group {
  std::string name;
  Signature sig;
  FlatContext psi;
  Type type;
  std::vector<std::string> sources;
  std::vector<SimpleLinearPattern> patterns;
};

/// The pattern corpus: lam/app terms, first-order terms over a strict unary
/// and binary constant, and parameter-headed patterns.
const std::vector<Group>& corpus();
std::size_t corpus_size();

SimpleLinearPattern pattern(const Group& g, const std::string& text);
PatternSet singleton(const Group& g, const SimpleLinearPattern& p);

/// Untyped candidate terms built from leaves (constants and variable names),
/// labelled abstractions over `binders` x `domains`, and labelled
/// applications. Size is the number of nodes.
struct CandidateSpace {
  std::vector<std::string> constants;
  std::vector<std::string> variables;
  std::vector<std::string> binders;
  std::vector<Type> domains;
};

/// All candidates of exactly `size` nodes, memoized across calls.
class CandidateGenerator {
 public:
  explicit CandidateGenerator(CandidateSpace space) : space_(std::move(space)) {}
  const std::vector<Term>& of_size(std::size_t size);

 private:
  CandidateSpace space_;
  std::vector<std::vector<Term>> by_size_;
};

std::size_t node_count(const Term& m);

/// Leftmost-outermost β-step anywhere in the term (also under binders and in
/// arguments); nullopt for β-normal terms.
std::optional<Term> beta_step_anywhere(const Term& m);

/// Every assignment of each variable to Γ, Ω, Δ or nowhere.
std::vector<ZonedContext> all_zonings(const FlatContext& vars);

/// Depth-bounded ground instances of a set, as membership flags over `terms`.
std::vector<bool> memberships(const Signature& sig, const std::vector<Term>& terms,
                              const PatternSet& s);

}  // namespace strictpat::testing
