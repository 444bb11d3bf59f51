#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strictpat/pattern_set.hpp"

namespace strictpat {

/// Not(1) = 0, Not(0) = 1; u has no complement.
std::optional<Label> not_label(Label k);

/// Not_i: position `i` (0-based) is negated, every other position becomes u.
/// Undefined when position `i` is labelled u.
std::optional<LabeledVarList> not_phi_i(const LabeledVarList& phi, std::size_t i);

struct ComplementRuleTag {
  enum class Kind { NotFlx, NotLam, NotApp1, NotApp2 };
  Kind kind;
  std::size_t index = 0;  // NotFlx / NotApp2 position, 0-based
  std::string head;       // NotApp1 head

  std::string to_string() const;
};

/// A complement member with the rules that produced it, outermost first.
struct TracedPattern {
  Term term;
  std::vector<ComplementRuleTag> trace;
};

/// All derivations of Ψ ⊢ Not(p) ⇒ N : A in rule order. Requires a valid
/// pattern in the simple fragment; throws PatternError otherwise.
std::vector<TracedPattern> complement_traced(const Signature& sig, const SimpleLinearPattern& p);

/// The complement of `p` as a normalized set.
PatternSet complement(const Signature& sig, const SimpleLinearPattern& p);

/// Equivalent set whose members have pairwise disjoint ground instances and
/// only determined labels in their argument lists.
PatternSet make_exclusive(const Signature& sig, const PatternSet& s);

}  // namespace strictpat
