#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strictpat/pattern_set.hpp"

namespace strictpat {

/// 1∩1 = u∩1 = 1∩u = 1, 0∩0 = u∩0 = 0∩u = 0, u∩u = u; 1∩0 is undefined.
std::optional<Label> meet_label(Label a, Label b);

/// Pointwise meet of two argument lists over the same variables in the same
/// order; nullopt when they are incompatible.
std::optional<LabeledVarList> meet_phi(const LabeledVarList& a, const LabeledVarList& b);

/// One argument list per argument of a rigid term.
using Splitting = std::vector<LabeledVarList>;

/// Distributions of the obligations of `phi` over `n` arguments of a rigid
/// term. `param_head` names the head when it is a parameter; a strict head
/// pays for itself, so its label becomes u in every part. Strict variables
/// are assigned left to right, argument index ascending.
std::vector<Splitting> enumerate_splittings(const LabeledVarList& phi, std::size_t n,
                                            const std::optional<std::string>& param_head);

/// The set of most general common instances of two patterns with disjoint
/// existential variables, in the simple fragment. The empty set means the
/// patterns do not unify. Throws PatternError on violated preconditions.
PatternSet intersect(const Signature& sig, const SimpleLinearPattern& p1,
                     const SimpleLinearPattern& p2);

}  // namespace strictpat
