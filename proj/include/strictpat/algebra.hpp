#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strictpat/pattern_set.hpp"

namespace strictpat {

/// Builds a set from raw patterns, completing each with fully_apply.
PatternSet make_set(const Signature& sig, const FlatContext& psi, const Type& a,
                    const std::vector<Term>& patterns);

/// 𝟏 = λx1^u…λxn^u. E[Ψ^u, x1^u…xn^u], the pattern matching everything.
PatternSet top(const FlatContext& psi, const Type& a);
/// 𝟎 = ∅.
PatternSet bottom(const FlatContext& psi, const Type& a);

/// Literal union (no generalization).
PatternSet set_union(const PatternSet& s1, const PatternSet& s2);
/// Union of pairwise intersections of members.
PatternSet set_intersect(const Signature& sig, const PatternSet& s1, const PatternSet& s2);
/// Intersection of the member complements; Not(∅) = 𝟏.
PatternSet set_complement(const Signature& sig, const PatternSet& s);
/// s1 ∩ Not(s2).
PatternSet relative_complement(const Signature& sig, const PatternSet& s1, const PatternSet& s2);

bool member_set(const Signature& sig, const Term& m, const PatternSet& s);

/// Number of head occurrences (constants and variables); abstractions and
/// applications are free. This is the size bound used by enumerate_ground.
std::size_t term_size(const Term& m);

/// Every ground canonical term of type `a` under `psi` with term_size ≤
/// `max_size`, each exactly once, ordered by size and then by head order
/// (signature declaration order, then Ψ, then binders).
std::vector<Term> enumerate_ground(const Signature& sig, const FlatContext& psi, const Type& a,
                                   std::size_t max_size);

struct BoundedEquality {
  bool equal;
  std::size_t terms_checked;
  std::size_t bound;
  std::optional<Term> witness;  // a term in exactly one of the two sets
};

/// Agreement of member_set on every ground term up to `max_size`. This is a
/// bounded check, not a decision of ‖s1‖ = ‖s2‖.
BoundedEquality extensional_eq(const Signature& sig, const PatternSet& s1, const PatternSet& s2,
                               std::size_t max_size);

struct Clause {
  std::string name;
  std::string predicate;
  Term head;
};

/// Negation of a predicate definition: one clause per member of the
/// complement of the clause heads, named nb1, nb2, … with predicate `non_P`.
std::vector<Clause> clause_complement(const Signature& sig, const FlatContext& psi,
                                      const Type& a, const std::vector<Clause>& program);

}  // namespace strictpat
