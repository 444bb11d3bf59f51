#pragma once

#include <set>
#include <string>
#include <vector>

#include "strictpat/patterns.hpp"

namespace strictpat {

/// A finite set of simple linear patterns sharing Ψ and type. After
/// normalize() members are pairwise distinct up to α-equivalence and renaming
/// of existential variables, and no existential variable name is shared
/// between members.
struct PatternSet {
  FlatContext psi;
  Type type;
  std::vector<Term> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  SimpleLinearPattern at(std::size_t i) const { return {members[i], psi, type}; }
};

/// Key identifying a pattern up to α-equivalence and renaming of
/// existential variables.
std::string pattern_key(const Term& p);

/// Same pattern up to α-equivalence and renaming of existential variables.
bool same_pattern(const Term& a, const Term& b);

/// Renames existential variables of `p` away from `taken` (x, x1, x2, ...).
/// Names already disjoint from `taken` are kept.
SimpleLinearPattern rename_apart(const SimpleLinearPattern& p, const std::set<std::string>& taken);
Term rename_evars_apart(const Term& p, std::set<std::string>& taken);

/// Drops duplicates, orders members canonically and renumbers existential
/// variables per base name (H, H1, H2, ...) so that no name is shared.
PatternSet normalize(PatternSet s);

/// Members sorted by printed form, for stable output.
std::vector<std::string> printed_members(const PatternSet& s);

/// Generates fresh existential variable names H, H1, H2, ... avoiding a
/// growing set. One instance per algorithm invocation.
class NameSupply {
 public:
  explicit NameSupply(std::set<std::string> taken = {}) : taken_(std::move(taken)) {}
  std::string fresh(const std::string& base);
  void reserve(const std::string& name) { taken_.insert(name); }

 private:
  std::set<std::string> taken_;
};

/// Generalized variable `E Φ` at type `a` under `scope`, η-expanded with
/// u-labelled binders when `a` is an arrow type. The name is drawn from `names`.
Term flex_pattern(const FlatContext& scope, LabeledVarList phi, const Type& a, NameSupply& names,
                  const std::string& base);

/// The most general pattern at `a`: every variable in scope labelled u.
Term generic_pattern(const FlatContext& scope, const Type& a, NameSupply& names,
                     const std::string& base);

}  // namespace strictpat
