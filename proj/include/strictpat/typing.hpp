#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strictpat/syntax.hpp"

namespace strictpat {

enum class TypingErrorKind {
  TypeMismatch,
  UnknownIdent,
  StrictVarUnused,
  IrrelevantVarUsed,
  LabelMismatch,
  ZoneViolation,
};

const char* to_string(TypingErrorKind k);

class TypingError : public Error {
 public:
  TypingError(TypingErrorKind kind, std::string variable, std::string message);
  TypingErrorKind kind() const { return kind_; }
  /// Offending variable or constant, empty when the error is not about one.
  const std::string& variable() const { return variable_; }

 private:
  TypingErrorKind kind_;
  std::string variable_;
};

/// Result of the occurrence analysis of a well-typed term.
///
/// `strict_set` holds variables with a guaranteed strict occurrence; `used_set`
/// holds variables occurring anywhere outside the argument of a vacuous
/// application. Both are subsets of the free variables.
struct OccurrenceReport {
  std::set<std::string> strict_set;
  std::set<std::string> used_set;
  Type inferred_type;
};

/// Occurrence analysis of `m` where every free variable is looked up in
/// `scope` (innermost binding last). Validates labels against types and the
/// local conditions of λ¹ and λ⁰; zone conditions are left to the caller.
/// Existential variables are accepted when annotated and count as strict
/// occurrences of their ¹-arguments and as uses of their ¹/u-arguments.
OccurrenceReport analyze(const FlatContext& scope, const Signature& sig, const Term& m);

/// Decides Γ;Ω;Δ ⊢ m : a by occurrence analysis. Throws TypingError.
OccurrenceReport check(const ZonedContext& ctx, const Signature& sig, const Term& m,
                       const Type& a);

/// Infers the type of `m` under the zoning, or throws TypingError.
OccurrenceReport infer(const ZonedContext& ctx, const Signature& sig, const Term& m);

/// Non-throwing convenience wrapper around check().
bool typechecks(const ZonedContext& ctx, const Signature& sig, const Term& m, const Type& a);

/// Reference decision procedure: searches derivations rule by rule, trying
/// every split of Δ at strict applications. Exponential; intended for tests.
bool check_declarative(const ZonedContext& ctx, const Signature& sig, const Term& m,
                       const Type& a);

/// The type found by the reference procedure, if any derivation exists.
std::optional<Type> infer_declarative(const ZonedContext& ctx, const Signature& sig,
                                      const Term& m);

/// Outcome of every Δ split of the outermost strict application of `m`
/// (m must be `M @1 N`). Splits are enumerated by bitmask over Δ in name order,
/// bit set meaning the variable goes to the function side.
std::vector<bool> strict_split_outcomes(const ZonedContext& ctx, const Signature& sig,
                                        const Term& m, const Type& a);

/// n-ary strict application `h @1 M1 ... @1 Mn` at base type: returns the
/// base type. Strict variables must each be paid for by some argument, except a
/// strict head, whose occurrence already counts.
Type check_atomic_nary(const ZonedContext& ctx, const Signature& sig, const Term& m);

}  // namespace strictpat
