#pragma once

#include <cstddef>
#include <optional>

#include "strictpat/syntax.hpp"
#include "strictpat/typing.hpp"

namespace strictpat {

/// Raised when weak head reduction exceeds its step budget. Well-typed terms
/// always normalize, so this indicates ill-typed input.
class NonTerminating : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultStepBudget = 100000;

/// One step of weak head reduction: β at the head, or congruence through the
/// function position. Returns nullopt when the head is rigid or a λ.
std::optional<Term> whr_step(const Term& m);

/// β-normal η-long form of `m` at type `a`, where the free variables of `m`
/// are typed by `psi`. Existential variables are treated as rigid heads.
Term canonicalize(const FlatContext& psi, const Signature& sig, const Term& m, const Type& a,
                  std::size_t step_budget = kDefaultStepBudget);

struct CanonicityClass {
  enum class Kind { Canonical, Atomic, Neither };
  Kind kind = Kind::Neither;
  std::optional<Type> type;

  static CanonicityClass neither() { return {}; }
  friend bool operator==(const CanonicityClass&, const CanonicityClass&) = default;
};

/// Decides the canonical (⇑) and atomic (↓) judgments including their zone
/// conditions. A generalized variable E Φ at base type counts as canonical.
/// Atomic terms are reported as Atomic even at base type, where they are
/// canonical as well; see is_canonical.
CanonicityClass classify(const ZonedContext& ctx, const Signature& sig, const Term& m);

/// True when `m` is canonical at `a`: Canonical(a), or Atomic(a) with `a` atomic.
bool is_canonical(const ZonedContext& ctx, const Signature& sig, const Term& m, const Type& a);

}  // namespace strictpat
