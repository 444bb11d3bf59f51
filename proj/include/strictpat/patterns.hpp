#pragma once

#include <string>

#include "strictpat/syntax.hpp"

namespace strictpat {

class PatternError : public Error {
 public:
  enum class Kind { NotSimple, NotLinear, NotFullyApplied, IllTyped, NotCanonical, Mismatch };
  PatternError(Kind kind, const std::string& message);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(PatternError::Kind k);

/// A simple, linear, fully applied pattern `term` of type `type` under the
/// parameter context `psi`. Every existential variable carries its full type.
struct SimpleLinearPattern {
  Term term;
  FlatContext psi;
  Type type;
};

// --- embedding of the simply-typed calculus -------------------------------

enum class Polarity { Pos, Neg };

/// (A→B)⁺ = A⁻ →1 B⁺, (A→B)⁻ = A⁺ →u B⁻, atoms fixed. Input labels are ignored.
Type embed_type(const Type& a, Polarity p);
bool is_positive(const Type& a);
bool is_negative(const Type& a);

/// Constants c:A become c:A⁺.
Signature embed_signature(const Signature& plain);
FlatContext embed_context(const FlatContext& plain);

/// M⁻ for a simply-typed canonical term `m` of type `a` under `psi` (both
/// plain). λ becomes λ^u with a positive domain, rigid applications become
/// strict, and generalized variables get all-u argument lists.
/// Throws PatternError(NotCanonical).
Term embed_term(const Signature& plain_sig, const FlatContext& psi, const Term& m, const Type& a);

// --- simple linear patterns -----------------------------------------------

/// Standard variable order at a point under binders `locals`: Ψ in
/// declaration order, then binders outermost first.
FlatContext standard_scope(const FlatContext& psi, const FlatContext& locals);

/// Full type A1 →k1 ... →kn `base` of a generalized variable with argument
/// list `phi`, argument types taken from `scope`.
Type evar_type_for(const FlatContext& scope, const LabeledVarList& phi, const Type& base);

/// Turns a linear simple pattern whose existential variables may omit
/// arguments or sit at arrow type into a fully applied one. Omitted
/// arguments are inserted with label 0; generalized variables at arrow type
/// are η-expanded with u-labelled binders. Changed variables get a primed
/// name. Throws PatternError.
SimpleLinearPattern fully_apply(const Signature& sig, const FlatContext& psi, const Term& p,
                                const Type& a);

/// Checks the grammar of simple patterns, linearity, the fully-applied
/// convention and canonical typing. Throws PatternError.
void validate(const Signature& sig, const SimpleLinearPattern& p);

/// The simple fragment: constants and parameters of positive type, patterns
/// of negative type. Complement and intersection are only defined there.
/// Throws PatternError(NotSimple).
void require_simple_fragment(const Signature& sig, const FlatContext& psi, const Type& a);

/// Ψ ⊢ m ∈ ‖p‖ for a ground canonical `m`. At a generalized variable, `m`
/// is checked against the zoning of Φ (u into Γ, 0 into Ω, 1 into Δ);
/// parameters absent from Φ are irrelevant.
bool match_ground(const Signature& sig, const Term& m, const SimpleLinearPattern& p);

}  // namespace strictpat
