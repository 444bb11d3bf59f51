#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strictpat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Occurrence annotation on arrows, abstractions, applications and
/// existential-variable arguments: strict (1), vacuous (0) or undetermined (u).
enum class Label : std::uint8_t { One, Zero, U };

char label_char(Label k);
std::optional<Label> label_from_char(char c);
inline bool is_determined(Label k) { return k != Label::U; }

class Type {
 public:
  enum class Kind { Atom, Arrow };

  static Type atom(std::string name);
  static Type arrow(Type domain, Label label, Type codomain);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_arrow() const { return kind() == Kind::Arrow; }

  // Atom accessor.
  const std::string& name() const;
  // Arrow accessors.
  const Type& domain() const;
  Label label() const;
  const Type& codomain() const;

  /// Final codomain after stripping all arrows.
  const Type& target() const;
  /// Number of top-level arrows.
  std::size_t arity() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct LabeledVar {
  std::string name;
  Label label;
  friend bool operator==(const LabeledVar&, const LabeledVar&) = default;
};

/// An argument list of a generalized variable (the Φ of `E Φ`).
using LabeledVarList = std::vector<LabeledVar>;

/// Immutable term of the strict λ-calculus, shared structurally.
class Term {
 public:
  enum class Kind { Const, Var, Lam, App, EVar };

  static Term constant(std::string name);
  static Term var(std::string name);
  static Term lam(std::string var, Label label, Type domain, Term body);
  static Term app(Term fun, Term arg, Label label);
  /// `type` is the full type of the existential variable (E_A); it may be
  /// absent on freshly parsed terms and is filled in by pattern elaboration.
  static Term evar(std::string name, LabeledVarList args,
                   std::optional<Type> type = std::nullopt);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  /// Name of a constant, variable or existential variable; binder of a Lam.
  const std::string& name() const;
  /// Label of a Lam or App.
  Label label() const;
  const Type& domain() const;
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;
  const LabeledVarList& args() const;
  const std::optional<Type>& evar_type() const;

  /// Identity of the shared node; used only for cheap fast paths.
  const void* id() const { return node_.get(); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Head symbol and argument spine of `h M1^k1 ... Mn^kn`.
struct Spine {
  Term head;
  std::vector<Term> args;
  std::vector<Label> labels;
};
Spine spine_of(const Term& t);
Term apply_spine(Term head, const std::vector<Term>& args,
                 const std::vector<Label>& labels);

class Signature {
 public:
  struct Decl {
    std::string name;
    bool is_type;               // `a : type.`
    std::optional<Type> type;   // constants only
  };

  void declare_type(const std::string& name);
  void declare_const(const std::string& name, Type type);

  bool has_type(const std::string& name) const;
  bool has_const(const std::string& name) const;
  const Type& const_type(const std::string& name) const;
  const std::vector<Decl>& decls() const { return decls_; }
  /// Constants in declaration order.
  std::vector<std::string> constants() const;

 private:
  std::vector<Decl> decls_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// A declaration `x : A` in an ordered parameter context Ψ.
struct Binding {
  std::string name;
  Type type;
};
using FlatContext = std::vector<Binding>;

std::optional<Type> lookup(const FlatContext& psi, std::string_view name);

/// The three zones Γ (unrestricted), Ω (irrelevant) and Δ (strict).
struct ZonedContext {
  std::map<std::string, Type> gamma;
  std::map<std::string, Type> omega;
  std::map<std::string, Type> delta;

  std::optional<Type> lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return lookup(name).has_value(); }
  /// True when no name is declared in two zones.
  bool disjoint() const;
  /// Everything moved into Γ.
  static ZonedContext unrestricted(const FlatContext& psi);
};

class SubstitutionError : public Error {
 public:
  using Error::Error;
};

std::set<std::string> free_vars(const Term& t);
std::vector<std::string> evar_names(const Term& t);
bool contains_evar(const Term& t);

/// Equality up to consistent renaming of bound variables.
bool alpha_eq(const Term& a, const Term& b);

/// Capture-avoiding [n/x]m. Throws SubstitutionError (EVarArgHit) when an
/// existential variable in `m` lists the free variable `x` among its arguments.
Term subst(const Term& n, const std::string& x, const Term& m);

/// Capture-avoiding renaming of the free variable `from` to the variable `to`,
/// including occurrences inside existential-variable argument lists.
Term rename_free(const Term& m, const std::string& from, const std::string& to);

/// `base`, `base'`, `base''`, ... first one not in `avoid`.
std::string fresh_prime(const std::string& base, const std::set<std::string>& avoid);
/// `base`, `base1`, `base2`, ... first one not in `avoid`.
std::string fresh_numbered(const std::string& base, const std::set<std::string>& avoid);

/// Renames binders so that no binder shadows a name in `scope` or an
/// enclosing binder. Names are kept whenever no clash exists.
Term deshadow(const Term& t, std::set<std::string> scope);

/// Rebuilds every existential variable through `f`.
template <class F>
Term map_evars(const Term& t, F&& f);

}  // namespace strictpat

#include "strictpat/detail/map_evars.hpp"
