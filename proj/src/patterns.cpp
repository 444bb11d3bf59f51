#include "strictpat/patterns.hpp"

#include <algorithm>

#include "strictpat/canonicalize.hpp"
#include "strictpat/text.hpp"
#include "strictpat/typing.hpp"

namespace strictpat {

const char* to_string(PatternError::Kind k) {
  switch (k) {
    case PatternError::Kind::NotSimple: return "NotSimple";
    case PatternError::Kind::NotLinear: return "NotLinear";
    case PatternError::Kind::NotFullyApplied: return "NotFullyApplied";
    case PatternError::Kind::IllTyped: return "IllTyped";
    case PatternError::Kind::NotCanonical: return "NotCanonical";
    case PatternError::Kind::Mismatch: return "Mismatch";
  }
  return "?";
}

PatternError::PatternError(Kind kind, const std::string& message)
    : Error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {

using PK = PatternError::Kind;

[[noreturn]] void fail(PK k, const std::string& msg) { throw PatternError(k, msg); }

std::set<std::string> names_of(const FlatContext& scope) {
  std::set<std::string> s;
  for (const auto& b : scope) s.insert(b.name);
  return s;
}

Type head_type_or_fail(const Signature& sig, const FlatContext& scope, const Term& h) {
  if (h.is(Term::Kind::Const)) {
    if (!sig.has_const(h.name())) fail(PK::IllTyped, "undeclared constant '" + h.name() + "'");
    return sig.const_type(h.name());
  }
  if (h.is(Term::Kind::Var)) {
    auto t = lookup(scope, h.name());
    if (!t) fail(PK::IllTyped, "undeclared variable '" + h.name() + "'");
    return *t;
  }
  if (h.is(Term::Kind::EVar))
    fail(PK::NotSimple, "existential variable '" + h.name() + "' applied to terms");
  fail(PK::NotCanonical, "β-redex in pattern");
}

}  // namespace

// --- embedding ------------------------------------------------------------

Type embed_type(const Type& a, Polarity p) {
  if (a.is_atom()) return a;
  if (p == Polarity::Pos)
    return Type::arrow(embed_type(a.domain(), Polarity::Neg), Label::One,
                       embed_type(a.codomain(), Polarity::Pos));
  return Type::arrow(embed_type(a.domain(), Polarity::Pos), Label::U,
                     embed_type(a.codomain(), Polarity::Neg));
}

bool is_positive(const Type& a) {
  return a.is_atom() ||
         (a.label() == Label::One && is_negative(a.domain()) && is_positive(a.codomain()));
}

bool is_negative(const Type& a) {
  return a.is_atom() ||
         (a.label() == Label::U && is_positive(a.domain()) && is_negative(a.codomain()));
}

Signature embed_signature(const Signature& plain) {
  Signature out;
  for (const auto& d : plain.decls()) {
    if (d.is_type)
      out.declare_type(d.name);
    else
      out.declare_const(d.name, embed_type(*d.type, Polarity::Pos));
  }
  return out;
}

FlatContext embed_context(const FlatContext& plain) {
  FlatContext out;
  for (const auto& b : plain) out.push_back({b.name, embed_type(b.type, Polarity::Pos)});
  return out;
}

namespace {

// Simple types are compared without their (meaningless) labels.
bool same_shape(const Type& a, const Type& b) {
  if (a.is_atom() || b.is_atom()) return a.is_atom() && b.is_atom() && a.name() == b.name();
  return same_shape(a.domain(), b.domain()) && same_shape(a.codomain(), b.codomain());
}

Term embed_rec(const Signature& sig, FlatContext& scope, const Term& m, const Type& a) {
  if (a.is_arrow()) {
    if (!m.is(Term::Kind::Lam) || !same_shape(m.domain(), a.domain()))
      fail(PK::NotCanonical, "expected an abstraction at type " +
                                 print_type(a, Dialect::Plain) + ", found " +
                                 print_term(m, Dialect::Plain));
    scope.push_back({m.name(), m.domain()});
    Term body = embed_rec(sig, scope, m.body(), a.codomain());
    scope.pop_back();
    return Term::lam(m.name(), Label::U, embed_type(m.domain(), Polarity::Pos), body);
  }
  if (m.is(Term::Kind::EVar)) {
    LabeledVarList phi;
    for (const auto& x : m.args()) {
      auto t = lookup(scope, x.name);
      if (!t) fail(PK::IllTyped, "undeclared variable '" + x.name + "'");
      phi.push_back({x.name, Label::U});
    }
    FlatContext pos_scope = embed_context(scope);
    return Term::evar(m.name(), phi, evar_type_for(pos_scope, phi, a));
  }
  Spine sp = spine_of(m);
  Type t = head_type_or_fail(sig, scope, sp.head);
  std::vector<Term> args;
  for (const auto& arg : sp.args) {
    if (!t.is_arrow()) fail(PK::IllTyped, "too many arguments in " + print_term(m, Dialect::Plain));
    args.push_back(embed_rec(sig, scope, arg, t.domain()));
    Type next = t.codomain();
    t = next;
  }
  if (!same_shape(t, a))
    fail(PK::NotCanonical, "atomic term " + print_term(m, Dialect::Plain) + " is not at type " +
                               print_type(a, Dialect::Plain));
  return apply_spine(sp.head, args, std::vector<Label>(args.size(), Label::One));
}

}  // namespace

Term embed_term(const Signature& plain_sig, const FlatContext& psi, const Term& m,
                const Type& a) {
  FlatContext scope = psi;
  return embed_rec(plain_sig, scope, m, a);
}

// --- patterns -------------------------------------------------------------

FlatContext standard_scope(const FlatContext& psi, const FlatContext& locals) {
  FlatContext s = psi;
  s.insert(s.end(), locals.begin(), locals.end());
  return s;
}

Type evar_type_for(const FlatContext& scope, const LabeledVarList& phi, const Type& base) {
  Type t = base;
  for (auto it = phi.rbegin(); it != phi.rend(); ++it) {
    auto a = lookup(scope, it->name);
    if (!a) fail(PK::IllTyped, "undeclared variable '" + it->name + "'");
    t = Type::arrow(*a, it->label, t);
  }
  return t;
}

namespace {

struct FullyApplier {
  const Signature& sig;
  const FlatContext& psi;
  std::set<std::string> taken;
  std::set<std::string> seen;
  FlatContext locals;

  FlatContext scope() const { return standard_scope(psi, locals); }

  Term flex(const std::string& name, LabeledVarList phi, const Type& a, bool changed) {
    if (a.is_arrow()) {
      if (a.label() != Label::U)
        fail(PK::NotSimple, "existential variable '" + name + "' at non-negative type " +
                                print_type(a));
      std::set<std::string> avoid = names_of(scope());
      std::string y = fresh_numbered("y", avoid);
      locals.push_back({y, a.domain()});
      phi.push_back({y, Label::U});
      Term body = flex(name, std::move(phi), a.codomain(), true);
      locals.pop_back();
      return Term::lam(y, Label::U, a.domain(), body);
    }
    FlatContext s = scope();
    LabeledVarList full;
    for (const auto& b : s) {
      auto it = std::find_if(phi.begin(), phi.end(),
                             [&](const LabeledVar& v) { return v.name == b.name; });
      full.push_back({b.name, it == phi.end() ? Label::Zero : it->label});
    }
    for (const auto& v : phi)
      if (!lookup(s, v.name))
        fail(PK::IllTyped, "argument '" + v.name + "' of '" + name + "' is not in scope");
    changed = changed || full != phi;
    std::string out = name;
    if (changed) {
      out = fresh_prime(name, taken);
      taken.insert(out);
    }
    return Term::evar(out, full, evar_type_for(s, full, a));
  }

  Term run(const Term& m, const Type& a) {
    switch (m.kind()) {
      case Term::Kind::Lam: {
        if (m.label() != Label::U) fail(PK::NotSimple, "abstraction with label other than u");
        if (!a.is_arrow() || a.label() != Label::U || a.domain() != m.domain())
          fail(PK::IllTyped, "abstraction " + print_term(m) + " is not at type " + print_type(a));
        locals.push_back({m.name(), m.domain()});
        Term body = run(m.body(), a.codomain());
        locals.pop_back();
        return Term::lam(m.name(), Label::U, m.domain(), body);
      }
      case Term::Kind::EVar:
        if (!seen.insert(m.name()).second)
          fail(PK::NotLinear, "existential variable '" + m.name() + "' occurs twice");
        return flex(m.name(), m.args(), a, false);
      default: {
        if (a.is_arrow())
          fail(PK::NotCanonical, print_term(m) + " is not η-long at type " + print_type(a));
        Spine sp = spine_of(m);
        FlatContext s = scope();
        Type t = head_type_or_fail(sig, s, sp.head);
        std::vector<Term> args;
        for (std::size_t i = 0; i < sp.args.size(); ++i) {
          if (!t.is_arrow()) fail(PK::IllTyped, "too many arguments in " + print_term(m));
          if (sp.labels[i] != Label::One || t.label() != Label::One)
            fail(PK::NotSimple, "rigid application with label other than 1 in " + print_term(m));
          args.push_back(run(sp.args[i], t.domain()));
          Type next = t.codomain();
          t = next;
        }
        if (t != a)
          fail(PK::IllTyped, print_term(m) + " has type " + print_type(t) + ", expected " +
                                 print_type(a));
        return apply_spine(sp.head, args, sp.labels);
      }
    }
  }
};

void validate_rec(const Signature& sig, const FlatContext& psi, FlatContext& locals,
                  std::set<std::string>& seen, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Lam:
      if (m.label() != Label::U) fail(PK::NotSimple, "abstraction with label other than u");
      if (lookup(psi, m.name()) || lookup(locals, m.name()))
        fail(PK::NotSimple, "binder '" + m.name() + "' shadows a variable in scope");
      locals.push_back({m.name(), m.domain()});
      validate_rec(sig, psi, locals, seen, m.body());
      locals.pop_back();
      return;
    case Term::Kind::EVar: {
      if (!seen.insert(m.name()).second)
        fail(PK::NotLinear, "existential variable '" + m.name() + "' occurs twice");
      if (!m.evar_type()) fail(PK::IllTyped, "existential variable '" + m.name() + "' is untyped");
      FlatContext s = standard_scope(psi, locals);
      bool ok = s.size() == m.args().size();
      for (std::size_t i = 0; ok && i < s.size(); ++i) ok = s[i].name == m.args()[i].name;
      if (!ok)
        fail(PK::NotFullyApplied, "'" + m.name() + "' is not applied to " + print_context(s) +
                                      " in standard order");
      return;
    }
    default: {
      Spine sp = spine_of(m);
      if (!sp.head.is(Term::Kind::Const) && !sp.head.is(Term::Kind::Var))
        fail(PK::NotSimple, "flexible or redex head in " + print_term(m));
      for (std::size_t i = 0; i < sp.args.size(); ++i) {
        if (sp.labels[i] != Label::One)
          fail(PK::NotSimple, "rigid application with label other than 1 in " + print_term(m));
        validate_rec(sig, psi, locals, seen, sp.args[i]);
      }
    }
  }
}

}  // namespace

SimpleLinearPattern fully_apply(const Signature& sig, const FlatContext& psi, const Term& p,
                                const Type& a) {
  Term q = deshadow(p, names_of(psi));
  FullyApplier fa{sig, psi, {}, {}, {}};
  for (const auto& e : evar_names(q)) fa.taken.insert(e);
  SimpleLinearPattern out{fa.run(q, a), psi, a};
  validate(sig, out);
  return out;
}

void validate(const Signature& sig, const SimpleLinearPattern& p) {
  FlatContext locals;
  std::set<std::string> seen;
  validate_rec(sig, p.psi, locals, seen, p.term);
  if (!is_canonical(ZonedContext::unrestricted(p.psi), sig, p.term, p.type))
    fail(PK::IllTyped, print_term(p.term) + " is not canonical at " + print_type(p.type));
}

void require_simple_fragment(const Signature& sig, const FlatContext& psi, const Type& a) {
  for (const auto& d : sig.decls())
    if (!d.is_type && !is_positive(*d.type))
      fail(PK::NotSimple, "constant '" + d.name + "' has non-positive type " +
                              print_type(*d.type));
  for (const auto& b : psi)
    if (!is_positive(b.type))
      fail(PK::NotSimple, "parameter '" + b.name + "' has non-positive type " +
                              print_type(b.type));
  if (!is_negative(a)) fail(PK::NotSimple, "pattern type " + print_type(a) + " is not negative");
}

// --- ground instances -----------------------------------------------------

namespace {

bool match_rec(const Signature& sig, FlatContext& scope, const Term& m, const Term& p,
               const Type& a) {
  switch (p.kind()) {
    case Term::Kind::EVar: {
      ZonedContext z;
      for (const auto& b : scope) z.omega.insert_or_assign(b.name, b.type);
      for (const auto& x : p.args()) {
        auto t = lookup(scope, x.name);
        if (!t) return false;
        z.omega.erase(x.name);
        switch (x.label) {
          case Label::U: z.gamma.emplace(x.name, *t); break;
          case Label::Zero: z.omega.emplace(x.name, *t); break;
          case Label::One: z.delta.emplace(x.name, *t); break;
        }
      }
      return typechecks(z, sig, m, a);
    }
    case Term::Kind::Lam: {
      if (!m.is(Term::Kind::Lam) || m.label() != p.label() || m.domain() != p.domain() ||
          !a.is_arrow())
        return false;
      Term mb = m.body(), pb = p.body();
      std::string z = p.name();
      bool clash = lookup(scope, z).has_value();
      if (!clash && m.name() != z) clash = free_vars(mb).count(z) > 0;
      if (clash) {
        std::set<std::string> avoid = names_of(scope);
        auto f1 = free_vars(mb), f2 = free_vars(pb);
        avoid.insert(f1.begin(), f1.end());
        avoid.insert(f2.begin(), f2.end());
        z = fresh_numbered(z, avoid);
        pb = rename_free(pb, p.name(), z);
      }
      mb = rename_free(mb, m.name(), z);
      scope.push_back({z, p.domain()});
      bool ok = match_rec(sig, scope, mb, pb, a.codomain());
      scope.pop_back();
      return ok;
    }
    default: {
      Spine ps = spine_of(p), ms = spine_of(m);
      if (ps.head.kind() != ms.head.kind() || ps.head.name() != ms.head.name() ||
          ps.args.size() != ms.args.size() || ps.labels != ms.labels)
        return false;
      if (!ps.head.is(Term::Kind::Const) && !ps.head.is(Term::Kind::Var)) return false;
      std::optional<Type> t = ps.head.is(Term::Kind::Const)
                                  ? std::optional<Type>(sig.const_type(ps.head.name()))
                                  : lookup(scope, ps.head.name());
      if (!t) return false;
      for (std::size_t i = 0; i < ps.args.size(); ++i) {
        if (!t->is_arrow()) return false;
        if (!match_rec(sig, scope, ms.args[i], ps.args[i], t->domain())) return false;
        Type next = t->codomain();
        t = next;
      }
      return true;
    }
  }
}

}  // namespace

bool match_ground(const Signature& sig, const Term& m, const SimpleLinearPattern& p) {
  if (contains_evar(m)) throw PatternError(PK::Mismatch, "match_ground expects a ground term");
  FlatContext scope = p.psi;
  return match_rec(sig, scope, m, p.term, p.type);
}

}  // namespace strictpat
