#include "strictpat/canonicalize.hpp"

#include "strictpat/text.hpp"

namespace strictpat {

std::optional<Term> whr_step(const Term& m) {
  if (!m.is(Term::Kind::App)) return std::nullopt;
  const Term& f = m.fun();
  if (f.is(Term::Kind::Lam)) {
    if (f.label() != m.label())
      throw TypingError(TypingErrorKind::LabelMismatch, f.name(),
                        std::string("redex with abstraction labelled ") + label_char(f.label()) +
                            " applied with label " + label_char(m.label()));
    // A variable argument is a renaming, which is also defined inside Φ-lists.
    if (m.arg().is(Term::Kind::Var)) return rename_free(f.body(), f.name(), m.arg().name());
    return subst(m.arg(), f.name(), f.body());
  }
  if (auto g = whr_step(f)) return Term::app(*g, m.arg(), m.label());
  return std::nullopt;
}

namespace {

struct Canonicalizer {
  const Signature& sig;
  std::size_t budget;
  std::size_t steps = 0;

  std::set<std::string> names_in(const FlatContext& scope, const Term& m) const {
    std::set<std::string> avoid = free_vars(m);
    for (const auto& b : scope) avoid.insert(b.name);
    return avoid;
  }

  Term head_normal(Term m) {
    while (auto next = whr_step(m)) {
      if (++steps > budget)
        throw NonTerminating("weak head reduction exceeded " + std::to_string(budget) +
                             " steps");
      m = *next;
    }
    return m;
  }

  Type head_type(const FlatContext& scope, const Term& h) const {
    switch (h.kind()) {
      case Term::Kind::Const:
        if (!sig.has_const(h.name()))
          throw TypingError(TypingErrorKind::UnknownIdent, h.name(), "undeclared constant");
        return sig.const_type(h.name());
      case Term::Kind::Var: {
        auto t = lookup(scope, h.name());
        if (!t) throw TypingError(TypingErrorKind::UnknownIdent, h.name(), "undeclared variable");
        return *t;
      }
      case Term::Kind::EVar: {
        if (!h.evar_type())
          throw Error("existential variable '" + h.name() + "' has no type annotation");
        Type t = *h.evar_type();
        for (std::size_t i = 0; i < h.args().size(); ++i) {
          if (!t.is_arrow())
            throw TypingError(TypingErrorKind::TypeMismatch, h.name(), "too many arguments");
          Type next = t.codomain();
          t = next;
        }
        return t;
      }
      default:
        throw TypingError(TypingErrorKind::TypeMismatch, "",
                          "abstraction in head position at base type");
    }
  }

  Term run(FlatContext& scope, const Term& m, const Type& a) {
    if (a.is_arrow()) {
      const Label k = a.label();
      if (m.is(Term::Kind::Lam)) {
        if (m.label() != k)
          throw TypingError(TypingErrorKind::LabelMismatch, m.name(),
                            "abstraction label disagrees with its type " + print_type(a));
        if (m.domain() != a.domain())
          throw TypingError(TypingErrorKind::TypeMismatch, m.name(),
                            "abstraction domain disagrees with its type " + print_type(a));
      }
      std::string base = m.is(Term::Kind::Lam) ? m.name() : "x";
      std::string y = fresh_numbered(base, names_in(scope, m));
      Term body = m.is(Term::Kind::Lam) ? rename_free(m.body(), m.name(), y)
                                        : Term::app(m, Term::var(y), k);
      scope.push_back({y, a.domain()});
      Term nb = run(scope, body, a.codomain());
      scope.pop_back();
      return Term::lam(y, k, a.domain(), nb);
    }

    Term hn = head_normal(m);
    Spine sp = spine_of(hn);
    Type t = head_type(scope, sp.head);
    std::vector<Term> args;
    for (std::size_t i = 0; i < sp.args.size(); ++i) {
      if (!t.is_arrow())
        throw TypingError(TypingErrorKind::TypeMismatch, "", "too many arguments");
      if (t.label() != sp.labels[i])
        throw TypingError(TypingErrorKind::LabelMismatch, "",
                          "application label disagrees with " + print_type(t));
      args.push_back(run(scope, sp.args[i], t.domain()));
      Type next = t.codomain();
      t = next;
    }
    if (t != a)
      throw TypingError(TypingErrorKind::TypeMismatch, "",
                        "expected " + print_type(a) + ", found " + print_type(t));
    return apply_spine(sp.head, args, sp.labels);
  }
};

// Shape of the canonical/atomic judgments without zone conditions; those are delegated to typing.
CanonicityClass shape(FlatContext& scope, const Signature& sig, const Term& m) {
  using K = CanonicityClass::Kind;
  auto canonical_at_any = [](const CanonicityClass& c) {
    return c.kind == K::Canonical || (c.kind == K::Atomic && c.type->is_atom());
  };
  switch (m.kind()) {
    case Term::Kind::Const:
      if (!sig.has_const(m.name())) return CanonicityClass::neither();
      return {K::Atomic, sig.const_type(m.name())};
    case Term::Kind::Var: {
      auto t = lookup(scope, m.name());
      if (!t) return CanonicityClass::neither();
      return {K::Atomic, *t};
    }
    case Term::Kind::EVar: {
      if (!m.evar_type()) return CanonicityClass::neither();
      Type t = *m.evar_type();
      for (std::size_t i = 0; i < m.args().size(); ++i) {
        if (!t.is_arrow()) return CanonicityClass::neither();
        Type next = t.codomain();
        t = next;
      }
      if (!t.is_atom()) return CanonicityClass::neither();
      return {K::Canonical, t};
    }
    case Term::Kind::Lam: {
      scope.push_back({m.name(), m.domain()});
      CanonicityClass b = shape(scope, sig, m.body());
      scope.pop_back();
      if (!canonical_at_any(b)) return CanonicityClass::neither();
      return {K::Canonical, Type::arrow(m.domain(), m.label(), *b.type)};
    }
    case Term::Kind::App: {
      CanonicityClass f = shape(scope, sig, m.fun());
      if (f.kind != K::Atomic || !f.type->is_arrow() || f.type->label() != m.label())
        return CanonicityClass::neither();
      CanonicityClass a = shape(scope, sig, m.arg());
      if (!canonical_at_any(a) || *a.type != f.type->domain()) return CanonicityClass::neither();
      return {K::Atomic, f.type->codomain()};
    }
  }
  return CanonicityClass::neither();
}

}  // namespace

Term canonicalize(const FlatContext& psi, const Signature& sig, const Term& m, const Type& a,
                  std::size_t step_budget) {
  Canonicalizer c{sig, step_budget};
  FlatContext scope = psi;
  return c.run(scope, m, a);
}

CanonicityClass classify(const ZonedContext& ctx, const Signature& sig, const Term& m) {
  if (!ctx.disjoint()) return CanonicityClass::neither();
  FlatContext scope;
  for (const auto* zone : {&ctx.gamma, &ctx.omega, &ctx.delta})
    for (const auto& [x, a] : *zone) scope.push_back({x, a});
  CanonicityClass c = shape(scope, sig, m);
  if (c.kind == CanonicityClass::Kind::Neither) return c;
  try {
    check(ctx, sig, m, *c.type);
  } catch (const TypingError&) {
    return CanonicityClass::neither();
  }
  return c;
}

bool is_canonical(const ZonedContext& ctx, const Signature& sig, const Term& m, const Type& a) {
  CanonicityClass c = classify(ctx, sig, m);
  if (c.kind == CanonicityClass::Kind::Neither || *c.type != a) return false;
  return c.kind == CanonicityClass::Kind::Canonical || a.is_atom();
}

}  // namespace strictpat
