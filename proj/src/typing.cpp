#include "strictpat/typing.hpp"

#include "strictpat/text.hpp"

namespace strictpat {

const char* to_string(TypingErrorKind k) {
  switch (k) {
    case TypingErrorKind::TypeMismatch: return "TypeMismatch";
    case TypingErrorKind::UnknownIdent: return "UnknownIdent";
    case TypingErrorKind::StrictVarUnused: return "StrictVarUnused";
    case TypingErrorKind::IrrelevantVarUsed: return "IrrelevantVarUsed";
    case TypingErrorKind::LabelMismatch: return "LabelMismatch";
    case TypingErrorKind::ZoneViolation: return "ZoneViolation";
  }
  return "?";
}

TypingError::TypingError(TypingErrorKind kind, std::string variable, std::string message)
    : Error(std::string(to_string(kind)) + (variable.empty() ? "" : "(" + variable + ")") +
            ": " + message),
      kind_(kind),
      variable_(std::move(variable)) {}

namespace {

[[noreturn]] void type_mismatch(const std::string& what, const Type& expected,
                                const Type& found) {
  throw TypingError(TypingErrorKind::TypeMismatch, "",
                    what + ": expected " + print_type(expected) + ", found " +
                        print_type(found));
}

OccurrenceReport analyze_rec(FlatContext& scope, const Signature& sig, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Const: {
      if (!sig.has_const(m.name()))
        throw TypingError(TypingErrorKind::UnknownIdent, m.name(), "undeclared constant");
      return {{}, {}, sig.const_type(m.name())};
    }
    case Term::Kind::Var: {
      auto a = lookup(scope, m.name());
      if (!a) throw TypingError(TypingErrorKind::UnknownIdent, m.name(), "undeclared variable");
      return {{m.name()}, {m.name()}, *a};
    }
    case Term::Kind::EVar: {
      if (!m.evar_type())
        throw Error("existential variable '" + m.name() + "' has no type annotation");
      OccurrenceReport r{{}, {}, *m.evar_type()};
      for (const auto& x : m.args()) {
        auto a = lookup(scope, x.name);
        if (!a) throw TypingError(TypingErrorKind::UnknownIdent, x.name, "undeclared variable");
        if (!r.inferred_type.is_arrow())
          throw TypingError(TypingErrorKind::TypeMismatch, m.name(), "too many arguments");
        if (r.inferred_type.label() != x.label)
          throw TypingError(TypingErrorKind::LabelMismatch, x.name,
                            "argument label disagrees with the type of " + m.name());
        if (r.inferred_type.domain() != *a)
          type_mismatch("argument " + x.name + " of " + m.name(), r.inferred_type.domain(), *a);
        if (x.label == Label::One) r.strict_set.insert(x.name);
        if (x.label != Label::Zero) r.used_set.insert(x.name);
        Type rest = r.inferred_type.codomain();
        r.inferred_type = rest;
      }
      return r;
    }
    case Term::Kind::Lam: {
      scope.push_back({m.name(), m.domain()});
      OccurrenceReport r = analyze_rec(scope, sig, m.body());
      scope.pop_back();
      const std::string& x = m.name();
      if (m.label() == Label::One && !r.strict_set.count(x))
        throw TypingError(TypingErrorKind::StrictVarUnused, x,
                          "strict abstraction does not use its argument strictly");
      if (m.label() == Label::Zero && r.used_set.count(x))
        throw TypingError(TypingErrorKind::IrrelevantVarUsed, x,
                          "vacuous abstraction uses its argument");
      r.strict_set.erase(x);
      r.used_set.erase(x);
      r.inferred_type = Type::arrow(m.domain(), m.label(), r.inferred_type);
      return r;
    }
    case Term::Kind::App: {
      OccurrenceReport f = analyze_rec(scope, sig, m.fun());
      if (!f.inferred_type.is_arrow())
        throw TypingError(TypingErrorKind::TypeMismatch, "",
                          "applying a term of non-function type " +
                              print_type(f.inferred_type));
      if (f.inferred_type.label() != m.label())
        throw TypingError(TypingErrorKind::LabelMismatch, "",
                          std::string("application labelled ") + label_char(m.label()) +
                              " of a function of type " + print_type(f.inferred_type));
      OccurrenceReport a = analyze_rec(scope, sig, m.arg());
      if (a.inferred_type != f.inferred_type.domain())
        type_mismatch("argument", f.inferred_type.domain(), a.inferred_type);
      if (m.label() == Label::One)
        f.strict_set.insert(a.strict_set.begin(), a.strict_set.end());
      if (m.label() != Label::Zero) f.used_set.insert(a.used_set.begin(), a.used_set.end());
      Type cod = f.inferred_type.codomain();
      f.inferred_type = cod;
      return f;
    }
  }
  throw Error("unreachable");
}

FlatContext scope_of(const ZonedContext& ctx) {
  if (!ctx.disjoint())
    throw TypingError(TypingErrorKind::ZoneViolation, "",
                      "a variable is declared in more than one zone");
  FlatContext scope;
  for (const auto* zone : {&ctx.gamma, &ctx.omega, &ctx.delta})
    for (const auto& [x, a] : *zone) scope.push_back({x, a});
  return scope;
}

void check_zones(const ZonedContext& ctx, const OccurrenceReport& r) {
  for (const auto& [x, _] : ctx.delta)
    if (!r.strict_set.count(x))
      throw TypingError(TypingErrorKind::StrictVarUnused, x,
                        "strict hypothesis has no strict occurrence");
  for (const auto& [x, _] : ctx.omega)
    if (r.used_set.count(x))
      throw TypingError(TypingErrorKind::IrrelevantVarUsed, x,
                        "irrelevant hypothesis is used");
}

// --- declarative oracle ----------------------------------------------------

using Zone = std::map<std::string, Type>;

struct Zones {
  Zone gamma, omega, delta;
  bool has(const std::string& x) const {
    return gamma.count(x) || omega.count(x) || delta.count(x);
  }
  std::set<std::string> names() const {
    std::set<std::string> s;
    for (const auto* z : {&gamma, &omega, &delta})
      for (const auto& [x, _] : *z) s.insert(x);
    return s;
  }
};

Zone merge(Zone a, const Zone& b) {
  for (const auto& [x, t] : b) a.insert_or_assign(x, t);
  return a;
}

std::optional<Type> derive(const Zones& z, const Signature& sig, const Term& m);

std::optional<Type> derive_strict_app(const Zones& z, const Signature& sig, const Term& m,
                                      unsigned mask) {
  Zones zm{z.gamma, z.omega, {}}, zn{z.gamma, z.omega, {}};
  unsigned bit = 0;
  for (const auto& [x, a] : z.delta) {
    if (mask & (1u << bit)) {
      zm.delta.emplace(x, a);
      zn.gamma.emplace(x, a);
    } else {
      zn.delta.emplace(x, a);
      zm.gamma.emplace(x, a);
    }
    ++bit;
  }
  auto f = derive(zm, sig, m.fun());
  if (!f || !f->is_arrow() || f->label() != Label::One) return std::nullopt;
  auto a = derive(zn, sig, m.arg());
  if (!a || *a != f->domain()) return std::nullopt;
  return f->codomain();
}

std::optional<Type> derive(const Zones& z, const Signature& sig, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Const:
      if (!z.delta.empty() || !sig.has_const(m.name())) return std::nullopt;
      return sig.const_type(m.name());
    case Term::Kind::Var: {
      const std::string& x = m.name();
      if (z.delta.empty()) {
        auto it = z.gamma.find(x);
        if (it != z.gamma.end()) return it->second;  // Id^u
        return std::nullopt;
      }
      if (z.delta.size() == 1 && z.delta.begin()->first == x)
        return z.delta.begin()->second;  // Id^1
      return std::nullopt;
    }
    case Term::Kind::EVar:
      throw Error("the declarative checker does not accept existential variables");
    case Term::Kind::Lam: {
      std::string x = m.name();
      Term body = m.body();
      if (z.has(x)) {
        auto avoid = z.names();
        auto fv = free_vars(body);
        avoid.insert(fv.begin(), fv.end());
        std::string y = fresh_numbered(x, avoid);
        body = rename_free(body, x, y);
        x = y;
      }
      Zones inner = z;
      switch (m.label()) {
        case Label::U: inner.gamma.emplace(x, m.domain()); break;
        case Label::Zero: inner.omega.emplace(x, m.domain()); break;
        case Label::One: inner.delta.emplace(x, m.domain()); break;
      }
      auto b = derive(inner, sig, body);
      if (!b) return std::nullopt;
      return Type::arrow(m.domain(), m.label(), *b);
    }
    case Term::Kind::App: {
      switch (m.label()) {
        case Label::U: {
          auto f = derive(z, sig, m.fun());
          if (!f || !f->is_arrow() || f->label() != Label::U) return std::nullopt;
          Zones zn{merge(z.gamma, z.delta), z.omega, {}};
          auto a = derive(zn, sig, m.arg());
          if (!a || *a != f->domain()) return std::nullopt;
          return f->codomain();
        }
        case Label::Zero: {
          auto f = derive(z, sig, m.fun());
          if (!f || !f->is_arrow() || f->label() != Label::Zero) return std::nullopt;
          Zones zn{merge(merge(z.gamma, z.omega), z.delta), {}, {}};
          auto a = derive(zn, sig, m.arg());
          if (!a || *a != f->domain()) return std::nullopt;
          return f->codomain();
        }
        case Label::One: {
          unsigned splits = 1u << z.delta.size();
          for (unsigned mask = 0; mask < splits; ++mask)
            if (auto t = derive_strict_app(z, sig, m, mask)) return t;
          return std::nullopt;
        }
      }
    }
  }
  return std::nullopt;
}

Zones zones_of(const ZonedContext& ctx) { return Zones{ctx.gamma, ctx.omega, ctx.delta}; }

}  // namespace

OccurrenceReport analyze(const FlatContext& scope, const Signature& sig, const Term& m) {
  FlatContext s = scope;
  return analyze_rec(s, sig, m);
}

OccurrenceReport infer(const ZonedContext& ctx, const Signature& sig, const Term& m) {
  FlatContext scope = scope_of(ctx);
  OccurrenceReport r = analyze_rec(scope, sig, m);
  check_zones(ctx, r);
  return r;
}

OccurrenceReport check(const ZonedContext& ctx, const Signature& sig, const Term& m,
                       const Type& a) {
  FlatContext scope = scope_of(ctx);
  OccurrenceReport r = analyze_rec(scope, sig, m);
  if (r.inferred_type != a) type_mismatch("term", a, r.inferred_type);
  check_zones(ctx, r);
  return r;
}

bool typechecks(const ZonedContext& ctx, const Signature& sig, const Term& m, const Type& a) {
  try {
    check(ctx, sig, m, a);
    return true;
  } catch (const TypingError&) {
    return false;
  }
}

bool check_declarative(const ZonedContext& ctx, const Signature& sig, const Term& m,
                       const Type& a) {
  if (!ctx.disjoint()) return false;
  auto t = derive(zones_of(ctx), sig, m);
  return t && *t == a;
}

std::optional<Type> infer_declarative(const ZonedContext& ctx, const Signature& sig,
                                      const Term& m) {
  if (!ctx.disjoint()) return std::nullopt;
  return derive(zones_of(ctx), sig, m);
}

std::vector<bool> strict_split_outcomes(const ZonedContext& ctx, const Signature& sig,
                                        const Term& m, const Type& a) {
  if (!m.is(Term::Kind::App) || m.label() != Label::One)
    throw Error("strict_split_outcomes expects a strict application");
  Zones z = zones_of(ctx);
  std::vector<bool> out;
  unsigned splits = 1u << z.delta.size();
  for (unsigned mask = 0; mask < splits; ++mask) {
    auto t = derive_strict_app(z, sig, m, mask);
    out.push_back(t && *t == a);
  }
  return out;
}

Type check_atomic_nary(const ZonedContext& ctx, const Signature& sig, const Term& m) {
  FlatContext scope = scope_of(ctx);
  Spine sp = spine_of(m);
  const Term& h = sp.head;
  std::optional<Type> ht;
  if (h.is(Term::Kind::Const)) {
    if (!sig.has_const(h.name()))
      throw TypingError(TypingErrorKind::UnknownIdent, h.name(), "undeclared constant");
    ht = sig.const_type(h.name());
  } else if (h.is(Term::Kind::Var)) {
    ht = ctx.lookup(h.name());
    if (!ht) throw TypingError(TypingErrorKind::UnknownIdent, h.name(), "undeclared variable");
    if (ctx.omega.count(h.name()))
      throw TypingError(TypingErrorKind::IrrelevantVarUsed, h.name(),
                        "irrelevant variable in head position");
  } else {
    throw TypingError(TypingErrorKind::TypeMismatch, "", "term is not atomic");
  }

  Type cur = *ht;
  std::vector<OccurrenceReport> reports;
  for (std::size_t i = 0; i < sp.args.size(); ++i) {
    if (!cur.is_arrow())
      throw TypingError(TypingErrorKind::TypeMismatch, "", "too many arguments");
    if (sp.labels[i] != Label::One || cur.label() != Label::One)
      throw TypingError(TypingErrorKind::LabelMismatch, "",
                        "n-ary strict application requires strict arguments");
    OccurrenceReport r = analyze_rec(scope, sig, sp.args[i]);
    if (r.inferred_type != cur.domain())
      type_mismatch("argument " + std::to_string(i + 1), cur.domain(), r.inferred_type);
    reports.push_back(std::move(r));
    Type next = cur.codomain();
    cur = next;
  }
  if (!cur.is_atom())
    throw TypingError(TypingErrorKind::TypeMismatch, "", "atomic term not at base type");

  for (const auto& [x, _] : ctx.omega)
    for (const auto& r : reports)
      if (r.used_set.count(x))
        throw TypingError(TypingErrorKind::IrrelevantVarUsed, x, "irrelevant hypothesis is used");
  for (const auto& [x, _] : ctx.delta) {
    if (h.is(Term::Kind::Var) && h.name() == x) continue;  // the head pays
    bool paid = false;
    for (const auto& r : reports) paid = paid || r.strict_set.count(x) > 0;
    if (!paid)
      throw TypingError(TypingErrorKind::StrictVarUnused, x,
                        "no argument uses the strict hypothesis strictly");
  }
  return cur;
}

}  // namespace strictpat
