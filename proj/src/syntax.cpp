#include "strictpat/syntax.hpp"

#include <algorithm>
#include <utility>
#include <variant>

namespace strictpat {

char label_char(Label k) {
  switch (k) {
    case Label::One: return '1';
    case Label::Zero: return '0';
    case Label::U: return 'u';
  }
  return '?';
}

std::optional<Label> label_from_char(char c) {
  switch (c) {
    case '1': return Label::One;
    case '0': return Label::Zero;
    case 'u': return Label::U;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Types

struct Type::Node {
  struct Atom {
    std::string name;
  };
  struct Arrow {
    Type domain;
    Label label;
    Type codomain;
  };
  std::variant<Atom, Arrow> v;
};

Type Type::atom(std::string name) {
  return Type(std::make_shared<const Node>(Node{Node::Atom{std::move(name)}}));
}

Type Type::arrow(Type domain, Label label, Type codomain) {
  return Type(std::make_shared<const Node>(
      Node{Node::Arrow{std::move(domain), label, std::move(codomain)}}));
}

Type::Kind Type::kind() const {
  return std::holds_alternative<Node::Atom>(node_->v) ? Kind::Atom : Kind::Arrow;
}

const std::string& Type::name() const { return std::get<Node::Atom>(node_->v).name; }
const Type& Type::domain() const { return std::get<Node::Arrow>(node_->v).domain; }
Label Type::label() const { return std::get<Node::Arrow>(node_->v).label; }
const Type& Type::codomain() const { return std::get<Node::Arrow>(node_->v).codomain; }

const Type& Type::target() const {
  const Type* t = this;
  while (t->is_arrow()) t = &t->codomain();
  return *t;
}

std::size_t Type::arity() const {
  std::size_t n = 0;
  for (const Type* t = this; t->is_arrow(); t = &t->codomain()) ++n;
  return n;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_atom()) return a.name() == b.name();
  return a.label() == b.label() && a.domain() == b.domain() &&
         a.codomain() == b.codomain();
}

// ---------------------------------------------------------------------------
// Terms

struct Term::Node {
  struct Const {
    std::string name;
  };
  struct Var {
    std::string name;
  };
  struct Lam {
    std::string var;
    Label label;
    Type domain;
    Term body;
  };
  struct App {
    Term fun;
    Term arg;
    Label label;
  };
  struct EVar {
    std::string name;
    LabeledVarList args;
    std::optional<Type> type;
  };
  std::variant<Const, Var, Lam, App, EVar> v;
};

Term Term::constant(std::string name) {
  return Term(std::make_shared<const Node>(Node{Node::Const{std::move(name)}}));
}

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Node::Var{std::move(name)}}));
}

Term Term::lam(std::string var, Label label, Type domain, Term body) {
  return Term(std::make_shared<const Node>(
      Node{Node::Lam{std::move(var), label, std::move(domain), std::move(body)}}));
}

Term Term::app(Term fun, Term arg, Label label) {
  return Term(std::make_shared<const Node>(
      Node{Node::App{std::move(fun), std::move(arg), label}}));
}

Term Term::evar(std::string name, LabeledVarList args, std::optional<Type> type) {
  return Term(std::make_shared<const Node>(
      Node{Node::EVar{std::move(name), std::move(args), std::move(type)}}));
}

Term::Kind Term::kind() const { return static_cast<Kind>(node_->v.index()); }

const std::string& Term::name() const {
  switch (kind()) {
    case Kind::Const: return std::get<Node::Const>(node_->v).name;
    case Kind::Var: return std::get<Node::Var>(node_->v).name;
    case Kind::Lam: return std::get<Node::Lam>(node_->v).var;
    case Kind::EVar: return std::get<Node::EVar>(node_->v).name;
    case Kind::App: break;
  }
  throw Error("name() on an application");
}

Label Term::label() const {
  if (kind() == Kind::Lam) return std::get<Node::Lam>(node_->v).label;
  return std::get<Node::App>(node_->v).label;
}

const Type& Term::domain() const { return std::get<Node::Lam>(node_->v).domain; }
const Term& Term::body() const { return std::get<Node::Lam>(node_->v).body; }
const Term& Term::fun() const { return std::get<Node::App>(node_->v).fun; }
const Term& Term::arg() const { return std::get<Node::App>(node_->v).arg; }
const LabeledVarList& Term::args() const { return std::get<Node::EVar>(node_->v).args; }
const std::optional<Type>& Term::evar_type() const {
  return std::get<Node::EVar>(node_->v).type;
}

Spine spine_of(const Term& t) {
  std::vector<Term> args;
  std::vector<Label> labels;
  const Term* cur = &t;
  while (cur->is(Term::Kind::App)) {
    args.push_back(cur->arg());
    labels.push_back(cur->label());
    cur = &cur->fun();
  }
  std::reverse(args.begin(), args.end());
  std::reverse(labels.begin(), labels.end());
  return Spine{*cur, std::move(args), std::move(labels)};
}

Term apply_spine(Term head, const std::vector<Term>& args,
                 const std::vector<Label>& labels) {
  for (std::size_t i = 0; i < args.size(); ++i)
    head = Term::app(std::move(head), args[i], labels[i]);
  return head;
}

// ---------------------------------------------------------------------------
// Signatures and contexts

void Signature::declare_type(const std::string& name) {
  if (index_.count(name)) throw Error("duplicate declaration of '" + name + "'");
  index_.emplace(name, decls_.size());
  decls_.push_back(Decl{name, true, std::nullopt});
}

void Signature::declare_const(const std::string& name, Type type) {
  if (index_.count(name)) throw Error("duplicate declaration of '" + name + "'");
  index_.emplace(name, decls_.size());
  decls_.push_back(Decl{name, false, std::move(type)});
}

bool Signature::has_type(const std::string& name) const {
  auto it = index_.find(name);
  return it != index_.end() && decls_[it->second].is_type;
}

bool Signature::has_const(const std::string& name) const {
  auto it = index_.find(name);
  return it != index_.end() && !decls_[it->second].is_type;
}

const Type& Signature::const_type(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end() || decls_[it->second].is_type)
    throw Error("unknown constant '" + name + "'");
  return *decls_[it->second].type;
}

std::vector<std::string> Signature::constants() const {
  std::vector<std::string> out;
  for (const auto& d : decls_)
    if (!d.is_type) out.push_back(d.name);
  return out;
}

std::optional<Type> lookup(const FlatContext& psi, std::string_view name) {
  for (auto it = psi.rbegin(); it != psi.rend(); ++it)
    if (it->name == name) return it->type;
  return std::nullopt;
}

std::optional<Type> ZonedContext::lookup(const std::string& name) const {
  for (const auto* zone : {&gamma, &omega, &delta}) {
    auto it = zone->find(name);
    if (it != zone->end()) return it->second;
  }
  return std::nullopt;
}

bool ZonedContext::disjoint() const {
  for (const auto& [x, _] : gamma)
    if (omega.count(x) || delta.count(x)) return false;
  for (const auto& [x, _] : omega)
    if (delta.count(x)) return false;
  return true;
}

ZonedContext ZonedContext::unrestricted(const FlatContext& psi) {
  ZonedContext ctx;
  for (const auto& b : psi) ctx.gamma.insert_or_assign(b.name, b.type);
  return ctx;
}

// ---------------------------------------------------------------------------
// Variables, α-equivalence, substitution

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  auto is_bound = [&](const std::string& x) {
    return std::find(bound.begin(), bound.end(), x) != bound.end();
  };
  switch (t.kind()) {
    case Term::Kind::Const:
      return;
    case Term::Kind::Var:
      if (!is_bound(t.name())) out.insert(t.name());
      return;
    case Term::Kind::EVar:
      for (const auto& a : t.args())
        if (!is_bound(a.name)) out.insert(a.name);
      return;
    case Term::Kind::App:
      collect_free(t.fun(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    case Term::Kind::Lam:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

void collect_evars(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::EVar: out.push_back(t.name()); return;
    case Term::Kind::App:
      collect_evars(t.fun(), out);
      collect_evars(t.arg(), out);
      return;
    case Term::Kind::Lam: collect_evars(t.body(), out); return;
    default: return;
  }
}

using Env = std::vector<std::pair<std::string, std::string>>;

// Position of the innermost binding of `x` on the given side, or -1.
long bound_index(const Env& env, const std::string& x, bool left) {
  for (long i = static_cast<long>(env.size()) - 1; i >= 0; --i) {
    const auto& p = env[static_cast<std::size_t>(i)];
    if ((left ? p.first : p.second) == x) return i;
  }
  return -1;
}

bool same_var(const Env& env, const std::string& x, const std::string& y) {
  long i = bound_index(env, x, true);
  long j = bound_index(env, y, false);
  if (i < 0 && j < 0) return x == y;
  return i == j;
}

bool alpha_rec(const Term& a, const Term& b, Env& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Const:
      return a.name() == b.name();
    case Term::Kind::Var:
      return same_var(env, a.name(), b.name());
    case Term::Kind::EVar: {
      if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (a.args()[i].label != b.args()[i].label) return false;
        if (!same_var(env, a.args()[i].name, b.args()[i].name)) return false;
      }
      return true;
    }
    case Term::Kind::App:
      return a.label() == b.label() && alpha_rec(a.fun(), b.fun(), env) &&
             alpha_rec(a.arg(), b.arg(), env);
    case Term::Kind::Lam: {
      if (a.label() != b.label() || a.domain() != b.domain()) return false;
      env.emplace_back(a.name(), b.name());
      bool r = alpha_rec(a.body(), b.body(), env);
      env.pop_back();
      return r;
    }
  }
  return false;
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(t, bound, out);
  return out;
}

std::vector<std::string> evar_names(const Term& t) {
  std::vector<std::string> out;
  collect_evars(t, out);
  return out;
}

bool contains_evar(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::EVar: return true;
    case Term::Kind::App: return contains_evar(t.fun()) || contains_evar(t.arg());
    case Term::Kind::Lam: return contains_evar(t.body());
    default: return false;
  }
}

bool alpha_eq(const Term& a, const Term& b) {
  if (a.id() == b.id()) return true;
  Env env;
  return alpha_rec(a, b, env);
}

std::string fresh_prime(const std::string& base, const std::set<std::string>& avoid) {
  std::string name = base;
  while (avoid.count(name)) name += '\'';
  return name;
}

std::string fresh_numbered(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string name = base + std::to_string(i);
    if (!avoid.count(name)) return name;
  }
}

Term rename_free(const Term& m, const std::string& from, const std::string& to) {
  if (from == to) return m;
  switch (m.kind()) {
    case Term::Kind::Const:
      return m;
    case Term::Kind::Var:
      return m.name() == from ? Term::var(to) : m;
    case Term::Kind::EVar: {
      LabeledVarList args = m.args();
      bool changed = false;
      for (auto& a : args)
        if (a.name == from) {
          a.name = to;
          changed = true;
        }
      return changed ? Term::evar(m.name(), std::move(args), m.evar_type()) : m;
    }
    case Term::Kind::App:
      return Term::app(rename_free(m.fun(), from, to), rename_free(m.arg(), from, to),
                       m.label());
    case Term::Kind::Lam: {
      if (m.name() == from) return m;
      std::string y = m.name();
      Term body = m.body();
      if (y == to) {
        auto fv = free_vars(body);
        if (!fv.count(from)) return m;
        fv.insert(from);
        fv.insert(to);
        std::string y2 = fresh_prime(y, fv);
        body = rename_free(body, y, y2);
        y = y2;
      }
      return Term::lam(y, m.label(), m.domain(), rename_free(body, from, to));
    }
  }
  return m;
}

Term subst(const Term& n, const std::string& x, const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Const:
      return m;
    case Term::Kind::Var:
      return m.name() == x ? n : m;
    case Term::Kind::EVar:
      for (const auto& a : m.args())
        if (a.name == x)
          throw SubstitutionError("EVarArgHit: existential variable '" + m.name() +
                                  "' lists '" + x + "' among its arguments");
      return m;
    case Term::Kind::App:
      return Term::app(subst(n, x, m.fun()), subst(n, x, m.arg()), m.label());
    case Term::Kind::Lam: {
      if (m.name() == x) return m;
      std::string y = m.name();
      Term body = m.body();
      auto fvb = free_vars(body);
      if (!fvb.count(x)) return m;
      auto fvn = free_vars(n);
      if (fvn.count(y)) {
        std::set<std::string> avoid = fvn;
        avoid.insert(fvb.begin(), fvb.end());
        avoid.insert(x);
        std::string y2 = fresh_prime(y, avoid);
        body = rename_free(body, y, y2);
        y = y2;
      }
      return Term::lam(y, m.label(), m.domain(), subst(n, x, body));
    }
  }
  return m;
}

Term deshadow(const Term& t, std::set<std::string> scope) {
  switch (t.kind()) {
    case Term::Kind::App:
      return Term::app(deshadow(t.fun(), scope), deshadow(t.arg(), scope), t.label());
    case Term::Kind::Lam: {
      std::string y = t.name();
      Term body = t.body();
      if (scope.count(y)) {
        std::set<std::string> avoid = scope;
        auto fv = free_vars(body);
        avoid.insert(fv.begin(), fv.end());
        std::string y2 = fresh_numbered(y, avoid);
        body = rename_free(body, y, y2);
        y = y2;
      }
      scope.insert(y);
      return Term::lam(y, t.label(), t.domain(), deshadow(body, scope));
    }
    default:
      return t;
  }
}

}  // namespace strictpat
