#include "strictpat/intersect.hpp"

#include "strictpat/text.hpp"

namespace strictpat {

std::optional<Label> meet_label(Label a, Label b) {
  if (a == Label::U) return b;
  if (b == Label::U) return a;
  if (a == b) return a;
  return std::nullopt;
}

std::optional<LabeledVarList> meet_phi(const LabeledVarList& a, const LabeledVarList& b) {
  if (a.size() != b.size()) return std::nullopt;
  LabeledVarList out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name) return std::nullopt;
    auto k = meet_label(a[i].label, b[i].label);
    if (!k) return std::nullopt;
    out.push_back({a[i].name, *k});
  }
  return out;
}

std::vector<Splitting> enumerate_splittings(const LabeledVarList& phi, std::size_t n,
                                            const std::optional<std::string>& param_head) {
  // Template part: strict variables (other than a strict head) start as u.
  LabeledVarList base;
  std::vector<std::size_t> strict_pos;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    const auto& x = phi[j];
    bool head = param_head && *param_head == x.name;
    if (x.label == Label::One && !head) strict_pos.push_back(j);
    base.push_back({x.name, x.label == Label::One ? Label::U : x.label});
  }
  if (n == 0) {
    if (!strict_pos.empty()) return {};
    return {Splitting{}};
  }
  std::vector<Splitting> out;
  std::vector<std::size_t> choice(strict_pos.size(), 0);
  for (;;) {
    Splitting s(n, base);
    for (std::size_t v = 0; v < strict_pos.size(); ++v)
      s[choice[v]][strict_pos[v]].label = Label::One;
    out.push_back(std::move(s));
    // Odometer with the leftmost strict variable most significant.
    std::size_t v = strict_pos.size();
    while (v > 0) {
      --v;
      if (++choice[v] < n) break;
      choice[v] = 0;
      if (v == 0) return out;
    }
    if (strict_pos.empty()) return out;
  }
}

namespace {

[[noreturn]] void precondition(const std::string& msg) {
  throw PatternError(PatternError::Kind::Mismatch, msg);
}

std::vector<std::vector<Term>> product(const std::vector<std::vector<Term>>& choices) {
  std::vector<std::vector<Term>> out{{}};
  for (const auto& c : choices) {
    std::vector<std::vector<Term>> next;
    for (const auto& prefix : out)
      for (const auto& t : c) {
        auto row = prefix;
        row.push_back(t);
        next.push_back(std::move(row));
      }
    out = std::move(next);
  }
  return out;
}

struct Intersector {
  const Signature& sig;
  NameSupply names;

  std::vector<Type> domains(const FlatContext& scope, const Term& h) const {
    Type t = h.is(Term::Kind::Const) ? sig.const_type(h.name()) : *lookup(scope, h.name());
    std::vector<Type> out;
    while (t.is_arrow()) {
      out.push_back(t.domain());
      Type next = t.codomain();
      t = next;
    }
    return out;
  }

  std::vector<Term> flex_rigid(FlatContext& scope, const LabeledVarList& phi, const Term& n) {
    Spine sp = spine_of(n);
    std::optional<std::string> param;
    if (sp.head.is(Term::Kind::Var)) {
      param = sp.head.name();
      // An irrelevant parameter cannot be the head of an instance.
      for (const auto& x : phi)
        if (x.name == *param && x.label == Label::Zero) return {};
    }
    std::vector<Type> doms = domains(scope, sp.head);
    std::vector<Term> out;
    for (const auto& split : enumerate_splittings(phi, sp.args.size(), param)) {
      std::vector<std::vector<Term>> choices;
      bool dead = false;
      for (std::size_t i = 0; i < sp.args.size() && !dead; ++i) {
        Term hi = flex_pattern(scope, split[i], doms[i], names, "H");
        choices.push_back(run(scope, hi, sp.args[i]));
        dead = choices.back().empty();
      }
      if (dead) continue;
      for (const auto& row : product(choices)) out.push_back(apply_spine(sp.head, row, sp.labels));
    }
    return out;
  }

  std::vector<Term> run(FlatContext& scope, const Term& m, const Term& n) {
    const bool mf = m.is(Term::Kind::EVar), nf = n.is(Term::Kind::EVar);
    if (mf && nf) {
      if (m.name() == n.name())
        throw Error("internal error: flex/flex pair with the same variable " + m.name());
      auto phi = meet_phi(m.args(), n.args());
      if (!phi) return {};
      Type base = m.evar_type()->target();
      return {Term::evar(names.fresh("H"), *phi, evar_type_for(scope, *phi, base))};
    }
    if (mf) return flex_rigid(scope, m.args(), n);
    if (nf) return flex_rigid(scope, n.args(), m);
    if (m.is(Term::Kind::Lam) || n.is(Term::Kind::Lam)) {
      if (!m.is(Term::Kind::Lam) || !n.is(Term::Kind::Lam)) return {};
      std::set<std::string> avoid;
      for (const auto& b : scope) avoid.insert(b.name);
      auto f1 = free_vars(m.body()), f2 = free_vars(n.body());
      f1.erase(m.name());
      f2.erase(n.name());
      avoid.insert(f1.begin(), f1.end());
      avoid.insert(f2.begin(), f2.end());
      std::string z = fresh_numbered(m.name(), avoid);
      Term mb = rename_free(m.body(), m.name(), z);
      Term nb = rename_free(n.body(), n.name(), z);
      scope.push_back({z, m.domain()});
      std::vector<Term> out;
      for (auto& q : run(scope, mb, nb)) out.push_back(Term::lam(z, Label::U, m.domain(), q));
      scope.pop_back();
      return out;
    }
    Spine ms = spine_of(m), ns = spine_of(n);
    if (ms.head.kind() != ns.head.kind() || ms.head.name() != ns.head.name()) return {};
    if (ms.args.size() != ns.args.size())
      throw Error("internal error: rigid heads applied to different numbers of arguments");
    std::vector<std::vector<Term>> choices;
    for (std::size_t i = 0; i < ms.args.size(); ++i) {
      choices.push_back(run(scope, ms.args[i], ns.args[i]));
      if (choices.back().empty()) return {};
    }
    std::vector<Term> out;
    for (const auto& row : product(choices)) out.push_back(apply_spine(ms.head, row, ms.labels));
    return out;
  }
};

bool same_context(const FlatContext& a, const FlatContext& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].name != b[i].name || a[i].type != b[i].type) return false;
  return true;
}

}  // namespace

PatternSet intersect(const Signature& sig, const SimpleLinearPattern& p1,
                     const SimpleLinearPattern& p2) {
  if (!same_context(p1.psi, p2.psi)) precondition("patterns live in different contexts");
  if (p1.type != p2.type) precondition("patterns have different types");
  require_simple_fragment(sig, p1.psi, p1.type);
  validate(sig, p1);
  validate(sig, p2);
  std::set<std::string> taken;
  for (const auto& e : evar_names(p1.term)) taken.insert(e);
  for (const auto& e : evar_names(p2.term))
    if (!taken.insert(e).second)
      precondition("existential variable '" + e + "' is shared; rename apart first");
  Intersector in{sig, NameSupply(taken)};
  FlatContext scope = p1.psi;
  PatternSet out{p1.psi, p1.type, in.run(scope, p1.term, p2.term)};
  return normalize(std::move(out));
}

}  // namespace strictpat
