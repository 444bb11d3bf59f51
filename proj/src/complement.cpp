#include "strictpat/complement.hpp"

#include <deque>

#include "strictpat/algebra.hpp"
#include "strictpat/intersect.hpp"
#include "strictpat/text.hpp"

namespace strictpat {

std::optional<Label> not_label(Label k) {
  switch (k) {
    case Label::One: return Label::Zero;
    case Label::Zero: return Label::One;
    case Label::U: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<LabeledVarList> not_phi_i(const LabeledVarList& phi, std::size_t i) {
  if (i >= phi.size()) throw Error("not_phi_i: index out of range");
  auto k = not_label(phi[i].label);
  if (!k) return std::nullopt;
  LabeledVarList out;
  for (std::size_t j = 0; j < phi.size(); ++j)
    out.push_back({phi[j].name, j == i ? *k : Label::U});
  return out;
}

std::string ComplementRuleTag::to_string() const {
  switch (kind) {
    case Kind::NotFlx: return "NotFlx" + std::to_string(index + 1);
    case Kind::NotLam: return "NotLam";
    case Kind::NotApp1: return "NotApp1(" + head + ")";
    case Kind::NotApp2: return "NotApp2." + std::to_string(index + 1);
  }
  return "?";
}

namespace {

using Tag = ComplementRuleTag;

struct Complementer {
  const Signature& sig;
  NameSupply names;

  // Heads g of Σ ∪ scope with an all-strict spine ending in `a`, in order.
  std::vector<std::pair<Term, Type>> heads(const FlatContext& scope, const Type& a) const {
    std::vector<std::pair<Term, Type>> out;
    auto fits = [&](Type t) {
      while (t.is_arrow()) {
        if (t.label() != Label::One) return false;
        Type next = t.codomain();
        t = next;
      }
      return t == a;
    };
    for (const auto& c : sig.constants())
      if (fits(sig.const_type(c))) out.emplace_back(Term::constant(c), sig.const_type(c));
    for (const auto& b : scope)
      if (fits(b.type)) out.emplace_back(Term::var(b.name), b.type);
    return out;
  }

  Term generic(const FlatContext& scope, const Type& a) {
    return generic_pattern(scope, a, names, "Z");
  }

  std::vector<TracedPattern> run(FlatContext& scope, const Term& p, const Type& a) {
    std::vector<TracedPattern> out;
    switch (p.kind()) {
      case Term::Kind::EVar:
        for (std::size_t i = 0; i < p.args().size(); ++i)
          if (auto phi = not_phi_i(p.args(), i))
            out.push_back({Term::evar(names.fresh("Z"), *phi, evar_type_for(scope, *phi, a)),
                           {Tag{Tag::Kind::NotFlx, i, {}}}});
        return out;
      case Term::Kind::Lam: {
        scope.push_back({p.name(), p.domain()});
        for (auto& n : run(scope, p.body(), a.codomain())) {
          n.trace.insert(n.trace.begin(), Tag{Tag::Kind::NotLam, 0, {}});
          out.push_back({Term::lam(p.name(), Label::U, p.domain(), n.term), std::move(n.trace)});
        }
        scope.pop_back();
        return out;
      }
      default:
        break;
    }
    Spine sp = spine_of(p);
    const Term& h = sp.head;
    for (const auto& [g, gt] : heads(scope, a)) {
      if (g.kind() == h.kind() && g.name() == h.name()) continue;
      std::vector<Term> args;
      Type t = gt;
      while (t.is_arrow()) {
        args.push_back(generic(scope, t.domain()));
        Type next = t.codomain();
        t = next;
      }
      out.push_back({apply_spine(g, args, std::vector<Label>(args.size(), Label::One)),
                     {Tag{Tag::Kind::NotApp1, 0, g.name()}}});
    }
    Type ht = h.is(Term::Kind::Const) ? sig.const_type(h.name()) : *lookup(scope, h.name());
    std::vector<Type> doms;
    for (Type t = ht; t.is_arrow();) {
      doms.push_back(t.domain());
      Type next = t.codomain();
      t = next;
    }
    for (std::size_t i = 0; i < sp.args.size(); ++i) {
      for (auto& n : run(scope, sp.args[i], doms[i])) {
        std::vector<Term> args;
        for (std::size_t j = 0; j < sp.args.size(); ++j)
          args.push_back(j == i ? n.term : generic(scope, doms[j]));
        n.trace.insert(n.trace.begin(), Tag{Tag::Kind::NotApp2, i, {}});
        out.push_back({apply_spine(h, args, sp.labels), std::move(n.trace)});
      }
    }
    return out;
  }
};

}  // namespace

std::vector<TracedPattern> complement_traced(const Signature& sig, const SimpleLinearPattern& p) {
  require_simple_fragment(sig, p.psi, p.type);
  validate(sig, p);
  std::set<std::string> taken;
  for (const auto& e : evar_names(p.term)) taken.insert(e);
  Complementer c{sig, NameSupply(taken)};
  FlatContext scope = p.psi;
  return c.run(scope, p.term, p.type);
}

PatternSet complement(const Signature& sig, const SimpleLinearPattern& p) {
  PatternSet s{p.psi, p.type, {}};
  for (auto& n : complement_traced(sig, p)) s.members.push_back(std::move(n.term));
  return normalize(std::move(s));
}

namespace {

// Every u in every argument list resolved to 1 and to 0.
std::vector<Term> expand_undetermined(const Term& m) {
  std::vector<Term> out{m};
  for (const auto& e : evar_names(m)) {
    std::vector<Term> next;
    for (const auto& t : out) {
      std::vector<LabeledVarList> phis;
      map_evars(t, [&](const Term& v) {
        if (v.name() == e) {
          phis.push_back({});
          for (const auto& x : v.args()) {
            std::size_t n = phis.size();
            for (std::size_t j = 0; j < n; ++j) {
              if (x.label == Label::U) {
                LabeledVarList alt = phis[j];
                alt.push_back({x.name, Label::Zero});
                phis.push_back(std::move(alt));
                phis[j].push_back({x.name, Label::One});
              } else {
                phis[j].push_back(x);
              }
            }
          }
        }
        return v;
      });
      for (const auto& phi : phis)
        next.push_back(map_evars(t, [&](const Term& v) {
          if (v.name() != e) return v;
          Type ty = *v.evar_type();
          // Rebuild the labels of the full type to match the new Φ.
          std::vector<Type> doms;
          for (std::size_t i = 0; i < phi.size(); ++i) {
            doms.push_back(ty.domain());
            Type rest = ty.codomain();
            ty = rest;
          }
          for (std::size_t i = phi.size(); i-- > 0;) ty = Type::arrow(doms[i], phi[i].label, ty);
          return Term::evar(v.name(), phi, ty);
        }));
    }
    out = std::move(next);
  }
  return out;
}

// Hard cap on refinement rounds; exceeding it is a bug, not a truncation.
constexpr std::size_t kExclusiveRoundCap = 100000;

}  // namespace

PatternSet make_exclusive(const Signature& sig, const PatternSet& s) {
  std::deque<Term> work;
  for (const auto& m : s.members)
    for (auto& t : expand_undetermined(m)) work.push_back(std::move(t));
  PatternSet out{s.psi, s.type, {}};
  std::set<std::string> keys;
  std::size_t rounds = 0;
  while (!work.empty()) {
    if (++rounds > kExclusiveRoundCap) throw Error("make_exclusive did not converge");
    Term c = work.front();
    work.pop_front();
    if (keys.count(pattern_key(c))) continue;
    std::optional<std::size_t> overlap;
    for (std::size_t i = 0; i < out.members.size() && !overlap; ++i) {
      std::set<std::string> taken;
      for (const auto& e : evar_names(out.members[i])) taken.insert(e);
      Term ca = rename_evars_apart(c, taken);
      if (!intersect(sig, out.at(i), {ca, s.psi, s.type}).empty()) overlap = i;
    }
    if (!overlap) {
      keys.insert(pattern_key(c));
      out.members.push_back(c);
      continue;
    }
    PatternSet piece{s.psi, s.type, {c}};
    PatternSet other{s.psi, s.type, {out.members[*overlap]}};
    for (const auto& r : relative_complement(sig, piece, other).members)
      for (auto& t : expand_undetermined(r)) work.push_back(std::move(t));
  }
  return normalize(std::move(out));
}

}  // namespace strictpat
