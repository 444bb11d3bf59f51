#include "strictpat/algebra.hpp"

#include <algorithm>
#include <map>

#include "strictpat/complement.hpp"
#include "strictpat/intersect.hpp"
#include "strictpat/text.hpp"

namespace strictpat {

namespace {

void require_same_carrier(const PatternSet& s1, const PatternSet& s2) {
  bool same = s1.type == s2.type && s1.psi.size() == s2.psi.size();
  for (std::size_t i = 0; same && i < s1.psi.size(); ++i)
    same = s1.psi[i].name == s2.psi[i].name && s1.psi[i].type == s2.psi[i].type;
  if (!same)
    throw PatternError(PatternError::Kind::Mismatch, "pattern sets differ in context or type");
}

}  // namespace

PatternSet make_set(const Signature& sig, const FlatContext& psi, const Type& a,
                    const std::vector<Term>& patterns) {
  PatternSet s{psi, a, {}};
  for (const auto& p : patterns) s.members.push_back(fully_apply(sig, psi, p, a).term);
  return normalize(std::move(s));
}

PatternSet top(const FlatContext& psi, const Type& a) {
  NameSupply names;
  return {psi, a, {generic_pattern(psi, a, names, "E")}};
}

PatternSet bottom(const FlatContext& psi, const Type& a) { return {psi, a, {}}; }

PatternSet set_union(const PatternSet& s1, const PatternSet& s2) {
  require_same_carrier(s1, s2);
  PatternSet out = s1;
  out.members.insert(out.members.end(), s2.members.begin(), s2.members.end());
  return normalize(std::move(out));
}

PatternSet set_intersect(const Signature& sig, const PatternSet& s1, const PatternSet& s2) {
  require_same_carrier(s1, s2);
  PatternSet out{s1.psi, s1.type, {}};
  for (std::size_t i = 0; i < s1.size(); ++i) {
    SimpleLinearPattern p1 = s1.at(i);
    std::set<std::string> taken;
    for (const auto& e : evar_names(p1.term)) taken.insert(e);
    for (std::size_t j = 0; j < s2.size(); ++j) {
      PatternSet q = intersect(sig, p1, rename_apart(s2.at(j), taken));
      out.members.insert(out.members.end(), q.members.begin(), q.members.end());
    }
  }
  return normalize(std::move(out));
}

PatternSet set_complement(const Signature& sig, const PatternSet& s) {
  if (s.empty()) return top(s.psi, s.type);
  PatternSet acc = complement(sig, s.at(0));
  for (std::size_t i = 1; i < s.size() && !acc.empty(); ++i)
    acc = set_intersect(sig, acc, complement(sig, s.at(i)));
  return acc;
}

PatternSet relative_complement(const Signature& sig, const PatternSet& s1, const PatternSet& s2) {
  require_same_carrier(s1, s2);
  if (s1.empty()) return s1;
  return set_intersect(sig, s1, set_complement(sig, s2));
}

bool member_set(const Signature& sig, const Term& m, const PatternSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (match_ground(sig, m, s.at(i))) return true;
  return false;
}

std::size_t term_size(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Const:
    case Term::Kind::Var: return 1;
    case Term::Kind::Lam: return term_size(m.body());
    case Term::Kind::App: return term_size(m.fun()) + term_size(m.arg());
    case Term::Kind::EVar: return 0;
  }
  return 0;
}

// --- ground enumeration ---------------------------------------------------

namespace {

struct Ground {
  Term term;
  std::size_t size;
  std::set<std::string> strict;  // variables with a strict occurrence
  std::set<std::string> used;    // variables occurring outside vacuous arguments
};

class Enumerator {
 public:
  Enumerator(const Signature& sig) : sig_(sig) {
    for (const auto& d : sig.decls()) reserved_.insert(d.name);
  }

  const std::vector<Ground>& gen(const FlatContext& scope, const Type& a, std::size_t budget) {
    std::string key = print_context(scope) + "|" + print_type(a) + "|" + std::to_string(budget);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Ground> out = a.is_arrow() ? abstraction(scope, a, budget) : atomic(scope, a, budget);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  std::vector<Ground> abstraction(const FlatContext& scope, const Type& a, std::size_t budget) {
    std::set<std::string> avoid = reserved_;
    for (const auto& b : scope) avoid.insert(b.name);
    std::string x = fresh_numbered("x", avoid);
    FlatContext inner = scope;
    inner.push_back({x, a.domain()});
    std::vector<Ground> out;
    for (const auto& g : gen(inner, a.codomain(), budget)) {
      if (a.label() == Label::One && !g.strict.count(x)) continue;
      if (a.label() == Label::Zero && g.used.count(x)) continue;
      Ground r{Term::lam(x, a.label(), a.domain(), g.term), g.size, g.strict, g.used};
      r.strict.erase(x);
      r.used.erase(x);
      out.push_back(std::move(r));
    }
    return out;
  }

  std::vector<Ground> atomic(const FlatContext& scope, const Type& a, std::size_t budget) {
    std::vector<Ground> out;
    if (budget == 0) return out;
    auto try_head = [&](const Term& h, const Type& ht) {
      std::vector<Type> doms;
      std::vector<Label> labels;
      Type t = ht;
      while (t.is_arrow()) {
        doms.push_back(t.domain());
        labels.push_back(t.label());
        Type next = t.codomain();
        t = next;
      }
      if (t != a) return;
      Ground start{h, 1, {}, {}};
      if (h.is(Term::Kind::Var)) start.strict = start.used = {h.name()};
      extend(scope, doms, labels, 0, budget, start, out);
    };
    for (const auto& c : sig_.constants()) try_head(Term::constant(c), sig_.const_type(c));
    // Innermost binding wins; shadowed names never arise from fresh binders.
    for (const auto& b : scope) try_head(Term::var(b.name), b.type);
    return out;
  }

  void extend(const FlatContext& scope, const std::vector<Type>& doms,
              const std::vector<Label>& labels, std::size_t i, std::size_t budget,
              const Ground& acc, std::vector<Ground>& out) {
    if (i == doms.size()) {
      out.push_back(acc);
      return;
    }
    std::size_t rest_min = doms.size() - i - 1;  // each later argument costs ≥ 1
    if (acc.size + 1 + rest_min > budget) return;
    std::size_t room = budget - acc.size - rest_min;
    // Copy: gen() may rehash the memo table during recursion.
    std::vector<Ground> args = gen(scope, doms[i], room);
    for (const auto& g : args) {
      Ground next{Term::app(acc.term, g.term, labels[i]), acc.size + g.size, acc.strict, acc.used};
      if (labels[i] == Label::One) next.strict.insert(g.strict.begin(), g.strict.end());
      if (labels[i] != Label::Zero) next.used.insert(g.used.begin(), g.used.end());
      extend(scope, doms, labels, i + 1, budget, next, out);
    }
  }

  const Signature& sig_;
  std::set<std::string> reserved_;
  std::map<std::string, std::vector<Ground>> memo_;
};

}  // namespace

std::vector<Term> enumerate_ground(const Signature& sig, const FlatContext& psi, const Type& a,
                                   std::size_t max_size) {
  Enumerator e(sig);
  std::vector<Ground> all = e.gen(psi, a, max_size);
  std::stable_sort(all.begin(), all.end(),
                   [](const Ground& x, const Ground& y) { return x.size < y.size; });
  std::vector<Term> out;
  out.reserve(all.size());
  for (auto& g : all) out.push_back(std::move(g.term));
  return out;
}

BoundedEquality extensional_eq(const Signature& sig, const PatternSet& s1, const PatternSet& s2,
                               std::size_t max_size) {
  require_same_carrier(s1, s2);
  BoundedEquality r{true, 0, max_size, std::nullopt};
  for (const auto& m : enumerate_ground(sig, s1.psi, s1.type, max_size)) {
    ++r.terms_checked;
    if (member_set(sig, m, s1) != member_set(sig, m, s2)) {
      r.equal = false;
      r.witness = m;
      return r;
    }
  }
  return r;
}

std::vector<Clause> clause_complement(const Signature& sig, const FlatContext& psi,
                                      const Type& a, const std::vector<Clause>& program) {
  if (program.empty()) throw Error("clause_complement: empty program");
  const std::string& pred = program.front().predicate;
  std::vector<Term> heads;
  for (const auto& c : program) {
    if (c.predicate != pred)
      throw Error("clause_complement: clauses define different predicates");
    heads.push_back(c.head);
  }
  PatternSet neg = set_complement(sig, make_set(sig, psi, a, heads));
  std::vector<std::pair<std::string, Term>> sorted;
  for (const auto& m : neg.members) sorted.emplace_back(print_term(m), m);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Clause> out;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    out.push_back({"nb" + std::to_string(i + 1), "non_" + pred, sorted[i].second});
  return out;
}

}  // namespace strictpat
