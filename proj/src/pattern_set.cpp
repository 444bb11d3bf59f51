#include "strictpat/pattern_set.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "strictpat/text.hpp"

namespace strictpat {

namespace {

struct KeyBuilder {
  std::vector<std::string> binders;
  std::map<std::string, std::size_t> evars;
  std::string out;

  void var(const std::string& x) {
    for (std::size_t i = binders.size(); i-- > 0;)
      if (binders[i] == x) {
        out += '#' + std::to_string(i);
        return;
      }
    out += x;
  }

  void run(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Const:
        out += t.name();
        break;
      case Term::Kind::Var:
        var(t.name());
        break;
      case Term::Kind::Lam:
        out += "(\\";
        out += label_char(t.label());
        out += print_type(t.domain());
        out += '.';
        binders.push_back(t.name());
        run(t.body());
        binders.pop_back();
        out += ')';
        break;
      case Term::Kind::App:
        out += '(';
        run(t.fun());
        out += " @";
        out += label_char(t.label());
        out += ' ';
        run(t.arg());
        out += ')';
        break;
      case Term::Kind::EVar: {
        auto [it, _] = evars.emplace(t.name(), evars.size());
        out += "?" + std::to_string(it->second) + "[";
        for (const auto& x : t.args()) {
          var(x.name);
          out += '^';
          out += label_char(x.label);
          out += ',';
        }
        out += ']';
        break;
      }
    }
  }
};

}  // namespace

std::string pattern_key(const Term& p) {
  KeyBuilder k;
  k.run(p);
  return k.out;
}

bool same_pattern(const Term& a, const Term& b) { return pattern_key(a) == pattern_key(b); }

Term rename_evars_apart(const Term& p, std::set<std::string>& taken) {
  std::map<std::string, std::string> renaming;
  for (const auto& e : evar_names(p)) {
    std::string n = fresh_numbered(e, taken);
    taken.insert(n);
    renaming.emplace(e, n);
  }
  return map_evars(p, [&](const Term& e) {
    return Term::evar(renaming.at(e.name()), e.args(), e.evar_type());
  });
}

SimpleLinearPattern rename_apart(const SimpleLinearPattern& p,
                                 const std::set<std::string>& taken) {
  std::set<std::string> t = taken;
  return {rename_evars_apart(p.term, t), p.psi, p.type};
}

namespace {

// "H12" and "E'" become "H" and "E".
std::string evar_base(const std::string& name) {
  std::size_t end = name.size();
  while (end > 1 && (std::isdigit(static_cast<unsigned char>(name[end - 1])) || name[end - 1] == '\''))
    --end;
  return name.substr(0, end);
}

}  // namespace

PatternSet normalize(PatternSet s) {
  std::map<std::string, Term> by_key;
  for (const auto& m : s.members) by_key.emplace(pattern_key(m), m);
  // Renumber per base name in key order so that output names are small and
  // independent of how the members were produced.
  std::set<std::string> taken;
  std::vector<Term> out;
  for (const auto& [_, m] : by_key) {
    std::map<std::string, std::string> renaming;
    for (const auto& e : evar_names(m)) {
      std::string n = fresh_numbered(evar_base(e), taken);
      taken.insert(n);
      renaming.emplace(e, n);
    }
    out.push_back(map_evars(m, [&](const Term& e) {
      return Term::evar(renaming.at(e.name()), e.args(), e.evar_type());
    }));
  }
  s.members = std::move(out);
  return s;
}

std::vector<std::string> printed_members(const PatternSet& s) {
  std::vector<std::string> out;
  for (const auto& m : s.members) out.push_back(print_term(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::string NameSupply::fresh(const std::string& base) {
  std::string n = fresh_numbered(base, taken_);
  taken_.insert(n);
  return n;
}

Term flex_pattern(const FlatContext& scope, LabeledVarList phi, const Type& a, NameSupply& names,
                  const std::string& base) {
  if (a.is_arrow()) {
    std::set<std::string> avoid;
    for (const auto& b : scope) avoid.insert(b.name);
    std::string y = fresh_numbered("y", avoid);
    FlatContext inner = scope;
    inner.push_back({y, a.domain()});
    phi.push_back({y, Label::U});
    return Term::lam(y, Label::U, a.domain(),
                     flex_pattern(inner, std::move(phi), a.codomain(), names, base));
  }
  return Term::evar(names.fresh(base), phi, evar_type_for(scope, phi, a));
}

Term generic_pattern(const FlatContext& scope, const Type& a, NameSupply& names,
                     const std::string& base) {
  LabeledVarList phi;
  for (const auto& b : scope) phi.push_back({b.name, Label::U});
  return flex_pattern(scope, std::move(phi), a, names, base);
}

}  // namespace strictpat
