#include "support.hpp"

#include "strictpat/io.hpp"
#include "strictpat/selftest.hpp"
#include "strictpat/text.hpp"

namespace strictpat::testing {

namespace {

Group make_group(std::string name, const char* sig_text, const char* ctx, const char* type,
                 std::vector<std::string> sources) {
  Signature sig = parse_signature(sig_text);
  FlatContext psi = parse_context(ctx, sig);
  Type a = parse_type(type, sig);
  Group g{std::move(name), sig, psi, a, std::move(sources), {}};
  for (const auto& s : g.sources) g.patterns.push_back(parse_pattern(sig, psi, a, s));
  return g;
}

std::vector<Group> build_corpus() {
  std::vector<Group> out;
  out.push_back(make_group(
      "lam", bundled::kLamSig, "", "exp",
      {
          "app @1 (lam @1 (\\x^u:exp. E[x^u])) @1 F[]",
          "lam @1 (\\x^u:exp. app @1 E[x^0] @1 x)",
          "lam @1 (\\x^u:exp. x)",
          "lam @1 (\\x^u:exp. E[x^1])",
          "lam @1 (\\x^u:exp. E[x^0])",
          "app @1 E[] @1 F[]",
          "app @1 (app @1 E[] @1 F[]) @1 G[]",
          "lam @1 (\\x^u:exp. lam @1 (\\y^u:exp. E[x^1, y^0]))",
          "lam @1 (\\x^u:exp. app @1 x @1 E[x^u])",
          "E[]",
          "lam @1 (\\x^u:exp. lam @1 (\\y^u:exp. app @1 E[x^u, y^1] @1 F[x^1, y^u]))",
          "app @1 (lam @1 (\\x^u:exp. x)) @1 E[]",
      }));
  out.push_back(make_group("lam-param", bundled::kLamSig, "z:exp", "exp",
                           {
                               "E[z^1]",
                               "app @1 E[z^0] @1 z",
                               "lam @1 (\\x^u:exp. E[z^u, x^1])",
                               "z",
                               "lam @1 (\\x^u:exp. app @1 E[z^1, x^0] @1 F[z^0, x^1])",
                           }));
  out.push_back(make_group("ab", bundled::kAbSig, "x:a, y:a", "a",
                           {
                               "E[x^0, y^1]",
                               "E[x^u, y^1]",
                               "E[x^1, y^1]",
                               "c @1 E[x^1, y^0]",
                               "c @1 (c @1 E[x^u, y^u])",
                               "b",
                               "x",
                               "E[x^0, y^0]",
                           }));
  out.push_back(make_group("ab-arrow", bundled::kAbSig, "x:a", "a ->u a",
                           {
                               "\\z^u:a. E[x^u, z^1]",
                               "\\z^u:a. c @1 E[x^0, z^u]",
                               "\\z^u:a. z",
                               "\\z^u:a. E[x^1, z^0]",
                           }));
  out.push_back(make_group("binary", bundled::kBinarySig, "x:a", "a",
                           {
                               "c @1 E[x^1] @1 F[x^0]",
                               "E[x^1]",
                               "c @1 E[x^u] @1 F[x^u]",
                               "c @1 (c @1 E[x^0] @1 F[x^u]) @1 G[x^u]",
                               "x",
                               "E[x^0]",
                           }));
  out.push_back(make_group("param-head", bundled::kBinarySig, "y:a ->1 a ->1 a", "a",
                           {
                               "y @1 F[y^1] @1 F'[y^u]",
                               "E[y^1]",
                               "E[y^0]",
                               "y @1 b @1 F[y^0]",
                               "c @1 E[y^1] @1 F[y^u]",
                           }));
  return out;
}

}  // namespace

const std::vector<Group>& corpus() {
  static const std::vector<Group> c = build_corpus();
  return c;
}

std::size_t corpus_size() {
  std::size_t n = 0;
  for (const auto& g : corpus()) n += g.patterns.size();
  return n;
}

SimpleLinearPattern pattern(const Group& g, const std::string& text) {
  return parse_pattern(g.sig, g.psi, g.type, text);
}

PatternSet singleton(const Group& g, const SimpleLinearPattern& p) {
  return PatternSet{g.psi, g.type, {p.term}};
}

const std::vector<Term>& CandidateGenerator::of_size(std::size_t size) {
  while (by_size_.size() <= size) {
    std::size_t n = by_size_.size();
    std::vector<Term> out;
    if (n == 1) {
      for (const auto& c : space_.constants) out.push_back(Term::constant(c));
      for (const auto& v : space_.variables) out.push_back(Term::var(v));
    } else if (n >= 2) {
      for (const auto& x : space_.binders)
        for (Label k : {Label::One, Label::Zero, Label::U})
          for (const auto& d : space_.domains)
            for (const auto& body : by_size_[n - 1]) out.push_back(Term::lam(x, k, d, body));
      for (std::size_t i = 1; i + 1 < n; ++i)
        for (const auto& f : by_size_[i])
          for (const auto& a : by_size_[n - 1 - i])
            for (Label k : {Label::One, Label::Zero, Label::U}) out.push_back(Term::app(f, a, k));
    }
    by_size_.push_back(std::move(out));
  }
  return by_size_[size];
}

std::size_t node_count(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Lam: return 1 + node_count(m.body());
    case Term::Kind::App: return 1 + node_count(m.fun()) + node_count(m.arg());
    default: return 1;
  }
}

std::optional<Term> beta_step_anywhere(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Lam:
      if (auto b = beta_step_anywhere(m.body()))
        return Term::lam(m.name(), m.label(), m.domain(), *b);
      return std::nullopt;
    case Term::Kind::App:
      if (m.fun().is(Term::Kind::Lam)) return subst(m.arg(), m.fun().name(), m.fun().body());
      if (auto f = beta_step_anywhere(m.fun())) return Term::app(*f, m.arg(), m.label());
      if (auto a = beta_step_anywhere(m.arg())) return Term::app(m.fun(), *a, m.label());
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::vector<ZonedContext> all_zonings(const FlatContext& vars) {
  std::vector<ZonedContext> out{ZonedContext{}};
  for (const auto& b : vars) {
    std::vector<ZonedContext> next;
    for (const auto& z : out) {
      next.push_back(z);
      auto g = z, o = z, d = z;
      g.gamma.emplace(b.name, b.type);
      o.omega.emplace(b.name, b.type);
      d.delta.emplace(b.name, b.type);
      next.push_back(g);
      next.push_back(o);
      next.push_back(d);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<bool> memberships(const Signature& sig, const std::vector<Term>& terms,
                              const PatternSet& s) {
  std::vector<bool> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(member_set(sig, t, s));
  return out;
}

}  // namespace strictpat::testing
