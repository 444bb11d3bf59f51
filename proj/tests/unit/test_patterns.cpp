#include <doctest.h>

#include "strictpat/algebra.hpp"
#include "strictpat/io.hpp"
#include "strictpat/selftest.hpp"
#include "strictpat/text.hpp"
#include "strictpat/typing.hpp"
#include "support.hpp"

using namespace strictpat;

namespace {

const Signature& plain() {
  static const Signature s = parse_signature(bundled::kLamPlainSig, Dialect::Plain);
  return s;
}

const Signature& lam() {
  static const Signature s = parse_signature(bundled::kLamSig);
  return s;
}

}  // namespace

TEST_CASE("embed_type") {
  Signature s = parse_signature("a : type. exp : type.", Dialect::Plain);
  Type hi = parse_type("(exp -> exp) -> exp", s, Dialect::Plain);
  CHECK(print_type(embed_type(hi, Polarity::Pos)) == "(exp ->u exp) ->1 exp");
  Type atom = parse_type("a", s, Dialect::Plain);
  CHECK(embed_type(atom, Polarity::Pos) == atom);
  CHECK(embed_type(atom, Polarity::Neg) == atom);
  Type t = parse_type("(a -> a) -> (a -> a)", s, Dialect::Plain);
  CHECK(print_type(embed_type(t, Polarity::Pos)) == "(a ->u a) ->1 a ->1 a");
  CHECK(print_type(embed_type(t, Polarity::Neg)) == "(a ->1 a) ->u a ->u a");
  CHECK(is_positive(embed_type(t, Polarity::Pos)));
  CHECK(is_negative(embed_type(t, Polarity::Neg)));
  CHECK_FALSE(is_positive(embed_type(t, Polarity::Neg)));
}

TEST_CASE("embed_term") {
  std::set<std::string> none;
  Term m = parse_term("lam (\\x:exp. lam (\\y:exp. x))", plain(), {Dialect::Plain, &none});
  Term e = embed_term(plain(), {}, m, parse_type("exp", plain(), Dialect::Plain));
  CHECK(alpha_eq(e, parse_term("lam @1 (\\x^u:exp. lam @1 (\\y^u:exp. x))", lam())));

  FlatContext psi = parse_context("x:exp, y:exp", plain(), Dialect::Plain);
  std::set<std::string> xy{"x", "y"};
  Term ev = embed_term(plain(), psi, parse_term("E[x, y]", plain(), {Dialect::Plain, &xy}),
                       parse_type("exp", plain(), Dialect::Plain));
  REQUIRE(ev.is(Term::Kind::EVar));
  CHECK(ev.args() == LabeledVarList{{"x", Label::U}, {"y", Label::U}});

  Term redex = parse_term("(\\x:exp. x) (lam (\\y:exp. y))", plain(), {Dialect::Plain, &none});
  CHECK_THROWS_AS(embed_term(plain(), {}, redex, parse_type("exp", plain(), Dialect::Plain)),
                  PatternError);
}

TEST_CASE("fully_apply inserts vacuous arguments") {
  std::set<std::string> none;
  Term p = parse_term("lam @1 (\\x^u:exp. app @1 E[] @1 x)", lam(), {Dialect::Strict, &none});
  SimpleLinearPattern q = fully_apply(lam(), {}, p, parse_type("exp", lam()));
  Term expect = parse_term("lam @1 (\\x^u:exp. app @1 E'[x^0] @1 x)", lam());
  CHECK(print_term(q.term) == print_term(expect));
  CHECK_NOTHROW(validate(lam(), q));

  // Already fully applied: unchanged.
  SimpleLinearPattern r = fully_apply(lam(), {}, q.term, q.type);
  CHECK(same_pattern(r.term, q.term));

  // η-expansion at arrow type.
  SimpleLinearPattern s =
      fully_apply(lam(), {}, parse_term("lam @1 E[]", lam()), parse_type("exp", lam()));
  CHECK(same_pattern(s.term, parse_pattern(lam(), {}, parse_type("exp", lam()),
                                           "lam @1 (\\y^u:exp. E[y^u])")
                                 .term));
}

TEST_CASE("fully_apply and validate reject bad patterns") {
  Type exp = parse_type("exp", lam());
  auto kind_of = [&](const char* src) {
    try {
      fully_apply(lam(), {}, parse_term(src, lam()), exp);
    } catch (const PatternError& e) {
      return e.kind();
    }
    FAIL("accepted ", src);
    return PatternError::Kind::Mismatch;
  };
  CHECK(kind_of("app @1 E[] @1 E[]") == PatternError::Kind::NotLinear);
  CHECK(kind_of("lam @1 (\\x^1:exp. x)") == PatternError::Kind::NotSimple);
  CHECK(kind_of("app @u E[] @1 F[]") == PatternError::Kind::NotSimple);

  Signature ab_u = parse_signature(bundled::kAbUSig);
  FlatContext psi = parse_context("x:a", ab_u);
  CHECK_THROWS_AS(require_simple_fragment(ab_u, psi, parse_type("a", ab_u)), PatternError);
  CHECK_NOTHROW(require_simple_fragment(lam(), {}, exp));
}

TEST_CASE("standard scope and EVar types") {
  Signature ab = parse_signature(bundled::kAbSig);
  Type a = parse_type("a", ab);
  FlatContext scope = standard_scope(parse_context("x:a, y:a", ab), {{"z", a}});
  REQUIRE(scope.size() == 3);
  CHECK(scope[2].name == "z");
  Type t = evar_type_for(scope, {{"x", Label::One}, {"y", Label::Zero}, {"z", Label::U}}, a);
  CHECK(print_type(t) == "a ->1 a ->0 a ->u a");
}

TEST_CASE("match_ground on a vacuous argument") {
  Signature ab = parse_signature(bundled::kAbUSig);
  FlatContext psi = parse_context("x:a", ab);
  Type a = parse_type("a", ab);
  Type et = parse_type("a ->0 a", ab);
  SimpleLinearPattern p{Term::evar("E", {{"x", Label::Zero}}, et), psi, a};
  std::set<std::string> known{"x"};
  auto g = [&](const char* s) { return parse_term(s, ab, {Dialect::Strict, &known}); };
  CHECK(match_ground(ab, g("b"), p));
  CHECK(match_ground(ab, g("c @u b"), p));
  CHECK_FALSE(match_ground(ab, g("x"), p));
  CHECK_FALSE(match_ground(ab, g("c @u x"), p));
}

TEST_CASE("ground patterns match only themselves") {
  Type exp = parse_type("exp", lam());
  auto terms = enumerate_ground(lam(), {}, exp, 4);
  for (std::size_t i = 0; i < terms.size(); i += 7) {
    SimpleLinearPattern p{terms[i], {}, exp};
    for (const auto& m : terms) REQUIRE(match_ground(lam(), m, p) == alpha_eq(m, terms[i]));
  }
}

TEST_CASE("matching an existential variable yields a closed witness") {
  // λΦ.m is a closed term of the variable's type.
  std::size_t witnesses = 0;
  for (const auto& g : testing::corpus()) {
    for (const auto& p : g.patterns) {
      if (!p.term.is(Term::Kind::EVar)) continue;
      for (const auto& m : enumerate_ground(g.sig, g.psi, g.type, 4)) {
        if (!match_ground(g.sig, m, p)) continue;
        Term w = m;
        const auto& phi = p.term.args();
        for (std::size_t i = phi.size(); i-- > 0;)
          w = Term::lam(phi[i].name, phi[i].label, *lookup(g.psi, phi[i].name), w);
        REQUIRE(free_vars(w).empty());
        REQUIRE_MESSAGE(typechecks(ZonedContext{}, g.sig, w, *p.term.evar_type()),
                        print_term(w));
        ++witnesses;
      }
    }
  }
  CHECK(witnesses > 20);
}

TEST_CASE("fully_apply preserves ground instances") {
  // lam (λx. app E x) with E not depending on x: instances are exactly
  // lam (λx. app M x) with x not free in M.
  Type exp = parse_type("exp", lam());
  SimpleLinearPattern full =
      fully_apply(lam(), {}, parse_term("lam @1 (\\x^u:exp. app @1 E[] @1 x)", lam()), exp);
  auto reference = [](const Term& m) {
    if (!m.is(Term::Kind::App) || !m.fun().is(Term::Kind::Const)) return false;
    const Term& l = m.arg();
    if (!l.is(Term::Kind::Lam)) return false;
    Spine sp = spine_of(l.body());
    if (!sp.head.is(Term::Kind::Const) || sp.head.name() != "app" || sp.args.size() != 2)
      return false;
    const Term& last = sp.args[1];
    return last.is(Term::Kind::Var) && last.name() == l.name() &&
           !free_vars(sp.args[0]).count(l.name());
  };
  std::size_t hits = 0;
  for (const auto& m : enumerate_ground(lam(), {}, exp, 5)) {
    bool ref = reference(m) && m.fun().name() == "lam";
    REQUIRE_MESSAGE(match_ground(lam(), m, full) == ref, print_term(m));
    hits += ref;
  }
  CHECK(hits > 0);
}
