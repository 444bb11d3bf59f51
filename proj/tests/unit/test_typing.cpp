#include <doctest.h>

#include <algorithm>

#include "strictpat/selftest.hpp"
#include "strictpat/text.hpp"
#include "strictpat/typing.hpp"

using namespace strictpat;

namespace {

const Signature& sig() {
  static const Signature s = parse_signature(bundled::kTypingSig);
  return s;
}

Type ty(const char* src) { return parse_type(src, sig()); }

Term term(const char* src, const ZonedContext& z) {
  static std::set<std::string> known;
  known.clear();
  for (const auto* zone : {&z.gamma, &z.omega, &z.delta})
    for (const auto& [x, _] : *zone) known.insert(x);
  return parse_term(src, sig(), {Dialect::Strict, &known});
}

TypingErrorKind error_of(const ZonedContext& z, const Term& m, const Type& a) {
  try {
    check(z, sig(), m, a);
  } catch (const TypingError& e) {
    return e.kind();
  }
  FAIL("term was accepted");
  return TypingErrorKind::TypeMismatch;
}

ZonedContext contraction_ctx() {
  ZonedContext z;
  z.delta.emplace("x", ty("A ->1 A ->1 B"));
  z.delta.emplace("y", ty("A"));
  return z;
}

}  // namespace

TEST_CASE("contraction: a strict variable may pay in both arguments") {
  ZonedContext z = contraction_ctx();
  Term m = term("x @1 y @1 y", z);
  CHECK(typechecks(z, sig(), m, ty("B")));
  CHECK(check_declarative(z, sig(), m, ty("B")));
  auto outcomes = strict_split_outcomes(z, sig(), m, ty("B"));
  REQUIRE(outcomes.size() == 4);
  CHECK(std::count(outcomes.begin(), outcomes.end(), true) == 2);
}

TEST_CASE("a strict variable under an unrestricted application is unused") {
  ZonedContext z;
  z.gamma.emplace("y", ty("A ->u B"));
  z.delta.emplace("x", ty("A"));
  Term m = term("y @u x", z);
  CHECK(error_of(z, m, ty("B")) == TypingErrorKind::StrictVarUnused);
  CHECK_FALSE(check_declarative(z, sig(), m, ty("B")));
}

TEST_CASE("irrelevant variables may only appear in vacuous arguments") {
  ZonedContext z;
  z.omega.emplace("x", ty("A"));
  Term m = term("(\\y^0:A. c) @0 x", z);
  CHECK(typechecks(z, sig(), m, ty("B")));
  CHECK(check_declarative(z, sig(), m, ty("B")));
  CHECK(error_of(ZonedContext{}, parse_term("(\\y^0:A. c) @0 x", sig()), ty("B")) ==
        TypingErrorKind::UnknownIdent);

  ZonedContext w;
  w.gamma.emplace("f", ty("A ->u B"));
  w.omega.emplace("x", ty("A"));
  CHECK(error_of(w, term("f @u x", w), ty("B")) == TypingErrorKind::IrrelevantVarUsed);
}

TEST_CASE("identity abstractions at each label") {
  ZonedContext e;
  CHECK(typechecks(e, sig(), term("\\x^1:A. x", e), ty("A ->1 A")));
  CHECK(check_declarative(e, sig(), term("\\x^1:A. x", e), ty("A ->1 A")));
  CHECK(typechecks(e, sig(), term("\\x^u:A. x", e), ty("A ->u A")));
  CHECK(error_of(e, term("\\x^0:A. x", e), ty("A ->0 A")) == TypingErrorKind::IrrelevantVarUsed);
  CHECK(error_of(e, term("\\x^1:A. c", e), ty("A ->1 B")) == TypingErrorKind::StrictVarUnused);
  CHECK(error_of(e, term("\\x^1:A. x", e), ty("A ->u A")) == TypingErrorKind::TypeMismatch);
  Signature s = parse_signature("a : type. b : a. c : a ->1 a.");
  try {
    check(ZonedContext{}, s, parse_term("c @u b", s), parse_type("a", s));
    FAIL("accepted");
  } catch (const TypingError& err) {
    CHECK(err.kind() == TypingErrorKind::LabelMismatch);
  }
  CHECK(error_of(e, term("c", e), ty("A")) == TypingErrorKind::TypeMismatch);
}

TEST_CASE("zone conditions at the identity rules") {
  ZonedContext z;
  z.delta.emplace("x", ty("A"));
  z.delta.emplace("y", ty("A"));
  CHECK(error_of(z, term("x", z), ty("A")) == TypingErrorKind::StrictVarUnused);
  ZonedContext d;
  d.delta.emplace("x", ty("A"));
  CHECK(error_of(d, term("c", d), ty("B")) == TypingErrorKind::StrictVarUnused);
  ZonedContext bad;
  bad.gamma.emplace("x", ty("A"));
  bad.delta.emplace("x", ty("A"));
  CHECK(error_of(bad, parse_term("x", sig()), ty("A")) == TypingErrorKind::ZoneViolation);
}

TEST_CASE("infer reports occurrences") {
  ZonedContext z = contraction_ctx();
  z.gamma.emplace("g", ty("A ->u A ->0 B"));
  z.omega.emplace("w", ty("A"));
  auto r = infer(z, sig(), term("x @1 y @1 y", z));
  CHECK(r.inferred_type == ty("B"));
  CHECK(r.strict_set == std::set<std::string>{"x", "y"});
  auto q = analyze({{"g", ty("A ->u A ->0 B")}, {"y", ty("A")}, {"w", ty("A")}}, sig(),
                   parse_term("g @u y @0 w", sig()));
  CHECK(q.strict_set == std::set<std::string>{"g"});
  CHECK(q.used_set == std::set<std::string>{"g", "y"});
  CHECK(infer_declarative(z, sig(), term("x @1 y @1 y", z)) == ty("B"));
}

TEST_CASE("n-ary strict application") {
  Signature s = parse_signature(bundled::kBinarySig);
  ZonedContext z;
  z.delta.emplace("y", parse_type("a ->1 a ->1 a", s));
  CHECK(check_atomic_nary(z, s, parse_term("y @1 b @1 b", s)) == parse_type("a", s));

  ZonedContext x;
  x.delta.emplace("x", parse_type("a", s));
  CHECK(check_atomic_nary(x, s, parse_term("c @1 x @1 b", s)) == parse_type("a", s));
  CHECK_THROWS_AS(check_atomic_nary(x, s, parse_term("c @1 b @1 b", s)), TypingError);
  CHECK_THROWS_AS(check_atomic_nary(x, s, parse_term("c @u x @1 b", s)), TypingError);

  ZonedContext o;
  o.omega.emplace("y", parse_type("a ->1 a ->1 a", s));
  CHECK_THROWS_AS(check_atomic_nary(o, s, parse_term("y @1 b @1 b", s)), TypingError);
}

TEST_CASE("typing errors render kind and variable") {
  TypingError e(TypingErrorKind::StrictVarUnused, "x", "never used");
  CHECK(std::string(e.what()).find("StrictVarUnused(x)") == 0);
  CHECK(e.variable() == "x");
}
