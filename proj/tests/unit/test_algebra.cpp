#include <doctest.h>

#include "strictpat/algebra.hpp"
#include "strictpat/canonicalize.hpp"
#include "strictpat/io.hpp"
#include "strictpat/selftest.hpp"
#include "strictpat/text.hpp"
#include "support.hpp"

using namespace strictpat;

namespace {

struct Ab {
  Signature sig = parse_signature(bundled::kAbSig);
  FlatContext psi = parse_context("x:a, y:a", sig);
  Type a = parse_type("a", sig);
  PatternSet set(std::vector<std::string> texts) const {
    std::vector<Term> ts;
    for (const auto& t : texts) ts.push_back(parse_pattern(sig, psi, a, t).term);
    return make_set(sig, psi, a, ts);
  }
};

}  // namespace

TEST_CASE("top and bottom") {
  Ab ab;
  PatternSet t = top(ab.psi, ab.a);
  REQUIRE(t.size() == 1);
  CHECK(print_term(t.members[0]) == "E[x^u, y^u]");
  CHECK(set_complement(ab.sig, t).empty());
  CHECK(printed_members(set_complement(ab.sig, bottom(ab.psi, ab.a))) == printed_members(t));
  Signature lam = parse_signature(bundled::kLamSig);
  Type arrow = parse_type("exp ->u exp", lam);
  CHECK(print_term(top({}, arrow).members[0]) == "\\y^u:exp. E[y^u]");
}

TEST_CASE("set operations on small sets") {
  Ab ab;
  PatternSet s = ab.set({"E[x^1, y^u]", "c @1 F[x^u, y^0]"});
  PatternSet t = top(ab.psi, ab.a);
  PatternSet none = bottom(ab.psi, ab.a);
  CHECK(extensional_eq(ab.sig, set_intersect(ab.sig, s, t), s, 4).equal);
  CHECK(set_intersect(ab.sig, s, none).empty());
  CHECK(extensional_eq(ab.sig, relative_complement(ab.sig, s, none), s, 4).equal);
  CHECK(extensional_eq(ab.sig, relative_complement(ab.sig, s, s), none, 4).equal);
  CHECK(set_union(s, s).size() == s.size());

  PatternSet diff = relative_complement(ab.sig, t, ab.set({"E[x^u, y^1]"}));
  CHECK(extensional_eq(ab.sig, diff, ab.set({"F[x^u, y^0]"}), 4).equal);
}

TEST_CASE("membership on the vacuous pattern") {
  Ab ab;
  FlatContext x = parse_context("x:a", ab.sig);
  PatternSet s = make_set(ab.sig, x, ab.a, {parse_pattern(ab.sig, x, ab.a, "E[x^0]").term});
  std::set<std::string> known{"x"};
  CHECK(member_set(ab.sig, parse_term("b", ab.sig), s));
  CHECK_FALSE(member_set(ab.sig, parse_term("x", ab.sig, {Dialect::Strict, &known}), s));
  CHECK_FALSE(member_set(ab.sig, parse_term("b", ab.sig), bottom(x, ab.a)));
}

TEST_CASE("bounded equality reports a witness") {
  Ab ab;
  FlatContext x = parse_context("x:a", ab.sig);
  PatternSet one = make_set(ab.sig, x, ab.a, {parse_pattern(ab.sig, x, ab.a, "E[x^1]").term});
  PatternSet any = make_set(ab.sig, x, ab.a, {parse_pattern(ab.sig, x, ab.a, "E[x^u]").term});
  BoundedEquality r = extensional_eq(ab.sig, one, any, 2);
  CHECK_FALSE(r.equal);
  REQUIRE(r.witness);
  CHECK(print_term(*r.witness) == "b");
  BoundedEquality same = extensional_eq(ab.sig, one, one, 3);
  CHECK(same.equal);
  CHECK(same.bound == 3);
  CHECK(same.terms_checked == enumerate_ground(ab.sig, x, ab.a, 3).size());
}

TEST_CASE("enumerate_ground") {
  Signature ab_u = parse_signature(bundled::kAbUSig);
  FlatContext x = parse_context("x:a", ab_u);
  Type a = parse_type("a", ab_u);
  std::vector<std::string> got;
  for (const auto& t : enumerate_ground(ab_u, x, a, 2)) got.push_back(print_term(t));
  CHECK(got == std::vector<std::string>{"b", "x", "c @u b", "c @u x"});

  Signature empty = parse_signature("a : type.");
  for (std::size_t d = 1; d <= 4; ++d)
    CHECK(enumerate_ground(empty, {}, parse_type("a", empty), d).empty());

  // Counts computed independently for lam/app by the recurrence
  // f(n) = [strict-λ terms] + [app pairs]; frozen here.
  Signature lam = parse_signature(bundled::kLamSig);
  Type exp = parse_type("exp", lam);
  CHECK(enumerate_ground(lam, {}, exp, 8).size() == 707);
  CHECK(enumerate_ground(lam, parse_context("x:exp", lam), exp, 8).size() == 2411);
  CHECK(enumerate_ground(lam, parse_context("x:exp, y:exp", lam), exp, 8).size() == 6835);

  std::size_t prev = 0;
  for (std::size_t d = 1; d <= 6; ++d) {
    auto ts = enumerate_ground(lam, {}, exp, d);
    CHECK(ts.size() >= prev);
    prev = ts.size();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK(term_size(ts[i]) <= d);
      CHECK(is_canonical(ZonedContext{}, lam, ts[i], exp));
      if (i > 0) CHECK(term_size(ts[i - 1]) <= term_size(ts[i]));
    }
  }
}

TEST_CASE("clause complement of the redex predicate") {
  Signature lam = parse_signature(bundled::kLamSig);
  Type exp = parse_type("exp", lam);
  auto program = parse_program(lam, {}, bundled::kIsredxProgram);
  REQUIRE(program.size() == 2);
  auto neg = clause_complement(lam, {}, exp, program);
  REQUIRE(neg.size() == 6);
  PatternSet got{{}, exp, {}};
  for (std::size_t i = 0; i < neg.size(); ++i) {
    CHECK(neg[i].name == "nb" + std::to_string(i + 1));
    CHECK(neg[i].predicate == "non_isredx");
    got.members.push_back(neg[i].head);
  }
  PatternSet heads = make_set(lam, {}, exp, {program[0].head, program[1].head});
  for (const auto& m : enumerate_ground(lam, {}, exp, 5))
    REQUIRE(member_set(lam, m, heads) != member_set(lam, m, got));

  std::vector<Clause> trivial{{"all", "p", top({}, exp).members[0]}};
  CHECK(clause_complement(lam, {}, exp, trivial).empty());
}
