#include <doctest.h>

#include <cmath>

#include "strictpat/algebra.hpp"
#include "strictpat/intersect.hpp"
#include "strictpat/io.hpp"
#include "strictpat/selftest.hpp"
#include "strictpat/text.hpp"
#include "support.hpp"

using namespace strictpat;

TEST_CASE("meet_label table") {
  CHECK(meet_label(Label::One, Label::One) == Label::One);
  CHECK(meet_label(Label::U, Label::One) == Label::One);
  CHECK(meet_label(Label::Zero, Label::U) == Label::Zero);
  CHECK(meet_label(Label::U, Label::U) == Label::U);
  CHECK_FALSE(meet_label(Label::One, Label::Zero));
  CHECK_FALSE(meet_label(Label::Zero, Label::One));
}

TEST_CASE("meet_phi") {
  LabeledVarList a{{"x", Label::U}, {"y", Label::One}};
  LabeledVarList b{{"x", Label::Zero}, {"y", Label::U}};
  CHECK(meet_phi(a, b) == LabeledVarList{{"x", Label::Zero}, {"y", Label::One}});
  CHECK(meet_phi(a, a) == a);
  CHECK_FALSE(meet_phi({{"x", Label::One}}, {{"x", Label::Zero}}));
  CHECK_FALSE(meet_phi({{"x", Label::U}}, {{"y", Label::U}}));
}

TEST_CASE("splittings") {
  auto s = enumerate_splittings({{"x", Label::One}}, 2, std::nullopt);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Splitting{{{"x", Label::One}}, {{"x", Label::U}}});
  CHECK(s[1] == Splitting{{{"x", Label::U}}, {{"x", Label::One}}});

  auto u = enumerate_splittings({{"x", Label::U}, {"y", Label::U}}, 3, std::nullopt);
  REQUIRE(u.size() == 1);
  for (const auto& part : u[0]) CHECK(part == LabeledVarList{{"x", Label::U}, {"y", Label::U}});

  auto z = enumerate_splittings({{"y", Label::Zero}}, 2, std::string("y"));
  REQUIRE(z.size() == 1);
  CHECK(z[0][0] == LabeledVarList{{"y", Label::Zero}});

  auto h = enumerate_splittings({{"y", Label::One}}, 2, std::string("y"));
  REQUIRE(h.size() == 1);
  CHECK(h[0][1] == LabeledVarList{{"y", Label::U}});

  CHECK(enumerate_splittings({{"x", Label::One}}, 0, std::nullopt).empty());
  CHECK(enumerate_splittings({{"x", Label::Zero}}, 0, std::nullopt).size() == 1);
}

TEST_CASE("splitting count is n^s") {
  const Label ls[] = {Label::One, Label::Zero, Label::U};
  for (std::size_t n = 1; n <= 3; ++n)
    for (int code = 0; code < 27; ++code) {
      LabeledVarList phi;
      std::size_t strict = 0;
      int c = code;
      for (const char* v : {"x", "y", "z"}) {
        Label k = ls[c % 3];
        c /= 3;
        phi.push_back({v, k});
        strict += k == Label::One;
      }
      auto all = enumerate_splittings(phi, n, std::nullopt);
      REQUIRE(all.size() == static_cast<std::size_t>(std::pow(n, strict)));
      for (const auto& sp : all) {
        REQUIRE(sp.size() == n);
        // Each strict variable is strict in exactly one part.
        for (std::size_t v = 0; v < phi.size(); ++v) {
          std::size_t ones = 0;
          for (const auto& part : sp) ones += part[v].label == Label::One;
          REQUIRE(ones == (phi[v].label == Label::One ? 1u : 0u));
        }
      }
    }
}

TEST_CASE("intersection goldens") {
  Signature s = parse_signature(bundled::kBinarySig);
  Type a = parse_type("a", s);
  FlatContext x = parse_context("x:a", s);
  PatternSet r = intersect(s, parse_pattern(s, x, a, "E[x^1]"),
                           parse_pattern(s, x, a, "c @1 F[x^u] @1 F'[x^u]"));
  CHECK(same_members(s, r, {"c @1 H[x^1] @1 H'[x^u]", "c @1 H[x^u] @1 H'[x^1]"}));

  FlatContext y = parse_context("y:a ->1 a ->1 a", s);
  CHECK(intersect(s, parse_pattern(s, y, a, "E[y^0]"),
                  parse_pattern(s, y, a, "y @1 F[y^1] @1 F'[y^u]"))
            .empty());
  PatternSet q = intersect(s, parse_pattern(s, y, a, "E[y^1]"),
                           parse_pattern(s, y, a, "y @1 F[y^1] @1 F'[y^0]"));
  CHECK(same_members(s, q, {"y @1 H[y^1] @1 H'[y^0]"}));
}

TEST_CASE("intersection preconditions") {
  Signature s = parse_signature(bundled::kBinarySig);
  Type a = parse_type("a", s);
  FlatContext x = parse_context("x:a", s);
  auto p = parse_pattern(s, x, a, "E[x^1]");
  CHECK_THROWS_AS(intersect(s, p, p), PatternError);
  auto other = parse_pattern(s, {}, a, "F[]");
  CHECK_THROWS_AS(intersect(s, p, other), PatternError);
}

TEST_CASE("rename_apart") {
  Signature s = parse_signature(bundled::kBinarySig);
  Type a = parse_type("a", s);
  FlatContext x = parse_context("x:a", s);
  auto p = parse_pattern(s, x, a, "E[x^1]");
  auto r = rename_apart(p, {"E"});
  REQUIRE(r.term.is(Term::Kind::EVar));
  CHECK(r.term.name() != "E");
  CHECK(same_pattern(r.term, p.term));
  CHECK(alpha_eq(rename_apart(p, {"F"}).term, p.term));
}

TEST_CASE("intersection is sound, complete and closed at small depth") {
  std::size_t pairs = 0;
  for (const auto& g : testing::corpus()) {
    auto terms = enumerate_ground(g.sig, g.psi, g.type, 4);
    for (const auto& p1 : g.patterns)
      for (const auto& p2 : g.patterns) {
        std::set<std::string> taken;
        for (const auto& e : evar_names(p1.term)) taken.insert(e);
        PatternSet r = intersect(g.sig, p1, rename_apart(p2, taken));
        for (std::size_t i = 0; i < r.size(); ++i) CHECK_NOTHROW(validate(g.sig, r.at(i)));
        for (const auto& m : terms)
          REQUIRE_MESSAGE(member_set(g.sig, m, r) ==
                              (match_ground(g.sig, m, p1) && match_ground(g.sig, m, p2)),
                          g.name << ": " << print_term(p1.term) << " & " << print_term(p2.term)
                                 << " at " << print_term(m));
        ++pairs;
      }
  }
  CHECK(pairs > 100);
}
