#include <doctest.h>

#include "strictpat/io.hpp"
#include "strictpat/selftest.hpp"
#include "strictpat/text.hpp"

using namespace strictpat;

TEST_CASE("set files") {
  Signature ab = parse_signature(bundled::kAbSig);
  PatternSet s = parse_set_file(ab,
                                "% two patterns\n"
                                "ctx: x:a, y:a\n"
                                "type: a\n"
                                "\n"
                                "E[x^1, y^u]\n"
                                "c @1 F[x^0]   % partial argument list\n");
  REQUIRE(s.size() == 2);
  CHECK(s.psi.size() == 2);
  CHECK(print_type(s.type) == "a");
  CHECK_THROWS(parse_set_file(ab, "ctx: x:a\nE[x^1]\n"));
  CHECK_THROWS(parse_set_file(ab, "type: a\nE[x^1]\n"));
}

TEST_CASE("programs round-trip through print_clause") {
  Signature lam = parse_signature(bundled::kLamSig);
  auto prog = parse_program(lam, {}, bundled::kIsredxProgram);
  REQUIRE(prog.size() == 2);
  CHECK(prog[0].name == "betardx");
  CHECK(prog[1].predicate == "isredx");
  std::string text = print_clause(prog[0]) + "\n" + print_clause(prog[1]) + "\n";
  auto again = parse_program(lam, {}, text);
  REQUIRE(again.size() == 2);
  CHECK(alpha_eq(again[0].head, prog[0].head));
  CHECK(alpha_eq(again[1].head, prog[1].head));
  CHECK_THROWS(parse_program(lam, {}, "broken isredx E[]."));
}

TEST_CASE("read_file reports missing files") {
  CHECK_THROWS_AS(read_file("/nonexistent/strictpat.sig"), Error);
}
