#include "strictpat/selftest.hpp"

#include <algorithm>
#include <functional>

#include "strictpat/algebra.hpp"
#include "strictpat/canonicalize.hpp"
#include "strictpat/complement.hpp"
#include "strictpat/intersect.hpp"
#include "strictpat/io.hpp"
#include "strictpat/text.hpp"
#include "strictpat/typing.hpp"

namespace strictpat {

bool same_members(const Signature& sig, const PatternSet& got,
                  const std::vector<std::string>& expected) {
  std::vector<std::string> a, b;
  for (const auto& m : got.members) a.push_back(pattern_key(m));
  for (const auto& e : expected) b.push_back(pattern_key(parse_pattern(sig, got.psi, got.type, e).term));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

struct Env {
  Signature lam = parse_signature(bundled::kLamSig);
  Signature lam_plain = parse_signature(bundled::kLamPlainSig, Dialect::Plain);
  Signature ab = parse_signature(bundled::kAbSig);
  Signature ab_u = parse_signature(bundled::kAbUSig);
  Signature binary = parse_signature(bundled::kBinarySig);
  Signature typing = parse_signature(bundled::kTypingSig);
  Type exp = Type::atom("exp");
  Type a = Type::atom("a");
  FlatContext xy = parse_context("x:a, y:a", ab);
  FlatContext x = parse_context("x:a", ab);
};

std::string show(const PatternSet& s) {
  std::string out = "{";
  for (const auto& m : printed_members(s)) out += (out.size() > 1 ? ", " : "") + m;
  return out + "}";
}

using Check = std::function<std::string(const Env&)>;  // empty string = pass

std::string expect_set(const Signature& sig, const PatternSet& got,
                       const std::vector<std::string>& expected) {
  return same_members(sig, got, expected) ? "" : "got " + show(got);
}

ZonedContext zones(const Signature& sig, const char* g, const char* o, const char* d) {
  ZonedContext z;
  for (const auto& b : parse_context(g, sig)) z.gamma.emplace(b.name, b.type);
  for (const auto& b : parse_context(o, sig)) z.omega.emplace(b.name, b.type);
  for (const auto& b : parse_context(d, sig)) z.delta.emplace(b.name, b.type);
  return z;
}

std::string expect_typing_error(const ZonedContext& z, const Signature& sig, const char* term,
                                const char* type, TypingErrorKind kind, const char* var) {
  try {
    check(z, sig, parse_term(term, sig), parse_type(type, sig));
    return "accepted";
  } catch (const TypingError& e) {
    if (e.kind() != kind || e.variable() != var) return e.what();
    return "";
  }
}

const std::vector<std::string> kEtaHeadComplement = {
    "lam @1 (\\x^u:exp. app @1 Z[x^1] @1 Z1[x^u])",
    "lam @1 (\\x^u:exp. app @1 Z[x^u] @1 (app @1 Z1[x^u] @1 Z2[x^u]))",
    "lam @1 (\\x^u:exp. app @1 Z[x^u] @1 (lam @1 (\\y^u:exp. Z1[x^u, y^u])))",
    "lam @1 (\\x^u:exp. lam @1 (\\y^u:exp. Z[x^u, y^u]))",
    "lam @1 (\\x^u:exp. x)",
    "app @1 Z[] @1 Z1[]",
};

const std::vector<std::string> kNonRedexHeads = {
    "lam @1 (\\x^u:exp. app @1 H[x^1] @1 H1[x^u])",
    "lam @1 (\\x^u:exp. app @1 H[x^u] @1 (app @1 H1[x^u] @1 H2[x^u]))",
    "lam @1 (\\x^u:exp. app @1 H[x^u] @1 (lam @1 (\\y^u:exp. H1[x^u, y^u])))",
    "lam @1 (\\x^u:exp. lam @1 (\\y^u:exp. H[x^u, y^u]))",
    "lam @1 (\\x^u:exp. x)",
    "app @1 (app @1 H[] @1 H1[]) @1 H2[]",
};

const char* kBetaHead = "app @1 (lam @1 (\\x^u:exp. E[x^u])) @1 F[]";
const char* kEtaHead = "lam @1 (\\x^u:exp. app @1 E[x^0] @1 x)";

std::vector<std::pair<std::string, Check>> cases() {
  std::vector<std::pair<std::string, Check>> cs;
  auto add = [&](std::string name, Check c) { cs.emplace_back(std::move(name), std::move(c)); };

  add("parse: β-redex pattern", [](const Env& e) {
    Term t = parse_term(kBetaHead, e.lam);
    Spine sp = spine_of(t);
    bool ok = sp.head.is(Term::Kind::Const) && sp.head.name() == "app" && sp.args.size() == 2 &&
              sp.labels == std::vector<Label>{Label::One, Label::One} &&
              sp.args[1].is(Term::Kind::EVar) && sp.args[1].args().empty();
    return ok ? "" : "parsed as " + print_term(t);
  });

  add("typing: contraction example accepted", [](const Env& e) {
    auto z = zones(e.typing, "", "", "x:A ->1 A ->1 B, y:A");
    return typechecks(z, e.typing, parse_term("(x @1 y) @1 y", e.typing), Type::atom("B"))
               ? ""
               : "rejected";
  });

  add("typing: contraction admits 2 of 4 splits", [](const Env& e) {
    auto z = zones(e.typing, "", "", "x:A ->1 A ->1 B, y:A");
    auto o = strict_split_outcomes(z, e.typing, parse_term("(x @1 y) @1 y", e.typing),
                                   Type::atom("B"));
    auto n = std::count(o.begin(), o.end(), true);
    return o.size() == 4 && n == 2 ? "" : std::to_string(n) + " of " + std::to_string(o.size());
  });

  add("typing: y @u x rejects strict x", [](const Env& e) {
    return expect_typing_error(zones(e.typing, "y:A ->u B", "", "x:A"), e.typing, "y @u x", "B",
                               TypingErrorKind::StrictVarUnused, "x");
  });

  add("typing: y @u x rejects irrelevant x", [](const Env& e) {
    return expect_typing_error(zones(e.typing, "y:A ->u B", "x:A", ""), e.typing, "y @u x", "B",
                               TypingErrorKind::IrrelevantVarUsed, "x");
  });

  add("typing: irrelevant argument to a vacuous function", [](const Env& e) {
    const char* t = "(\\y^0:A. c) @0 x";
    if (!typechecks(zones(e.typing, "", "x:A", ""), e.typing, parse_term(t, e.typing),
                    Type::atom("B")))
      return std::string("rejected with x irrelevant");
    return expect_typing_error(ZonedContext{}, e.typing, t, "B", TypingErrorKind::UnknownIdent,
                               "x");
  });

  add("classify: fully applied η-redex pattern is canonical", [](const Env& e) {
    Type t = parse_type("exp ->u exp", e.lam);
    SimpleLinearPattern p =
        parse_pattern(e.lam, {}, t, "\\x^u:exp. app @1 E[x^0] @1 x");
    CanonicityClass c = classify(ZonedContext{}, e.lam, p.term);
    return c.kind == CanonicityClass::Kind::Canonical && *c.type == t ? "" : "not canonical";
  });

  add("embed: ((exp→exp)→exp)⁺", [](const Env& e) {
    Type plain = parse_type("(exp -> exp) -> exp", e.lam_plain, Dialect::Plain);
    std::string got = print_type(embed_type(plain, Polarity::Pos));
    return got == "(exp ->u exp) ->1 exp" ? "" : got;
  });

  add("embed: lam (λx. lam (λy. x))", [](const Env& e) {
    Term m = parse_term("lam (\\x:exp. lam (\\y:exp. x))", e.lam_plain, {Dialect::Plain});
    Term got = embed_term(e.lam_plain, {}, m, e.exp);
    Term want = parse_term("lam @1 (\\x^u:exp. lam @1 (\\y^u:exp. x))", e.lam);
    return alpha_eq(got, want) ? "" : print_term(got);
  });

  add("fully_apply: vacuous argument inserted", [](const Env& e) {
    Term p = parse_term("lam @1 (\\x^u:exp. app @1 E[] @1 x)", e.lam);
    SimpleLinearPattern q = fully_apply(e.lam, {}, p, e.exp);
    Term want = parse_term("lam @1 (\\x^u:exp. app @1 E'[x^0] @1 x)", e.lam);
    return pattern_key(q.term) == pattern_key(want) ? "" : print_term(q.term);
  });

  add("match: b and x against E[x^0]", [](const Env& e) {
    FlatContext x = parse_context("x:a", e.ab_u);
    SimpleLinearPattern p = parse_pattern(e.ab_u, x, e.a, "E[x^0]");
    bool b = match_ground(e.ab_u, Term::constant("b"), p);
    bool v = match_ground(e.ab_u, Term::var("x"), p);
    return b && !v ? "" : "b:" + std::to_string(b) + " x:" + std::to_string(v);
  });

  add("labels: Not(1) = 0, Not(0) = 1, Not(u) undefined", [](const Env&) {
    return not_label(Label::One) == Label::Zero && not_label(Label::Zero) == Label::One &&
                   !not_label(Label::U)
               ? ""
               : "wrong table";
  });

  add("labels: Not_i", [](const Env&) {
    LabeledVarList a{{"x", Label::U}, {"y", Label::One}};
    LabeledVarList b{{"x", Label::Zero}, {"y", Label::One}};
    auto r1 = not_phi_i(a, 1), r2 = not_phi_i(b, 0);
    bool ok = r1 && print_phi(*r1) == "(x^u, y^0)" && r2 && print_phi(*r2) == "(x^1, y^u)" &&
              !not_phi_i(a, 0);
    return ok ? "" : "wrong Not_i";
  });

  add("complement: Not(E[x^0, y^1])", [](const Env& e) {
    auto p = parse_pattern(e.ab, e.xy, e.a, "E[x^0, y^1]");
    return expect_set(e.ab, complement(e.ab, p), {"F[x^1, y^u]", "G[x^u, y^0]"});
  });

  add("complement: Not(E[x^u, y^1])", [](const Env& e) {
    auto p = parse_pattern(e.ab, e.xy, e.a, "E[x^u, y^1]");
    return expect_set(e.ab, complement(e.ab, p), {"F[x^u, y^0]"});
  });

  add("complement: β-redex head", [](const Env& e) {
    auto p = parse_pattern(e.lam, {}, e.exp, kBetaHead);
    return expect_set(e.lam, complement(e.lam, p),
                      {"lam @1 (\\x^u:exp. H[x^u])", "app @1 (app @1 H1[] @1 H2[]) @1 H3[]"});
  });

  add("complement: η-redex head (6 members)", [](const Env& e) {
    auto p = parse_pattern(e.lam, {}, e.exp, kEtaHead);
    return expect_set(e.lam, complement(e.lam, p), kEtaHeadComplement);
  });

  add("make_exclusive: Not(E[x^0, y^1])", [](const Env& e) {
    auto p = parse_pattern(e.ab, e.xy, e.a, "E[x^0, y^1]");
    return expect_set(e.ab, make_exclusive(e.ab, complement(e.ab, p)),
                      {"F[x^1, y^1]", "G[x^1, y^0]", "H[x^0, y^0]"});
  });

  add("intersect: strict variable split two ways", [](const Env& e) {
    FlatContext x = parse_context("x:a", e.binary);
    auto p1 = parse_pattern(e.binary, x, e.a, "E[x^1]");
    auto p2 = parse_pattern(e.binary, x, e.a, "c @1 F[x^u] @1 F'[x^u]");
    return expect_set(e.binary, intersect(e.binary, p1, p2),
                      {"c @1 H[x^1] @1 H'[x^u]", "c @1 H[x^u] @1 H'[x^1]"});
  });

  add("intersect: irrelevant parameter head has no solution", [](const Env& e) {
    FlatContext y = parse_context("y:a ->1 a ->1 a", e.binary);
    auto p1 = parse_pattern(e.binary, y, e.a, "E[y^0]");
    auto p2 = parse_pattern(e.binary, y, e.a, "y @1 F[y^1] @1 F'[y^u]");
    return expect_set(e.binary, intersect(e.binary, p1, p2), {});
  });

  add("intersect: strict parameter head pays for itself", [](const Env& e) {
    FlatContext y = parse_context("y:a ->1 a ->1 a", e.binary);
    auto p1 = parse_pattern(e.binary, y, e.a, "E[y^1]");
    auto p2 = parse_pattern(e.binary, y, e.a, "y @1 F[y^1] @1 F'[y^0]");
    return expect_set(e.binary, intersect(e.binary, p1, p2), {"y @1 H[y^1] @1 H'[y^0]"});
  });

  add("algebra: intersection of the two head complements", [](const Env& e) {
    PatternSet n1 = complement(e.lam, parse_pattern(e.lam, {}, e.exp, kBetaHead));
    PatternSet n2 = complement(e.lam, parse_pattern(e.lam, {}, e.exp, kEtaHead));
    return expect_set(e.lam, set_intersect(e.lam, n1, n2), kNonRedexHeads);
  });

  add("algebra: Not(0) = {1}", [](const Env& e) {
    PatternSet n = set_complement(e.lam, bottom({}, e.exp));
    return expect_set(e.lam, n, {"E[]"});
  });

  add("algebra: Not({1}) = 0", [](const Env& e) {
    return expect_set(e.ab, set_complement(e.ab, top(e.xy, e.a)), {});
  });

  add("algebra: membership in {E[x^0]}", [](const Env& e) {
    FlatContext x = parse_context("x:a", e.ab_u);
    PatternSet s = make_set(e.ab_u, x, e.a, {parse_term("E[x^0]", e.ab_u)});
    bool b = member_set(e.ab_u, Term::constant("b"), s);
    bool v = member_set(e.ab_u, Term::var("x"), s);
    bool none = member_set(e.ab_u, Term::constant("b"), bottom(x, e.a));
    return b && !v && !none ? "" : "wrong membership";
  });

  add("algebra: {1} - {E[x^u, y^1]} = {F[x^u, y^0]} to size 5", [](const Env& e) {
    PatternSet rhs = make_set(e.ab, e.xy, e.a, {parse_term("E[x^u, y^1]", e.ab)});
    PatternSet want = make_set(e.ab, e.xy, e.a, {parse_term("F[x^u, y^0]", e.ab)});
    auto r = extensional_eq(e.ab, relative_complement(e.ab, top(e.xy, e.a), rhs), want, 5);
    return r.equal ? "" : "witness " + print_term(*r.witness);
  });

  add("enumerate: depth-2 prefix over {b, c : a ->u a}", [](const Env& e) {
    FlatContext x = parse_context("x:a", e.ab_u);
    std::vector<std::string> got;
    for (const auto& t : enumerate_ground(e.ab_u, x, e.a, 2)) got.push_back(print_term(t));
    std::sort(got.begin(), got.end());
    std::vector<std::string> want{"b", "c @u b", "c @u x", "x"};
    return got == want ? "" : std::to_string(got.size()) + " terms";
  });

  add("negate: isredx program", [](const Env& e) {
    auto program = parse_program(e.lam, {}, bundled::kIsredxProgram);
    auto neg = clause_complement(e.lam, {}, e.exp, program);
    PatternSet heads{{}, e.exp, {}};
    for (const auto& c : neg) {
      if (c.predicate != "non_isredx") return "predicate " + c.predicate;
      heads.members.push_back(c.head);
    }
    return expect_set(e.lam, heads, kNonRedexHeads);
  });

  add("reject: complement outside the simple fragment", [](const Env& e) {
    FlatContext x = parse_context("x:a", e.ab_u);
    try {
      complement(e.ab_u, parse_pattern(e.ab_u, x, e.a, "E[x^0]"));
      return std::string("accepted");
    } catch (const PatternError& err) {
      return err.kind() == PatternError::Kind::NotSimple ? "" : std::string(err.what());
    }
  });

  return cs;
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  Env env;
  std::vector<SelftestResult> out;
  for (const auto& [name, check] : cases()) {
    try {
      std::string detail = check(env);
      out.push_back({name, detail.empty(), detail});
    } catch (const std::exception& ex) {
      out.push_back({name, false, std::string("exception: ") + ex.what()});
    }
  }
  return out;
}

}  // namespace strictpat
