// strictpat: command-line front end for the strict calculus and its
// pattern algebra. Exit codes: 0 success/true, 1 false, 2 error.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strictpat/algebra.hpp"
#include "strictpat/canonicalize.hpp"
#include "strictpat/complement.hpp"
#include "strictpat/intersect.hpp"
#include "strictpat/io.hpp"
#include "strictpat/selftest.hpp"
#include "strictpat/text.hpp"
#include "strictpat/typing.hpp"

using namespace strictpat;
using json = nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::string sig_path;
  std::string ctx, gamma, omega, delta;
  std::string type;
  std::size_t depth = 3;
  bool exclusive = false;
  bool emit_sig = false;
  std::string program;
  std::vector<std::string> operands;
  std::vector<std::string> left, right;
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit_lines(const Options& o, const std::vector<std::string>& lines) {
  if (json_out(o)) {
    std::cout << json(lines).dump() << "\n";
    return;
  }
  for (const auto& l : lines) std::cout << l << "\n";
}

struct Loaded {
  Signature sig;
  FlatContext psi;
  Type type;
};

Loaded load(const Options& o, Dialect d = Dialect::Strict) {
  Signature sig = parse_signature(read_file(o.sig_path), d);
  FlatContext psi = parse_context(o.ctx, sig, d);
  return {sig, psi, parse_type(o.type, sig, d)};
}

std::set<std::string> names_of(const FlatContext& psi) {
  std::set<std::string> s;
  for (const auto& b : psi) s.insert(b.name);
  return s;
}

PatternSet operand_set(const Loaded& l, const std::vector<std::string>& texts) {
  PatternSet s{l.psi, l.type, {}};
  for (const auto& t : texts) s.members.push_back(parse_pattern(l.sig, l.psi, l.type, t).term);
  return normalize(std::move(s));
}

int run_check(const Options& o) {
  Signature sig = parse_signature(read_file(o.sig_path));
  ZonedContext z;
  for (const auto& b : parse_context(o.gamma, sig)) z.gamma.emplace(b.name, b.type);
  for (const auto& b : parse_context(o.omega, sig)) z.omega.emplace(b.name, b.type);
  for (const auto& b : parse_context(o.delta, sig)) z.delta.emplace(b.name, b.type);
  Type a = parse_type(o.type, sig);
  std::set<std::string> known;
  for (const auto* zone : {&z.gamma, &z.omega, &z.delta})
    for (const auto& [x, _] : *zone) known.insert(x);
  Term m = parse_term(o.operands.at(0), sig, {Dialect::Strict, &known});
  try {
    check(z, sig, m, a);
  } catch (const TypingError& e) {
    if (json_out(o))
      std::cout << json{{"ok", false}, {"kind", to_string(e.kind())}, {"variable", e.variable()},
                        {"message", e.what()}}
                       .dump()
                << "\n";
    else
      std::cout << e.what() << "\n";
    return 1;
  }
  if (json_out(o))
    std::cout << json{{"ok", true}, {"type", print_type(a)}}.dump() << "\n";
  else
    std::cout << "ok : " << print_type(a) << "\n";
  return 0;
}

int run_canon(const Options& o) {
  Loaded l = load(o);
  auto known = names_of(l.psi);
  Term m = parse_term(o.operands.at(0), l.sig, {Dialect::Strict, &known});
  emit_lines(o, {print_term(canonicalize(l.psi, l.sig, m, l.type))});
  return 0;
}

int run_not(const Options& o) {
  Loaded l = load(o);
  PatternSet s = operand_set(l, o.operands);
  PatternSet n = s.size() == 1 ? complement(l.sig, s.at(0)) : set_complement(l.sig, s);
  if (o.exclusive) n = make_exclusive(l.sig, n);
  emit_lines(o, printed_members(n));
  return 0;
}

int run_meet(const Options& o) {
  Loaded l = load(o);
  if (o.operands.size() != 2) throw Error("meet expects exactly two patterns");
  PatternSet s1 = operand_set(l, {o.operands[0]});
  PatternSet s2 = operand_set(l, {o.operands[1]});
  emit_lines(o, printed_members(set_intersect(l.sig, s1, s2)));
  return 0;
}

int run_diff(const Options& o) {
  Loaded l = load(o);
  PatternSet r = relative_complement(l.sig, operand_set(l, o.left), operand_set(l, o.right));
  emit_lines(o, printed_members(r));
  return 0;
}

int run_member(const Options& o) {
  Loaded l = load(o);
  if (o.operands.size() != 2) throw Error("member expects a term and a pattern");
  auto known = names_of(l.psi);
  Term m = parse_term(o.operands[0], l.sig, {Dialect::Strict, &known});
  if (contains_evar(m)) throw Error("the term must be ground");
  if (!is_canonical(ZonedContext::unrestricted(l.psi), l.sig, m, l.type))
    throw Error(print_term(m) + " is not canonical at " + print_type(l.type));
  SimpleLinearPattern p = parse_pattern(l.sig, l.psi, l.type, o.operands[1]);
  bool yes = match_ground(l.sig, m, p);
  if (json_out(o))
    std::cout << json{{"member", yes}}.dump() << "\n";
  else
    std::cout << (yes ? "member" : "not a member") << "\n";
  return yes ? 0 : 1;
}

int run_enum(const Options& o) {
  Loaded l = load(o);
  std::vector<std::string> lines;
  for (const auto& t : enumerate_ground(l.sig, l.psi, l.type, o.depth))
    lines.push_back(print_term(t));
  emit_lines(o, lines);
  return 0;
}

int run_embed(const Options& o) {
  Signature plain = parse_signature(read_file(o.sig_path), Dialect::Plain);
  if (o.emit_sig) {
    std::cout << print_signature(embed_signature(plain));
    return 0;
  }
  FlatContext psi = parse_context(o.ctx, plain, Dialect::Plain);
  Type a = parse_type(o.type, plain, Dialect::Plain);
  auto known = names_of(psi);
  Term m = parse_term(o.operands.at(0), plain, {Dialect::Plain, &known});
  emit_lines(o, {print_term(embed_term(plain, psi, m, a))});
  return 0;
}

int run_negate(const Options& o) {
  Loaded l = load(o);
  auto program = parse_program(l.sig, l.psi, read_file(o.program));
  std::vector<std::string> lines;
  for (const auto& c : clause_complement(l.sig, l.psi, l.type, program))
    lines.push_back(print_clause(c));
  emit_lines(o, lines);
  return 0;
}

int run_eq(const Options& o) {
  Signature sig = parse_signature(read_file(o.sig_path));
  if (o.operands.size() != 2) throw Error("eq expects two set files");
  PatternSet s1 = parse_set_file(sig, read_file(o.operands[0]));
  PatternSet s2 = parse_set_file(sig, read_file(o.operands[1]));
  BoundedEquality r = extensional_eq(sig, s1, s2, o.depth);
  if (json_out(o)) {
    json j{{"equal", r.equal}, {"bounded", true}, {"size_bound", r.bound},
           {"terms_checked", r.terms_checked}};
    if (r.witness) j["witness"] = print_term(*r.witness);
    std::cout << j.dump() << "\n";
  } else if (r.equal) {
    std::cout << "equal on all " << r.terms_checked << " ground terms of size <= " << r.bound
              << " (bounded check)\n";
  } else {
    std::cout << "differ: " << print_term(*r.witness) << " is in exactly one set\n";
  }
  return r.equal ? 0 : 1;
}

int run_selftest_cmd(const Options& o) {
  auto results = run_selftest();
  std::size_t passed = 0;
  json arr = json::array();
  for (const auto& r : results) {
    passed += r.passed;
    if (json_out(o))
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    else
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name
                << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
  }
  if (json_out(o))
    std::cout << arr.dump() << "\n";
  else
    std::cout << passed << "/" << results.size() << " examples reproduced\n";
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strict λ-calculus, pattern complement and pattern intersection"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto with_sig = [&](CLI::App* c) {
    c->add_option("--sig", o.sig_path, "Signature file")->required();
  };
  auto with_pattern_opts = [&](CLI::App* c) {
    with_sig(c);
    c->add_option("--ctx", o.ctx, "Parameter context, e.g. \"x:a, y:a\"");
    c->add_option("--type", o.type, "Type of the terms")->required();
  };

  auto* check_cmd = app.add_subcommand("check", "Type-check a term in a zoned context");
  with_sig(check_cmd);
  check_cmd->add_option("--gamma", o.gamma, "Unrestricted hypotheses");
  check_cmd->add_option("--omega", o.omega, "Irrelevant hypotheses");
  check_cmd->add_option("--delta", o.delta, "Strict hypotheses");
  check_cmd->add_option("--type", o.type, "Expected type")->required();
  check_cmd->add_option("term", o.operands, "Term")->required();

  auto* canon_cmd = app.add_subcommand("canon", "Convert a term to canonical form");
  with_pattern_opts(canon_cmd);
  canon_cmd->add_option("term", o.operands, "Term")->required();

  auto* not_cmd = app.add_subcommand("not", "Complement of a pattern (or of a set of patterns)");
  with_pattern_opts(not_cmd);
  not_cmd->add_flag("--exclusive", o.exclusive, "Make members pairwise disjoint");
  not_cmd->add_option("patterns", o.operands, "Patterns")->required();

  auto* meet_cmd = app.add_subcommand("meet", "Intersection of two patterns");
  with_pattern_opts(meet_cmd);
  meet_cmd->add_option("patterns", o.operands, "Two patterns")->required()->expected(2);

  auto* diff_cmd = app.add_subcommand("diff", "Relative complement LEFT - RIGHT");
  with_pattern_opts(diff_cmd);
  diff_cmd->add_option("--left", o.left, "Pattern of the left set (repeatable)");
  diff_cmd->add_option("--right", o.right, "Pattern of the right set (repeatable)");

  auto* member_cmd = app.add_subcommand("member", "Is a ground term an instance of a pattern");
  with_pattern_opts(member_cmd);
  member_cmd->add_option("operands", o.operands, "TERM PATTERN")->required()->expected(2);

  auto* enum_cmd = app.add_subcommand("enum", "Enumerate ground canonical terms");
  with_pattern_opts(enum_cmd);
  enum_cmd->add_option("--depth", o.depth, "Maximum number of head occurrences")
      ->check(CLI::PositiveNumber);

  auto* embed_cmd = app.add_subcommand("embed", "Embed a simply-typed canonical term");
  embed_cmd->add_option("--sig", o.sig_path, "Label-free signature file")->required();
  embed_cmd->add_option("--ctx", o.ctx, "Label-free context");
  embed_cmd->add_option("--type", o.type, "Label-free type");
  embed_cmd->add_flag("--emit-sig", o.emit_sig, "Print the embedded signature instead");
  embed_cmd->add_option("term", o.operands, "Term");

  auto* negate_cmd = app.add_subcommand("negate", "Negate the clause heads of a predicate");
  with_pattern_opts(negate_cmd);
  negate_cmd->add_option("--program", o.program, "Program file")->required();

  auto* eq_cmd = app.add_subcommand("eq", "Bounded extensional equality of two set files");
  with_sig(eq_cmd);
  eq_cmd->add_option("--depth", o.depth, "Maximum number of head occurrences")
      ->check(CLI::PositiveNumber);
  eq_cmd->add_option("sets", o.operands, "Two set files")->required()->expected(2);

  auto* selftest_cmd = app.add_subcommand("selftest", "Reproduce the bundled worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check_cmd) return run_check(o);
    if (*canon_cmd) return run_canon(o);
    if (*not_cmd) return run_not(o);
    if (*meet_cmd) return run_meet(o);
    if (*diff_cmd) return run_diff(o);
    if (*member_cmd) return run_member(o);
    if (*enum_cmd) return run_enum(o);
    if (*embed_cmd) {
      if (!o.emit_sig && (o.operands.empty() || o.type.empty()))
        throw Error("embed needs --type and a term (or --emit-sig)");
      return run_embed(o);
    }
    if (*negate_cmd) return run_negate(o);
    if (*eq_cmd) return run_eq(o);
    if (*selftest_cmd) return run_selftest_cmd(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
